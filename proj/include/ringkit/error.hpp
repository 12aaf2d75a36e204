#pragma once

#include <stdexcept>
#include <string>

namespace ringkit {

enum class Errc {
    AmbientMismatch,
    PrecisionMismatch,
    NotAUnit,
    UnitIdeal,
    ZeroElement,
    ZeroIdeal,
    BoundExhausted,
    MissingWitness,
    WitnessVerificationFailed,
    PrecisionTooLow,
    PreconditionViolated,
    NonHomogeneous,
    ParseError,
    InvalidConfig,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::AmbientMismatch: return "AmbientMismatch";
        case Errc::PrecisionMismatch: return "PrecisionMismatch";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::UnitIdeal: return "UnitIdeal";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::ZeroIdeal: return "ZeroIdeal";
        case Errc::BoundExhausted: return "BoundExhausted";
        case Errc::MissingWitness: return "MissingWitness";
        case Errc::WitnessVerificationFailed: return "WitnessVerificationFailed";
        case Errc::PrecisionTooLow: return "PrecisionTooLow";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::NonHomogeneous: return "NonHomogeneous";
        case Errc::ParseError: return "ParseError";
        case Errc::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace ringkit
