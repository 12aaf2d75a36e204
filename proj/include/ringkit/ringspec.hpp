#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "ringkit/classifier.hpp"

namespace ringkit {

// On-disk presentation of a ring: `vars:`, `residue:`, `gens:` and an
// optional `label:` line, `#` comments. The residue tag is mandatory; it is
// the one classification hypothesis that cannot be computed.
struct RingSpecFile {
    std::vector<std::string> variables;
    std::vector<std::string> generator_text;  // "0" alone means the zero ideal
    std::string residue;                      // "countable" | "uncountable"
    std::string label;
};

namespace detail {

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t pos = s.find(sep, start);
        std::string piece = trim(s.substr(start, pos - start));
        if (!piece.empty()) out.push_back(piece);
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace detail

inline RingSpecFile parse_ring_spec(const std::string& text) {
    RingSpecFile spec;
    bool saw_vars = false, saw_residue = false, saw_gens = false;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        std::string line = text.substr(start, nl == std::string::npos ? nl : nl - start);
        start = nl == std::string::npos ? text.size() + 1 : nl + 1;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw Error(Errc::ParseError, "expected `key: value`, got: " + line);
        std::string key = detail::trim(line.substr(0, colon));
        std::string value = detail::trim(line.substr(colon + 1));
        if (key == "vars") {
            if (saw_vars) throw Error(Errc::ParseError, "duplicate vars line");
            saw_vars = true;
            spec.variables = detail::split(value, ' ');
            for (const auto& v : spec.variables)
                if (!detail::valid_identifier(v))
                    throw Error(Errc::ParseError, "invalid variable name: " + v);
            for (size_t i = 0; i < spec.variables.size(); ++i)
                for (size_t j = i + 1; j < spec.variables.size(); ++j)
                    if (spec.variables[i] == spec.variables[j])
                        throw Error(Errc::ParseError,
                                    "repeated variable name: " + spec.variables[i]);
        } else if (key == "residue") {
            if (saw_residue) throw Error(Errc::ParseError, "duplicate residue line");
            saw_residue = true;
            if (value != "countable" && value != "uncountable")
                throw Error(Errc::ParseError,
                            "residue must be `countable` or `uncountable`, got: " + value);
            spec.residue = value;
        } else if (key == "gens") {
            if (saw_gens) throw Error(Errc::ParseError, "duplicate gens line");
            saw_gens = true;
            spec.generator_text = detail::split(value, ';');
            if (spec.generator_text.empty())
                throw Error(Errc::ParseError, "gens must list generators or be exactly `0`");
        } else if (key == "label") {
            spec.label = value;
        } else {
            throw Error(Errc::ParseError, "unknown key: " + key);
        }
    }
    if (!saw_vars) throw Error(Errc::ParseError, "missing vars line");
    if (!saw_residue) throw Error(Errc::ParseError, "missing residue line (no default)");
    if (!saw_gens) throw Error(Errc::ParseError, "missing gens line (use `gens: 0`)");
    return spec;
}

inline RingPresentation to_presentation(const RingSpecFile& spec) {
    unsigned n = static_cast<unsigned>(spec.variables.size());
    std::vector<Polynomial> gens;
    bool zero_ideal = spec.generator_text.size() == 1 && spec.generator_text[0] == "0";
    if (zero_ideal) {
        gens.push_back(Polynomial(n));
    } else {
        for (const auto& g : spec.generator_text) {
            Polynomial p = Polynomial::parse(g, spec.variables);
            if (p.is_zero())
                throw Error(Errc::ParseError, "zero generator in a nonzero list: " + g);
            gens.push_back(std::move(p));
        }
    }
    IdealHandle I(n, std::move(gens), MonomialOrder::grevlex());
    ResidueTag tag = spec.residue == "countable" ? ResidueTag::countable
                                                 : ResidueTag::uncountable_field;
    return RingPresentation(spec.variables, std::move(I), tag, spec.label);
}

}  // namespace ringkit
