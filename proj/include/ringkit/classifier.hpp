#pragma once

#include <string>
#include <vector>

#include "ringkit/invariants.hpp"

namespace ringkit {

enum class ResidueTag { countable, uncountable_field };

inline const char* residue_tag_name(ResidueTag t) {
    return t == ResidueTag::countable ? "countable" : "uncountable";
}

// A presented complete local ring T = Q[[x1..xn]]/I. The ideal must be
// homogeneous so the graded invariants computed upstream equal the local
// invariants of the power-series quotient; the residue-field tag declares
// the one hypothesis that is not computed.
struct RingPresentation {
    std::vector<std::string> variables;
    IdealHandle ideal;
    ResidueTag residue_tag = ResidueTag::countable;
    std::string label;

    RingPresentation() = default;

    RingPresentation(std::vector<std::string> vars, IdealHandle I, ResidueTag tag,
                     std::string lbl = "")
        : variables(std::move(vars)), ideal(std::move(I)), residue_tag(tag),
          label(std::move(lbl)) {
        if (variables.size() != ideal.nvars())
            throw Error(Errc::AmbientMismatch, "variable list does not match the ideal");
        if (!is_homogeneous(ideal))
            throw Error(Errc::NonHomogeneous,
                        "only homogeneous defining ideals are supported");
        if (ideal.contains_one()) throw Error(Errc::UnitIdeal, "the ideal is the unit ideal");
    }
};

enum class Verdict { yes, no, undecided };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::yes: return "Yes";
        case Verdict::no: return "No";
        case Verdict::undecided: return "Undecided";
    }
    return "?";
}

inline Verdict from_tri(Tri t) {
    switch (t) {
        case Tri::yes: return Verdict::yes;
        case Tri::no: return Verdict::no;
        default: return Verdict::undecided;
    }
}

struct Condition {
    std::string text;
    Verdict verdict = Verdict::undecided;
    std::string witness;
};

struct Question {
    std::string name;
    Verdict verdict = Verdict::undecided;
    std::string reason;   // reason code when undecided
    std::string witness;  // headline witness, when one exists
    std::string citation;
    std::vector<Condition> conditions;
};

struct ClassificationReport {
    std::vector<Question> questions;
    std::vector<std::string> annotations;
};

namespace detail {

inline Verdict conjunction(const std::vector<Verdict>& vs) {
    bool undecided = false;
    for (Verdict v : vs) {
        if (v == Verdict::no) return Verdict::no;
        if (v == Verdict::undecided) undecided = true;
    }
    return undecided ? Verdict::undecided : Verdict::yes;
}

inline Condition integer_condition() {
    return {"no integer of T is a zero divisor", Verdict::yes,
            "coefficient field Q: nonzero integers are units"};
}

inline Condition countable_condition(ResidueTag tag) {
    return {"T/M is countable", tag == ResidueTag::countable ? Verdict::yes : Verdict::no,
            std::string("residue tag: ") + residue_tag_name(tag)};
}

inline Condition uncountable_field_condition(const InvariantReport& inv, ResidueTag tag) {
    bool ok = inv.is_field && tag == ResidueTag::uncountable_field;
    std::string w = inv.is_field ? "T equals its residue field" : "M/I is nonzero";
    return {"T is an uncountable field", ok ? Verdict::yes : Verdict::no,
            w + "; residue tag: " + residue_tag_name(tag)};
}

inline Condition depth1_condition(const InvariantReport& inv,
                                  const std::vector<std::string>& vars) {
    Condition c{"M is not an associated prime of T",
                inv.depth1 ? Verdict::yes : Verdict::no, ""};
    if (!inv.depth1 && inv.socle_witness)
        c.witness = "socle element: " + inv.socle_witness->to_string(vars);
    return c;
}

}  // namespace detail

inline Question classify_uncountable_domain_countable_spectrum(const RingPresentation& R,
                                                               const InvariantReport& inv) {
    Question q;
    q.name = "domain";
    q.citation = "completions of uncountable local domains with countable spectra";
    int dim = inv.dimension;
    if (dim == 0) {
        Condition c = detail::uncountable_field_condition(inv, R.residue_tag);
        q.conditions.push_back(c);
        q.verdict = c.verdict;
        return q;
    }
    q.conditions.push_back(detail::integer_condition());
    q.conditions.push_back(detail::depth1_condition(inv, R.variables));
    std::vector<Verdict> vs{Verdict::yes, q.conditions[1].verdict};
    if (dim >= 2) {
        q.conditions.push_back(detail::countable_condition(R.residue_tag));
        vs.push_back(q.conditions.back().verdict);
    }
    q.verdict = detail::conjunction(vs);
    if (!inv.depth1 && inv.socle_witness)
        q.witness = "socle element: " + inv.socle_witness->to_string(R.variables);
    return q;
}

inline Question classify_excellent(const RingPresentation& R, const InvariantReport& inv) {
    Question q;
    q.name = "excellent";
    q.citation = "completions of uncountable excellent local domains with countable spectra";
    int dim = inv.dimension;
    if (dim == 0) {
        Condition c = detail::uncountable_field_condition(inv, R.residue_tag);
        q.conditions.push_back(c);
        q.verdict = c.verdict;
        return q;
    }
    q.conditions.push_back({"Q is contained in T", Verdict::yes, "rational coefficients"});
    q.conditions.push_back({"T is reduced", from_tri(inv.reduced), ""});
    q.conditions.push_back({"T is equidimensional", from_tri(inv.equidimensional), ""});
    std::vector<Verdict> vs{from_tri(inv.reduced), from_tri(inv.equidimensional)};
    if (dim >= 2) {
        q.conditions.push_back(detail::countable_condition(R.residue_tag));
        vs.push_back(q.conditions.back().verdict);
    }
    q.verdict = detail::conjunction(vs);
    if (q.verdict == Verdict::undecided) q.reason = inv.min_primes.reason;
    return q;
}

inline Question classify_ufd(const RingPresentation& R, const InvariantReport& inv) {
    Question q;
    q.name = "ufd";
    q.citation = "completions of uncountable local UFDs with countable spectra";
    int dim = inv.dimension;
    if (dim == 0) {
        Condition c = detail::uncountable_field_condition(inv, R.residue_tag);
        q.conditions.push_back(c);
        q.verdict = c.verdict;
        return q;
    }
    if (dim == 1) {
        bool regular = inv.embedding_dimension == 1;
        Condition c{"T is a DVR (dimension 1, embedding dimension 1, domain)",
                    Verdict::undecided, "embedding dimension " +
                        std::to_string(inv.embedding_dimension)};
        if (!regular) c.verdict = Verdict::no;
        else c.verdict = from_tri(inv.domain);
        q.conditions.push_back(c);
        q.verdict = c.verdict;
        if (q.verdict == Verdict::undecided) q.reason = inv.min_primes.reason;
        return q;
    }
    q.conditions.push_back(detail::integer_condition());
    Condition d2{"the depth of T is at least 2", from_tri(inv.depth2), ""};
    if (inv.depth2 == Tri::yes && inv.depth_certificate.regular_sequence.size() >= 1) {
        d2.witness = "regular sequence:";
        for (const auto& f : inv.depth_certificate.regular_sequence)
            d2.witness += " " + f.to_string(R.variables) + ";";
    }
    q.conditions.push_back(d2);
    q.conditions.push_back(detail::countable_condition(R.residue_tag));
    q.verdict = detail::conjunction(
        {Verdict::yes, from_tri(inv.depth2), q.conditions.back().verdict});
    if (q.verdict == Verdict::undecided) q.reason = inv.depth2_reason;
    q.witness = d2.witness;
    return q;
}

inline Question classify_excellent_ufd(const RingPresentation& R, const InvariantReport& inv) {
    Question q;
    q.name = "excellent_ufd";
    q.citation = "completions of uncountable excellent local UFDs with countable spectra";
    int dim = inv.dimension;
    // The hypothesis "T is a UFD" must be verified by this tool: the full
    // power-series ring (regular), a field, or a DVR. Anything else stays
    // undecided rather than guessed.
    bool verified_ufd = false;
    std::string how;
    if (R.ideal.is_zero_ideal()) {
        verified_ufd = true;
        how = "T is a regular power-series ring";
    } else if (dim == 0 && inv.is_field) {
        verified_ufd = true;
        how = "T is a field";
    } else if (dim == 1 && inv.embedding_dimension == 1 && inv.domain == Tri::yes) {
        verified_ufd = true;
        how = "T is a DVR";
    }
    q.conditions.push_back({"T is a complete local UFD",
                            verified_ufd ? Verdict::yes : Verdict::undecided, how});
    if (!verified_ufd) {
        q.verdict = Verdict::undecided;
        q.reason = "UfdHypothesisUnverifiable";
        return q;
    }
    if (dim == 0) {
        Condition c{"T is uncountable",
                    R.residue_tag == ResidueTag::uncountable_field ? Verdict::yes : Verdict::no,
                    std::string("residue tag: ") + residue_tag_name(R.residue_tag)};
        q.conditions.push_back(c);
        q.verdict = c.verdict;
        return q;
    }
    if (dim == 1) {
        q.verdict = Verdict::yes;
        return q;
    }
    q.conditions.push_back(detail::countable_condition(R.residue_tag));
    q.verdict = q.conditions.back().verdict;
    return q;
}

inline Question classify_noncatenary_domain(const RingPresentation& R,
                                            const InvariantReport& inv) {
    Question q;
    q.name = "noncatenary_domain";
    q.citation = "completions of uncountable noncatenary local domains with countable spectra";
    q.conditions.push_back(detail::integer_condition());
    q.conditions.push_back(detail::depth1_condition(inv, R.variables));
    Condition win{"some minimal prime P has 1 < dim(T/P) < dim T", Verdict::undecided, ""};
    if (inv.window1.decided) {
        if (inv.window1.witness) {
            win.verdict = Verdict::yes;
            win.witness = "P = " + inv.window1.witness->to_string(R.variables) +
                          ", dim(T/P) = " + std::to_string(inv.window1.witness->quotient_dimension) +
                          ", dim T = " + std::to_string(inv.dimension);
        } else {
            win.verdict = Verdict::no;
        }
    }
    q.conditions.push_back(win);
    q.conditions.push_back(detail::countable_condition(R.residue_tag));
    q.verdict = detail::conjunction({Verdict::yes, q.conditions[1].verdict, win.verdict,
                                     q.conditions.back().verdict});
    if (q.verdict == Verdict::undecided) q.reason = inv.min_primes.reason;
    q.witness = win.witness;
    return q;
}

inline Question classify_noncatenary_ufd(const RingPresentation& R,
                                         const InvariantReport& inv) {
    Question q;
    q.name = "noncatenary_ufd";
    q.citation = "completions of uncountable noncatenary local UFDs with countable spectra";
    q.conditions.push_back(detail::integer_condition());
    q.conditions.push_back({"the depth of T is at least 2", from_tri(inv.depth2), ""});
    Condition win{"some minimal prime P has 2 < dim(T/P) < dim T", Verdict::undecided, ""};
    if (inv.window2.decided) {
        if (inv.window2.witness) {
            win.verdict = Verdict::yes;
            win.witness = "P = " + inv.window2.witness->to_string(R.variables) +
                          ", dim(T/P) = " + std::to_string(inv.window2.witness->quotient_dimension) +
                          ", dim T = " + std::to_string(inv.dimension);
        } else {
            win.verdict = Verdict::no;
        }
    }
    q.conditions.push_back(win);
    q.conditions.push_back(detail::countable_condition(R.residue_tag));
    q.verdict = detail::conjunction({Verdict::yes, from_tri(inv.depth2), win.verdict,
                                     q.conditions.back().verdict});
    if (q.verdict == Verdict::undecided)
        q.reason = !inv.window2.decided ? inv.min_primes.reason : inv.depth2_reason;
    q.witness = win.witness;
    return q;
}

inline ClassificationReport classify_all(const RingPresentation& R, const InvariantReport& inv) {
    ClassificationReport rep;
    rep.questions.push_back(classify_uncountable_domain_countable_spectrum(R, inv));
    rep.questions.push_back(classify_excellent(R, inv));
    rep.questions.push_back(classify_ufd(R, inv));
    rep.questions.push_back(classify_excellent_ufd(R, inv));
    rep.questions.push_back(classify_noncatenary_domain(R, inv));
    rep.questions.push_back(classify_noncatenary_ufd(R, inv));
    if (inv.domain == Tri::yes)
        rep.annotations.push_back("the defining ideal is prime: T is itself a domain");
    return rep;
}

inline ClassificationReport classify_all(const RingPresentation& R, unsigned trials = 16,
                                         uint64_t seed = 0) {
    return classify_all(R, compute_invariants(R.ideal, trials, seed));
}

}  // namespace ringkit
