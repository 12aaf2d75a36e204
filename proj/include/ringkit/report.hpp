#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "ringkit/construction.hpp"
#include "ringkit/ringspec.hpp"

namespace ringkit {

inline constexpr const char* kToolVersion = "0.1.0";

// The byte-exact table the corpus checker diffs: one line per question,
// verdict plus reason or witness when present.
inline std::string verdict_table(const ClassificationReport& rep) {
    std::ostringstream os;
    for (const auto& q : rep.questions) {
        os << q.name << ": " << verdict_name(q.verdict);
        if (q.verdict == Verdict::undecided && !q.reason.empty())
            os << "(" << q.reason << ")";
        if (!q.witness.empty()) os << " [" << q.witness << "]";
        os << "\n";
    }
    return os.str();
}

namespace detail {

inline std::string polys_to_string(const std::vector<Polynomial>& ps,
                                   const std::vector<std::string>& vars) {
    std::string s;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) s += "; ";
        s += ps[i].to_string(vars);
    }
    return s;
}

inline nlohmann::ordered_json invariants_json(const InvariantReport& inv,
                                              const std::vector<std::string>& vars) {
    nlohmann::ordered_json j;
    j["dimension"] = inv.dimension;
    j["embedding_dimension"] = inv.embedding_dimension;
    j["minimal_primes_decided"] = inv.min_primes.decided;
    if (inv.min_primes.decided) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& p : inv.min_primes.primes) {
            nlohmann::ordered_json e;
            e["prime"] = p.to_string(vars);
            e["quotient_dimension"] = p.quotient_dimension;
            arr.push_back(e);
        }
        j["minimal_primes"] = arr;
    } else {
        j["minimal_primes_reason"] = inv.min_primes.reason;
    }
    j["reduced"] = tri_name(inv.reduced);
    j["equidimensional"] = tri_name(inv.equidimensional);
    j["depth_at_least_one"] = inv.depth1;
    if (inv.socle_witness) j["socle_witness"] = inv.socle_witness->to_string(vars);
    j["depth_at_least_two"] = tri_name(inv.depth2);
    if (!inv.depth_certificate.regular_sequence.empty())
        j["regular_sequence"] =
            polys_to_string(inv.depth_certificate.regular_sequence, vars);
    if (!inv.depth2_reason.empty()) j["depth_reason"] = inv.depth2_reason;
    j["is_field"] = inv.is_field;
    j["ideal_prime"] = tri_name(inv.domain);
    return j;
}

inline nlohmann::ordered_json classification_json(const ClassificationReport& rep) {
    nlohmann::ordered_json j;
    auto qs = nlohmann::ordered_json::array();
    for (const auto& q : rep.questions) {
        nlohmann::ordered_json e;
        e["name"] = q.name;
        e["verdict"] = verdict_name(q.verdict);
        if (!q.reason.empty()) e["reason"] = q.reason;
        if (!q.witness.empty()) e["witness"] = q.witness;
        e["citation"] = q.citation;
        auto cs = nlohmann::ordered_json::array();
        for (const auto& c : q.conditions) {
            nlohmann::ordered_json ce;
            ce["condition"] = c.text;
            ce["verdict"] = verdict_name(c.verdict);
            if (!c.witness.empty()) ce["witness"] = c.witness;
            cs.push_back(ce);
        }
        e["conditions"] = cs;
        qs.push_back(e);
    }
    j["questions"] = qs;
    j["annotations"] = rep.annotations;
    return j;
}

}  // namespace detail

// Structured report: a single stable-key-order document. Timing is kept out
// of this document so runs with identical (input, seed) are byte-identical;
// the text renderer may report elapsed time separately.
inline nlohmann::ordered_json build_classify_document(const RingSpecFile& spec,
                                                      const InvariantReport& inv,
                                                      const ClassificationReport& rep,
                                                      uint64_t seed, unsigned trials) {
    nlohmann::ordered_json doc;
    doc["version"] = kToolVersion;
    nlohmann::ordered_json input;
    if (!spec.label.empty()) input["label"] = spec.label;
    input["vars"] = spec.variables;
    input["gens"] = spec.generator_text;
    input["residue"] = spec.residue;
    doc["input"] = input;
    doc["seed"] = seed;
    doc["trials"] = trials;
    doc["invariants"] = detail::invariants_json(inv, spec.variables);
    doc["classification"] = detail::classification_json(rep);
    return doc;
}

inline std::string render_classify_text(const RingSpecFile& spec, const InvariantReport& inv,
                                        const ClassificationReport& rep, uint64_t seed,
                                        unsigned trials, double elapsed_seconds) {
    std::ostringstream os;
    os << "ringkit " << kToolVersion << "\n";
    if (!spec.label.empty()) os << "label: " << spec.label << "\n";
    os << "ring: Q[[";
    for (size_t i = 0; i < spec.variables.size(); ++i)
        os << (i ? "," : "") << spec.variables[i];
    os << "]] / (";
    for (size_t i = 0; i < spec.generator_text.size(); ++i)
        os << (i ? ", " : "") << spec.generator_text[i];
    os << ")  residue: " << spec.residue << "\n";
    os << "seed: " << seed << "  trials: " << trials << "\n\n";
    os << "invariants:\n";
    os << "  dimension: " << inv.dimension << "\n";
    os << "  embedding dimension: " << inv.embedding_dimension << "\n";
    if (inv.min_primes.decided) {
        os << "  minimal primes:";
        for (const auto& p : inv.min_primes.primes)
            os << " " << p.to_string(spec.variables)
               << " (dim " << p.quotient_dimension << ")";
        os << "\n";
    } else {
        os << "  minimal primes: undecided (" << inv.min_primes.reason << ")\n";
    }
    os << "  reduced: " << tri_name(inv.reduced) << "\n";
    os << "  equidimensional: " << tri_name(inv.equidimensional) << "\n";
    os << "  depth >= 1: " << (inv.depth1 ? "Yes" : "No");
    if (inv.socle_witness)
        os << " (socle element " << inv.socle_witness->to_string(spec.variables) << ")";
    os << "\n";
    os << "  depth >= 2: " << tri_name(inv.depth2);
    if (!inv.depth_certificate.regular_sequence.empty())
        os << " (regular sequence "
           << detail::polys_to_string(inv.depth_certificate.regular_sequence, spec.variables)
           << ")";
    os << "\n\n";
    os << "classification:\n";
    for (const auto& q : rep.questions) {
        os << "  " << q.name << ": " << verdict_name(q.verdict);
        if (q.verdict == Verdict::undecided && !q.reason.empty()) os << "(" << q.reason << ")";
        if (!q.witness.empty()) os << " [" << q.witness << "]";
        os << "\n";
        for (const auto& c : q.conditions) {
            os << "    - " << c.text << ": " << verdict_name(c.verdict);
            if (!c.witness.empty()) os << " (" << c.witness << ")";
            os << "\n";
        }
    }
    for (const auto& a : rep.annotations) os << "  note: " << a << "\n";
    os << "\nelapsed: " << elapsed_seconds << " s\n";
    return os.str();
}

inline nlohmann::ordered_json build_construct_document(const ConstructionResult& res,
                                                       const std::vector<std::string>& vars) {
    nlohmann::ordered_json doc;
    doc["version"] = kToolVersion;
    nlohmann::ordered_json cfg;
    cfg["nvars"] = res.config.nvars;
    cfg["precision"] = res.config.precision;
    cfg["steps"] = res.config.steps;
    cfg["q"] = res.config.effective_q();
    cfg["base"] = res.config.base.to_string(vars);
    cfg["seed"] = res.config.seed;
    doc["config"] = cfg;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : res.trace.entries) {
        nlohmann::ordered_json t;
        t["step"] = e.step;
        t["case"] = zcase_name(e.zcase);
        t["candidate_index"] = e.candidate_index;
        t["z"] = e.z.to_string(vars);
        t["candidate_value"] = e.candidate_value.to_string(vars);
        t["partial_product"] = e.partial_product.to_string(vars);
        entries.push_back(t);
    }
    doc["trace"] = entries;
    doc["u"] = res.u.series.representative().to_string(vars);
    nlohmann::ordered_json checks;
    checks["z_nonzero_in_M"] = res.z_all_valid;
    checks["partial_products_distinct"] = res.partials_distinct;
    checks["witnesses_verified"] = res.witnesses_verified;
    checks["eq2_verified"] = res.eq2_all_verified;
    doc["checks"] = checks;
    auto samples = nlohmann::ordered_json::array();
    for (const auto& s : res.samples) {
        nlohmann::ordered_json e;
        e["candidate_index"] = s.candidate_index;
        e["outcome"] = sample_outcome_name(s.outcome);
        if (s.outcome == SampleOutcome::witnessed) e["eq2"] = s.eq2_verified;
        samples.push_back(e);
    }
    doc["samples"] = samples;
    return doc;
}

}  // namespace ringkit
