#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ringkit/groebner.hpp"

namespace ringkit {

enum class Tri { yes, no, undecided };

inline const char* tri_name(Tri t) {
    switch (t) {
        case Tri::yes: return "Yes";
        case Tri::no: return "No";
        case Tri::undecided: return "Undecided";
    }
    return "?";
}

// A prime P containing I, with dim(ambient/P). The monomial path only ever
// produces variable-generated primes (or (0) for the zero ideal).
struct PrimeWitness {
    std::vector<Polynomial> generators;  // empty list encodes (0)
    int quotient_dimension = 0;

    std::string to_string(const std::vector<std::string>& vars) const {
        if (generators.empty()) return "(0)";
        std::string s = "(";
        for (size_t i = 0; i < generators.size(); ++i) {
            if (i) s += ", ";
            s += generators[i].to_string(vars);
        }
        s += ")";
        return s;
    }
};

struct MinimalPrimesResult {
    bool decided = false;
    std::vector<PrimeWitness> primes;
    std::string reason;  // set when undecided
};

struct DepthStep {
    Polynomial element;
    bool quotient_equality = false;
};

struct DepthCertificate {
    std::vector<Polynomial> regular_sequence;  // length 0, 1 or 2
    std::vector<DepthStep> steps;
    int depth_lower_bound = 0;
    bool depth_is_zero = false;
    std::optional<Polynomial> socle_witness;
};

struct SocleTestResult {
    bool depth_at_least_one = false;
    std::optional<Polynomial> socle_witness;  // set when the test fails
};

struct Depth2Result {
    Tri verdict = Tri::undecided;
    DepthCertificate certificate;
    std::string reason;
};

struct WindowResult {
    bool decided = false;
    std::optional<PrimeWitness> witness;
};

namespace detail {

inline IdealHandle maximal_ideal(unsigned n, const MonomialOrder& ord) {
    std::vector<Polynomial> gens;
    for (unsigned i = 0; i < n; ++i) gens.push_back(Polynomial::variable(n, i));
    return IdealHandle(n, std::move(gens), ord);
}

inline std::vector<Polynomial> mask_to_variables(unsigned n, uint32_t mask) {
    std::vector<Polynomial> out;
    for (unsigned i = 0; i < n; ++i)
        if (mask & (1u << i)) out.push_back(Polynomial::variable(n, i));
    return out;
}

// Minimal vertex covers of the generator supports, as bitmasks.
inline std::vector<uint32_t> minimal_covers(unsigned n, const std::vector<uint32_t>& supports) {
    std::vector<uint32_t> covers;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool covers_all = true;
        for (uint32_t s : supports)
            if ((s & mask) == 0) { covers_all = false; break; }
        if (covers_all) covers.push_back(mask);
    }
    std::vector<uint32_t> minimal;
    for (uint32_t c : covers) {
        bool is_min = true;
        for (uint32_t d : covers)
            if (d != c && (d & c) == d) { is_min = false; break; }
        if (is_min) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end(), [](uint32_t a, uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return minimal;
}

// A nontrivial factorization f = a * b, if one is visible: a variable
// dividing every term, or a monomial split. Full factorization is out of
// scope; anything deeper stays undecided upstream.
inline std::optional<std::pair<Polynomial, Polynomial>> split_factor(const Polynomial& g) {
    unsigned n = g.nvars();
    if (g.is_zero() || g.total_degree() == 0) return std::nullopt;
    // variable content
    for (unsigned i = 0; i < n; ++i) {
        bool divides_all = true;
        for (const auto& [e, c] : g.terms())
            if (e[i] == 0) { divides_all = false; break; }
        if (divides_all) {
            Polynomial x = Polynomial::variable(n, i);
            Polynomial rest = exact_divide(g, x);
            if (rest.total_degree() == 0) return std::nullopt;  // g is (scalar * variable)
            return std::make_pair(x, rest);
        }
    }
    return std::nullopt;
}

inline bool prime_contains_ideal(const IdealHandle& P, const IdealHandle& I) {
    for (const auto& g : I.generators())
        if (!P.contains(g)) return false;
    return true;
}

// P subseteq Q as ideals given by generator lists.
inline bool witness_contained(const PrimeWitness& p, const IdealHandle& q_handle) {
    for (const auto& g : p.generators)
        if (!q_handle.contains(g)) return false;
    return true;
}

inline MinimalPrimesResult minimal_primes_impl(const IdealHandle& I, int depth_budget) {
    MinimalPrimesResult res;
    unsigned n = I.nvars();
    if (I.contains_one()) {  // branch collapsed to the unit ideal: no primes
        res.decided = true;
        return res;
    }
    if (I.is_zero_ideal()) {
        res.decided = true;
        res.primes.push_back(PrimeWitness{{}, static_cast<int>(n)});
        return res;
    }
    if (is_monomial_ideal(I)) {
        std::vector<uint32_t> supports;
        for (const auto& m : minimal_monomial_generators(I)) supports.push_back(m.support());
        for (uint32_t mask : minimal_covers(n, supports)) {
            PrimeWitness w;
            w.generators = mask_to_variables(n, mask);
            w.quotient_dimension = static_cast<int>(n) - __builtin_popcount(mask);
            res.primes.push_back(std::move(w));
        }
        res.decided = true;
        return res;
    }
    if (depth_budget <= 0) {
        res.reason = "DecompositionUnsupported";
        return res;
    }
    for (const auto& g : I.basis()) {
        auto split = split_factor(g);
        if (!split) continue;
        MinimalPrimesResult a = minimal_primes_impl(ideal_sum(I, {split->first}), depth_budget - 1);
        MinimalPrimesResult b = minimal_primes_impl(saturate(I, split->first), depth_budget - 1);
        if (!a.decided || !b.decided) {
            res.reason = "DecompositionUnsupported";
            return res;
        }
        std::vector<PrimeWitness> all = a.primes;
        all.insert(all.end(), b.primes.begin(), b.primes.end());
        // minimalize by containment and dedupe
        std::vector<IdealHandle> handles;
        for (const auto& w : all)
            handles.emplace_back(n, w.generators, I.order());
        std::vector<PrimeWitness> kept;
        for (size_t i = 0; i < all.size(); ++i) {
            bool minimal = true;
            for (size_t j = 0; j < all.size() && minimal; ++j) {
                if (i == j) continue;
                bool j_in_i = witness_contained(all[j], handles[i]);
                bool i_in_j = witness_contained(all[i], handles[j]);
                if (j_in_i && !i_in_j) minimal = false;          // strictly smaller prime exists
                if (j_in_i && i_in_j && j < i) minimal = false;  // duplicate
            }
            if (minimal) kept.push_back(all[i]);
        }
        std::sort(kept.begin(), kept.end(), [](const PrimeWitness& x, const PrimeWitness& y) {
            if (x.generators.size() != y.generators.size())
                return x.generators.size() < y.generators.size();
            return x.quotient_dimension > y.quotient_dimension;
        });
        res.decided = true;
        res.primes = std::move(kept);
        return res;
    }
    res.reason = "DecompositionUnsupported";
    return res;
}

}  // namespace detail

inline MinimalPrimesResult minimal_primes(const IdealHandle& I) {
    if (I.contains_one()) throw Error(Errc::UnitIdeal, "minimal primes of the unit ideal");
    return detail::minimal_primes_impl(I, 16);
}

inline Tri is_reduced(const IdealHandle& I, const MinimalPrimesResult& mp) {
    if (I.contains_one()) throw Error(Errc::UnitIdeal, "reducedness of the unit ideal");
    if (I.is_zero_ideal()) return Tri::yes;
    if (is_monomial_ideal(I)) {
        for (const auto& m : minimal_monomial_generators(I))
            if (!m.squarefree()) return Tri::no;
        return Tri::yes;
    }
    if (!mp.decided) return Tri::undecided;
    IdealHandle meet(I.nvars(), {Polynomial(I.nvars())}, I.order());
    bool first = true;
    for (const auto& w : mp.primes) {
        IdealHandle P(I.nvars(), w.generators, I.order());
        meet = first ? P : ideal_intersection(meet, P);
        first = false;
    }
    return ideal_equal(I, meet) ? Tri::yes : Tri::no;
}

inline Tri is_reduced(const IdealHandle& I) { return is_reduced(I, minimal_primes(I)); }

inline Tri is_equidimensional(const MinimalPrimesResult& mp) {
    if (!mp.decided) return Tri::undecided;
    for (const auto& w : mp.primes)
        if (w.quotient_dimension != mp.primes.front().quotient_dimension) return Tri::no;
    return Tri::yes;
}

// Exact socle test (I : M) = I, i.e. "M is not an associated prime".
inline SocleTestResult depth_at_least_one(const IdealHandle& I) {
    if (I.contains_one()) throw Error(Errc::UnitIdeal, "socle test on the unit ideal");
    SocleTestResult res;
    unsigned n = I.nvars();
    if (n == 0) {  // T is the residue field itself; M = (0) is associated
        res.depth_at_least_one = false;
        return res;
    }
    IdealHandle M = detail::maximal_ideal(n, I.order());
    IdealHandle Q = ideal_quotient_ideal(I, M);
    if (ideal_equal(Q, I)) {
        res.depth_at_least_one = true;
        return res;
    }
    for (const auto& g : Q.basis()) {
        if (!I.contains(g)) {
            res.socle_witness = g;
            break;
        }
    }
    return res;
}

inline int embedding_dimension(const IdealHandle& I) {
    if (I.contains_one()) throw Error(Errc::UnitIdeal, "embedding dimension of the unit ideal");
    int linear = 0;
    for (const auto& g : I.basis())
        if (g.total_degree() == 1) ++linear;
    return static_cast<int>(I.nvars()) - linear;
}

namespace detail {

inline Polynomial random_linear_form(unsigned n, std::mt19937_64& rng) {
    for (;;) {
        Polynomial f(n);
        for (unsigned i = 0; i < n; ++i) {
            // stdlib distributions are implementation-defined; draw directly
            int c = static_cast<int>(rng() % 7) - 3;
            if (c != 0) f += Rational(c) * Polynomial::variable(n, i);
        }
        if (!f.is_zero()) return f;
    }
}

}  // namespace detail

// Depth >= 2 via a certified regular sequence of length two. Randomization
// only proposes candidate linear forms; every acceptance is an exact
// ideal-quotient equality. A negative verdict needs three independent
// agreeing nonzerodivisors plus decided minimal primes; otherwise the
// budget runs out as Undecided.
inline Depth2Result depth_at_least_two(const IdealHandle& I, unsigned trials, uint64_t seed) {
    unsigned n = I.nvars();
    if (n < 2) throw Error(Errc::PreconditionViolated, "need at least two variables");
    if (!is_homogeneous(I)) throw Error(Errc::PreconditionViolated, "ideal must be homogeneous");
    SocleTestResult base = depth_at_least_one(I);
    if (!base.depth_at_least_one)
        throw Error(Errc::PreconditionViolated, "depth >= 1 must hold first");

    Depth2Result res;
    std::mt19937_64 rng(seed);
    auto candidates = [&](unsigned budget) {
        std::vector<Polynomial> cs;
        for (unsigned i = 0; i < n; ++i) cs.push_back(Polynomial::variable(n, i));
        for (unsigned i = 0; i < budget; ++i) cs.push_back(detail::random_linear_form(n, rng));
        return cs;
    };

    unsigned false_votes = 0;
    std::optional<Polynomial> socle_witness;
    std::optional<Polynomial> first_nzd;
    for (const auto& l1 : candidates(trials)) {
        IdealHandle q1 = ideal_quotient(I, l1);
        if (!ideal_equal(q1, I)) continue;  // l1 is a zerodivisor mod I, try another
        if (!first_nzd) first_nzd = l1;
        IdealHandle J = ideal_sum(I, {l1});
        SocleTestResult s = depth_at_least_one(J);
        if (s.depth_at_least_one) {
            res.verdict = Tri::yes;
            res.certificate.regular_sequence = {l1};
            res.certificate.steps.push_back({l1, true});
            res.certificate.depth_lower_bound = 2;
            // name an explicit second element when one is found
            for (const auto& l2 : candidates(trials)) {
                IdealHandle q2 = ideal_quotient(J, l2);
                if (ideal_equal(q2, J)) {
                    res.certificate.regular_sequence.push_back(l2);
                    res.certificate.steps.push_back({l2, true});
                    break;
                }
            }
            return res;
        }
        ++false_votes;
        socle_witness = s.socle_witness;
        if (false_votes >= 3) {
            MinimalPrimesResult mp = minimal_primes(I);
            if (mp.decided) {
                res.verdict = Tri::no;
                res.certificate.regular_sequence = {*first_nzd};
                res.certificate.steps.push_back({*first_nzd, true});
                res.certificate.depth_lower_bound = 1;
                res.certificate.socle_witness = socle_witness;
                return res;
            }
        }
    }
    res.verdict = Tri::undecided;
    res.reason = "ProbabilisticBudget";
    return res;
}

inline WindowResult noncat_window(const IdealHandle& I, int threshold,
                                  const MinimalPrimesResult& mp) {
    WindowResult res;
    if (!mp.decided) return res;
    res.decided = true;
    int dim = dimension(I);
    for (const auto& w : mp.primes) {
        if (threshold < w.quotient_dimension && w.quotient_dimension < dim) {
            res.witness = w;
            break;
        }
    }
    return res;
}

inline WindowResult noncat_window(const IdealHandle& I, int threshold) {
    return noncat_window(I, threshold, minimal_primes(I));
}

// Everything the classifier quantifies over, computed once per ring.
struct InvariantReport {
    int dimension = 0;
    int embedding_dimension = 0;
    MinimalPrimesResult min_primes;
    Tri reduced = Tri::undecided;
    Tri equidimensional = Tri::undecided;
    bool depth1 = false;
    std::optional<Polynomial> socle_witness;
    Tri depth2 = Tri::undecided;
    DepthCertificate depth_certificate;
    std::string depth2_reason;
    WindowResult window1;
    WindowResult window2;
    bool is_field = false;     // quotient is the residue field (I = M)
    Tri domain = Tri::undecided;  // I prime, when the monomial/split path decides it
};

inline InvariantReport compute_invariants(const IdealHandle& I, unsigned trials, uint64_t seed) {
    if (I.contains_one()) throw Error(Errc::UnitIdeal, "invariants of the unit ideal");
    InvariantReport r;
    unsigned n = I.nvars();
    r.dimension = dimension(I);
    r.embedding_dimension = embedding_dimension(I);
    r.min_primes = minimal_primes(I);
    r.reduced = is_reduced(I, r.min_primes);
    r.equidimensional = is_equidimensional(r.min_primes);
    SocleTestResult s = depth_at_least_one(I);
    r.depth1 = s.depth_at_least_one;
    r.socle_witness = s.socle_witness;
    if (n >= 2 && r.depth1) {
        Depth2Result d2 = depth_at_least_two(I, trials, seed);
        r.depth2 = d2.verdict;
        r.depth_certificate = d2.certificate;
        r.depth2_reason = d2.reason;
    } else {
        r.depth2 = Tri::no;
        r.depth2_reason = r.depth1 ? "fewer than two variables" : "depth is zero";
        if (!r.depth1) {
            r.depth_certificate.depth_is_zero = true;
            r.depth_certificate.socle_witness = s.socle_witness;
        }
    }
    r.window1 = noncat_window(I, 1, r.min_primes);
    r.window2 = noncat_window(I, 2, r.min_primes);
    bool all_vars_in = true;
    for (unsigned i = 0; i < n; ++i)
        if (!I.contains(Polynomial::variable(n, i))) { all_vars_in = false; break; }
    r.is_field = all_vars_in;
    if (r.min_primes.decided) {
        if (r.min_primes.primes.size() == 1 && r.reduced == Tri::yes) r.domain = Tri::yes;
        else if (r.min_primes.primes.size() != 1 || r.reduced == Tri::no) r.domain = Tri::no;
    }
    return r;
}

}  // namespace ringkit
