#pragma once

#include <random>
#include <string>
#include <vector>

#include "ringkit/invariants.hpp"

namespace testutil {

using namespace ringkit;

inline Polynomial P(const std::string& text, const std::vector<std::string>& vars) {
    return Polynomial::parse(text, vars);
}

inline IdealHandle make_ideal(const std::vector<std::string>& gens,
                              const std::vector<std::string>& vars) {
    unsigned n = static_cast<unsigned>(vars.size());
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(P(g, vars));
    if (ps.empty()) ps.push_back(Polynomial(n));
    return IdealHandle(n, std::move(ps), MonomialOrder::grevlex());
}

inline Monomial random_monomial(unsigned n, unsigned maxdeg, std::mt19937_64& rng) {
    for (;;) {
        Monomial m(n);
        unsigned deg = 1 + rng() % maxdeg;
        for (unsigned d = 0; d < deg; ++d) m.e[rng() % n] += 1;
        if (m.degree() >= 1) return m;
    }
}

inline IdealHandle random_monomial_ideal(unsigned n, std::mt19937_64& rng) {
    unsigned count = 1 + rng() % 4;
    std::vector<Polynomial> gens;
    for (unsigned i = 0; i < count; ++i)
        gens.push_back(Polynomial::term(n, random_monomial(n, 4, rng), 1));
    return IdealHandle(n, std::move(gens), MonomialOrder::grevlex());
}

inline Polynomial random_polynomial(unsigned n, unsigned maxdeg, std::mt19937_64& rng) {
    Polynomial f(n);
    unsigned count = 1 + rng() % 5;
    for (unsigned i = 0; i < count; ++i) {
        Monomial m(n);
        unsigned deg = rng() % (maxdeg + 1);
        for (unsigned d = 0; d < deg; ++d) m.e[rng() % n] += 1;
        long num = static_cast<long>(rng() % 11) - 5;
        long den = 1 + rng() % 3;
        if (num != 0) f.add_term(m, Rational(num) / Rational(den));
    }
    return f;
}

// Independent-set dimension oracle for monomial ideals: the largest variable
// subset containing the support of no generator.
inline int dimension_oracle_monomial(const IdealHandle& I) {
    unsigned n = I.nvars();
    std::vector<uint32_t> supports;
    for (const auto& g : I.generators()) {
        if (g.is_zero()) continue;
        supports.push_back(Monomial(g.terms().begin()->first).support());
    }
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (uint32_t s : supports)
            if ((s & ~mask) == 0) { independent = false; break; }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

// Brute-force minimal primes of a monomial ideal, as sorted variable masks:
// every variable-generated prime containing I, filtered to the minimal ones.
inline std::vector<uint32_t> minimal_primes_oracle_monomial(const IdealHandle& I) {
    unsigned n = I.nvars();
    std::vector<uint32_t> supports;
    for (const auto& g : I.generators()) {
        if (g.is_zero()) continue;
        supports.push_back(Monomial(g.terms().begin()->first).support());
    }
    std::vector<uint32_t> containing;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool contains = true;
        for (uint32_t s : supports)
            if ((s & mask) == 0) { contains = false; break; }
        if (contains) containing.push_back(mask);
    }
    std::vector<uint32_t> minimal;
    for (uint32_t c : containing) {
        bool is_min = true;
        for (uint32_t d : containing)
            if (d != c && (d & c) == d) { is_min = false; break; }
        if (is_min) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

inline uint32_t witness_mask(const PrimeWitness& w, unsigned n) {
    uint32_t mask = 0;
    for (const auto& g : w.generators) {
        Monomial m(g.terms().begin()->first);
        mask |= m.support();
        (void)n;
    }
    return mask;
}

// Re-runs every exact equality a depth certificate records.
inline bool reverify_depth_certificate(const IdealHandle& I, const DepthCertificate& cert) {
    if (cert.depth_is_zero) {
        if (!cert.socle_witness) return false;
        const Polynomial& s = *cert.socle_witness;
        if (I.contains(s)) return false;
        for (unsigned i = 0; i < I.nvars(); ++i) {
            Polynomial x = Polynomial::variable(I.nvars(), i);
            if (!I.contains(s * x)) return false;
        }
        return true;
    }
    IdealHandle cur = I;
    for (const auto& f : cert.regular_sequence) {
        IdealHandle q = ideal_quotient(cur, f);
        if (!ideal_equal(q, cur)) return false;
        cur = ideal_sum(cur, {f});
    }
    return true;
}

}  // namespace testutil
