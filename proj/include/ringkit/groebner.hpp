#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "ringkit/polynomial.hpp"

namespace ringkit {

namespace detail {

// Multivariate division: returns the remainder, every term of which is
// divisible by no leading term of G. Optionally records the quotients.
inline Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& G,
                              const MonomialOrder& ord,
                              std::vector<Polynomial>* quotients = nullptr) {
    unsigned n = f.nvars();
    if (quotients) quotients->assign(G.size(), Polynomial(n));
    Polynomial p = f;
    Polynomial r(n);
    std::vector<std::pair<Monomial, Rational>> lts;
    lts.reserve(G.size());
    for (const auto& g : G) lts.push_back(g.leading_term(ord));
    while (!p.is_zero()) {
        auto [m, c] = p.leading_term(ord);
        bool reduced = false;
        for (size_t i = 0; i < G.size(); ++i) {
            if (lts[i].first.divides(m)) {
                Monomial q = lts[i].first.quotient_of(m);
                Rational k = c / lts[i].second;
                Polynomial step = Polynomial::term(n, q, k);
                p -= step * G[i];
                if (quotients) (*quotients)[i] += step;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Polynomial lt = Polynomial::term(n, m, c);
            r += lt;
            p -= lt;
        }
    }
    return r;
}

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& ord) {
    unsigned n = f.nvars();
    auto [mf, cf] = f.leading_term(ord);
    auto [mg, cg] = g.leading_term(ord);
    Monomial l = Monomial::lcm(mf, mg);
    Polynomial a = Polynomial::term(n, mf.quotient_of(l), Rational(1) / cf);
    Polynomial b = Polynomial::term(n, mg.quotient_of(l), Rational(1) / cg);
    return a * f - b * g;
}

// Buchberger with the coprime-leading-term and chain criteria, normal
// pair-selection strategy (minimal lcm degree first). Deterministic.
inline std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                          const MonomialOrder& ord) {
    std::vector<Polynomial> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic(ord));
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
    });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    if (basis.empty()) return basis;

    struct PairKey {
        unsigned deg;
        std::vector<unsigned> lcm;
        size_t i, j;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (lcm != o.lcm) return lcm < o.lcm;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<PairKey> pending;
    std::set<std::pair<size_t, size_t>> pending_idx;
    auto push_pair = [&](size_t i, size_t j) {
        Monomial l = Monomial::lcm(basis[i].leading_term(ord).first,
                                   basis[j].leading_term(ord).first);
        pending.insert({l.degree(), l.e, i, j});
        pending_idx.insert({i, j});
    };
    for (size_t j = 1; j < basis.size(); ++j)
        for (size_t i = 0; i < j; ++i) push_pair(i, j);

    while (!pending.empty()) {
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        pending_idx.erase({pk.i, pk.j});
        Monomial li = basis[pk.i].leading_term(ord).first;
        Monomial lj = basis[pk.j].leading_term(ord).first;
        if (li.coprime_with(lj)) continue;
        Monomial l(pk.lcm);
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!basis[k].leading_term(ord).first.divides(l)) continue;
            auto key = [&](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (pending_idx.count(key(pk.i, k)) == 0 && pending_idx.count(key(pk.j, k)) == 0)
                chained = true;
        }
        if (chained) continue;
        Polynomial r = reduce_full(s_polynomial(basis[pk.i], basis[pk.j], ord), basis, ord);
        if (!r.is_zero()) {
            basis.push_back(r.monic(ord));
            size_t t = basis.size() - 1;
            for (size_t i = 0; i < t; ++i) push_pair(i, t);
        }
    }

    // minimalize: drop elements whose leading term another one divides
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        Monomial mi = basis[i].leading_term(ord).first;
        bool keep = true;
        for (size_t j = 0; j < basis.size() && keep; ++j) {
            if (i == j) continue;
            Monomial mj = basis[j].leading_term(ord).first;
            if (mj.divides(mi) && (mi != mj || j < i)) keep = false;
        }
        if (keep) minimal.push_back(basis[i]);
    }
    // tail-reduce each element against the others
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : reduce_full(minimal[i], others, ord);
        reduced.push_back(r.monic(ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
    });
    return reduced;
}

}  // namespace detail

// Generator set plus a compute-once cached reduced Groebner basis. Completed
// handles are immutable; the cache is internally synchronized.
class IdealHandle {
public:
    IdealHandle() : nvars_(0), order_(MonomialOrder::grevlex()) {}

    IdealHandle(unsigned nvars, std::vector<Polynomial> generators,
                MonomialOrder order = MonomialOrder::grevlex())
        : nvars_(nvars), gens_(std::move(generators)), order_(order) {
        for (const auto& g : gens_)
            if (g.nvars() != nvars_)
                throw Error(Errc::AmbientMismatch, "generator from a different ambient ring");
    }

    IdealHandle(const IdealHandle& o) : nvars_(o.nvars_), gens_(o.gens_), order_(o.order_) {
        std::lock_guard<std::mutex> lk(o.mu_);
        basis_ = o.basis_;
    }

    IdealHandle& operator=(const IdealHandle& o) {
        if (this == &o) return *this;
        std::optional<std::vector<Polynomial>> b;
        {
            std::lock_guard<std::mutex> lk(o.mu_);
            b = o.basis_;
        }
        std::lock_guard<std::mutex> lk(mu_);
        nvars_ = o.nvars_;
        gens_ = o.gens_;
        order_ = o.order_;
        basis_ = std::move(b);
        return *this;
    }

    unsigned nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const MonomialOrder& order() const { return order_; }

    const std::vector<Polynomial>& basis() const {
        std::lock_guard<std::mutex> lk(mu_);
        if (!basis_) basis_ = detail::buchberger(gens_, order_);
        return *basis_;
    }

    Polynomial normal_form(const Polynomial& f) const {
        if (f.nvars() != nvars_)
            throw Error(Errc::AmbientMismatch, "element from a different ambient ring");
        const auto& b = basis();
        if (b.empty()) return f;
        return detail::reduce_full(f, b, order_);
    }

    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    bool is_zero_ideal() const { return basis().empty(); }

    bool contains_one() const {
        const auto& b = basis();
        return b.size() == 1 && b[0].total_degree() == 0;
    }

private:
    unsigned nvars_;
    std::vector<Polynomial> gens_;
    MonomialOrder order_;
    mutable std::mutex mu_;
    mutable std::optional<std::vector<Polynomial>> basis_;
};

inline const std::vector<Polynomial>& groebner_basis(const IdealHandle& I) { return I.basis(); }

inline Polynomial normal_form(const Polynomial& f, const IdealHandle& I) {
    return I.normal_form(f);
}

inline bool ideal_equal(const IdealHandle& I, const IdealHandle& J) {
    if (I.nvars() != J.nvars())
        throw Error(Errc::AmbientMismatch, "ideals from different ambient rings");
    if (I.order() == J.order()) return I.basis() == J.basis();
    IdealHandle Jr(J.nvars(), J.generators(), I.order());
    return I.basis() == Jr.basis();
}

inline bool is_homogeneous(const IdealHandle& I) {
    for (const auto& g : I.generators())
        if (!g.is_homogeneous()) return false;
    return true;
}

inline IdealHandle ideal_sum(const IdealHandle& I, const std::vector<Polynomial>& extra) {
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    return IdealHandle(I.nvars(), std::move(gens), I.order());
}

namespace detail {

inline Polynomial lift_with_aux(const Polynomial& p, unsigned aux_exp) {
    Polynomial r(p.nvars() + 1);
    for (const auto& [e, c] : p.terms()) {
        std::vector<unsigned> e2;
        e2.reserve(e.size() + 1);
        e2.push_back(aux_exp);
        e2.insert(e2.end(), e.begin(), e.end());
        r.add_term(Monomial(e2), c);
    }
    return r;
}

inline std::optional<Polynomial> contract_drop_aux(const Polynomial& p) {
    Polynomial r(p.nvars() - 1);
    for (const auto& [e, c] : p.terms()) {
        if (e[0] != 0) return std::nullopt;
        r.add_term(Monomial(std::vector<unsigned>(e.begin() + 1, e.end())), c);
    }
    return r;
}

}  // namespace detail

// I \cap J via the auxiliary indeterminate: eliminate t from t*I + (1-t)*J.
// The block order stays internal; the result carries I's order.
inline IdealHandle ideal_intersection(const IdealHandle& I, const IdealHandle& J) {
    if (I.nvars() != J.nvars())
        throw Error(Errc::AmbientMismatch, "ideals from different ambient rings");
    unsigned n = I.nvars();
    std::vector<Polynomial> lifted;
    for (const auto& f : I.generators())
        if (!f.is_zero()) lifted.push_back(detail::lift_with_aux(f, 1));
    Polynomial t = Polynomial::variable(n + 1, 0);
    Polynomial one_minus_t = Polynomial::constant(n + 1, 1) - t;
    for (const auto& g : J.generators())
        if (!g.is_zero()) lifted.push_back(one_minus_t * detail::lift_with_aux(g, 0));
    IdealHandle aux(n + 1, std::move(lifted), MonomialOrder::elimination(1));
    std::vector<Polynomial> out;
    for (const auto& b : aux.basis()) {
        auto c = detail::contract_drop_aux(b);
        if (c) out.push_back(*c);
    }
    return IdealHandle(n, std::move(out), I.order());
}

// Exact division g / f for g known to lie in (f).
inline Polynomial exact_divide(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) throw Error(Errc::ZeroElement, "division by zero polynomial");
    std::vector<Polynomial> quots;
    MonomialOrder ord = MonomialOrder::grevlex();
    Polynomial r = detail::reduce_full(g, {f}, ord, &quots);
    if (!r.is_zero())
        throw Error(Errc::PreconditionViolated, "element not divisible as claimed");
    return quots[0];
}

// (I : f) via I \cap (f) followed by exact division by f.
inline IdealHandle ideal_quotient(const IdealHandle& I, const Polynomial& f) {
    if (f.is_zero()) throw Error(Errc::ZeroElement, "quotient by zero element");
    IdealHandle F(I.nvars(), {f}, I.order());
    IdealHandle meet = ideal_intersection(I, F);
    std::vector<Polynomial> out;
    for (const auto& h : meet.basis()) out.push_back(exact_divide(h, f));
    return IdealHandle(I.nvars(), std::move(out), I.order());
}

// (I : J) as the intersection of (I : g) over the generators of J.
inline IdealHandle ideal_quotient_ideal(const IdealHandle& I, const IdealHandle& J) {
    std::vector<Polynomial> gens;
    for (const auto& g : J.generators())
        if (!g.is_zero()) gens.push_back(g);
    if (gens.empty()) throw Error(Errc::ZeroIdeal, "quotient by the zero ideal");
    IdealHandle acc = ideal_quotient(I, gens[0]);
    for (size_t i = 1; i < gens.size(); ++i)
        acc = ideal_intersection(acc, ideal_quotient(I, gens[i]));
    return acc;
}

// (I : f^inf) by iterating the quotient until it stabilizes.
inline IdealHandle saturate(const IdealHandle& I, const Polynomial& f) {
    IdealHandle cur = I;
    for (;;) {
        IdealHandle next = ideal_quotient(cur, f);
        if (ideal_equal(next, cur)) return cur;
        cur = next;
    }
}

// Krull dimension of Q[x1..xn]/I: the maximum size of a variable subset
// independent modulo LT(I), found by exhaustive subset search (n <= 12).
inline int dimension(const IdealHandle& I) {
    if (I.contains_one()) throw Error(Errc::UnitIdeal, "dimension of the unit ideal");
    unsigned n = I.nvars();
    if (n > 12)
        throw Error(Errc::PreconditionViolated, "dimension search capped at 12 variables");
    std::vector<uint32_t> lt_supports;
    for (const auto& g : I.basis())
        lt_supports.push_back(g.leading_term(I.order()).first.support());
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (uint32_t s : lt_supports) {
            if ((s & mask) == s) { independent = false; break; }
        }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline bool is_monomial_ideal(const IdealHandle& I) {
    for (const auto& g : I.basis())
        if (!g.is_term()) return false;
    return true;
}

// For a monomial ideal, the reduced basis is the set of minimal monomial
// generators (monic).
inline std::vector<Monomial> minimal_monomial_generators(const IdealHandle& I) {
    std::vector<Monomial> out;
    for (const auto& g : I.basis()) out.push_back(g.leading_term(I.order()).first);
    return out;
}

}  // namespace ringkit
