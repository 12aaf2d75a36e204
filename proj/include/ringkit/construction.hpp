#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ringkit/groebner.hpp"
#include "ringkit/series.hpp"

namespace ringkit {

// Configuration for one adjunction run: S = Q[x1..xn] localized at the
// maximal ideal, A_i = g^{q(i)} for a strictly increasing q, and N steps of
// the z-selection algorithm executed on exact polynomial data.
struct ConstructionConfig {
    unsigned nvars = 2;
    unsigned precision = 5;   // K
    unsigned steps = 4;       // N, the number of z_i produced
    std::vector<unsigned> q;  // q(1..N); empty means q(i) = i
    Polynomial base;          // g, a nonzero element of S cap M; default x1
    unsigned max_xdegree = 4;
    unsigned max_layers = 8;  // dovetail layer bound for the enumeration
    uint64_t seed = 0;

    static ConstructionConfig defaults() {
        ConstructionConfig c;
        c.base = Polynomial::variable(c.nvars, 0);
        return c;
    }

    std::vector<unsigned> effective_q() const {
        if (!q.empty()) return q;
        std::vector<unsigned> r(steps);
        for (unsigned i = 0; i < steps; ++i) r[i] = i + 1;
        return r;
    }

    void validate() const {
        if (nvars < 1) throw Error(Errc::InvalidConfig, "need at least one variable");
        if (precision < 2) throw Error(Errc::InvalidConfig, "precision must be >= 2");
        if (steps < 1) throw Error(Errc::InvalidConfig, "need at least one step");
        if (base.nvars() != nvars)
            throw Error(Errc::AmbientMismatch, "base element from a different ambient ring");
        if (base.is_zero() || base.constant_term() != 0)
            throw Error(Errc::InvalidConfig, "base element must be nonzero with zero constant term");
        auto qq = effective_q();
        if (qq.size() < steps)
            throw Error(Errc::InvalidConfig, "q must provide a value for every step");
        for (size_t i = 0; i < qq.size(); ++i) {
            if (qq[i] < 1) throw Error(Errc::InvalidConfig, "q values must be positive");
            if (i > 0 && qq[i] <= qq[i - 1])
                throw Error(Errc::InvalidConfig, "q must be strictly increasing");
        }
    }
};

// Candidate polynomial in the indeterminate X with coefficients from the
// base ring; coeffs[i] multiplies X^i and the leading coefficient is nonzero.
struct XCandidate {
    std::vector<Polynomial> coeffs;

    unsigned xdegree() const { return static_cast<unsigned>(coeffs.size() - 1); }

    Polynomial eval(const Polynomial& m) const {
        Polynomial acc(m.nvars());
        for (size_t i = coeffs.size(); i-- > 0;) acc = acc * m + coeffs[i];
        return acc;
    }

    XPolynomial as_xpolynomial() const {
        XPolynomial g;
        for (const auto& c : coeffs) g.coeffs.emplace_back(c);
        return g;
    }

    std::string to_string(const std::vector<std::string>& vars) const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = coeffs.size(); i-- > 0;) {
            if (coeffs[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << coeffs[i].to_string(vars) << ")";
            if (i >= 1) os << "*X";
            if (i >= 2) os << "^" << i;
        }
        if (first) os << "0";
        return os.str();
    }
};

// Deterministic dovetail enumeration of the nonzero elements of S[X] within
// the configured bounds: layered by X-degree and coefficient complexity.
// Layer L admits coefficient candidates of layer <= L and X-degree
// <= min(L, max_xdegree); an entry belongs to the first layer that can
// produce it. Within a layer, X-degree ascends and coefficient tuples
// advance odometer-style with the leading coefficient moving fastest.
class CandidateEnumerator {
public:
    CandidateEnumerator(unsigned nvars, unsigned max_xdegree, unsigned max_layers)
        : nvars_(nvars), max_xdeg_(max_xdegree), max_layers_(max_layers) {
        coeffs_.push_back({Polynomial(nvars_), 0});  // index 0: the zero coefficient
        for (unsigned L = 1; L <= max_layers_; ++L) {
            coeffs_.push_back({Polynomial::constant(nvars_, Rational(L)), L});
            coeffs_.push_back({Polynomial::constant(nvars_, Rational(-(int)L)), L});
            for (const auto& m : degree_monomials(L))
                coeffs_.push_back({Polynomial::term(nvars_, m, 1), L});
        }
        layer_ = 1;
        xdeg_ = 0;
        digits_.assign(1, 0);  // will step to the first valid tuple
    }

    // 1-based candidate index, matching the enumeration of the nonzero
    // elements by the positive integers.
    const XCandidate& at(unsigned j) {
        if (j < 1) throw Error(Errc::PreconditionViolated, "candidate indices start at 1");
        while (cache_.size() < j) {
            if (!advance()) throw Error(Errc::BoundExhausted, "candidate enumeration bounds exceeded");
        }
        return cache_[j - 1];
    }

    unsigned generated() const { return static_cast<unsigned>(cache_.size()); }

private:
    struct Coefficient {
        Polynomial value;
        unsigned layer;
    };

    std::vector<Monomial> degree_monomials(unsigned d) const {
        std::vector<Monomial> out;
        Monomial cur(nvars_);
        gen_monomials(d, 0, cur, out);
        std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
            return a.e > b.e;  // x1-heavy exponent vectors first
        });
        return out;
    }

    void gen_monomials(unsigned remaining, unsigned var, Monomial& cur,
                       std::vector<Monomial>& out) const {
        if (var + 1 == nvars_) {
            cur.e[var] = remaining;
            out.push_back(cur);
            cur.e[var] = 0;
            return;
        }
        for (unsigned k = 0; k <= remaining; ++k) {
            cur.e[var] = k;
            gen_monomials(remaining - k, var + 1, cur, out);
        }
        cur.e[var] = 0;
    }

    unsigned max_index_for_layer(unsigned L) const {
        unsigned idx = 0;
        for (unsigned i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i].layer <= L) idx = i;
        return idx;
    }

    // Steps the odometer to the next tuple, rolling over X-degree and layer;
    // appends to the cache when the tuple is new in the current layer.
    // Returns false when the whole universe is exhausted.
    bool advance() {
        for (;;) {
            if (layer_ > max_layers_) return false;
            unsigned maxidx = max_index_for_layer(layer_);
            // odometer step: digits_[k] is the coefficient index of X^k,
            // leading digit (k = xdeg_) runs over 1..maxidx
            bool stepped = false;
            for (size_t k = digits_.size(); k-- > 0;) {
                if (digits_[k] < maxidx) {
                    ++digits_[k];
                    for (size_t t = k + 1; t < digits_.size(); ++t)
                        digits_[t] = (t + 1 == digits_.size()) ? 1u : 0u;
                    stepped = true;
                    break;
                }
            }
            if (!stepped) {
                // exhausted this X-degree; next degree or next layer
                if (xdeg_ + 1 <= std::min(layer_, max_xdeg_)) {
                    ++xdeg_;
                    digits_.assign(xdeg_ + 1, 0);
                    digits_.back() = 0;  // forces the first step to set it to 1
                    continue;
                }
                ++layer_;
                xdeg_ = 0;
                digits_.assign(1, 0);
                continue;
            }
            // leading coefficient must be nonzero
            if (digits_.back() == 0) continue;
            // membership in this layer: new coefficient or new X-degree
            unsigned used_layer = 0;
            for (unsigned d : digits_) used_layer = std::max(used_layer, coeffs_[d].layer);
            bool is_new = used_layer == layer_ || xdeg_ == layer_;
            if (!is_new) continue;
            XCandidate cand;
            for (unsigned d : digits_) cand.coeffs.push_back(coeffs_[d].value);
            cache_.push_back(std::move(cand));
            return true;
        }
    }

    unsigned nvars_, max_xdeg_, max_layers_;
    std::vector<Coefficient> coeffs_;
    std::vector<XCandidate> cache_;
    unsigned layer_, xdeg_;
    std::vector<unsigned> digits_;
};

enum class ZCase { unit, zero, factor };

inline const char* zcase_name(ZCase c) {
    switch (c) {
        case ZCase::unit: return "unit";
        case ZCase::zero: return "zero";
        case ZCase::factor: return "factor";
    }
    return "?";
}

struct ZEntry {
    unsigned step = 0;             // i
    unsigned candidate_index = 0;  // j used at this step
    ZCase zcase = ZCase::unit;
    Polynomial z;
    Polynomial candidate_value;  // G_j(M_i), exact
    Polynomial partial_product;  // M_i, exact
};

struct ZTrace {
    std::vector<ZEntry> entries;
};

// u = 1 + A_1 z_1 + ... + A_N z_1...z_N at precision K, together with the
// exact data it was assembled from.
struct UElement {
    TruncatedSeries series;
    std::vector<unsigned> q;
    std::vector<Polynomial> a;         // A_k = g^{q(k)}
    std::vector<Polynomial> z;         // z_1..z_N
    std::vector<Polynomial> partials;  // M_1..M_{N+1}, exact polynomials
    Polynomial exact;                  // the full finite sum, untruncated

    // K_k = A_k z_1..z_{k-1} + sum_{m>k} A_m z_1..z_{k-1} z_{k+1}..z_m, so
    // that the exact element equals M_k + z_k K_k.
    Polynomial remainder_cofactor(unsigned k) const {
        unsigned n = exact.nvars();
        unsigned N = static_cast<unsigned>(z.size());
        if (k < 1 || k > N) throw Error(Errc::PreconditionViolated, "index outside the run");
        Polynomial prefix = Polynomial::constant(n, 1);
        for (unsigned t = 1; t < k; ++t) prefix = prefix * z[t - 1];
        Polynomial acc(n);
        Polynomial tail = Polynomial::constant(n, 1);
        for (unsigned m = k; m <= N; ++m) {
            if (m > k) tail = tail * z[m - 1];
            acc += a[m - 1] * prefix * tail;
        }
        return acc;
    }
};

// Factorization witness r = c * d with c in S cap M and d a unit of T,
// certified at precision K.
struct FactorWitness {
    unsigned candidate_index = 0;
    unsigned step = 0;  // the step whose z provides c
    TruncatedSeries value;
    Polynomial c;
    TruncatedSeries d;
    bool verified = false;
};

// One ring of the ascending chain. Stage 0 is S itself, where every nonunit
// r factors as r * 1; stage t+1 adjoins u_t and carries explicit witnesses
// for the sampled nonunits.
struct SubringStage {
    unsigned index = 0;
    std::vector<TruncatedSeries> adjoined;
    std::vector<FactorWitness> witnesses;

    const FactorWitness* find_witness(unsigned candidate_index) const {
        for (const auto& w : witnesses)
            if (w.candidate_index == candidate_index) return &w;
        return nullptr;
    }
};

enum class SampleOutcome { unit, zero_value, witnessed, not_reached };

inline const char* sample_outcome_name(SampleOutcome o) {
    switch (o) {
        case SampleOutcome::unit: return "unit";
        case SampleOutcome::zero_value: return "zero";
        case SampleOutcome::witnessed: return "witnessed";
        case SampleOutcome::not_reached: return "not-reached";
    }
    return "?";
}

struct SampleRecord {
    unsigned candidate_index = 0;
    SampleOutcome outcome = SampleOutcome::not_reached;
    bool eq2_verified = false;  // meaningful for `witnessed`
};

struct ConstructionResult {
    ConstructionConfig config;
    ZTrace trace;
    UElement u;
    SubringStage stage;  // the stage with u adjoined
    std::vector<SampleRecord> samples;
    bool z_all_valid = false;          // every z_i nonzero and in S cap M
    bool partials_distinct = false;    // M_i pairwise distinct, exactly
    bool witnesses_verified = false;   // every emitted witness checked out
    bool eq2_all_verified = false;     // every witnessed sample passed eq-2
};

// The three-case selection: the candidate value at the current partial
// product decides both z_i and which candidate the next step consumes.
inline std::pair<ZCase, Polynomial> z_select(const XCandidate& G, const Polynomial& m,
                                             const SubringStage& stage,
                                             const Polynomial& base) {
    Polynomial r = G.eval(m);
    if (r.constant_term() != 0) return {ZCase::unit, base};
    if (r.is_zero()) return {ZCase::zero, base};
    if (stage.index == 0) return {ZCase::factor, r};  // stage-0 witness is (r, 1)
    // later stages must present an explicit factorization witness
    for (const auto& w : stage.witnesses) {
        if (w.c == r) return {ZCase::factor, w.c};
    }
    throw Error(Errc::MissingWitness, "stage nonunit without a factorization witness");
}

namespace detail {

// Right-hand side of the unit-factorization identity:
//   d' + sum_{m=1}^{deg} r_m sum_{j=1}^{m} C(m,j) z_k^{j-1} K_k^j M_k^{m-j}
inline Polynomial eq2_unit_part(const XCandidate& G, const Polynomial& d_prime,
                                const Polynomial& zk, const Polynomial& Kk,
                                const Polynomial& Mk) {
    unsigned n = Mk.nvars();
    Polynomial acc = d_prime;
    unsigned deg = G.xdegree();
    for (unsigned m = 1; m <= deg; ++m) {
        const Polynomial& rm = G.coeffs[m];
        if (rm.is_zero()) continue;
        Polynomial inner(n);
        for (unsigned j = 1; j <= m; ++j) {
            Rational binom(binomial(m, j));
            inner += binom * (zk.pow(j - 1) * Kk.pow(j) * Mk.pow(m - j));
        }
        acc += rm * inner;
    }
    return acc;
}

}  // namespace detail

// Check the factorization G(u) = z_k * (d' + ...) at precision K, with every
// ingredient supplied explicitly (the negative controls corrupt K_k here).
inline bool verify_eq2_parts(const XCandidate& G, const Polynomial& z_k,
                             const Polynomial& d_prime, const Polynomial& K_k,
                             const Polynomial& M_k, const Polynomial& u_exact,
                             unsigned precision) {
    Polynomial lhs = G.eval(u_exact).truncated(precision);
    Polynomial unit_part = detail::eq2_unit_part(G, d_prime, z_k, K_k, M_k);
    Polynomial rhs = (z_k * unit_part).truncated(precision);
    return lhs == rhs;
}

// Reconstructs K_k and d' from the run data and checks the identity.
// Requires G(M_k) nonzero and not a unit with z_k dividing it.
inline bool verify_eq2(const XCandidate& G, const UElement& u, unsigned k) {
    if (k < 1 || k > u.z.size())
        throw Error(Errc::PreconditionViolated, "step index outside the run");
    const Polynomial& Mk = u.partials[k - 1];
    Polynomial value = G.eval(Mk);
    if (value.is_zero() || value.constant_term() != 0)
        throw Error(Errc::PreconditionViolated,
                    "candidate value at M_k must be a nonzero nonunit");
    Polynomial d_prime = exact_divide(value, u.z[k - 1]);
    Polynomial Kk = u.remainder_cofactor(k);
    return verify_eq2_parts(G, u.z[k - 1], d_prime, Kk, Mk, u.exact, u.series.precision());
}

// Witness check r = c * d at precision K with c in S cap M and d a unit.
inline bool check_witness(const Polynomial& c, const TruncatedSeries& d,
                          const TruncatedSeries& r) {
    if (c.constant_term() != 0) return false;
    if (!is_unit(d)) return false;
    TruncatedSeries cs(c, r.precision());
    return series_mul(cs, d) == r;
}

// Stage-0 principal-extension certificate: the witness for r is (r, 1).
inline bool check_principal_extension(const Polynomial& r, unsigned precision) {
    TruncatedSeries rs(r, precision);
    return check_witness(r, TruncatedSeries::one(r.nvars(), precision), rs);
}

// Later stages: look the witness up in the table.
inline bool check_principal_extension(const SubringStage& stage, unsigned candidate_index) {
    const FactorWitness* w = stage.find_witness(candidate_index);
    if (!w) throw Error(Errc::MissingWitness, "no witness recorded for this element");
    return check_witness(w->c, w->d, w->value);
}

inline ConstructionResult run_construction(const ConstructionConfig& cfg) {
    cfg.validate();
    unsigned n = cfg.nvars;
    unsigned N = cfg.steps;
    unsigned K = cfg.precision;
    std::vector<unsigned> q = cfg.effective_q();

    ConstructionResult res;
    res.config = cfg;

    CandidateEnumerator enumerator(n, cfg.max_xdegree, cfg.max_layers);
    SubringStage stage0;  // S itself

    std::vector<Polynomial> a;
    for (unsigned i = 0; i < N; ++i) a.push_back(cfg.base.pow(q[i]));

    std::vector<Polynomial> z;
    std::vector<Polynomial> partials;
    Polynomial m = Polynomial::constant(n, 1);  // M_1 = 1
    partials.push_back(m);
    Polynomial zprod = Polynomial::constant(n, 1);
    unsigned j = 1;
    for (unsigned i = 1; i <= N; ++i) {
        const XCandidate& G = enumerator.at(j);
        auto [zcase, zi] = z_select(G, m, stage0, cfg.base);
        ZEntry entry;
        entry.step = i;
        entry.candidate_index = j;
        entry.zcase = zcase;
        entry.z = zi;
        entry.candidate_value = G.eval(m);
        entry.partial_product = m;
        res.trace.entries.push_back(entry);
        if (zcase != ZCase::zero) ++j;
        z.push_back(zi);
        zprod = zprod * zi;
        m += a[i - 1] * zprod;
        partials.push_back(m);
    }

    res.u.q = q;
    res.u.a = a;
    res.u.z = z;
    res.u.partials = partials;
    res.u.exact = m;  // M_{N+1}
    res.u.series = TruncatedSeries(m, K);

    res.z_all_valid = true;
    for (const auto& zi : z)
        if (zi.is_zero() || zi.constant_term() != 0) res.z_all_valid = false;

    res.partials_distinct = true;
    for (size_t x = 0; x < partials.size() && res.partials_distinct; ++x)
        for (size_t y = x + 1; y < partials.size(); ++y)
            if (partials[x] == partials[y]) { res.partials_distinct = false; break; }

    // stage 1: adjoin u and certify the sampled nonunits
    res.stage.index = 1;
    res.stage.adjoined.push_back(res.u.series);

    std::vector<unsigned> sample;
    for (unsigned s = 1; s <= 10; ++s) sample.push_back(s);
    for (const auto& e : res.trace.entries)
        if (std::find(sample.begin(), sample.end(), e.candidate_index) == sample.end())
            sample.push_back(e.candidate_index);

    res.witnesses_verified = true;
    res.eq2_all_verified = true;
    for (unsigned idx : sample) {
        SampleRecord rec;
        rec.candidate_index = idx;
        const XCandidate& G = enumerator.at(idx);
        Polynomial val_exact = G.eval(res.u.exact);
        TruncatedSeries val(val_exact, K);
        if (val_exact.constant_term() != 0) {
            rec.outcome = SampleOutcome::unit;
        } else if (val_exact.is_zero()) {
            rec.outcome = SampleOutcome::zero_value;
        } else {
            // witnessed only if the run applied the factor case to this
            // candidate at some step k; then G(M_k) = z_k * d'
            const ZEntry* factor_entry = nullptr;
            for (const auto& e : res.trace.entries)
                if (e.candidate_index == idx && e.zcase == ZCase::factor) factor_entry = &e;
            if (!factor_entry) {
                rec.outcome = SampleOutcome::not_reached;
            } else {
                unsigned k = factor_entry->step;
                Polynomial d_prime = exact_divide(factor_entry->candidate_value, res.u.z[k - 1]);
                Polynomial unit_part = detail::eq2_unit_part(
                    G, d_prime, res.u.z[k - 1], res.u.remainder_cofactor(k),
                    res.u.partials[k - 1]);
                FactorWitness w;
                w.candidate_index = idx;
                w.step = k;
                w.value = val;
                w.c = res.u.z[k - 1];
                w.d = TruncatedSeries(unit_part, K);
                w.verified = check_witness(w.c, w.d, w.value);
                rec.outcome = SampleOutcome::witnessed;
                rec.eq2_verified = verify_eq2(G, res.u, k);
                if (!w.verified) res.witnesses_verified = false;
                if (!rec.eq2_verified) res.eq2_all_verified = false;
                res.stage.witnesses.push_back(std::move(w));
            }
        }
        res.samples.push_back(rec);
    }
    if (!res.witnesses_verified)
        throw Error(Errc::WitnessVerificationFailed,
                    "a recorded factorization witness failed re-verification");
    return res;
}

// Distinct strictly increasing exponent functions must give distinct u's.
inline bool verify_u_injectivity(const std::vector<unsigned>& q, const std::vector<unsigned>& p,
                                 const ConstructionConfig& cfg) {
    ConstructionConfig a = cfg, b = cfg;
    a.q = q;
    b.q = p;
    a.steps = static_cast<unsigned>(q.size());
    b.steps = static_cast<unsigned>(p.size());
    a.validate();
    b.validate();
    if (cfg.precision < q[0] + 2 || cfg.precision < p[0] + 2)
        throw Error(Errc::PrecisionTooLow,
                    "precision cannot separate the first-index disagreement");
    ConstructionResult ra = run_construction(a);
    ConstructionResult rb = run_construction(b);
    if (ra.u.series.precision() != rb.u.series.precision()) return true;
    return ra.u.series != rb.u.series;
}

inline std::string serialize_trace(const ConstructionResult& res,
                                   const std::vector<std::string>& vars) {
    std::ostringstream os;
    os << "# adjunction trace: n=" << res.config.nvars << " K=" << res.config.precision
       << " N=" << res.config.steps << " q=";
    auto q = res.config.effective_q();
    for (size_t i = 0; i < q.size(); ++i) os << (i ? "," : "") << q[i];
    os << " g=" << res.config.base.to_string(vars) << "\n";
    for (const auto& e : res.trace.entries) {
        os << e.step << " " << zcase_name(e.zcase) << " z=" << e.z.to_string(vars)
           << " j=" << e.candidate_index << "\n";
    }
    os << "u = " << res.u.series.representative().to_string(vars) << "\n";
    os << "check z-nonzero-in-M: " << (res.z_all_valid ? "pass" : "FAIL") << "\n";
    os << "check M-distinct: " << (res.partials_distinct ? "pass" : "FAIL") << "\n";
    os << "check witnesses: " << (res.witnesses_verified ? "pass" : "FAIL") << "\n";
    os << "check eq2: " << (res.eq2_all_verified ? "pass" : "FAIL") << "\n";
    os << "samples:";
    for (const auto& s : res.samples)
        os << " " << s.candidate_index << ":" << sample_outcome_name(s.outcome);
    os << "\n";
    return os.str();
}

}  // namespace ringkit
