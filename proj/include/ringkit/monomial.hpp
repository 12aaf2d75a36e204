#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "ringkit/error.hpp"

namespace ringkit {

// Exponent vector of fixed length (the ambient variable count).
struct Monomial {
    std::vector<unsigned> e;

    Monomial() = default;
    explicit Monomial(unsigned nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<unsigned> exps) : e(std::move(exps)) {}

    unsigned nvars() const { return static_cast<unsigned>(e.size()); }

    unsigned degree() const {
        return std::accumulate(e.begin(), e.end(), 0u);
    }

    bool is_one() const {
        for (unsigned x : e)
            if (x != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // Requires this->divides(o).
    Monomial quotient_of(const Monomial& o) const {
        Monomial r(nvars());
        for (size_t i = 0; i < e.size(); ++i) r.e[i] = o.e[i] - e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.nvars());
        for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0 && o.e[i] != 0) return false;
        return true;
    }

    // Bitmask of variables with positive exponent; nvars <= 32 in practice.
    uint32_t support() const {
        uint32_t m = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) m |= (1u << i);
        return m;
    }

    bool squarefree() const {
        for (unsigned x : e)
            if (x > 1) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

struct MonomialOrder {
    enum class Kind { grevlex, lex, elimination };

    Kind kind = Kind::grevlex;
    unsigned split = 0;  // number of leading variables eliminated first

    static MonomialOrder grevlex() { return {Kind::grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::lex, 0}; }
    static MonomialOrder elimination(unsigned split) { return {Kind::elimination, split}; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != Kind::elimination || split == o.split);
    }

    // strict "a < b" in the term order
    bool less(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::lex: return lex_less(a, b, 0, a.nvars());
            case Kind::grevlex: return grevlex_less(a, b, 0, a.nvars());
            case Kind::elimination: {
                int c = grevlex_cmp(a, b, 0, split);
                if (c != 0) return c < 0;
                return grevlex_less(a, b, split, a.nvars());
            }
        }
        return false;
    }

private:
    static bool lex_less(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) {
        for (unsigned i = lo; i < hi; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }

    static int grevlex_cmp(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) {
        unsigned da = 0, db = 0;
        for (unsigned i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
        if (da != db) return da < db ? -1 : 1;
        for (unsigned i = hi; i-- > lo;)
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        return 0;
    }

    static bool grevlex_less(const Monomial& a, const Monomial& b, unsigned lo, unsigned hi) {
        return grevlex_cmp(a, b, lo, hi) < 0;
    }
};

}  // namespace ringkit
