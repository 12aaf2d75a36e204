#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ringkit/error.hpp"
#include "ringkit/monomial.hpp"
#include "ringkit/rational.hpp"

namespace ringkit {

// Multivariate polynomial over Q. Zero coefficients are never stored; the
// ambient variable count is fixed at construction and checked on every
// binary operation.
class Polynomial {
public:
    using TermMap = std::map<std::vector<unsigned>, Rational>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(unsigned nvars) : nvars_(nvars) {}

    static Polynomial constant(unsigned nvars, Rational c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_[std::vector<unsigned>(nvars, 0)] = std::move(c);
        return p;
    }

    static Polynomial variable(unsigned nvars, unsigned idx) {
        Polynomial p(nvars);
        std::vector<unsigned> e(nvars, 0);
        e[idx] = 1;
        p.terms_[e] = 1;
        return p;
    }

    static Polynomial term(unsigned nvars, const Monomial& m, Rational c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_[m.e] = std::move(c);
        return p;
    }

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational constant_term() const {
        auto it = terms_.find(std::vector<unsigned>(nvars_, 0));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m.e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, Monomial(e).degree());
        return d;
    }

    bool is_homogeneous() const {
        std::optional<unsigned> d;
        for (const auto& [e, c] : terms_) {
            unsigned t = Monomial(e).degree();
            if (!d) d = t;
            else if (*d != t) return false;
        }
        return true;
    }

    // true iff the polynomial is a single term
    bool is_term() const { return terms_.size() == 1; }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m.e);
        if (it == terms_.end()) {
            terms_[m.e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_ambient(o);
        for (const auto& [e, c] : o.terms_) add_term(Monomial(e), c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_ambient(o);
        for (const auto& [e, c] : o.terms_) add_term(Monomial(e), -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ambient(b);
        Polynomial r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(Monomial(ea) * Monomial(eb), ca * cb);
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r(p.nvars_);
        if (c == 0) return r;
        for (const auto& [e, k] : p.terms_) r.terms_[e] = c * k;
        return r;
    }

    Polynomial pow(unsigned n) const {
        Polynomial r = constant(nvars_, 1);
        Polynomial b = *this;
        while (n > 0) {
            if (n & 1u) r = r * b;
            b = b * b;
            n >>= 1u;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Drop all terms of total degree >= K.
    Polynomial truncated(unsigned K) const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_)
            if (Monomial(e).degree() < K) r.terms_[e] = c;
        return r;
    }

    // Smallest total degree among the terms (order of vanishing at 0);
    // returns nullopt for the zero polynomial.
    std::optional<unsigned> order() const {
        std::optional<unsigned> d;
        for (const auto& [e, c] : terms_) {
            unsigned t = Monomial(e).degree();
            if (!d || t < *d) d = t;
        }
        return d;
    }

    std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw Error(Errc::ZeroElement, "leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.less(Monomial(best->first), Monomial(it->first))) best = it;
        return {Monomial(best->first), best->second};
    }

    Polynomial monic(const MonomialOrder& ord) const {
        if (terms_.empty()) return *this;
        auto [m, c] = leading_term(ord);
        return Rational(1) / c * *this;
    }

    // Evaluate, as a polynomial in a single slot, at another polynomial:
    // substitutes v for the variable with index `var` (all exponents of
    // `var` expanded). Used for candidate evaluation in the construction.
    // Here instead we provide generic univariate composition helpers at the
    // call sites; nothing variable-specific is needed on Polynomial itself.

    // --- serialization: graded reverse lexicographic, descending ---------

    std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& ord) const {
        std::vector<std::pair<Monomial, Rational>> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_) out.emplace_back(Monomial(e), c);
        std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
            return ord.less(b.first, a.first);
        });
        return out;
    }

    std::string to_string(const std::vector<std::string>& vars) const {
        if (vars.size() != nvars_)
            throw Error(Errc::AmbientMismatch, "variable name list length mismatch");
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : sorted_terms(MonomialOrder::grevlex())) {
            Rational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                if (a < 0) { os << " - "; a = -a; }
                else os << " + ";
            }
            first = false;
            std::string mono = monomial_string(m, vars);
            if (mono.empty()) {
                os << a;
            } else {
                if (a != 1) os << a << "*";
                os << mono;
            }
        }
        return os.str();
    }

    // Grammar: rational coefficients `p/q`, `^` exponent, `*` product,
    // `+`/`-` sums; variables are identifiers from `vars`.
    static Polynomial parse(const std::string& text, const std::vector<std::string>& vars) {
        Parser p{text, 0, vars};
        Polynomial r = p.parse_sum();
        p.skip_ws();
        if (p.pos != text.size())
            throw Error(Errc::ParseError, "trailing input at offset " + std::to_string(p.pos));
        return r;
    }

private:
    void check_ambient(const Polynomial& o) const {
        if (nvars_ != o.nvars_)
            throw Error(Errc::AmbientMismatch, "polynomials from different ambient rings");
    }

    static std::string monomial_string(const Monomial& m, const std::vector<std::string>& vars) {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << vars[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
        return os.str();
    }

    struct Parser {
        const std::string& s;
        size_t pos;
        const std::vector<std::string>& vars;

        void skip_ws() {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        }

        bool eat(char c) {
            skip_ws();
            if (pos < s.size() && s[pos] == c) { ++pos; return true; }
            return false;
        }

        char peek() {
            skip_ws();
            return pos < s.size() ? s[pos] : '\0';
        }

        Integer parse_uint() {
            skip_ws();
            if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
                throw Error(Errc::ParseError, "expected number at offset " + std::to_string(pos));
            Integer v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                v = v * 10 + (s[pos] - '0');
                ++pos;
            }
            return v;
        }

        std::string parse_ident() {
            skip_ws();
            size_t start = pos;
            if (pos >= s.size() ||
                !(std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                throw Error(Errc::ParseError, "expected identifier at offset " + std::to_string(pos));
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            return s.substr(start, pos - start);
        }

        Polynomial parse_sum() {
            bool neg = false;
            if (eat('-')) neg = true;
            else eat('+');
            Polynomial r = parse_term();
            if (neg) r = -r;
            for (;;) {
                char c = peek();
                if (c == '+') { ++pos; r += parse_term(); }
                else if (c == '-') { ++pos; r -= parse_term(); }
                else break;
            }
            return r;
        }

        Polynomial parse_term() {
            Polynomial r = parse_factor();
            while (eat('*')) r = r * parse_factor();
            return r;
        }

        Polynomial parse_factor() {
            unsigned n = static_cast<unsigned>(vars.size());
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Integer num = parse_uint();
                Integer den = 1;
                if (eat('/')) {
                    den = parse_uint();
                    if (den == 0) throw Error(Errc::ParseError, "zero denominator");
                }
                return Polynomial::constant(n, Rational(num, den));
            }
            std::string name = parse_ident();
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end())
                throw Error(Errc::ParseError, "unknown variable '" + name + "'");
            unsigned idx = static_cast<unsigned>(it - vars.begin());
            unsigned exp = 1;
            if (eat('^')) exp = static_cast<unsigned>(parse_uint());
            Monomial m(n);
            m.e[idx] = exp;
            return Polynomial::term(n, m, 1);
        }
    };

    unsigned nvars_;
    TermMap terms_;
};

inline std::vector<std::string> default_var_names(unsigned n) {
    std::vector<std::string> v;
    v.reserve(n);
    for (unsigned i = 0; i < n; ++i) v.push_back("x" + std::to_string(i + 1));
    return v;
}

}  // namespace ringkit
