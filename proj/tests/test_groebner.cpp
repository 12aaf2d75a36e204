#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ringkit;
using testutil::P;
using testutil::make_ideal;

static const std::vector<std::string> XY{"x", "y"};
static const std::vector<std::string> XYZ{"x", "y", "z"};
static const std::vector<std::string> XYZW{"x", "y", "z", "w"};

TEST_CASE("monomial generators are their own reduced basis") {
    IdealHandle I = make_ideal({"x*y", "x*z"}, XYZ);
    auto basis = I.basis();
    REQUIRE(basis.size() == 2);
    CHECK(((basis[0] == P("x*y", XYZ) && basis[1] == P("x*z", XYZ)) ||
           (basis[0] == P("x*z", XYZ) && basis[1] == P("x*y", XYZ))));
}

TEST_CASE("lex basis of the twisted cubic eliminates x") {
    IdealHandle I(3, {P("x^2 - y", XYZ), P("x^3 - z", XYZ)}, MonomialOrder::lex());
    bool found = false;
    for (const auto& g : I.basis())
        if (g == P("y^3 - z^2", XYZ) || g == P("-y^3 + z^2", XYZ)) found = true;
    CHECK(found);
}

TEST_CASE("zero ideal has the empty basis") {
    IdealHandle I(2, {Polynomial(2)}, MonomialOrder::grevlex());
    CHECK(I.basis().empty());
    CHECK(I.is_zero_ideal());
}

TEST_CASE("normal form examples") {
    IdealHandle I = make_ideal({"x*y"}, XYZ);
    CHECK(normal_form(P("x^2*y", XYZ), I).is_zero());
    CHECK(normal_form(P("x + y", XYZ), I) == P("x + y", XYZ));
    IdealHandle J = make_ideal({"x^2 - y"}, XYZ);
    CHECK(normal_form(P("x^2", XYZ), J) == P("y", XYZ));
}

TEST_CASE("ideal equality is generator-order independent") {
    CHECK(ideal_equal(make_ideal({"x", "y"}, XY), make_ideal({"y", "x"}, XY)));
    CHECK_FALSE(ideal_equal(make_ideal({"x^2"}, XY), make_ideal({"x"}, XY)));
    IdealHandle inter = ideal_intersection(make_ideal({"x"}, XYZW),
                                           make_ideal({"y", "z"}, XYZW));
    CHECK(ideal_equal(inter, make_ideal({"x*y", "x*z"}, XYZW)));
}

TEST_CASE("ideal quotient by an element") {
    IdealHandle q1 = ideal_quotient(make_ideal({"x^2"}, XY), P("x", XY));
    CHECK(ideal_equal(q1, make_ideal({"x"}, XY)));
    IdealHandle q2 = ideal_quotient(make_ideal({"x*y", "x*z"}, XYZW), P("x", XYZW));
    CHECK(ideal_equal(q2, make_ideal({"y", "z"}, XYZW)));
    IdealHandle q3 = ideal_quotient(make_ideal({"x*y", "x*z"}, XYZW), P("w", XYZW));
    CHECK(ideal_equal(q3, make_ideal({"x*y", "x*z"}, XYZW)));
    CHECK_THROWS_AS(ideal_quotient(make_ideal({"x"}, XY), Polynomial(2)), Error);
}

TEST_CASE("ideal quotient by an ideal") {
    IdealHandle q1 = ideal_quotient_ideal(make_ideal({"x^2", "x*y"}, XY),
                                          make_ideal({"x", "y"}, XY));
    CHECK(ideal_equal(q1, make_ideal({"x"}, XY)));
    IdealHandle M4 = make_ideal({"x", "y", "z", "w"}, XYZW);
    IdealHandle I = make_ideal({"x*y", "x*z"}, XYZW);
    IdealHandle q2 = ideal_quotient_ideal(I, M4);
    CHECK(ideal_equal(q2, I));
    IdealHandle zero(1, {Polynomial(1)}, MonomialOrder::grevlex());
    IdealHandle q3 = ideal_quotient_ideal(zero, IdealHandle(1, {Polynomial::variable(1, 0)},
                                                            MonomialOrder::grevlex()));
    CHECK(q3.is_zero_ideal());
    CHECK_THROWS_AS(ideal_quotient_ideal(I, IdealHandle(4, {Polynomial(4)},
                                                        MonomialOrder::grevlex())),
                    Error);
}

TEST_CASE("intersection via the auxiliary indeterminate") {
    std::vector<std::string> five{"x", "y1", "y2", "z1", "z2"};
    IdealHandle a = ideal_intersection(make_ideal({"x"}, five),
                                       make_ideal({"y1", "y2"}, five));
    CHECK(ideal_equal(a, make_ideal({"x*y1", "x*y2"}, five)));
    IdealHandle I = make_ideal({"x*y", "x*z"}, XYZW);
    CHECK(ideal_equal(ideal_intersection(I, I), I));
}

TEST_CASE("dimension examples") {
    CHECK(dimension(IdealHandle(3, {Polynomial(3)}, MonomialOrder::grevlex())) == 3);
    CHECK(dimension(make_ideal({"x*y"}, XYZ)) == 2);
    CHECK(dimension(make_ideal({"x*y", "x*z"}, XYZW)) == 3);
    CHECK_THROWS_AS(dimension(make_ideal({"1"}, XY)), Error);
}

TEST_CASE("homogeneity detection") {
    CHECK(is_homogeneous(make_ideal({"x^2"}, XYZ)));
    CHECK_FALSE(is_homogeneous(make_ideal({"x^2 - y"}, XYZ)));
    CHECK(is_homogeneous(make_ideal({"x*y", "x*z"}, XYZ)));
}

TEST_CASE("every S-polynomial of a returned basis reduces to zero") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 10; ++t) {
        unsigned n = 2 + rng() % 2;
        std::vector<Polynomial> gens;
        unsigned count = 1 + rng() % 3;
        for (unsigned i = 0; i < count; ++i) {
            Polynomial g = testutil::random_polynomial(n, 3, rng);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        IdealHandle I(n, gens, MonomialOrder::grevlex());
        const auto& basis = I.basis();
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j) {
                Polynomial s = detail::s_polynomial(basis[i], basis[j], I.order());
                CHECK(detail::reduce_full(s, basis, I.order(), nullptr).is_zero());
            }
    }
}

TEST_CASE("normal form is idempotent and detects membership") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 15; ++t) {
        unsigned n = 2 + rng() % 2;
        IdealHandle I = testutil::random_monomial_ideal(n, rng);
        Polynomial f = testutil::random_polynomial(n, 4, rng);
        Polynomial nf = normal_form(f, I);
        CHECK(normal_form(nf, I) == nf);
        // random combination of generators lies in the ideal
        Polynomial combo(n);
        for (const auto& g : I.generators())
            combo += testutil::random_polynomial(n, 2, rng) * g;
        CHECK(normal_form(combo, I).is_zero());
    }
}

TEST_CASE("quotient monotonicity and iterated quotients") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 10; ++t) {
        unsigned n = 2 + rng() % 3;
        IdealHandle I = testutil::random_monomial_ideal(n, rng);
        Polynomial f = Polynomial::term(n, testutil::random_monomial(n, 2, rng), 1);
        Polynomial g = Polynomial::term(n, testutil::random_monomial(n, 2, rng), 1);
        IdealHandle If = ideal_quotient(I, f);
        for (const auto& h : I.basis()) CHECK(If.contains(h));  // I subseteq (I : f)
        IdealHandle lhs = ideal_quotient(If, g);
        IdealHandle rhs = ideal_quotient(I, f * g);
        CHECK(ideal_equal(lhs, rhs));
    }
}

TEST_CASE("dimension matches the brute-force oracle on random monomial ideals") {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 40; ++t) {
        unsigned n = 1 + rng() % 5;
        IdealHandle I = testutil::random_monomial_ideal(n, rng);
        CHECK(dimension(I) == testutil::dimension_oracle_monomial(I));
    }
}

TEST_CASE("reduced basis is invariant under generator permutation") {
    std::mt19937_64 rng(25);
    for (int t = 0; t < 10; ++t) {
        unsigned n = 2 + rng() % 2;
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) {
            Polynomial g = testutil::random_polynomial(n, 3, rng);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.size() < 2) continue;
        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        IdealHandle a(n, gens, MonomialOrder::grevlex());
        IdealHandle b(n, shuffled, MonomialOrder::grevlex());
        CHECK(a.basis() == b.basis());
    }
}

TEST_CASE("saturation stabilizes the quotient chain") {
    IdealHandle I = make_ideal({"x^2*y", "x^3"}, XY);
    IdealHandle sat = saturate(I, P("x", XY));
    CHECK(ideal_equal(sat, make_ideal({"1"}, XY)));
    IdealHandle J = make_ideal({"x*y", "x*z"}, XYZW);
    CHECK(ideal_equal(saturate(J, P("x", XYZW)), make_ideal({"y", "z"}, XYZW)));
}
