#include <catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace ringkit;
using testutil::make_ideal;
using testutil::P;

static const std::vector<std::string> XY{"x", "y"};
static const std::vector<std::string> XYZ{"x", "y", "z"};
static const std::vector<std::string> XYZW{"x", "y", "z", "w"};

TEST_CASE("minimal primes of the worked examples") {
    MinimalPrimesResult a = minimal_primes(make_ideal({"x*y", "x*z"}, XYZW));
    REQUIRE(a.decided);
    REQUIRE(a.primes.size() == 2);
    CHECK(a.primes[0].to_string(XYZW) == "(x)");
    CHECK(a.primes[0].quotient_dimension == 3);
    CHECK(a.primes[1].to_string(XYZW) == "(y, z)");
    CHECK(a.primes[1].quotient_dimension == 2);

    MinimalPrimesResult b = minimal_primes(make_ideal({"x^2"}, XYZ));
    REQUIRE(b.decided);
    REQUIRE(b.primes.size() == 1);
    CHECK(b.primes[0].to_string(XYZ) == "(x)");
    CHECK(b.primes[0].quotient_dimension == 2);

    MinimalPrimesResult c = minimal_primes(IdealHandle(3, {Polynomial(3)},
                                                       MonomialOrder::grevlex()));
    REQUIRE(c.decided);
    REQUIRE(c.primes.size() == 1);
    CHECK(c.primes[0].generators.empty());
    CHECK(c.primes[0].quotient_dimension == 3);

    CHECK_THROWS_AS(minimal_primes(make_ideal({"1"}, XY)), Error);
}

TEST_CASE("non-monomial ideals with monomial reduced bases are decided") {
    // {x*y + x*z, y} reduces to the monomial basis {y, x*z}
    MinimalPrimesResult r = minimal_primes(make_ideal({"x*y + x*z", "y"}, XYZ));
    REQUIRE(r.decided);
    REQUIRE(r.primes.size() == 2);
}

TEST_CASE("variable-content splitting decides some genuinely non-monomial ideals") {
    // (x*(x+y), x*y^2): both recursion branches eventually turn monomial
    MinimalPrimesResult r = minimal_primes(make_ideal({"x^2 + x*y", "x*y^2"}, XY));
    REQUIRE(r.decided);
    REQUIRE(r.primes.size() == 1);
    CHECK(r.primes[0].to_string(XY) == "(x)");
}

TEST_CASE("decomposition that stalls reports Undecided with a reason") {
    MinimalPrimesResult r = minimal_primes(make_ideal({"x^2 + x*y"}, XY));
    CHECK_FALSE(r.decided);
    CHECK(r.reason == "DecompositionUnsupported");
}

TEST_CASE("reducedness of the worked examples") {
    CHECK(is_reduced(make_ideal({"x^2"}, XYZ)) == Tri::no);
    CHECK(is_reduced(make_ideal({"x*y"}, XYZ)) == Tri::yes);
    CHECK(is_reduced(make_ideal({"x*y", "x*z"}, XYZW)) == Tri::yes);
}

TEST_CASE("equidimensionality of the worked examples") {
    CHECK(is_equidimensional(minimal_primes(make_ideal({"x*y"}, XYZ))) == Tri::yes);
    CHECK(is_equidimensional(minimal_primes(make_ideal({"x*y", "x*z"}, XYZW))) == Tri::no);
    CHECK(is_equidimensional(minimal_primes(IdealHandle(2, {Polynomial(2)},
                                                        MonomialOrder::grevlex()))) ==
          Tri::yes);
}

TEST_CASE("socle test for depth at least one") {
    SocleTestResult a = depth_at_least_one(make_ideal({"x^2", "x*y"}, XY));
    CHECK_FALSE(a.depth_at_least_one);
    REQUIRE(a.socle_witness);
    CHECK(*a.socle_witness == P("x", XY));

    SocleTestResult b = depth_at_least_one(make_ideal({"x*y", "x*z"}, XYZW));
    CHECK(b.depth_at_least_one);

    SocleTestResult c = depth_at_least_one(IdealHandle(1, {Polynomial(1)},
                                                       MonomialOrder::grevlex()));
    CHECK(c.depth_at_least_one);
}

TEST_CASE("depth at least two with certificates") {
    Depth2Result a = depth_at_least_two(make_ideal({"x^2"}, XYZ), 16, 0);
    CHECK(a.verdict == Tri::yes);
    REQUIRE(a.certificate.regular_sequence.size() == 2);
    CHECK(testutil::reverify_depth_certificate(make_ideal({"x^2"}, XYZ), a.certificate));

    Depth2Result b = depth_at_least_two(make_ideal({"x*y", "x*z"}, XYZW), 16, 0);
    CHECK(b.verdict == Tri::yes);
    CHECK(testutil::reverify_depth_certificate(make_ideal({"x*y", "x*z"}, XYZW),
                                               b.certificate));

    // depth-zero rings violate the precondition
    CHECK_THROWS_AS(depth_at_least_two(make_ideal({"x^2", "x*y"}, XY), 16, 0), Error);
}

TEST_CASE("depth certificates are seed-deterministic") {
    IdealHandle I = make_ideal({"x*y"}, XYZ);
    Depth2Result a = depth_at_least_two(I, 16, 7);
    Depth2Result b = depth_at_least_two(I, 16, 7);
    CHECK(a.verdict == b.verdict);
    CHECK(a.certificate.regular_sequence == b.certificate.regular_sequence);
}

TEST_CASE("embedding dimension") {
    CHECK(embedding_dimension(IdealHandle(1, {Polynomial(1)}, MonomialOrder::grevlex())) == 1);
    CHECK(embedding_dimension(make_ideal({"x"}, XY)) == 1);
    CHECK(embedding_dimension(make_ideal({"x^2"}, {"x"})) == 1);
}

TEST_CASE("noncatenarity windows") {
    IdealHandle I = make_ideal({"x*y", "x*z"}, XYZW);
    WindowResult w1 = noncat_window(I, 1);
    REQUIRE(w1.decided);
    REQUIRE(w1.witness);
    CHECK(w1.witness->to_string(XYZW) == "(y, z)");
    CHECK(w1.witness->quotient_dimension == 2);

    std::vector<std::string> five{"x", "y1", "y2", "z1", "z2"};
    WindowResult w2 = noncat_window(make_ideal({"x*y1", "x*y2"}, five), 2);
    REQUIRE(w2.decided);
    REQUIRE(w2.witness);
    CHECK(w2.witness->to_string(five) == "(y1, y2)");
    CHECK(w2.witness->quotient_dimension == 3);

    WindowResult w3 = noncat_window(make_ideal({"x*y"}, XYZ), 1);
    REQUIRE(w3.decided);
    CHECK_FALSE(w3.witness);
}

TEST_CASE("prime witnesses contain the ideal and are pairwise incomparable") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
        unsigned n = 1 + rng() % 5;
        IdealHandle I = testutil::random_monomial_ideal(n, rng);
        MinimalPrimesResult mp = minimal_primes(I);
        REQUIRE(mp.decided);
        for (const auto& w : mp.primes) {
            IdealHandle Ph(n, w.generators.empty() ? std::vector<Polynomial>{Polynomial(n)}
                                                   : w.generators,
                           I.order());
            for (const auto& g : I.generators()) CHECK(Ph.contains(g));
        }
        for (size_t i = 0; i < mp.primes.size(); ++i)
            for (size_t j = 0; j < mp.primes.size(); ++j) {
                if (i == j) continue;
                uint32_t mi = testutil::witness_mask(mp.primes[i], n);
                uint32_t mj = testutil::witness_mask(mp.primes[j], n);
                CHECK(((mi & mj) != mi || mi == mj));
            }
    }
}

TEST_CASE("minimal primes match the brute-force oracle") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 40; ++t) {
        unsigned n = 1 + rng() % 5;
        IdealHandle I = testutil::random_monomial_ideal(n, rng);
        MinimalPrimesResult mp = minimal_primes(I);
        REQUIRE(mp.decided);
        std::vector<uint32_t> got;
        for (const auto& w : mp.primes) got.push_back(testutil::witness_mask(w, n));
        std::sort(got.begin(), got.end());
        CHECK(got == testutil::minimal_primes_oracle_monomial(I));
    }
}

TEST_CASE("reduced positive-dimensional rings have positive depth") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 25; ++t) {
        unsigned n = 1 + rng() % 4;
        IdealHandle I = testutil::random_monomial_ideal(n, rng);
        if (is_reduced(I) != Tri::yes) continue;
        if (dimension(I) < 1) continue;
        CHECK(depth_at_least_one(I).depth_at_least_one);
    }
}

TEST_CASE("invariant report certificates re-verify") {
    std::mt19937_64 rng(34);
    for (int t = 0; t < 15; ++t) {
        unsigned n = 2 + rng() % 3;
        IdealHandle I = testutil::random_monomial_ideal(n, rng);
        InvariantReport inv = compute_invariants(I, 8, 5);
        SocleTestResult s = depth_at_least_one(I);
        CHECK(inv.depth1 == s.depth_at_least_one);
        if (inv.depth2 == Tri::yes || inv.depth_certificate.depth_is_zero)
            CHECK(testutil::reverify_depth_certificate(I, inv.depth_certificate));
    }
}
