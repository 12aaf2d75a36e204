#include <catch_amalgamated.hpp>

#include "ringkit/construction.hpp"
#include "helpers.hpp"

using namespace ringkit;
using testutil::P;

static const std::vector<std::string> X12 = default_var_names(2);

namespace {

ConstructionConfig defaults() { return ConstructionConfig::defaults(); }

}  // namespace

TEST_CASE("candidate enumeration starts at the constant one and is stable") {
    CandidateEnumerator en(2, 4, 8);
    REQUIRE(en.at(1).coeffs.size() == 1);
    CHECK(en.at(1).coeffs[0] == Polynomial::constant(2, 1));
    XCandidate again = en.at(1);
    CHECK(again.coeffs == en.at(1).coeffs);
    for (unsigned j = 1; j <= 100; ++j) {
        bool all_zero = true;
        for (const auto& c : en.at(j).coeffs)
            if (!c.is_zero()) all_zero = false;
        CHECK_FALSE(all_zero);
        CHECK_FALSE(en.at(j).coeffs.back().is_zero());
    }
    CHECK_THROWS_AS(en.at(0), Error);
}

TEST_CASE("tiny enumeration bounds exhaust") {
    CandidateEnumerator en(1, 1, 1);
    CHECK_THROWS_AS(en.at(100000), Error);
}

TEST_CASE("z-selection cases") {
    SubringStage stage0;
    Polynomial g = Polynomial::variable(2, 0);

    XCandidate one;
    one.coeffs = {Polynomial::constant(2, 1)};
    auto [c1, z1] = z_select(one, P("1 + x1^2", X12), stage0, g);
    CHECK(c1 == ZCase::unit);
    CHECK(z1 == g);

    XCandidate xminus1;  // X - 1
    xminus1.coeffs = {Polynomial::constant(2, -1), Polynomial::constant(2, 1)};
    auto [c2, z2] = z_select(xminus1, Polynomial::constant(2, 1), stage0, g);
    CHECK(c2 == ZCase::zero);
    CHECK(z2 == g);

    // G = X - 1 at M2 = 1 + x*g with g = x: G(M2) = x^2, witnessed as x^2 * 1
    auto [c3, z3] = z_select(xminus1, P("1 + x1^2", X12), stage0, g);
    CHECK(c3 == ZCase::factor);
    CHECK(z3 == P("x1^2", X12));
}

TEST_CASE("default run satisfies every certificate") {
    auto res = run_construction(defaults());
    REQUIRE(res.trace.entries.size() == 4);
    CHECK(res.z_all_valid);
    CHECK(res.partials_distinct);
    CHECK(res.witnesses_verified);
    CHECK(res.eq2_all_verified);
    for (const auto& e : res.trace.entries) {
        CHECK_FALSE(e.z.is_zero());
        CHECK(e.z.constant_term() == 0);
        if (e.zcase == ZCase::unit) CHECK(e.candidate_value.constant_term() != 0);
        if (e.zcase == ZCase::zero) CHECK(e.candidate_value.is_zero());
    }
    // the constant candidate 1 is consumed by the unit case, never witnessed
    CHECK(res.trace.entries[0].zcase == ZCase::unit);
    for (const auto& w : res.stage.witnesses) CHECK(w.candidate_index != 1);
    // u = 1 + sum A_k z_1..z_k exactly
    Polynomial expect = Polynomial::constant(2, 1);
    Polynomial zprod = Polynomial::constant(2, 1);
    for (size_t k = 0; k < res.u.z.size(); ++k) {
        zprod = zprod * res.u.z[k];
        expect += res.u.a[k] * zprod;
    }
    CHECK(res.u.exact == expect);
    CHECK(res.u.series == TruncatedSeries(expect, res.config.precision));
}

TEST_CASE("config validation") {
    auto cfg = defaults();
    cfg.q = {3, 2, 5};
    cfg.steps = 3;
    CHECK_THROWS_AS(run_construction(cfg), Error);
    cfg = defaults();
    cfg.base = Polynomial::constant(2, 1);
    CHECK_THROWS_AS(run_construction(cfg), Error);
    cfg = defaults();
    cfg.precision = 1;
    CHECK_THROWS_AS(run_construction(cfg), Error);
}

TEST_CASE("the factorization identity holds and fails on corrupted data") {
    auto cfg = defaults();
    cfg.steps = 8;
    cfg.precision = 7;
    auto res = run_construction(cfg);
    CandidateEnumerator en(2, cfg.max_xdegree, cfg.max_layers);
    bool exercised = false;
    for (const auto& e : res.trace.entries) {
        if (e.zcase != ZCase::factor) continue;
        const XCandidate& G = en.at(e.candidate_index);
        unsigned k = e.step;
        CHECK(verify_eq2(G, res.u, k));
        if (G.xdegree() >= 1) {
            exercised = true;
            Polynomial val = G.eval(res.u.partials[k - 1]);
            Polynomial dp = exact_divide(val, res.u.z[k - 1]);
            Polynomial Kk = res.u.remainder_cofactor(k);
            CHECK(verify_eq2_parts(G, res.u.z[k - 1], dp, Kk, res.u.partials[k - 1],
                                   res.u.exact, cfg.precision));
            Polynomial corrupted = Kk + Polynomial::variable(2, 0);
            CHECK_FALSE(verify_eq2_parts(G, res.u.z[k - 1], dp, corrupted,
                                         res.u.partials[k - 1], res.u.exact,
                                         cfg.precision));
        }
    }
    CHECK(exercised);
}

TEST_CASE("linear candidates satisfy the first-order identity") {
    // G(X) = a X + b gives G(u) = G(M_k) + z_k a K_k
    auto res = run_construction(defaults());
    XCandidate G;
    G.coeffs = {P("1", X12), P("x1", X12)};  // x*X + 1
    for (unsigned k = 1; k <= res.u.z.size(); ++k) {
        Polynomial lhs = G.eval(res.u.exact);
        Polynomial rhs = G.eval(res.u.partials[k - 1]) +
                         res.u.z[k - 1] * P("x1", X12) * res.u.remainder_cofactor(k);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("prefix stability across precisions") {
    auto c6 = defaults();
    c6.precision = 6;
    c6.steps = 5;
    auto c4 = c6;
    c4.precision = 4;
    auto r6 = run_construction(c6);
    auto r4 = run_construction(c4);
    CHECK(r6.u.series.truncated(4) == r4.u.series);
    REQUIRE(r6.trace.entries.size() == r4.trace.entries.size());
    for (size_t i = 0; i < r6.trace.entries.size(); ++i) {
        CHECK(r6.trace.entries[i].zcase == r4.trace.entries[i].zcase);
        CHECK(r6.trace.entries[i].z == r4.trace.entries[i].z);
    }
}

TEST_CASE("summand order growth") {
    auto cfg = defaults();
    cfg.steps = 5;
    cfg.precision = 8;
    auto res = run_construction(cfg);
    Polynomial zprod = Polynomial::constant(2, 1);
    for (size_t k = 1; k <= res.u.z.size(); ++k) {
        zprod = zprod * res.u.z[k - 1];
        Polynomial summand = res.u.a[k - 1] * zprod;
        REQUIRE(summand.order().has_value());
        CHECK(*summand.order() >= k + 1);
    }
}

TEST_CASE("distinct exponent functions give distinct elements") {
    auto cfg = defaults();
    cfg.precision = 6;
    CHECK(verify_u_injectivity({1, 2, 3}, {2, 3, 4}, cfg));
    CHECK_FALSE(verify_u_injectivity({1, 2, 3}, {1, 2, 3}, cfg));
    cfg.precision = 8;
    CHECK(verify_u_injectivity({2, 4, 6}, {3, 5, 7}, cfg));
    cfg.precision = 4;
    CHECK_THROWS_AS(verify_u_injectivity({5, 6}, {1, 2}, cfg), Error);
}

TEST_CASE("injectivity battery") {
    std::vector<std::vector<unsigned>> pool{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    auto cfg = defaults();
    cfg.precision = 8;
    std::mt19937_64 rng(51);
    for (int t = 0; t < 20; ++t) {
        size_t a = rng() % pool.size();
        size_t b = rng() % pool.size();
        if (a == b) b = (b + 1) % pool.size();
        CHECK(verify_u_injectivity(pool[a], pool[b], cfg));
    }
}

TEST_CASE("principal extension certificates") {
    CHECK(check_principal_extension(P("x1^2", X12), 5));
    auto res = run_construction(defaults());
    REQUIRE_FALSE(res.stage.witnesses.empty());
    CHECK(check_principal_extension(res.stage, res.stage.witnesses[0].candidate_index));
    CHECK_THROWS_AS(check_principal_extension(res.stage, 999), Error);
    // corrupt the unit into a nonunit
    FactorWitness bad = res.stage.witnesses[0];
    bad.d = TruncatedSeries(P("x1", X12), res.config.precision);
    CHECK_FALSE(check_witness(bad.c, bad.d, bad.value));
}

TEST_CASE("trace serialization is deterministic") {
    auto a = run_construction(defaults());
    auto b = run_construction(defaults());
    CHECK(serialize_trace(a, X12) == serialize_trace(b, X12));
    CHECK(serialize_trace(a, X12).find("check eq2: pass") != std::string::npos);
}
