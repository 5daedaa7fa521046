#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ybd/esoteric.hpp"
#include "ybd/params.hpp"
#include "ybd/standard_p.hpp"

using namespace ybd;

namespace {

ParamSet p3() {
    ParamSet p;
    p.n = 3;
    p.a = Cyc(2);
    p.q[{1, 2}] = Cyc(3);
    p.q[{1, 3}] = Cyc(5);
    p.q[{2, 3}] = Cyc(7);
    return p;
}

} // namespace

TEST_CASE("parameter lookups invert below the diagonal") {
    ParamSet p = p3();
    CHECK(p.qget(1, 2) == Cyc(3));
    CHECK(p.qget(2, 1) == Cyc(Rat(1, 3)));
    CHECK(p.qget(2, 2) == Cyc(1));
    // Unset pairs default to 1.
    ParamSet d;
    d.n = 4;
    CHECK(d.qget(1, 4) == Cyc(1));
    // The hatted variant divides by a on and below the diagonal.
    CHECK(p.hatq(1, 2) == Cyc(3));
    CHECK(p.hatq(2, 1) == Cyc(Rat(1, 6)));
    CHECK(p.hatq(2, 2) == Cyc(Rat(1, 2)));
}

TEST_CASE("parameter validation bounds and nonzero rules") {
    ParamSet p = p3();
    CHECK_NOTHROW(p.validate());
    p.q[{2, 1}] = Cyc(1);
    CHECK_THROWS_AS(p.validate(), ParamError);
    ParamSet z = p3();
    z.q[{1, 2}] = Cyc(0);
    CHECK_THROWS_AS(z.validate(), ParamError);
    ParamSet big;
    big.n = 9;
    CHECK_THROWS_AS(big.validate(), ParamError);
    ParamSet a0 = p3();
    a0.a = Cyc(0);
    CHECK_THROWS_AS(a0.validate(), ParamError);
}

TEST_CASE("the standard operator has its twelve expected entries at n=3") {
    ParamSet p = p3();
    PairOp<Cyc> P = build_standard_P(p);
    REQUIRE(P.m.size() == 12);
    // Diagonal words are fixed.
    for (int i = 1; i <= 3; ++i) CHECK(P.m.at({{i, i}, {i, i}}) == Cyc(1));
    // Ascending words: stay with coefficient 1-a, swap with 1/q.
    CHECK(P.m.at({{1, 2}, {1, 2}}) == Cyc(-1));
    CHECK(P.m.at({{1, 3}, {1, 3}}) == Cyc(-1));
    CHECK(P.m.at({{2, 3}, {2, 3}}) == Cyc(-1));
    CHECK(P.m.at({{1, 2}, {2, 1}}) == Cyc(Rat(1, 3)));
    CHECK(P.m.at({{1, 3}, {3, 1}}) == Cyc(Rat(1, 5)));
    CHECK(P.m.at({{2, 3}, {3, 2}}) == Cyc(Rat(1, 7)));
    // Descending words swap with a*q.
    CHECK(P.m.at({{2, 1}, {1, 2}}) == Cyc(6));
    CHECK(P.m.at({{3, 1}, {1, 3}}) == Cyc(10));
    CHECK(P.m.at({{3, 2}, {2, 3}}) == Cyc(14));
}

TEST_CASE("quadratic minimal polynomial holds exactly") {
    ParamSet p = p3();
    PairOp<Cyc> P = build_standard_P(p);
    PairOp<Cyc> I = identity2<Cyc>(3);
    // P^2 = (1-a) P + a.
    CHECK(compose(P, P) == op_add(op_scale(P, Cyc(-1)), op_scale(I, Cyc(2))));
    CHECK(hecke_residual(P, p.a).m.empty());
    CheckResult h = check_hecke(P, p.a);
    CHECK(h.pass);
    CHECK(h.report["pass"] == true);
    // Wrong eigenvalue leaves a residual.
    CHECK_FALSE(check_hecke(P, Cyc(3)).pass);
}

TEST_CASE("three-slot exchange identity holds and the report localizes tampering") {
    ParamSet p = p3();
    PairOp<Cyc> P = build_standard_P(p);
    CheckResult b = check_braid(P, "braid");
    CHECK(b.pass);
    CHECK(b.report["residual_entries"].empty());
    // The qybe form converts the given operator before testing the
    // three-factor identity, so it accepts the same P input.
    CHECK(check_braid(P, "qybe").pass);
    PairOp<Cyc> R = convert_p_r(P);
    // R itself fails the P-form identity (and vice versa) for generic a.
    CHECK_FALSE(check_braid(R, "braid").pass);
    CHECK_FALSE(check_braid(R, "qybe").pass);
    P.m[{{2, 3}, {3, 2}}] = Cyc(1);
    CheckResult bad = check_braid(P, "braid");
    CHECK_FALSE(bad.pass);
    CHECK(!bad.report["residual_entries"].empty());
    CHECK_THROWS_AS(check_braid(P, "frobnicate"), ParamError);
}

TEST_CASE("factored residual products vanish only for compatible operators") {
    ParamSet p = p3();
    PairOp<Cyc> P = build_standard_P(p);
    CheckResult t = check_theorem2(P, p.a);
    CHECK(t.pass);
    PairOp<Cyc> Q = P;
    Q.m[{{1, 2}, {2, 1}}] += Cyc(Rat(1, 9));
    CHECK_FALSE(check_theorem2(Q, p.a).pass);
}

TEST_CASE("derivative in a matches a finite difference") {
    ParamSet p = p3();
    ParamSet p2 = p3();
    p2.a = Cyc(5);
    // P is affine in a, so the slope is exact: P(a2) - P(a1) = (a2 - a1) dP/da.
    PairOp<Cyc> diff = op_sub(build_standard_P(p2), build_standard_P(p));
    CHECK(diff == op_scale(dP_da(p), Cyc(3)));
    PairOp<Cyc> D = dP_da(p);
    CHECK(D.m.at({{1, 2}, {1, 2}}) == Cyc(-1));
    CHECK(D.m.at({{2, 1}, {1, 2}}) == Cyc(3));
    CHECK(D.m.at({{3, 2}, {2, 3}}) == Cyc(7));
    CHECK(D.m.size() == 6);
}

TEST_CASE("derivative in one q parameter has the two expected entries") {
    ParamSet p = p3();
    PairOp<Cyc> D = dP_dq(p, 1, 3);
    REQUIRE(D.m.size() == 2);
    CHECK(D.m.at({{1, 3}, {3, 1}}) == Cyc(Rat(-1, 25)));
    CHECK(D.m.at({{3, 1}, {1, 3}}) == Cyc(2));
    CHECK_THROWS_AS(dP_dq(p, 3, 1), ParamError);
    CHECK_THROWS_AS(dP_dq(p, 2, 2), ParamError);
}

TEST_CASE("volume normalization holds for a tuned two-dimensional sample") {
    ParamSet p;
    p.n = 2;
    p.a = Cyc(4);
    p.q[{1, 2}] = Cyc(Rat(1, 2));
    CheckResult r = check_sl_condition(p);
    CHECK(r.pass);
    for (const auto& row : r.report["per_j"]) CHECK(row["pass"] == true);
}

TEST_CASE("volume normalization fails on the mixed-sector parameter point") {
    EsotericSpec s;
    s.n = 2;
    s.q = Cyc(2);
    s.mu = {Cyc(1)};
    ParamSet p = eso_params(s);
    CHECK(p.a == Cyc(4));
    CHECK(p.q.at({1, 3}) == Cyc(Rat(1, 4)));
    CHECK(p.q.at({1, 2}) == Cyc(Rat(1, 2)));
    CheckResult r = check_sl_condition(p);
    CHECK_FALSE(r.pass);
    CHECK(r.report["per_j"][0]["j"] == 1);
    CHECK(r.report["per_j"][0]["pass"] == false);
    CHECK(r.report["per_j"][0]["ratio"].dump() == "{\"r\":[4,1]}");
}

TEST_CASE("random parameter samples are valid and deterministic per seed") {
    for (int n = 2; n <= 5; ++n) {
        ParamSet p = sample_params(n, 99);
        CHECK_NOTHROW(p.validate());
        CHECK(p.n == n);
        CHECK(sample_params(n, 99).q == p.q);
        CHECK(sample_params(n, 100).q != p.q);
        CHECK(check_braid(build_standard_P(p), "braid").pass);
        CHECK(check_hecke(build_standard_P(p), p.a).pass);
    }
}
