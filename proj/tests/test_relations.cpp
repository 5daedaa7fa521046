#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ybd/relations.hpp"
#include "ybd/standard_p.hpp"

using namespace ybd;

namespace {

ParamSet p2() {
    ParamSet p;
    p.n = 2;
    p.a = Cyc(3);
    p.q[{1, 2}] = Cyc(2);
    return p;
}

Relation mk(RelKind kind, std::vector<std::tuple<int, Pr, Cyc>> terms) {
    Relation r;
    r.kind = kind;
    for (auto& [tag, pr, c] : terms) r.terms.push_back({WordKey{tag, pr}, c});
    std::sort(r.terms.begin(), r.terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return r;
}

// Predicted reduced relations for the standard operator: the symmetric-side
// relation x^i x^j - q^{ij} x^j x^i per i<j; the antisymmetric side has the
// squares t^i t^i and t^i t^j + a q^{ij} t^j t^i per i<j.
std::vector<Relation> predicted_plane(const ParamSet& p) {
    std::vector<Relation> rs;
    for (int i = 1; i <= p.n; ++i)
        for (int j = i + 1; j <= p.n; ++j)
            rs.push_back(mk(RelKind::Plane, {{0, {i, j}, Cyc(1)}, {0, {j, i}, -p.qget(i, j)}}));
    return rs;
}

std::vector<Relation> predicted_antiplane(const ParamSet& p) {
    std::vector<Relation> rs;
    for (int i = 1; i <= p.n; ++i) {
        rs.push_back(mk(RelKind::Antiplane, {{0, {i, i}, Cyc(1)}}));
        for (int j = i + 1; j <= p.n; ++j)
            rs.push_back(
                mk(RelKind::Antiplane, {{0, {i, j}, Cyc(1)}, {0, {j, i}, p.a * p.qget(i, j)}}));
    }
    return rs;
}

std::vector<Relation> predicted_cross(const ParamSet& p) {
    std::vector<Relation> rs;
    for (int i = 1; i <= p.n; ++i)
        for (int j = 1; j <= p.n; ++j) {
            Relation r;
            r.kind = RelKind::Cross;
            r.terms.push_back({WordKey{0, {i, j}}, p.a});
            if (i == j) {
                r.terms.push_back({WordKey{1, {i, i}}, Cyc(-1)});
            } else if (i < j) {
                r.terms.push_back({WordKey{1, {i, j}}, p.a - Cyc(1)});
                r.terms.push_back({WordKey{1, {j, i}}, -(p.a * p.qget(i, j))});
            } else {
                r.terms.push_back({WordKey{1, {j, i}}, -p.qget(i, j)});
            }
            rs.push_back(std::move(r));
        }
    return rs;
}

} // namespace

TEST_CASE("two-generator relations come out in reduced frozen form") {
    ParamSet p = p2();
    PairOp<Cyc> P = build_standard_P(p);

    auto plane = plane_relations(P);
    REQUIRE(plane.size() == 1);
    REQUIRE(plane[0].terms.size() == 2);
    CHECK(plane[0].terms[0].first == WordKey{0, {1, 2}});
    CHECK(plane[0].terms[0].second == Cyc(1));
    CHECK(plane[0].terms[1].first == WordKey{0, {2, 1}});
    CHECK(plane[0].terms[1].second == Cyc(-2));

    auto anti = antiplane_relations(P, p.a);
    REQUIRE(anti.size() == 3);
    CHECK(anti[0].terms.size() == 1); // t1 t1
    CHECK(anti[0].terms[0].first == WordKey{0, {1, 1}});
    CHECK(anti[1].terms.size() == 2); // t1 t2 + 6 t2 t1
    CHECK(anti[1].terms[1].second == Cyc(6));
    CHECK(anti[2].terms.size() == 1); // t2 t2
    CHECK(anti[2].terms[0].first == WordKey{0, {2, 2}});

    auto cross = cross_relations(P, p.a);
    REQUIRE(cross.size() == 4);
    // a x1 t2 - (1-a) t1 x2 - a q t2 x1, with a=3, q=2.
    const Relation& c12 = cross[1];
    REQUIRE(c12.terms.size() == 3);
    CHECK(c12.terms[0].first == WordKey{0, {1, 2}});
    CHECK(c12.terms[0].second == Cyc(3));
    CHECK(c12.terms[1].first == WordKey{1, {1, 2}});
    CHECK(c12.terms[1].second == Cyc(2));
    CHECK(c12.terms[2].first == WordKey{1, {2, 1}});
    CHECK(c12.terms[2].second == Cyc(-6));
}

TEST_CASE("reduced relations match the closed forms on random samples") {
    for (unsigned long seed : {11UL, 12UL}) {
        for (int n : {2, 3, 4}) {
            ParamSet p = sample_params(n, seed);
            PairOp<Cyc> P = build_standard_P(p);
            CHECK(relations_equal(plane_relations(P), predicted_plane(p)));
            CHECK(relations_equal(antiplane_relations(P, p.a), predicted_antiplane(p)));
            CHECK(relations_equal(cross_relations(P, p.a), predicted_cross(p)));
        }
    }
}

TEST_CASE("relation counts scale with the generator count") {
    for (int n : {2, 3, 4, 5}) {
        ParamSet p = sample_params(n, 5);
        PairOp<Cyc> P = build_standard_P(p);
        CHECK(static_cast<int>(plane_relations(P).size()) == n * (n - 1) / 2);
        CHECK(static_cast<int>(antiplane_relations(P, p.a).size()) == n * (n + 1) / 2);
        CHECK(static_cast<int>(cross_relations(P, p.a).size()) == n * n);
    }
}

TEST_CASE("degree-three coefficient spaces have binomial dimensions") {
    {
        ParamSet p = sample_params(3, 21);
        auto [pd, ad] = degree3_dims(build_standard_P(p), p.a);
        CHECK(pd == 10); // C(5,3)
        CHECK(ad == 1);  // C(3,3)
    }
    {
        ParamSet p = sample_params(4, 22);
        auto [pd, ad] = degree3_dims(build_standard_P(p), p.a);
        CHECK(pd == 20); // C(6,3)
        CHECK(ad == 4);  // C(4,3)
    }
}

TEST_CASE("relation guards reject degenerate eigenvalues") {
    ParamSet p = p2();
    PairOp<Cyc> P = build_standard_P(p);
    CHECK_THROWS_AS(antiplane_relations(P, Cyc(0)), ParamError);
    CHECK_THROWS_AS(antiplane_relations(P, Cyc(-1)), ParamError);
    CHECK_THROWS_AS(cross_relations(P, Cyc(0)), ParamError);
    CHECK_THROWS_AS(degree3_dims(P, Cyc(-1)), ParamError);
}

TEST_CASE("relation text round-trips through the parser") {
    ParamSet p = p2();
    PairOp<Cyc> P = build_standard_P(p);
    std::vector<Relation> all;
    for (auto& r : plane_relations(P)) all.push_back(r);
    for (auto& r : antiplane_relations(P, p.a)) all.push_back(r);
    for (auto& r : cross_relations(P, p.a)) all.push_back(r);
    for (const Relation& r : all) {
        std::string line = relation_text(r);
        Relation back = parse_relation_text(line, r.kind);
        CHECK(back.terms == r.terms);
    }
}

TEST_CASE("relation text uses the documented surface syntax") {
    Relation r = mk(RelKind::Plane, {{0, {1, 2}, Cyc(1)}, {0, {2, 1}, Cyc(-2)}});
    CHECK(relation_text(r) == "x1*x2 - (2)*x2*x1 = 0");
    Relation s = mk(RelKind::Antiplane, {{0, {1, 1}, Cyc(1)}});
    CHECK(relation_text(s) == "t1*t1 = 0");
    Relation c = mk(RelKind::Cross, {{0, {2, 1}, Cyc(3)}, {1, {1, 2}, Cyc(Rat(-1, 2))}});
    CHECK(relation_text(c) == "(3)*x2*t1 - (1/2)*t1*x2 = 0");
    // A coefficient with both components nonpositive renders sign-pulled.
    Relation w = mk(RelKind::Plane, {{0, {1, 2}, Cyc(1)}, {0, {2, 1}, Cyc(Rat(-1), Rat(-1))}});
    CHECK(relation_text(w) == "x1*x2 - (1 + w)*x2*x1 = 0");
    Relation w2 = mk(RelKind::Plane, {{0, {1, 2}, Cyc(1)}, {0, {2, 1}, Cyc::omega()}});
    CHECK(relation_text(w2) == "x1*x2 + (w)*x2*x1 = 0");
    CHECK(parse_relation_text("x1*x2 + (w)*x2*x1 = 0", RelKind::Plane).terms == w2.terms);
}

TEST_CASE("list equality is exact: order, scale, and coefficients all count") {
    ParamSet p = p2();
    PairOp<Cyc> P = build_standard_P(p);
    auto anti = antiplane_relations(P, p.a);
    CHECK(relations_equal(anti, anti));
    auto shuffled = anti;
    std::swap(shuffled[0], shuffled[2]);
    CHECK_FALSE(relations_equal(anti, shuffled));
    auto truncated = anti;
    truncated.pop_back();
    CHECK_FALSE(relations_equal(anti, truncated));
    auto bent = anti;
    bent[1].terms[1].second += Cyc(1);
    CHECK_FALSE(relations_equal(anti, bent));
}

TEST_CASE("reduction is canonical: seeding the reducer differently cannot matter") {
    // The same operator fed twice must give identical reduced lists, and a
    // rescaled relation stays inside the span of the extracted set.
    ParamSet p = sample_params(3, 31);
    PairOp<Cyc> P = build_standard_P(p);
    auto a1 = plane_relations(P);
    auto a2 = plane_relations(P);
    CHECK(relations_equal(a1, a2));
    std::vector<SparseVec<Pr>> rows;
    for (const auto& r : a1) {
        SparseVec<Pr> v;
        for (const auto& [w, c] : r.terms) v[w.p] = c;
        rows.push_back(std::move(v));
    }
    for (const auto& r : a1) {
        SparseVec<Pr> scaled;
        for (const auto& [w, c] : r.terms) scaled[w.p] = c * Cyc(Rat(5, 7));
        CHECK(in_span(rows, scaled));
    }
    SparseVec<Pr> outside;
    outside[{1, 1}] = Cyc(1);
    CHECK_FALSE(in_span(rows, outside));
}
