#pragma once

#include <map>
#include <string>
#include <vector>

#include "ybd/linalg.hpp"
#include "ybd/op_io.hpp"
#include "ybd/pair_op.hpp"
#include "ybd/params.hpp"
#include "ybd/relations.hpp"
#include "ybd/standard_p.hpp"

namespace ybd {

// Mixed symmetric/antisymmetric family on an odd-dimensional space N = 2n-1,
// governed by one scalar q (with a = q^2) and free coefficients mu_1..mu_{n-1}.
// Zero coefficients must form a prefix (mu_i = 0 forces mu_{i-1} = 0); the
// prefix length is the cutoff below which no deformation entries appear.
struct EsotericSpec {
    int n = 2;
    Cyc q = Cyc(Rat(2));
    std::vector<Cyc> mu; // mu[i-1] = mu_i, size n-1

    int N() const { return 2 * n - 1; }

    int cutoff() const {
        int c = 0;
        while (c < static_cast<int>(mu.size()) && mu[static_cast<size_t>(c)].is_zero()) ++c;
        return c;
    }

    void validate() const {
        if (n < 2) throw SpecError("esoteric spec: n must be >= 2");
        if (N() > 8) throw ScaleError("esoteric spec: 2n-1 <= 8 only");
        if (static_cast<int>(mu.size()) != n - 1)
            throw SpecError("esoteric spec: mu must have n-1 entries");
        Cyc q2 = q * q;
        if (q.is_zero() || (q2 * q2).is_one())
            throw ParamError("esoteric spec: q^4 must differ from 1");
        for (int i = cutoff(); i < n - 1; ++i)
            if (mu[static_cast<size_t>(i)].is_zero())
                throw SpecError("esoteric spec: zero mu coefficients must form a prefix");
    }
};

inline Json eso_spec_to_json(const EsotericSpec& s) {
    Json arr = Json::array();
    for (const auto& m : s.mu) arr.push_back(cyc_to_json(m));
    return Json{{"n", s.n}, {"q", cyc_to_json(s.q)}, {"mu", arr}};
}

inline EsotericSpec eso_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("q") || !j.contains("mu"))
        throw SpecError("esoteric spec: expected {n, q, mu}");
    EsotericSpec s;
    s.n = j["n"].get<int>();
    s.q = cyc_from_json(j["q"], "esoteric q");
    for (const auto& e : j["mu"]) s.mu.push_back(cyc_from_json(e, "esoteric mu"));
    s.validate();
    return s;
}

// Parameter values realized by the undeformed operator: a = q^2 and
// q^{ij} = 1/q, except 1/q^2 on the anti-diagonal i + j = 2n.
inline ParamSet eso_params(const EsotericSpec& s) {
    s.validate();
    ParamSet p;
    p.n = s.N();
    p.a = s.q * s.q;
    Cyc qi = s.q.inv();
    for (int i = 1; i <= p.n; ++i)
        for (int j = i + 1; j <= p.n; ++j) p.q[{i, j}] = (i + j == 2 * s.n) ? qi * qi : qi;
    return p;
}

struct EsotericCoeffs {
    std::map<int, Cyc> mu;    // above the cutoff
    std::map<int, Cyc> mu_p;  // mu'_i = -q^{2(i-n)} mu_i
    std::map<Pr, Cyc> lam;    // lam_{ij} = (1-q^2) q^{2(i-j)} mu_i / mu_j
    std::map<Pr, Cyc> lam_p;  // lam'_{ij} = (q^2-1) mu_i / mu_j
    int cutoff = 0;
};

inline EsotericCoeffs esoteric_coeffs(const EsotericSpec& s) {
    s.validate();
    EsotericCoeffs c;
    c.cutoff = s.cutoff();
    Cyc q2 = s.q * s.q;
    for (int i = c.cutoff + 1; i <= s.n - 1; ++i) {
        Cyc mi = s.mu[static_cast<size_t>(i - 1)];
        c.mu[i] = mi;
        c.mu_p[i] = -cyc_pow(s.q, 2L * (i - s.n)) * mi;
        for (int j = i + 1; j <= s.n - 1; ++j) {
            Cyc mj = s.mu[static_cast<size_t>(j - 1)];
            c.lam[{i, j}] = (Cyc(1) - q2) * cyc_pow(s.q, 2L * (i - j)) * mi * mj.inv();
            c.lam_p[{i, j}] = (q2 - Cyc(1)) * mi * mj.inv();
        }
    }
    return c;
}

// The deformed invertible solution: diagonal part q / q^2 / 1 with the
// anti-diagonal distinguished, plus mu / mu' entries feeding the middle
// weight (n,n) and lam / lam' entries coupling anti-diagonal pairs.
inline PairOp<Cyc> build_esoteric_R(const EsotericSpec& s) {
    s.validate();
    int N = s.N(), n = s.n;
    Cyc q2 = s.q * s.q;
    PairOp<Cyc> R;
    R.n = N;
    for (int i = 1; i <= N; ++i) {
        R.m[{{i, i}, {i, i}}] = Cyc(1);
        for (int j = 1; j <= N; ++j) {
            if (i < j) R.m[{{i, j}, {j, i}}] = Cyc(1) - q2;
            if (i != j && i + j != 2 * n) R.m[{{i, j}, {i, j}}] = s.q;
        }
    }
    for (int i = 1; i < n; ++i) {
        int ip = 2 * n - i;
        R.m[{{i, ip}, {i, ip}}] = q2;
        R.m[{{ip, i}, {ip, i}}] = Cyc(1);
    }
    EsotericCoeffs c = esoteric_coeffs(s);
    for (const auto& [i, mi] : c.mu) {
        int ip = 2 * n - i;
        op_accum(R, {{i, ip}, {n, n}}, mi);
        op_accum(R, {{ip, i}, {n, n}}, c.mu_p.at(i));
    }
    for (const auto& [ij, l] : c.lam) {
        auto [i, j] = ij;
        int ip = 2 * n - i, jp = 2 * n - j;
        op_accum(R, {{i, ip}, {j, jp}}, c.lam_p.at(ij));
        op_accum(R, {{ip, i}, {jp, j}}, l);
    }
    return R;
}

inline CheckResult check_esoteric(const EsotericSpec& s) {
    PairOp<Cyc> P = convert_p_r(build_esoteric_R(s));
    Cyc a = s.q * s.q;
    TripleOp<Cyc> br = braid_residual(P);
    PairOp<Cyc> hk = hecke_residual(P, a);
    bool bp = br.m.empty(), hp = hk.m.empty();
    bool pass = bp && hp;
    return {pass, Json{{"pass", pass},
                       {"braid", report_json(bp, br)},
                       {"hecke", report_json(hp, hk)}}};
}

namespace detail {

inline SparseVec<WordKey> relation_vec(const Relation& r) {
    SparseVec<WordKey> v;
    for (const auto& [w, c] : r.terms) v[w] = c;
    return v;
}

inline std::vector<SparseVec<WordKey>> relation_vecs(const std::vector<Relation>& rs) {
    std::vector<SparseVec<WordKey>> out;
    for (const auto& r : rs) out.push_back(relation_vec(r));
    return out;
}

} // namespace detail

// Verify the closed-form quadratic relations of the deformed algebra inside
// the relation ideal computed from the operator itself. Each entry of the
// report names one relation instance; x denotes the symmetric generators,
// t the antisymmetric ones, [A,B]_c = AB - c BA, primes the reflection
// i' = 2n - i.
inline CheckResult esoteric_relations(const EsotericSpec& s) {
    s.validate();
    int n = s.n;
    Cyc q = s.q, q2 = q * q, q2i = q2.inv();
    EsotericCoeffs co = esoteric_coeffs(s);
    PairOp<Cyc> P = convert_p_r(build_esoteric_R(s));
    auto plane = detail::relation_vecs(plane_relations(P));
    auto anti = detail::relation_vecs(antiplane_relations(P, q2));
    auto cross = detail::relation_vecs(cross_relations(P, q2));
    auto prime = [&](int i) { return 2 * n - i; };
    auto xw = [](int i, int j) { return WordKey{0, {i, j}}; }; // x-x words / x-before-t
    auto tx = [](int i, int j) { return WordKey{1, {i, j}}; }; // t-before-x words
    auto put = [](SparseVec<WordKey>& v, const WordKey& k, const Cyc& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = v.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) v.erase(it);
        }
    };
    bool pass = true;
    Json items = Json::array();
    auto record = [&](const std::string& name, bool ok) {
        pass = pass && ok;
        items.push_back(Json{{"relation", name}, {"pass", ok}});
    };
    for (int j = 1; j <= n - 1; ++j) {
        int jp = prime(j);
        std::string js = std::to_string(j), jps = std::to_string(jp);
        // [x^j, x^{j'}]_{1/q^2} = q^{-2} sum_i lam_{ij} x^{i'} x^i
        {
            SparseVec<WordKey> v;
            put(v, xw(j, jp), Cyc(1));
            put(v, xw(jp, j), -q2i);
            for (const auto& [ij, l] : co.lam)
                if (ij.second == j) put(v, xw(prime(ij.first), ij.first), -(q2i * l));
            record("[x" + js + ",x" + jps + "]_{1/q^2} = q^{-2} sum lam x'x", in_span(plane, v));
        }
        // {t^j, t^{j'}} = - sum_i lam_{ij} t^{i'} t^i
        {
            SparseVec<WordKey> v;
            put(v, xw(j, jp), Cyc(1));
            put(v, xw(jp, j), Cyc(1));
            for (const auto& [ij, l] : co.lam)
                if (ij.second == j) put(v, xw(prime(ij.first), ij.first), l);
            record("{t" + js + ",t" + jps + "} = -sum lam t't", in_span(anti, v));
        }
        // [x^j, t^{j'}]_{1/q^2} = q^{-2} sum_i lam_{ij} t^{i'} x^i + (q^{-2}-1) t^j x^{j'}
        {
            SparseVec<WordKey> v;
            put(v, xw(j, jp), Cyc(1));
            put(v, tx(jp, j), -q2i);
            for (const auto& [ij, l] : co.lam)
                if (ij.second == j) put(v, tx(prime(ij.first), ij.first), -(q2i * l));
            put(v, tx(j, jp), -(q2i - Cyc(1)));
            record("[x" + js + ",t" + jps + "]_{1/q^2} = q^{-2} sum lam t'x + (q^{-2}-1) t" + js +
                       "x" + jps,
                   in_span(cross, v));
        }
        // [t^j, x^{j'}] = -q^{-2} sum_i lam'_{ij} t^i x^{i'}
        {
            SparseVec<WordKey> v;
            put(v, tx(j, jp), Cyc(1));
            put(v, xw(jp, j), -Cyc(1));
            for (const auto& [ij, l] : co.lam_p)
                if (ij.second == j) put(v, tx(ij.first, prime(ij.first)), q2i * l);
            record("[t" + js + ",x" + jps + "] = -q^{-2} sum lam' tx'", in_span(cross, v));
        }
    }
    // t^n t^n = - sum_i mu'_i t^{i'} t^i
    {
        SparseVec<WordKey> v;
        put(v, xw(n, n), Cyc(1));
        for (const auto& [i, mp] : co.mu_p) put(v, xw(prime(i), i), mp);
        record("t" + std::to_string(n) + "t" + std::to_string(n) + " = -sum mu' t't",
               in_span(anti, v));
    }
    // [t^n, x^{j'}]_q = 0 for j' > n
    for (int jp = n + 1; jp <= s.N(); ++jp) {
        SparseVec<WordKey> v;
        put(v, tx(n, jp), Cyc(1));
        put(v, xw(jp, n), -q);
        record("[t" + std::to_string(n) + ",x" + std::to_string(jp) + "]_q = 0",
               in_span(cross, v));
    }
    // [t^n, x^n]_{q^2} = sum_i (mu_i x^i t^{i'} + mu'_i x^{i'} t^i)
    {
        SparseVec<WordKey> v;
        put(v, tx(n, n), Cyc(1));
        put(v, xw(n, n), -q2);
        for (const auto& [i, mi] : co.mu) put(v, xw(i, prime(i)), -mi);
        for (const auto& [i, mp] : co.mu_p) put(v, xw(prime(i), i), -mp);
        record("[t" + std::to_string(n) + ",x" + std::to_string(n) + "]_{q^2} = sum (mu xt' + mu' x't)",
               in_span(cross, v));
    }
    return {pass, Json{{"pass", pass}, {"relations", items}}};
}

} // namespace ybd
