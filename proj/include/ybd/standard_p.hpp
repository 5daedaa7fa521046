#pragma once

#include <string>

#include "ybd/op_io.hpp"
#include "ybd/pair_op.hpp"
#include "ybd/params.hpp"

namespace ybd {

// The standard multiparameter operator P on C^n (x) C^n, in input-major form:
//   component [in (i,j), out (j,i)] = q^{ji}        for i<j
//                                   = 1             for i=j
//                                   = a*q^{ji}      for i>j
//   component [in (i,j), out (i,j)] = 1-a           for i<j
// On each 2x2 block {(i,j),(j,i)} the left 1-eigenvector is (q^{ij},1) and
// the left (-a)-eigenvector is (a*q^{ij},-1), so P satisfies both the braid
// relation and the quadratic relation (P-1)(P+a) = 0.
inline PairOp<Cyc> build_standard_P(const ParamSet& p) {
    p.validate();
    PairOp<Cyc> P;
    P.n = p.n;
    const Cyc one(Rat(1));
    for (int i = 1; i <= p.n; ++i)
        for (int j = 1; j <= p.n; ++j) {
            if (i == j) {
                P.m[{{i, i}, {i, i}}] = one;
                continue;
            }
            Cyc swapv = (i < j) ? p.qget(j, i) : p.a * p.qget(j, i);
            P.m[{{i, j}, {j, i}}] = swapv;
            if (i < j) {
                Cyc diag = one - p.a;
                if (!diag.is_zero()) P.m[{{i, j}, {i, j}}] = diag;
            }
        }
    return P;
}

// Derivative of build_standard_P with respect to a (q fixed).
inline PairOp<Cyc> dP_da(const ParamSet& p) {
    PairOp<Cyc> D;
    D.n = p.n;
    for (int i = 1; i <= p.n; ++i)
        for (int j = 1; j <= p.n; ++j) {
            if (i < j) D.m[{{i, j}, {i, j}}] = Cyc(Rat(-1));
            if (i > j) D.m[{{i, j}, {j, i}}] = p.qget(j, i);
        }
    return D;
}

// Derivative of build_standard_P with respect to q^{ij} (i<j), honoring
// q^{ji} = 1/q^{ij}.
inline PairOp<Cyc> dP_dq(const ParamSet& p, int i, int j) {
    if (!(1 <= i && i < j && j <= p.n)) throw ParamError("dP_dq: need 1 <= i < j <= n");
    PairOp<Cyc> D;
    D.n = p.n;
    Cyc qij = p.qget(i, j);
    D.m[{{i, j}, {j, i}}] = Cyc(Rat(0)) - (qij * qij).inv(); // d(1/q)/dq = -1/q^2
    D.m[{{j, i}, {i, j}}] = p.a;                             // d(a*q)/dq = a
    return D;
}

struct CheckResult {
    bool pass = true;
    Json report;
};

inline CheckResult check_hecke(const PairOp<Cyc>& P, const Cyc& a) {
    if (a.is_zero() || a == Cyc(Rat(-1))) throw ParamError("check_hecke: a must not be 0 or -1");
    PairOp<Cyc> res = hecke_residual(P, a);
    return {res.m.empty(), report_json(res.m.empty(), res)};
}

// form "braid": P12 P23 P12 = P23 P12 P23 on the operator itself.
// form "qybe":  R12 R13 R23 = R23 R13 R12 on the flip-converted matrix.
inline CheckResult check_braid(const PairOp<Cyc>& A, const std::string& form) {
    TripleOp<Cyc> res;
    if (form == "braid") {
        res = braid_residual(A);
    } else if (form == "qybe") {
        res = qybe_residual(convert_p_r(A));
    } else {
        throw ParamError("braid form must be \"braid\" or \"qybe\"");
    }
    return {res.m.empty(), report_json(res.m.empty(), res)};
}

// Weakened braid identities: the braid defect composed with (P12 - 1) and
// with (P12 + a). Both vanish together exactly when the braid defect itself
// vanishes, because the difference of the two factors is the scalar (1+a).
inline CheckResult check_theorem2(const PairOp<Cyc>& P, const Cyc& a) {
    if (a.is_zero() || a == Cyc(Rat(-1))) throw ParamError("check_theorem2: a must not be 0 or -1");
    TripleOp<Cyc> defect = braid_residual(P);
    TripleOp<Cyc> id3 = identity3<Cyc>(P.n);
    TripleOp<Cyc> p12 = lift(P, Legs::L12);
    TripleOp<Cyc> r1 = compose(op_sub(p12, id3), defect);
    TripleOp<Cyc> r2 = compose(op_add(p12, op_scale(id3, a)), defect);
    bool pass = r1.m.empty() && r2.m.empty();
    Json rep = Json{{"pass", pass},
                    {"minus_factor", report_json(r1.m.empty(), r1)},
                    {"plus_factor", report_json(r2.m.empty(), r2)}};
    return {pass, rep};
}

// Reported (never enforced) balance condition on column products, in squared
// form to avoid square roots of a:
//   (prod_i q^{ij})^2 * a^{2j} = a^{n+1}   for each j = 1..n.
inline CheckResult check_sl_condition(const ParamSet& p) {
    p.validate();
    Cyc rhs = cyc_pow(p.a, p.n + 1);
    bool pass = true;
    Json per_j = Json::array();
    for (int j = 1; j <= p.n; ++j) {
        Cyc prod(Rat(1));
        for (int i = 1; i <= p.n; ++i) prod = prod * p.qget(i, j);
        Cyc ratio = prod * prod * cyc_pow(p.a, 2 * j) * rhs.inv();
        bool okj = ratio.is_one();
        pass = pass && okj;
        per_j.push_back(Json{{"j", j}, {"pass", okj}, {"ratio", cyc_to_json(ratio)}});
    }
    return {pass, Json{{"pass", pass}, {"per_j", per_j}}};
}

} // namespace ybd
