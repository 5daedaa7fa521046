#pragma once

#include <map>
#include <optional>
#include <string>

#include "ybd/deformations.hpp"
#include "ybd/jet.hpp"
#include "ybd/op_io.hpp"
#include "ybd/pair_op.hpp"
#include "ybd/standard_p.hpp"

namespace ybd {

using JetOp = PairOp<Jet>;

// Classical-limit data: the curve a = 1 + h, q^{ij} = 1 + h p^{ij} through
// the identity, with rational slopes p^{ij} (i < j; antisymmetric extension)
// and a deformation scale epsilon.
struct ClassicalParams {
    int n = 2;
    std::map<Pr, Rat> p; // i < j
    Rat epsilon{1};

    void validate() const {
        if (n < 2 || n > 8) throw ParamError("classical params: n must be in 2..8");
        for (const auto& [pr, v] : p) {
            if (!(1 <= pr.first && pr.first < pr.second && pr.second <= n))
                throw ParamError("classical params: slope indices need 1 <= i < j <= n");
        }
        if (epsilon.is_zero()) throw ParamError("classical params: epsilon must be nonzero");
    }

    Rat pget(int i, int j) const {
        if (i == j) return Rat(0);
        bool flip = i > j;
        if (flip) std::swap(i, j);
        auto it = p.find({i, j});
        Rat v = (it == p.end()) ? Rat(0) : it->second;
        return flip ? -v : v;
    }
};

inline Json cparams_to_json(const ClassicalParams& cp) {
    Json arr = Json::array();
    for (const auto& [pr, v] : cp.p) {
        if (v.is_zero()) continue;
        arr.push_back(Json{{"i", pr.first}, {"j", pr.second}, {"val", rat_to_json(v)["r"]}});
    }
    return Json{{"n", cp.n}, {"p", arr}, {"epsilon", rat_to_json(cp.epsilon)["r"]}};
}

inline ClassicalParams cparams_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("p"))
        throw ParamError("classical params: expected object with n and p");
    ClassicalParams cp;
    cp.n = j["n"].get<int>();
    for (const auto& e : j["p"]) {
        Pr pr{e["i"].get<int>(), e["j"].get<int>()};
        if (cp.p.count(pr)) throw ParamError("classical params: duplicate slope pair");
        cp.p[pr] = rat_from_pair(e["val"], "p value");
    }
    if (j.contains("epsilon")) cp.epsilon = rat_from_pair(j["epsilon"], "epsilon");
    cp.validate();
    return cp;
}

// The standard operator along the classical curve, with second-order terms
// carried exactly: a = 1 + h, q^{ij} = 1 + h p^{ij}.
inline JetOp build_P_jet(const ClassicalParams& cp) {
    cp.validate();
    auto qj = [&](int i, int j) -> Jet {
        if (i == j) return Jet(1);
        if (i < j) return Jet(Rat(1), cp.pget(i, j), Rat(0));
        return Jet(Rat(1), cp.pget(j, i), Rat(0)).inv();
    };
    Jet a = Jet(Rat(1), Rat(1), Rat(0));
    JetOp P;
    P.n = cp.n;
    for (int i = 1; i <= cp.n; ++i)
        for (int j = 1; j <= cp.n; ++j) {
            if (i == j) {
                P.m[{{i, i}, {i, i}}] = Jet(1);
                continue;
            }
            P.m[{{i, j}, {j, i}}] = (i < j) ? qj(j, i) : a * qj(j, i);
            if (i < j) P.m[{{i, j}, {i, j}}] = Jet(1) - a; // = -h
        }
    return P;
}

// First-order deformation direction along the classical curve: the principal
// two-entry pattern with amplitude epsilon * mu * h. The exceptional series
// needs a^3 = 1 and so has no limit along a = 1 + h.
inline JetOp build_P1_jet(const ClassicalParams& cp, const DeformationSpec& s) {
    cp.validate();
    s.validate(cp.n);
    if (!s.principal())
        throw SpecError("classical limit: exceptional directions need a^3 = 1, unavailable along a = 1 + h");
    if (!s.amplitude.is_rational())
        throw ParamError("classical limit: amplitude must be rational");
    auto [k, i, j, l] = s.quadruple();
    auto qj = [&](int x, int y) -> Jet {
        if (x == y) return Jet(1);
        if (x < y) return Jet(Rat(1), cp.pget(x, y), Rat(0));
        return Jet(Rat(1), cp.pget(y, x), Rat(0)).inv();
    };
    Jet a = Jet(Rat(1), Rat(1), Rat(0));
    Jet hatq_ij = (i < j) ? qj(i, j) : qj(i, j) / a; // i == j lands in the second branch
    Jet amp(Rat(0), cp.epsilon * s.amplitude.re(), Rat(0));
    JetOp D;
    D.n = cp.n;
    D.m[{{k, l}, {j, i}}] = amp;
    D.m[{{l, k}, {i, j}}] = -(a * hatq_ij * qj(k, l)) * amp;
    return D;
}

// Linearized constraint system on the slopes: for every m,
//   p^{lm} + p^{km} + p^{mi} + p^{mj} = delta_{mj} - delta_{mi}   (case 1)
//                                     = delta_{mi} - delta_{mj}   (case 2).
inline CheckResult check_bd(const ClassicalParams& cp, const DeformationSpec& s) {
    cp.validate();
    s.validate(cp.n);
    if (!s.principal()) throw SpecError("check_bd: principal specs only");
    auto [k, i, j, l] = s.quadruple();
    bool pass = true;
    Json per_m = Json::array();
    for (int m = 1; m <= cp.n; ++m) {
        Rat lhs = cp.pget(l, m) + cp.pget(k, m) + cp.pget(m, i) + cp.pget(m, j);
        long d = (m == j ? 1 : 0) - (m == i ? 1 : 0);
        if (s.pcase == 2) d = -d;
        Rat rhs{d};
        bool ok = (lhs == rhs);
        pass = pass && ok;
        per_m.push_back(Json{{"m", m},
                             {"pass", ok},
                             {"lhs", rat_to_json(lhs)["r"]},
                             {"rhs", rat_to_json(rhs)["r"]}});
    }
    return {pass, Json{{"pass", pass}, {"per_m", per_m}}};
}

// Order-h coefficient extraction R = 1 + h r + O(h^2), with the order-h^0
// identity gate: every diagonal entry must be present with constant term 1,
// every off-diagonal constant term must vanish.
inline PairOp<Cyc> r_from_R_jet(const JetOp& R) {
    for (int i = 1; i <= R.n; ++i)
        for (int j = 1; j <= R.n; ++j) {
            Pr pr{i, j};
            auto it = R.m.find({pr, pr});
            if (it == R.m.end() || !it->second.c0().is_one())
                throw ConventionError("order-h^0 part is not the identity (diagonal)");
        }
    PairOp<Cyc> r;
    r.n = R.n;
    for (const auto& [io, v] : R.m) {
        if (io.first != io.second && !v.c0().is_zero())
            throw ConventionError("order-h^0 part is not the identity (off-diagonal)");
        if (!v.c1().is_zero()) r.m[io] = Cyc(-v.c1());
    }
    return r;
}

// Full extraction pipeline: build P (optionally plus a principal deformation
// whose linearized constraints must hold), convert to R, gate, read off r.
inline PairOp<Cyc> extract_classical_r(const ClassicalParams& cp,
                                       const std::optional<DeformationSpec>& s = std::nullopt) {
    JetOp P = build_P_jet(cp);
    if (s) {
        if (!check_bd(cp, *s).pass)
            throw ConstraintError("slopes violate the linearized constraint system");
        P = op_add(P, build_P1_jet(cp, *s));
    }
    return r_from_R_jet(convert_p_r(P));
}

// Closed-form classical operator for slope data p:
//   [(i,j) -> (j,i)] = 1, [(j,i) -> (j,i)] = p^{ij}, [(i,j) -> (i,j)] = -(1 + p^{ij}).
inline PairOp<Cyc> build_r0(const ClassicalParams& cp) {
    cp.validate();
    PairOp<Cyc> r;
    r.n = cp.n;
    for (int i = 1; i <= cp.n; ++i)
        for (int j = i + 1; j <= cp.n; ++j) {
            Rat pij = cp.pget(i, j);
            Rat diag = -(Rat(1) + pij);
            r.m[{{i, j}, {j, i}}] = Cyc(Rat(1));
            if (!pij.is_zero()) r.m[{{j, i}, {j, i}}] = Cyc(pij);
            if (!diag.is_zero()) r.m[{{i, j}, {i, j}}] = Cyc(diag);
        }
    return r;
}

// The first-order change of r produced by a principal deformation direction
// of amplitude mu: -mu at [(k,l) -> (i,j)], +mu at [(l,k) -> (j,i)].
inline PairOp<Cyc> build_delta_r(int n, const DeformationSpec& s) {
    s.validate(n);
    if (!s.principal()) throw SpecError("build_delta_r: principal specs only");
    auto [k, i, j, l] = s.quadruple();
    PairOp<Cyc> d;
    d.n = n;
    d.m[{{k, l}, {i, j}}] = -s.amplitude;
    d.m[{{l, k}, {j, i}}] = s.amplitude;
    return d;
}

// Classical consistency residual [r12,r13] + [r12,r23] + [r13,r23].
inline TripleOp<Cyc> cybe_residual(const PairOp<Cyc>& r) {
    TripleOp<Cyc> r12 = lift(r, Legs::L12), r13 = lift(r, Legs::L13), r23 = lift(r, Legs::L23);
    auto comm = [](const TripleOp<Cyc>& A, const TripleOp<Cyc>& B) {
        return op_sub(compose(A, B), compose(B, A));
    };
    return op_add(op_add(comm(r12, r13), comm(r12, r23)), comm(r13, r23));
}

inline CheckResult check_cybe(const PairOp<Cyc>& r) {
    TripleOp<Cyc> res = cybe_residual(r);
    bool pass = res.m.empty();
    return {pass, report_json(pass, res)};
}

inline PairOp<Cyc> diagpart(const PairOp<Cyc>& A) {
    PairOp<Cyc> r;
    r.n = A.n;
    for (const auto& [io, v] : A.m)
        if (io.first == io.second) r.m[io] = v;
    return r;
}

inline PairOp<Cyc> offpart(const PairOp<Cyc>& A) {
    PairOp<Cyc> r;
    r.n = A.n;
    for (const auto& [io, v] : A.m)
        if (io.first != io.second) r.m[io] = v;
    return r;
}

// "equal", "equal_after_flip" (conjugation by the flip carries A to B), or
// "different".
inline std::string compare_up_to_flip(const PairOp<Cyc>& A, const PairOp<Cyc>& B) {
    if (A.n != B.n) throw ShapeError("compare_up_to_flip: dimension mismatch");
    if (A.m == B.m) return "equal";
    if (conj_flip(A).m == B.m) return "equal_after_flip";
    return "different";
}

} // namespace ybd
