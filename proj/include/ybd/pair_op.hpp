#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "ybd/errors.hpp"

namespace ybd {

using Pr = std::pair<int, int>;
using Tr = std::array<int, 3>;

// Sparse linear operator on a tensor power of an n-dimensional space.
// Entries are input-major: the action on a row tensor t is
//   (tA)_out = sum_in t_in * A[in, out].
// Ix is the index tuple type: Pr for two legs, Tr for three.
template <class S, class Ix>
struct Op {
    int n = 0;
    std::map<std::pair<Ix, Ix>, S> m;

    bool operator==(const Op& o) const { return n == o.n && m == o.m; }
};

template <class S> using PairOp = Op<S, Pr>;
template <class S> using TripleOp = Op<S, Tr>;

template <class S, class Ix>
void op_accum(Op<S, Ix>& a, const std::pair<Ix, Ix>& key, const S& val) {
    auto it = a.m.find(key);
    if (it == a.m.end()) {
        if (!val.is_zero()) a.m.emplace(key, val);
        return;
    }
    it->second += val;
    if (it->second.is_zero()) a.m.erase(it);
}

template <class S, class Ix>
Op<S, Ix> op_add(const Op<S, Ix>& a, const Op<S, Ix>& b) {
    if (a.n != b.n) throw ShapeError("operator dimension mismatch in add");
    Op<S, Ix> r = a;
    for (const auto& [k, v] : b.m) op_accum(r, k, v);
    return r;
}

template <class S, class Ix>
Op<S, Ix> op_scale(const Op<S, Ix>& a, const S& c) {
    Op<S, Ix> r;
    r.n = a.n;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.m) {
        S w = v * c;
        if (!w.is_zero()) r.m.emplace(k, w);
    }
    return r;
}

template <class S, class Ix>
Op<S, Ix> op_neg(const Op<S, Ix>& a) {
    Op<S, Ix> r;
    r.n = a.n;
    for (const auto& [k, v] : a.m) r.m.emplace(k, -v);
    return r;
}

template <class S, class Ix>
Op<S, Ix> op_sub(const Op<S, Ix>& a, const Op<S, Ix>& b) {
    return op_add(a, op_neg(b));
}

// Apply a, then b (operator product in the row-action convention).
template <class S, class Ix>
Op<S, Ix> compose(const Op<S, Ix>& a, const Op<S, Ix>& b) {
    if (a.n != b.n) throw ShapeError("operator dimension mismatch in compose");
    std::map<Ix, std::vector<std::pair<Ix, S>>> b_by_in;
    for (const auto& [k, v] : b.m) b_by_in[k.first].emplace_back(k.second, v);
    Op<S, Ix> r;
    r.n = a.n;
    for (const auto& [k, v] : a.m) {
        auto it = b_by_in.find(k.second);
        if (it == b_by_in.end()) continue;
        for (const auto& [out, w] : it->second) op_accum(r, {k.first, out}, v * w);
    }
    return r;
}

template <class S>
PairOp<S> identity2(int n) {
    PairOp<S> r;
    r.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r.m.emplace(std::pair<Pr, Pr>{{i, j}, {i, j}}, S(1));
    return r;
}

template <class S>
TripleOp<S> identity3(int n) {
    TripleOp<S> r;
    r.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                r.m.emplace(std::pair<Tr, Tr>{{i, j, k}, {i, j, k}}, S(1));
    return r;
}

// The flip sigma: [(i,j),(j,i)] = 1.
template <class S>
PairOp<S> flip_op(int n) {
    PairOp<S> r;
    r.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r.m.emplace(std::pair<Pr, Pr>{{i, j}, {j, i}}, S(1));
    return r;
}

enum class Legs { L12, L23, L13 };

// Place a two-leg operator on the named legs of a three-leg space,
// identity on the remaining leg.
template <class S>
TripleOp<S> lift(const PairOp<S>& a, Legs legs) {
    TripleOp<S> r;
    r.n = a.n;
    for (const auto& [k, v] : a.m) {
        const auto& [in, out] = k;
        for (int m = 1; m <= a.n; ++m) {
            Tr ti{}, to{};
            switch (legs) {
                case Legs::L12:
                    ti = {in.first, in.second, m};
                    to = {out.first, out.second, m};
                    break;
                case Legs::L23:
                    ti = {m, in.first, in.second};
                    to = {m, out.first, out.second};
                    break;
                case Legs::L13:
                    ti = {in.first, m, in.second};
                    to = {out.first, m, out.second};
                    break;
            }
            r.m.emplace(std::pair<Tr, Tr>{ti, to}, v);
        }
    }
    return r;
}

// P <-> R conversion: swap the output pair. An involution.
template <class S>
PairOp<S> convert_p_r(const PairOp<S>& a) {
    PairOp<S> r;
    r.n = a.n;
    for (const auto& [k, v] : a.m)
        r.m.emplace(std::pair<Pr, Pr>{k.first, {k.second.second, k.second.first}}, v);
    return r;
}

// sigma . A . sigma: swap both the input and the output pair.
template <class S>
PairOp<S> conj_flip(const PairOp<S>& a) {
    PairOp<S> r;
    r.n = a.n;
    for (const auto& [k, v] : a.m)
        r.m.emplace(std::pair<Pr, Pr>{{k.first.second, k.first.first},
                                      {k.second.second, k.second.first}},
                    v);
    return r;
}

// braid residual P12 P23 P12 - P23 P12 P23.
template <class S>
TripleOp<S> braid_residual(const PairOp<S>& p) {
    TripleOp<S> p12 = lift(p, Legs::L12), p23 = lift(p, Legs::L23);
    return op_sub(compose(compose(p12, p23), p12), compose(compose(p23, p12), p23));
}

// qybe residual R12 R13 R23 - R23 R13 R12.
template <class S>
TripleOp<S> qybe_residual(const PairOp<S>& r) {
    TripleOp<S> r12 = lift(r, Legs::L12), r13 = lift(r, Legs::L13), r23 = lift(r, Legs::L23);
    return op_sub(compose(compose(r12, r13), r23), compose(compose(r23, r13), r12));
}

// Hecke residual (P - 1)(P + a).
template <class S>
PairOp<S> hecke_residual(const PairOp<S>& p, const S& a) {
    PairOp<S> id = identity2<S>(p.n);
    return compose(op_sub(p, id), op_add(p, op_scale(id, a)));
}

// First-order braid residual: insert e once into each slot of the braid word.
template <class S>
TripleOp<S> lin_braid(const PairOp<S>& p, const PairOp<S>& e) {
    if (p.n != e.n) throw ShapeError("dimension mismatch in lin_braid");
    TripleOp<S> p12 = lift(p, Legs::L12), p23 = lift(p, Legs::L23);
    TripleOp<S> x12 = lift(e, Legs::L12), x23 = lift(e, Legs::L23);
    TripleOp<S> t = op_add(op_add(compose(compose(x12, p23), p12), compose(compose(p12, x23), p12)),
                           compose(compose(p12, p23), x12));
    TripleOp<S> s = op_add(op_add(compose(compose(x23, p12), p23), compose(compose(p23, x12), p23)),
                           compose(compose(p23, p12), x23));
    return op_sub(t, s);
}

// First-order Hecke residual: E(P + a) + (P - 1)E.
template <class S>
PairOp<S> lin_hecke(const PairOp<S>& p, const PairOp<S>& e, const S& a) {
    if (p.n != e.n) throw ShapeError("dimension mismatch in lin_hecke");
    PairOp<S> id = identity2<S>(p.n);
    return op_add(compose(e, op_add(p, op_scale(id, a))), compose(op_sub(p, id), e));
}

// Second-order braid term: insert e into two of the three slots (all patterns).
template <class S>
TripleOp<S> quad_braid(const PairOp<S>& p, const PairOp<S>& e) {
    if (p.n != e.n) throw ShapeError("dimension mismatch in quad_braid");
    TripleOp<S> p12 = lift(p, Legs::L12), p23 = lift(p, Legs::L23);
    TripleOp<S> x12 = lift(e, Legs::L12), x23 = lift(e, Legs::L23);
    TripleOp<S> t = op_add(op_add(compose(compose(x12, x23), p12), compose(compose(x12, p23), x12)),
                           compose(compose(p12, x23), x12));
    TripleOp<S> s = op_add(op_add(compose(compose(x23, x12), p23), compose(compose(x23, p12), x23)),
                           compose(compose(p23, x12), x23));
    return op_sub(t, s);
}

} // namespace ybd
