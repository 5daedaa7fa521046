#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ybd/linalg.hpp"
#include "ybd/pair_op.hpp"
#include "ybd/params.hpp"

namespace ybd {

// A quadratic relation among degree-2 words. For plane/antiplane relations
// the words are pairs of x- (resp. theta-) indices. Cross relations mix one
// x and one theta per word: tag 0 = x-then-theta, tag 1 = theta-then-x; the
// tag orders the x*theta word before all theta*x words.
struct WordKey {
    int tag = 0;
    Pr p;
    bool operator<(const WordKey& o) const { return std::tie(tag, p) < std::tie(o.tag, o.p); }
    bool operator==(const WordKey& o) const { return tag == o.tag && p == o.p; }
};

enum class RelKind { Plane, Antiplane, Cross };

struct Relation {
    RelKind kind;
    std::vector<std::pair<WordKey, Cyc>> terms; // sorted by word, leading first
};

namespace detail {

// Column po of A, as a sparse vector over input words.
inline std::vector<SparseVec<Pr>> op_columns(const PairOp<Cyc>& A) {
    std::map<Pr, SparseVec<Pr>> cols;
    for (const auto& [io, v] : A.m) cols[io.second][io.first] = v;
    std::vector<SparseVec<Pr>> out;
    for (auto& [po, col] : cols) out.push_back(std::move(col));
    return out;
}

inline std::vector<Relation> reduced_relations(const PairOp<Cyc>& A, RelKind kind) {
    Rref<Pr> g;
    for (auto& col : op_columns(A)) g.add_row(std::move(col));
    g.back_substitute();
    std::vector<Relation> rels;
    for (const auto& [pivot, row] : g.pivot_rows()) {
        Relation r;
        r.kind = kind;
        for (const auto& [w, c] : row) r.terms.push_back({WordKey{0, w}, c});
        std::sort(r.terms.begin(), r.terms.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        rels.push_back(std::move(r));
    }
    return rels;
}

} // namespace detail

// Row-reduced basis of the column span of (P - 1): the quadratic relations of
// the symmetric ("plane") algebra. The lexicographically first word of each
// relation carries coefficient 1.
inline std::vector<Relation> plane_relations(const PairOp<Cyc>& P) {
    PairOp<Cyc> A = op_sub(P, identity2<Cyc>(P.n));
    return detail::reduced_relations(A, RelKind::Plane);
}

// Row-reduced basis of the column span of (P + a): the antisymmetric
// ("antiplane") relations.
inline std::vector<Relation> antiplane_relations(const PairOp<Cyc>& P, const Cyc& a) {
    if (a.is_zero() || a == Cyc(Rat(-1)))
        throw ParamError("antiplane_relations: a must not be 0 or -1");
    PairOp<Cyc> A = op_add(P, op_scale(identity2<Cyc>(P.n), a));
    return detail::reduced_relations(A, RelKind::Antiplane);
}

// Mixed-sector relations, one per ordered pair (i,j), emitted literally:
//   a * x^i t^j - sum_{(k,l)} P[in (k,l), out (i,j)] * t^k x^l = 0.
inline std::vector<Relation> cross_relations(const PairOp<Cyc>& P, const Cyc& a) {
    if (a.is_zero()) throw ParamError("cross_relations: a must not be 0");
    std::map<Pr, SparseVec<Pr>> cols;
    for (const auto& [io, v] : P.m) cols[io.second][io.first] = v;
    std::vector<Relation> rels;
    for (int i = 1; i <= P.n; ++i)
        for (int j = 1; j <= P.n; ++j) {
            Relation r;
            r.kind = RelKind::Cross;
            r.terms.push_back({WordKey{0, {i, j}}, a});
            auto it = cols.find({i, j});
            if (it != cols.end())
                for (const auto& [pi, v] : it->second)
                    r.terms.push_back({WordKey{1, pi}, Cyc(Rat(0)) - v});
            rels.push_back(std::move(r));
        }
    return rels;
}

// Degree-3 coefficient-space dimensions: n^3 minus the rank of the span of
// all one-slot embeddings rho (x) e_m and e_m (x) rho of the quadratic
// relation rows. For a braid- and Hecke-compatible P these equal
// (C(n+2,3), C(n,3)), the flat polynomial/exterior sizes.
inline std::pair<int, int> degree3_dims(const PairOp<Cyc>& P, const Cyc& a) {
    if (a.is_zero() || a == Cyc(Rat(-1))) throw ParamError("degree3_dims: a must not be 0 or -1");
    auto span_dim = [&](const PairOp<Cyc>& A) {
        std::vector<SparseVec<Tr>> rows;
        for (const auto& col : detail::op_columns(A)) {
            for (int m = 1; m <= P.n; ++m) {
                SparseVec<Tr> left, right;
                for (const auto& [w, c] : col) {
                    left[{w.first, w.second, m}] = c;
                    right[{m, w.first, w.second}] = c;
                }
                rows.push_back(std::move(left));
                rows.push_back(std::move(right));
            }
        }
        int n3 = P.n * P.n * P.n;
        return n3 - rank_of(rows);
    };
    PairOp<Cyc> id = identity2<Cyc>(P.n);
    int pd = span_dim(op_sub(P, id));
    int ad = span_dim(op_add(P, op_scale(id, a)));
    return {pd, ad};
}

// ---- text rendering ------------------------------------------------------

inline std::string word_text(const WordKey& w, RelKind kind) {
    auto sym = [](char s, int idx) { return std::string(1, s) + std::to_string(idx); };
    switch (kind) {
    case RelKind::Plane: return sym('x', w.p.first) + "*" + sym('x', w.p.second);
    case RelKind::Antiplane: return sym('t', w.p.first) + "*" + sym('t', w.p.second);
    case RelKind::Cross:
        if (w.tag == 0) return sym('x', w.p.first) + "*" + sym('t', w.p.second);
        return sym('t', w.p.first) + "*" + sym('x', w.p.second);
    }
    throw ShapeError("unreachable relation kind");
}

inline std::string relation_text(const Relation& r) {
    std::string out;
    bool first = true;
    for (const auto& [w, c] : r.terms) {
        std::string wt = word_text(w, r.kind);
        if (first) {
            out += c.is_one() ? wt : "(" + c.str() + ")*" + wt;
            first = false;
            continue;
        }
        bool pull_minus;
        Cyc mag = c;
        if (c.is_rational()) {
            pull_minus = c.re().sign() < 0;
        } else {
            pull_minus = c.re().sign() <= 0 && c.wc().sign() <= 0;
        }
        if (pull_minus) mag = Cyc(Rat(0)) - c;
        out += pull_minus ? " - " : " + ";
        out += mag.is_one() ? wt : "(" + mag.str() + ")*" + wt;
    }
    return out + " = 0";
}

// Inverse of relation_text (used by the round-trip tests and file readers).
inline Relation parse_relation_text(const std::string& line, RelKind kind) {
    std::string body = line;
    auto eq = body.rfind(" = 0");
    if (eq == std::string::npos || eq + 4 != body.size())
        throw ParamError("relation text must end with \" = 0\": " + line);
    body = body.substr(0, eq);
    // Split into signed chunks at top-level " + " / " - ".
    std::vector<std::pair<int, std::string>> chunks; // sign, term text
    int depth = 0, sign = 1;
    std::string cur;
    for (size_t k = 0; k < body.size(); ++k) {
        char ch = body[k];
        if (ch == '(') depth++;
        if (ch == ')') depth--;
        if (depth == 0 && k + 2 < body.size() && ch == ' ' &&
            (body[k + 1] == '+' || body[k + 1] == '-') && body[k + 2] == ' ') {
            chunks.push_back({sign, cur});
            cur.clear();
            sign = (body[k + 1] == '+') ? 1 : -1;
            k += 2;
            continue;
        }
        cur += ch;
    }
    chunks.push_back({sign, cur});
    Relation r;
    r.kind = kind;
    for (auto& [sg, term] : chunks) {
        Cyc coef(Rat(1));
        std::string wt = term;
        if (!term.empty() && term[0] == '(') {
            auto close = term.find(')');
            if (close == std::string::npos || close + 1 >= term.size() || term[close + 1] != '*')
                throw ParamError("malformed relation term: " + term);
            coef = cyc_from_text(term.substr(1, close - 1));
            wt = term.substr(close + 2);
        }
        if (sg < 0) coef = Cyc(Rat(0)) - coef;
        auto star = wt.find('*');
        if (star == std::string::npos) throw ParamError("malformed relation word: " + wt);
        auto parse_sym = [&](const std::string& s) -> std::pair<char, int> {
            if (s.size() < 2 || (s[0] != 'x' && s[0] != 't'))
                throw ParamError("malformed generator symbol: " + s);
            return {s[0], std::stoi(s.substr(1))};
        };
        auto s1 = parse_sym(wt.substr(0, star));
        auto s2 = parse_sym(wt.substr(star + 1));
        WordKey w;
        w.p = {s1.second, s2.second};
        w.tag = (kind == RelKind::Cross && s1.first == 't') ? 1 : 0;
        r.terms.push_back({w, coef});
    }
    std::sort(r.terms.begin(), r.terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return r;
}

inline bool relations_equal(const std::vector<Relation>& a, const std::vector<Relation>& b) {
    if (a.size() != b.size()) return false;
    for (size_t k = 0; k < a.size(); ++k) {
        if (a[k].terms.size() != b[k].terms.size()) return false;
        for (size_t t = 0; t < a[k].terms.size(); ++t)
            if (!(a[k].terms[t].first == b[k].terms[t].first) ||
                a[k].terms[t].second != b[k].terms[t].second)
                return false;
    }
    return true;
}

} // namespace ybd
