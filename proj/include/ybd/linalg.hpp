#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ybd/cyclotomic.hpp"

namespace ybd {

// Sparse exact row vectors keyed by an arbitrary ordered column label.
template <class K>
using SparseVec = std::map<K, Cyc>;

template <class K>
inline void axpy_sub(SparseVec<K>& r, const Cyc& coef, const SparseVec<K>& p) {
    for (const auto& [k, v] : p) {
        auto it = r.find(k);
        if (it == r.end()) {
            Cyc nv = Cyc(Rat(0)) - coef * v;
            if (!nv.is_zero()) r.emplace(k, nv);
        } else {
            it->second = it->second - coef * v;
            if (it->second.is_zero()) r.erase(it);
        }
    }
}

// Incremental Gaussian elimination to reduced row echelon form, pivoting on
// the smallest column label of each row.
template <class K>
class Rref {
  public:
    void add_row(SparseVec<K> r) {
        while (!r.empty()) {
            const K c = r.begin()->first;
            auto it = pivots_.find(c);
            if (it == pivots_.end()) {
                Cyc inv = r.begin()->second.inv();
                for (auto& [k, v] : r) v = v * inv;
                pivots_.emplace(c, std::move(r));
                return;
            }
            Cyc coef = r.begin()->second;
            axpy_sub(r, coef, it->second);
        }
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

    // Eliminate every pivot column from all other pivot rows.
    void back_substitute() {
        std::vector<K> cols;
        for (const auto& [c, row] : pivots_) cols.push_back(c);
        for (int i = static_cast<int>(cols.size()) - 1; i >= 0; --i) {
            const SparseVec<K>& pr = pivots_.at(cols[i]);
            for (int j = 0; j < i; ++j) {
                SparseVec<K>& rj = pivots_.at(cols[j]);
                auto it = rj.find(cols[i]);
                if (it != rj.end()) {
                    Cyc coef = it->second;
                    axpy_sub(rj, coef, pr);
                }
            }
        }
    }

    const std::map<K, SparseVec<K>>& pivot_rows() const { return pivots_; }

  private:
    std::map<K, SparseVec<K>> pivots_;
};

template <class K>
inline int rank_of(const std::vector<SparseVec<K>>& rows) {
    Rref<K> g;
    for (const auto& r : rows) g.add_row(r);
    return g.rank();
}

template <class K>
inline bool in_span(const std::vector<SparseVec<K>>& rows, const SparseVec<K>& v) {
    Rref<K> g;
    for (const auto& r : rows) g.add_row(r);
    int before = g.rank();
    g.add_row(v);
    return g.rank() == before;
}

// Nullspace basis over the column universe `cols`: one vector per free
// column fc, with v[fc]=1 and v[pc]=-pivot_row[fc] for each pivot column pc.
template <class K>
inline std::pair<int, std::vector<SparseVec<K>>> nullspace(const std::vector<SparseVec<K>>& rows,
                                                           const std::vector<K>& cols) {
    Rref<K> g;
    for (const auto& r : rows) g.add_row(r);
    g.back_substitute();
    const auto& piv = g.pivot_rows();
    std::vector<SparseVec<K>> basis;
    for (const K& fc : cols) {
        if (piv.count(fc)) continue;
        SparseVec<K> v;
        v[fc] = Cyc(Rat(1));
        for (const auto& [pc, pr] : piv) {
            auto it = pr.find(fc);
            if (it != pr.end()) v[pc] = Cyc(Rat(0)) - it->second;
        }
        basis.push_back(std::move(v));
    }
    return {g.rank(), basis};
}

// Solve the affine system {row . x = rhs} exactly; free variables are set to
// zero; returns nothing when the system is inconsistent.
template <class K>
inline std::optional<SparseVec<K>> solve_inhomog(const std::vector<SparseVec<K>>& rows,
                                                 const std::vector<Cyc>& rhs) {
    using W = std::pair<int, K>; // flag 0 = variable column, flag 1 = constant slot
    Rref<W> g;
    for (size_t r = 0; r < rows.size(); ++r) {
        SparseVec<W> w;
        for (const auto& [k, v] : rows[r]) w[{0, k}] = v;
        Cyc b = rhs[r];
        if (!b.is_zero()) w[{1, K{}}] = Cyc(Rat(0)) - b;
        g.add_row(std::move(w));
    }
    g.back_substitute();
    SparseVec<K> x;
    for (const auto& [pc, pr] : g.pivot_rows()) {
        if (pc.first == 1) return std::nullopt; // 0 = nonzero constant
        auto it = pr.find({1, K{}});
        if (it != pr.end()) {
            Cyc val = Cyc(Rat(0)) - it->second;
            if (!val.is_zero()) x[pc.second] = val;
        }
    }
    return x;
}

} // namespace ybd
