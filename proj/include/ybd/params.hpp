#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ybd/cyclotomic.hpp"
#include "ybd/errors.hpp"
#include "ybd/scalar_io.hpp"

namespace ybd {

// Multiplicative parameter set for the gl(n) operator family: a scale factor
// `a` and one parameter q^{ij} per ordered pair i<j (q^{ii}=1, q^{ji}=1/q^{ij}).
struct ParamSet {
    int n = 2;
    Cyc a = Cyc(Rat(2));
    std::map<std::pair<int, int>, Cyc> q; // keys i<j only

    void validate() const {
        if (n < 2 || n > 8) throw ParamError("n out of range [2,8]");
        if (a.is_zero()) throw ParamError("a must be nonzero");
        for (const auto& [ij, v] : q) {
            auto [i, j] = ij;
            if (!(1 <= i && i < j && j <= n))
                throw ParamError("q index pair must satisfy 1 <= i < j <= n");
            if (v.is_zero()) throw ParamError("q values must be nonzero");
        }
    }

    Cyc qget(int i, int j) const {
        if (i == j) return Cyc(Rat(1));
        bool inv = i > j;
        if (inv) std::swap(i, j);
        auto it = q.find({i, j});
        Cyc v = (it == q.end()) ? Cyc(Rat(1)) : it->second;
        return inv ? v.inv() : v;
    }

    // qhat^{ij}: q^{ij} strictly above the diagonal, q^{ij}/a on or below it.
    Cyc hatq(int i, int j) const {
        Cyc v = qget(i, j);
        return (i < j) ? v : v * a.inv();
    }
};

inline Json params_to_json(const ParamSet& p) {
    Json q = Json::array();
    for (const auto& [ij, v] : p.q)
        q.push_back(Json{{"i", ij.first}, {"j", ij.second}, {"val", cyc_to_json(v)}});
    return Json{{"n", p.n}, {"a", cyc_to_json(p.a)}, {"q", q}};
}

inline ParamSet params_from_json(const Json& j) {
    if (!j.is_object()) throw ParamError("params: expected object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParamError("params: missing integer field \"n\"");
    ParamSet p;
    p.n = j["n"].get<int>();
    if (!j.contains("a")) throw ParamError("params: missing field \"a\"");
    p.a = cyc_from_json(j["a"], "params.a");
    if (j.contains("q")) {
        if (!j["q"].is_array()) throw ParamError("params.q: expected array");
        int k = 0;
        for (const auto& e : j["q"]) {
            std::string where = "params.q[" + std::to_string(k++) + "]";
            if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("val"))
                throw ParamError(where + ": expected {i,j,val}");
            int i = e["i"].get<int>();
            int jj = e["j"].get<int>();
            if (p.q.count({i, jj})) throw ParamError(where + ": duplicate pair");
            p.q[{i, jj}] = cyc_from_json(e["val"], where + ".val");
        }
    }
    p.validate();
    return p;
}

// Deterministic random parameter set: a from a fixed safe list, each q^{ij}
// a nonzero small rational. Same (n,seed) always yields the same set.
inline ParamSet sample_params(int n, unsigned long seed) {
    std::mt19937_64 rng(seed);
    const long a_pool[4] = {2, 3, 5, -2};
    ParamSet p;
    p.n = n;
    p.a = Cyc(Rat(a_pool[rng() % 4]));
    std::uniform_int_distribution<long> digit(1, 9);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            long num = digit(rng), den = digit(rng);
            p.q[{i, j}] = Cyc(Rat(num, den));
        }
    p.validate();
    return p;
}

} // namespace ybd
