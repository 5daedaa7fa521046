#pragma once

#include <fstream>
#include <string>

#include "ybd/pair_op.hpp"
#include "ybd/params.hpp"
#include "ybd/scalar_io.hpp"

namespace ybd {

inline Json index_to_json(const Pr& p) { return Json::array({p.first, p.second}); }
inline Json index_to_json(const Tr& t) { return Json::array({t[0], t[1], t[2]}); }

inline void index_from_json(const Json& j, Pr& out, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw ParamError(where + ": expected [i,j]");
    out = {j[0].get<int>(), j[1].get<int>()};
}
inline void index_from_json(const Json& j, Tr& out, const std::string& where) {
    if (!j.is_array() || j.size() != 3) throw ParamError(where + ": expected [i,j,k]");
    out = {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

template <class Ix>
inline Json op_to_json(const Op<Cyc, Ix>& A) {
    Json entries = Json::array();
    for (const auto& [io, v] : A.m)
        entries.push_back(Json{{"in", index_to_json(io.first)},
                               {"out", index_to_json(io.second)},
                               {"val", cyc_to_json(v)}});
    return Json{{"n", A.n}, {"entries", entries}};
}

template <class Ix>
inline Op<Cyc, Ix> op_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParamError("operator: expected {n,entries}");
    Op<Cyc, Ix> A;
    A.n = j["n"].get<int>();
    if (A.n < 2 || A.n > 8) throw ParamError("operator: n out of range [2,8]");
    int k = 0;
    for (const auto& e : j["entries"]) {
        std::string where = "operator.entries[" + std::to_string(k++) + "]";
        if (!e.is_object() || !e.contains("in") || !e.contains("out") || !e.contains("val"))
            throw ParamError(where + ": expected {in,out,val}");
        Ix pi, po;
        index_from_json(e["in"], pi, where + ".in");
        index_from_json(e["out"], po, where + ".out");
        Cyc v = cyc_from_json(e["val"], where + ".val");
        if (!v.is_zero()) A.m[{pi, po}] = v;
    }
    return A;
}

inline std::string dump_line(const Json& j) { return j.dump() + "\n"; }

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParamError("cannot open file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParamError(path + ": " + e.what());
    }
    return j;
}

inline void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParamError("cannot write file: " + path);
    out << dump_line(j);
}

// Pass/fail report with the residual entries that witnessed any failure.
template <class Ix>
inline Json report_json(bool pass, const Op<Cyc, Ix>& residual) {
    Json r = Json{{"pass", pass}, {"residual_entries", Json::array()}};
    for (const auto& [io, v] : residual.m)
        r["residual_entries"].push_back(Json{{"in", index_to_json(io.first)},
                                             {"out", index_to_json(io.second)},
                                             {"val", cyc_to_json(v)}});
    return r;
}

} // namespace ybd
