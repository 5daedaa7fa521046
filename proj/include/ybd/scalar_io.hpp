#pragma once

#include <string>

#include <json.hpp>

#include "ybd/cyclotomic.hpp"
#include "ybd/errors.hpp"
#include "ybd/jet.hpp"
#include "ybd/rational.hpp"

namespace ybd {

using Json = nlohmann::ordered_json;

// Scalar encoding shared by every file format:
//   rational    {"r":[num,den]}
//   cyclotomic  {"c":[[n1,d1],[n2,d2]]}  meaning (n1/d1) + (n2/d2)*w
inline Json rat_to_json(const Rat& x) {
    return Json{{"r", Json::array({x.num_i64(), x.den_i64()})}};
}

inline Json cyc_to_json(const Cyc& x) {
    if (x.is_rational()) return rat_to_json(x.re());
    return Json{{"c", Json::array({Json::array({x.re().num_i64(), x.re().den_i64()}),
                                   Json::array({x.wc().num_i64(), x.wc().den_i64()})})}};
}

inline Rat rat_from_pair(const Json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParamError(where + ": expected [num,den] integer pair");
    long num = j[0].get<long>();
    long den = j[1].get<long>();
    if (den == 0) throw ParamError(where + ": zero denominator");
    return Rat(num, den);
}

inline Rat rat_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_object() && j.contains("r")) return rat_from_pair(j["r"], where);
    throw ParamError(where + ": expected rational scalar");
}

inline Cyc cyc_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Cyc(Rat(j.get<long>()));
    if (j.is_object() && j.contains("r")) return Cyc(rat_from_pair(j["r"], where));
    if (j.is_object() && j.contains("c")) {
        const Json& c = j["c"];
        if (!c.is_array() || c.size() != 2)
            throw ParamError(where + ": expected [[n1,d1],[n2,d2]]");
        return Cyc(rat_from_pair(c[0], where), rat_from_pair(c[1], where));
    }
    throw ParamError(where + ": expected scalar");
}

// Text encoding for command-line flags: "n", "n/d", "w", "-w", "n/d+n/d*w".
inline Cyc cyc_from_text(const std::string& s) {
    auto parse_rat = [](std::string t) -> Rat {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        auto slash = t.find('/');
        if (slash == std::string::npos) return Rat::from_string(t);
        Rat num = Rat::from_string(t.substr(0, slash));
        Rat den = Rat::from_string(t.substr(slash + 1));
        if (den.is_zero()) throw ParamError("zero denominator in scalar text: " + t);
        return num / den;
    };
    std::string t;
    for (char c : s)
        if (c != ' ') t += c;
    if (t.empty()) throw ParamError("empty scalar text");
    auto wpos = t.find('w');
    if (wpos == std::string::npos) return Cyc(parse_rat(t));
    // Split an optional rational part from the w part at the last +/- that
    // is not a leading sign and not inside the w coefficient.
    std::string wcoef = t.substr(0, wpos);
    if (wpos + 1 != t.size()) throw ParamError("unparseable scalar text: " + s);
    size_t split = std::string::npos;
    for (size_t k = 1; k < wcoef.size(); ++k)
        if ((wcoef[k] == '+' || wcoef[k] == '-') && wcoef[k - 1] != '/' && wcoef[k - 1] != '+' &&
            wcoef[k - 1] != '-')
            split = k;
    std::string upart, vpart;
    if (split == std::string::npos) {
        upart = "0";
        vpart = wcoef;
    } else {
        upart = wcoef.substr(0, split);
        vpart = wcoef.substr(split);
    }
    if (!vpart.empty() && vpart.back() == '*') vpart.pop_back();
    if (vpart.empty() || vpart == "+") vpart = "1";
    else if (vpart == "-") vpart = "-1";
    return Cyc(parse_rat(upart), parse_rat(vpart));
}

} // namespace ybd
