#pragma once

#include <map>
#include <string>

#include "ybd/errors.hpp"

namespace ybd {

// Multiplicative monomial in named generators ("a", "u1", "u2", ...) with
// integer exponents. When a_mod3 is set, the exponent of "a" lives in Z/3.
class Mono {
public:
    Mono() = default;
    explicit Mono(bool a_mod3) : a_mod3_(a_mod3) {}

    static Mono generator(const std::string& sym, bool a_mod3 = false) {
        Mono m(a_mod3);
        m.exps_[sym] = 1;
        m.normalize();
        return m;
    }

    bool a_mod3() const { return a_mod3_; }
    const std::map<std::string, long>& exps() const { return exps_; }
    bool is_one() const { return exps_.empty(); }

    long exp_of(const std::string& sym) const {
        auto it = exps_.find(sym);
        return it == exps_.end() ? 0 : it->second;
    }

    void set_exp(const std::string& sym, long e) {
        exps_[sym] = e;
        normalize();
    }

    Mono operator*(const Mono& o) const {
        if (a_mod3_ != o.a_mod3_) throw IncompatibleMonoids();
        Mono r(a_mod3_);
        r.exps_ = exps_;
        for (const auto& [sym, e] : o.exps_) r.exps_[sym] += e;
        r.normalize();
        return r;
    }
    Mono inv() const {
        Mono r(a_mod3_);
        for (const auto& [sym, e] : exps_) r.exps_[sym] = -e;
        r.normalize();
        return r;
    }
    Mono pow(long k) const {
        Mono r(a_mod3_);
        for (const auto& [sym, e] : exps_) r.exps_[sym] = e * k;
        r.normalize();
        return r;
    }
    Mono operator/(const Mono& o) const { return *this * o.inv(); }

    bool operator==(const Mono& o) const { return a_mod3_ == o.a_mod3_ && exps_ == o.exps_; }
    bool operator!=(const Mono& o) const { return !(*this == o); }

    std::string str() const {
        if (exps_.empty()) return "1";
        std::string s;
        for (const auto& [sym, e] : exps_) {
            if (!s.empty()) s += "*";
            s += sym;
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    void normalize() {
        if (a_mod3_) {
            auto it = exps_.find("a");
            if (it != exps_.end()) it->second = ((it->second % 3) + 3) % 3;
        }
        for (auto it = exps_.begin(); it != exps_.end();) {
            if (it->second == 0) it = exps_.erase(it);
            else ++it;
        }
    }

    std::map<std::string, long> exps_;
    bool a_mod3_ = false;
};

} // namespace ybd
