#pragma once

#include <string>

#include "ybd/errors.hpp"
#include "ybd/rational.hpp"

namespace ybd {

// Element u + v*w of the quadratic field extension with w*w = -1 - w
// (w a primitive cube root of unity). Rationals embed with v = 0.
class Cyc {
public:
    Cyc() = default;
    Cyc(long n) : u_(n) {} // NOLINT(google-explicit-constructor): numeric literal convenience
    Cyc(const Rat& u) : u_(u) {} // NOLINT(google-explicit-constructor): rational embedding
    Cyc(Rat u, Rat v) : u_(std::move(u)), v_(std::move(v)) {}

    static Cyc omega() { return Cyc(Rat(0), Rat(1)); }

    const Rat& re() const { return u_; }
    const Rat& wc() const { return v_; }
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_one() const { return u_.is_one() && v_.is_zero(); }
    bool is_rational() const { return v_.is_zero(); }

    Cyc operator-() const { return Cyc(-u_, -v_); }
    Cyc operator+(const Cyc& o) const { return Cyc(u_ + o.u_, v_ + o.v_); }
    Cyc operator-(const Cyc& o) const { return Cyc(u_ - o.u_, v_ - o.v_); }
    Cyc operator*(const Cyc& o) const {
        // (u1 + v1 w)(u2 + v2 w) with w^2 = -1 - w.
        return Cyc(u_ * o.u_ - v_ * o.v_, u_ * o.v_ + v_ * o.u_ - v_ * o.v_);
    }
    Cyc& operator+=(const Cyc& o) { u_ += o.u_; v_ += o.v_; return *this; }
    Cyc& operator-=(const Cyc& o) { u_ -= o.u_; v_ -= o.v_; return *this; }
    Cyc& operator*=(const Cyc& o) { *this = *this * o; return *this; }

    Cyc inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero");
        // Norm (u + vw)(u + v w-bar) = u^2 - uv + v^2, positive-definite over the rationals.
        Rat nrm = u_ * u_ - u_ * v_ + v_ * v_;
        Rat ni = nrm.inv();
        return Cyc((u_ - v_) * ni, -v_ * ni);
    }
    Cyc operator/(const Cyc& o) const {
        if (o.is_zero()) throw DivisionByZero();
        return *this * o.inv();
    }

    bool operator==(const Cyc& o) const { return u_ == o.u_ && v_ == o.v_; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }
    bool operator<(const Cyc& o) const { return u_ < o.u_ || (u_ == o.u_ && v_ < o.v_); }

    // Text form used in relation rendering: "2", "-1/4", "w", "-w", "1/2w", "(1 - 1/2w)"-style
    // composition is handled by the caller; this emits the bare value.
    std::string str() const {
        if (v_.is_zero()) return u_.str();
        std::string wpart;
        if (v_.is_one()) {
            wpart = "w";
        } else if ((-v_).is_one()) {
            wpart = "-w";
        } else {
            wpart = v_.str() + "w";
        }
        if (u_.is_zero()) return wpart;
        if (v_.sign() < 0) {
            Rat av = -v_;
            std::string neg_wpart = av.is_one() ? "w" : av.str() + "w";
            return u_.str() + " - " + neg_wpart;
        }
        return u_.str() + " + " + wpart;
    }

private:
    Rat u_{0};
    Rat v_{0};
};

inline Cyc cyc_pow(const Cyc& x, long e) {
    if (e == 0) return Cyc(1);
    Cyc base = e > 0 ? x : x.inv();
    long k = e > 0 ? e : -e;
    Cyc acc(1);
    for (long t = 0; t < k; ++t) acc *= base;
    return acc;
}

} // namespace ybd
