#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ybd/errors.hpp"

namespace ybd {

// Exact rational number with arbitrary-precision integer parts.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {} // NOLINT(google-explicit-constructor): numeric literal convenience
    Rat(long n, long d) {
        if (d == 0) throw DivisionByZero("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    static Rat from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw ParamError("unparseable rational: " + s);
        if (v.get_den() == 0) throw DivisionByZero("rational with zero denominator: " + s);
        v.canonicalize();
        return Rat(v);
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw DivisionByZero();
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    Rat inv() const {
        if (is_zero()) throw NotInvertible("inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }

    // Text form: "n" or "n/d" with positive denominator.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    // Numerator/denominator as 64-bit values for serialization.
    std::int64_t num_i64() const { return checked_i64(v_.get_num()); }
    std::int64_t den_i64() const { return checked_i64(v_.get_den()); }

    const mpq_class& raw() const { return v_; }

private:
    static std::int64_t checked_i64(const mpz_class& z) {
        if (!z.fits_slong_p()) throw ScaleError("integer exceeds 64-bit serialization range");
        return static_cast<std::int64_t>(z.get_si());
    }
    mpq_class v_;
};

inline Rat rat_pow(const Rat& x, long e) {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? x : x.inv();
    long k = e > 0 ? e : -e;
    Rat acc(1);
    for (long t = 0; t < k; ++t) acc *= base;
    return acc;
}

} // namespace ybd
