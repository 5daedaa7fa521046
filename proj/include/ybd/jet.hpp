#pragma once

#include "ybd/errors.hpp"
#include "ybd/rational.hpp"

namespace ybd {

// Truncated power series c0 + c1*h + c2*h^2 (terms of degree >= 3 discarded),
// with exact rational coefficients.
class Jet {
public:
    Jet() = default;
    Jet(long n) : c0_(n) {} // NOLINT(google-explicit-constructor): numeric literal convenience
    Jet(const Rat& c0) : c0_(c0) {} // NOLINT(google-explicit-constructor): constant embedding
    Jet(Rat c0, Rat c1, Rat c2) : c0_(std::move(c0)), c1_(std::move(c1)), c2_(std::move(c2)) {}

    static Jet h() { return Jet(Rat(0), Rat(1), Rat(0)); }

    const Rat& c0() const { return c0_; }
    const Rat& c1() const { return c1_; }
    const Rat& c2() const { return c2_; }

    bool is_zero() const { return c0_.is_zero() && c1_.is_zero() && c2_.is_zero(); }
    bool is_one() const { return c0_.is_one() && c1_.is_zero() && c2_.is_zero(); }

    Jet operator-() const { return Jet(-c0_, -c1_, -c2_); }
    Jet operator+(const Jet& o) const { return Jet(c0_ + o.c0_, c1_ + o.c1_, c2_ + o.c2_); }
    Jet operator-(const Jet& o) const { return Jet(c0_ - o.c0_, c1_ - o.c1_, c2_ - o.c2_); }
    Jet operator*(const Jet& o) const {
        return Jet(c0_ * o.c0_,
                   c0_ * o.c1_ + c1_ * o.c0_,
                   c0_ * o.c2_ + c1_ * o.c1_ + c2_ * o.c0_);
    }
    Jet& operator+=(const Jet& o) { *this = *this + o; return *this; }
    Jet& operator-=(const Jet& o) { *this = *this - o; return *this; }
    Jet& operator*=(const Jet& o) { *this = *this * o; return *this; }

    Jet inv() const {
        if (c0_.is_zero()) throw NotInvertible("jet with zero constant term");
        Rat i0 = c0_.inv();
        Rat i1 = -(i0 * i0) * c1_;
        Rat i2 = i0 * i0 * i0 * c1_ * c1_ - i0 * i0 * c2_;
        return Jet(i0, i1, i2);
    }
    Jet operator/(const Jet& o) const { return *this * o.inv(); }

    bool operator==(const Jet& o) const { return c0_ == o.c0_ && c1_ == o.c1_ && c2_ == o.c2_; }
    bool operator!=(const Jet& o) const { return !(*this == o); }

private:
    Rat c0_{0};
    Rat c1_{0};
    Rat c2_{0};
};

} // namespace ybd
