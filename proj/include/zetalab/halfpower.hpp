#pragma once

#include "zetalab/errors.hpp"
#include "zetalab/rational.hpp"

#include <cmath>
#include <cstdint>

namespace zetalab {

// Exact element a + b*sqrt(q) of Q(sqrt q). q = 0 marks a plain rational
// (b = 0); perfect-square q folds into the rational part on construction,
// so b != 0 implies q is a non-square >= 2 and the representation is unique.
class HalfPowerScalar {
public:
    HalfPowerScalar() : a_(0), b_(0), q_(0) {}
    HalfPowerScalar(const Rat& a) : a_(a), b_(0), q_(0) {}
    HalfPowerScalar(int64_t a) : a_(a), b_(0), q_(0) {}
    HalfPowerScalar(const Rat& a, const Rat& b, int64_t q) : a_(a), b_(b), q_(q)
    {
        normalize();
    }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    int64_t q() const { return q_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Rat rat() const
    {
        if (!is_rational()) fail(errc::invalid_argument, "value has an irrational part");
        return a_;
    }

    double to_double() const
    {
        return zetalab::to_double(a_) + zetalab::to_double(b_) * std::sqrt(static_cast<double>(q_));
    }

    friend HalfPowerScalar operator+(const HalfPowerScalar& x, const HalfPowerScalar& y)
    {
        int64_t q = joint_q(x, y);
        return HalfPowerScalar(x.a_ + y.a_, x.b_ + y.b_, q);
    }
    friend HalfPowerScalar operator-(const HalfPowerScalar& x, const HalfPowerScalar& y)
    {
        int64_t q = joint_q(x, y);
        return HalfPowerScalar(x.a_ - y.a_, x.b_ - y.b_, q);
    }
    HalfPowerScalar operator-() const { return HalfPowerScalar(-a_, -b_, q_); }

    friend HalfPowerScalar operator*(const HalfPowerScalar& x, const HalfPowerScalar& y)
    {
        int64_t q = joint_q(x, y);
        return HalfPowerScalar(x.a_ * y.a_ + x.b_ * y.b_ * q, x.a_ * y.b_ + x.b_ * y.a_, q);
    }

    HalfPowerScalar inverse() const
    {
        if (is_zero()) fail(errc::division_by_zero, "inverse of zero");
        Rat n = a_ * a_ - b_ * b_ * q_; // nonzero: sqrt(q) is irrational when b != 0
        return HalfPowerScalar(a_ / n, -b_ / n, q_);
    }

    friend HalfPowerScalar operator/(const HalfPowerScalar& x, const HalfPowerScalar& y)
    {
        return x * y.inverse();
    }

    HalfPowerScalar& operator+=(const HalfPowerScalar& y) { return *this = *this + y; }
    HalfPowerScalar& operator-=(const HalfPowerScalar& y) { return *this = *this - y; }
    HalfPowerScalar& operator*=(const HalfPowerScalar& y) { return *this = *this * y; }

    friend bool operator==(const HalfPowerScalar& x, const HalfPowerScalar& y)
    {
        if (x.b_ == 0 && y.b_ == 0) return x.a_ == y.a_;
        return x.a_ == y.a_ && x.b_ == y.b_ && x.q_ == y.q_;
    }
    friend bool operator!=(const HalfPowerScalar& x, const HalfPowerScalar& y) { return !(x == y); }

private:
    static int64_t isqrt_exact(int64_t q)
    {
        auto r = static_cast<int64_t>(std::llround(std::sqrt(static_cast<double>(q))));
        while (r * r > q) --r;
        while ((r + 1) * (r + 1) <= q) ++r;
        return r * r == q ? r : 0;
    }

    static int64_t joint_q(const HalfPowerScalar& x, const HalfPowerScalar& y)
    {
        if (x.q_ == 0) return y.q_;
        if (y.q_ == 0 || x.q_ == y.q_) return x.q_;
        fail(errc::space_mismatch, "mixing sqrt(" + std::to_string(x.q_) + ") with sqrt(" +
                                       std::to_string(y.q_) + ")");
    }

    void normalize()
    {
        if (b_ != 0 && q_ > 0) {
            if (int64_t r = isqrt_exact(q_)) {
                a_ += b_ * r;
                b_ = 0;
            }
        }
        if (b_ == 0) q_ = 0;
    }

    Rat a_, b_;
    int64_t q_;
};

using HPS = HalfPowerScalar;

// q^{e/2} as an exact element of Q(sqrt q).
inline HPS half_power(int64_t q, long e)
{
    if (e % 2 == 0) return HPS(rat_pow(Int(q), e / 2));
    long f = (e - (e % 2 + 2) % 2) / 2; // floor(e/2)
    return HPS(Rat(0), rat_pow(Int(q), f), q);
}

inline std::string to_string(const HPS& x)
{
    if (x.is_rational()) return to_string(x.a());
    return to_string(x.a()) + "+" + to_string(x.b()) + "*sqrt(" + std::to_string(x.q()) + ")";
}

} // namespace zetalab
