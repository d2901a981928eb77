#pragma once

#include <gmpxx.h>

#include "overasym/bigfloat.hpp"

namespace overasym {

/// Certified enclosure of a real number: every operation rounds the lower
/// endpoint down and the upper endpoint up, so [lo, hi] always contains the
/// exact value. Used where a wrong ceiling would silently corrupt a
/// threshold, and for the zeta(3/2) constant.
class Enclosure {
public:
    Enclosure(BigFloat lo, BigFloat hi);

    static Enclosure exact(long value, long precision_bits);
    static Enclosure exact(const mpz_class& value, long precision_bits);
    static Enclosure pi(long precision_bits);

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    long precision() const { return lo_.precision(); }

    Enclosure operator+(const Enclosure& rhs) const;
    Enclosure operator-(const Enclosure& rhs) const;
    Enclosure operator*(const Enclosure& rhs) const;
    /// Division; the divisor interval must not contain zero.
    Enclosure operator/(const Enclosure& rhs) const;
    Enclosure scaled(long factor) const;
    Enclosure squared() const;
    /// Natural log; requires lo > 0.
    Enclosure log() const;

    /// True when ceil is the same at both endpoints; then ceil(x) is certain.
    bool ceiling(mpz_class& out) const;

private:
    BigFloat lo_, hi_;
};

/// Certified enclosure of zeta(3/2) = sum n^{-3/2}: partial sum with directed
/// rounding plus the integral tail bracket [2/sqrt(M+1), 2/sqrt(M)].
const Enclosure& zeta_three_halves();

}  // namespace overasym
