#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "overasym/bigfloat.hpp"

namespace overasym {

/// Laurent polynomial in pi with exact rational coefficients. The expansion
/// coefficients of both theorems live here, so every coefficient identity can
/// be tested as exact equality; numeric evaluation is a separate, explicitly
/// lossy step.
class PiLaurent {
public:
    PiLaurent() = default;

    static PiLaurent constant(const mpq_class& c);
    static PiLaurent single(int pi_exponent, const mpq_class& coeff);

    /// Adds coeff * pi^exponent, merging and dropping exact zeros.
    void add_term(int pi_exponent, const mpq_class& coeff);

    /// Exponent -> coefficient; zero coefficients are never stored.
    const std::map<int, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    PiLaurent operator+(const PiLaurent& rhs) const;
    PiLaurent operator-(const PiLaurent& rhs) const;
    PiLaurent operator*(const PiLaurent& rhs) const;
    PiLaurent scaled(const mpq_class& factor) const;
    bool operator==(const PiLaurent& rhs) const { return terms_ == rhs.terms_; }

    BigFloat eval(long precision_bits) const;

    /// Terms as "p/q * pi^e" joined by " + ", sorted by descending exponent;
    /// "0" when empty.
    std::string to_string() const;

private:
    std::map<int, mpq_class> terms_;
};

}  // namespace overasym
