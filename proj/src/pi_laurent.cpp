#include "overasym/pi_laurent.hpp"

namespace overasym {

PiLaurent PiLaurent::constant(const mpq_class& c) { return single(0, c); }

PiLaurent PiLaurent::single(int pi_exponent, const mpq_class& coeff) {
    PiLaurent p;
    p.add_term(pi_exponent, coeff);
    return p;
}

void PiLaurent::add_term(int pi_exponent, const mpq_class& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(pi_exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

PiLaurent PiLaurent::operator+(const PiLaurent& rhs) const {
    PiLaurent out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

PiLaurent PiLaurent::operator-(const PiLaurent& rhs) const {
    PiLaurent out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, mpq_class(-c));
    return out;
}

PiLaurent PiLaurent::operator*(const PiLaurent& rhs) const {
    PiLaurent out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea + eb, mpq_class(ca * cb));
    return out;
}

PiLaurent PiLaurent::scaled(const mpq_class& factor) const {
    PiLaurent out;
    if (factor == 0) return out;
    for (const auto& [e, c] : terms_) out.add_term(e, mpq_class(c * factor));
    return out;
}

BigFloat PiLaurent::eval(long precision_bits) const {
    BigFloat acc = BigFloat::of(0L, precision_bits);
    const BigFloat pi = BigFloat::pi(precision_bits);
    for (const auto& [e, c] : terms_)
        acc += BigFloat::of(c, precision_bits) * pow_si(pi, e);
    return acc;
}

std::string PiLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.get_str() + " * pi^" + std::to_string(it->first);
    }
    return out;
}

}  // namespace overasym
