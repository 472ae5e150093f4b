#pragma once

#include "uqs/coeffs/qpoly.hpp"

#include <string>
#include <vector>

namespace uqs {

// Element of Q(e), e a primitive m-th root of unity, stored as the residue of a polynomial in e
// modulo the m-th cyclotomic polynomial. Order m == 0 marks a plain rational constant, which
// combines with elements of any order.
class CyclotomicScalar {
public:
    CyclotomicScalar() = default;
    CyclotomicScalar(long v);  // NOLINT(google-explicit-constructor)
    CyclotomicScalar(const Rational& v);  // NOLINT(google-explicit-constructor)
    CyclotomicScalar(int m, const QPoly& residue);
    // e^k for the primitive m-th root e.
    static CyclotomicScalar root_power(int m, long k);

    int order() const { return m_; }
    bool is_zero() const { return p_.is_zero(); }
    bool is_rational() const { return p_.degree() <= 0; }
    Rational rational_value() const;
    const QPoly& residue() const { return p_; }
    // Dense coefficient vector of length phi(m).
    std::vector<Rational> coeffs() const;

    CyclotomicScalar operator+(const CyclotomicScalar& o) const;
    CyclotomicScalar operator-(const CyclotomicScalar& o) const;
    CyclotomicScalar operator*(const CyclotomicScalar& o) const;
    CyclotomicScalar operator/(const CyclotomicScalar& o) const;
    CyclotomicScalar operator-() const;
    CyclotomicScalar inverse() const;
    CyclotomicScalar pow(long k) const;
    CyclotomicScalar& operator+=(const CyclotomicScalar& o) { return *this = *this + o; }
    CyclotomicScalar& operator-=(const CyclotomicScalar& o) { return *this = *this - o; }
    CyclotomicScalar& operator*=(const CyclotomicScalar& o) { return *this = *this * o; }
    CyclotomicScalar& operator/=(const CyclotomicScalar& o) { return *this = *this / o; }
    bool operator==(const CyclotomicScalar& o) const;

    std::string to_string() const;
    static CyclotomicScalar parse(const std::string& text);

private:
    static int join(int a, int b);
    int m_ = 0;
    QPoly p_;
};

}  // namespace uqs
