#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace uqs {

using Rational = mpq_class;

std::string rational_to_string(const Rational& r);
Rational parse_rational(const std::string& s);

// Splits "3*x^2 - x^-1 + 1/2" into (exponent, coefficient) terms for the variable letter var.
void parse_terms(const std::string& text, char var, const std::function<void(int, const Rational&)>& emit);

// Dense univariate polynomial over Q, coefficients stored lowest degree first, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    static QPoly constant(const Rational& c);
    static QPoly monomial(int degree, const Rational& c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    const Rational& leading() const { return c_.back(); }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly scaled(const Rational& r) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
    QPoly mod(const QPoly& d) const { return divmod(d).second; }
    QPoly monic() const;

    static QPoly gcd(QPoly a, QPoly b);
    // Returns (g, u) with u * a == g (mod b), g = gcd(a, b) monic.
    static std::pair<QPoly, QPoly> gcd_inverse(const QPoly& a, const QPoly& b);

private:
    void trim();
    std::vector<Rational> c_;
};

// The m-th cyclotomic polynomial, cached.
const QPoly& cyclotomic_polynomial(int m);
int euler_phi(int m);

}  // namespace uqs
