#pragma once

#include "uqs/coeffs/qpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uqs {

// Laurent polynomial in q with rational coefficients.
// Canonical form: coefficients of q^lo .. q^(lo + size - 1), first and last entries nonzero.
class LaurentQ {
public:
    LaurentQ() = default;
    LaurentQ(long v);  // NOLINT(google-explicit-constructor)
    LaurentQ(const Rational& v);  // NOLINT(google-explicit-constructor)
    static LaurentQ monomial(int exponent, const Rational& c = 1);
    static LaurentQ q(int exponent = 1) { return monomial(exponent); }

    bool is_zero() const { return c_.empty(); }
    bool is_monomial() const { return c_.size() == 1; }
    int low() const { return lo_; }
    int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    Rational coeff(int exponent) const;
    const std::vector<Rational>& dense() const { return c_; }

    LaurentQ operator+(const LaurentQ& o) const;
    LaurentQ operator-(const LaurentQ& o) const;
    LaurentQ operator*(const LaurentQ& o) const;
    LaurentQ operator-() const;
    LaurentQ& operator+=(const LaurentQ& o) { return *this = *this + o; }
    LaurentQ& operator-=(const LaurentQ& o) { return *this = *this - o; }
    LaurentQ& operator*=(const LaurentQ& o) { return *this = *this * o; }
    bool operator==(const LaurentQ& o) const { return lo_ == o.lo_ && c_ == o.c_; }

    LaurentQ shifted(int k) const;
    LaurentQ scaled(const Rational& r) const;
    // Exact quotient when o divides *this in Q[q, q^-1].
    std::optional<LaurentQ> divide_exact(const LaurentQ& o) const;

    // Polynomial part after multiplying by q^-low(): p(q) with p(0) != 0.
    QPoly to_poly() const;
    static LaurentQ from_poly(const QPoly& p, int shift = 0);

    std::string to_string() const;
    static LaurentQ parse(const std::string& text);

private:
    void trim();
    int lo_ = 0;
    std::vector<Rational> c_;
};

// [n]_q = (q^n - q^-n)/(q - q^-1); defined for every integer n.
LaurentQ q_number(int n);
LaurentQ q_factorial(int n);
LaurentQ q_binomial(int m, int n);

}  // namespace uqs
