#pragma once

#include "uqs/coeffs/laurent.hpp"

#include <string>

namespace uqs {

// Element of Q(q), stored as num/den with gcd(num, den) = 1 and den a polynomial with
// nonzero constant term and leading coefficient 1.
class RationalQ {
public:
    RationalQ() = default;
    RationalQ(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    RationalQ(const Rational& v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    RationalQ(const LaurentQ& v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    RationalQ(const LaurentQ& num, const LaurentQ& den);
    static RationalQ q(int exponent = 1) { return RationalQ(LaurentQ::q(exponent)); }

    const LaurentQ& num() const { return num_; }
    const LaurentQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_ == LaurentQ(1); }

    RationalQ operator+(const RationalQ& o) const;
    RationalQ operator-(const RationalQ& o) const;
    RationalQ operator*(const RationalQ& o) const;
    RationalQ operator/(const RationalQ& o) const;
    RationalQ operator-() const;
    RationalQ inverse() const;
    RationalQ& operator+=(const RationalQ& o) { return *this = *this + o; }
    RationalQ& operator-=(const RationalQ& o) { return *this = *this - o; }
    RationalQ& operator*=(const RationalQ& o) { return *this = *this * o; }
    RationalQ& operator/=(const RationalQ& o) { return *this = *this / o; }
    bool operator==(const RationalQ& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string() const;
    static RationalQ parse(const std::string& text);

private:
    void normalize();
    LaurentQ num_;
    LaurentQ den_ = LaurentQ(1);
};

}  // namespace uqs
