#include "uqs/coeffs/rational_function.hpp"

#include "uqs/error.hpp"

namespace uqs {

RationalQ::RationalQ(const LaurentQ& num, const LaurentQ& den) : num_(num), den_(den) { normalize(); }

void RationalQ::normalize() {
    if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentQ(1);
        return;
    }
    if (den_.is_monomial()) {
        num_ = num_.scaled(1 / den_.coeff(den_.low())).shifted(-den_.low());
        den_ = LaurentQ(1);
        return;
    }
    QPoly p = num_.to_poly();
    QPoly d = den_.to_poly();
    int shift = num_.low() - den_.low();
    QPoly g = QPoly::gcd(p, d);
    if (g.degree() > 0) {
        p = p.divmod(g).first;
        d = d.divmod(g).first;
    }
    Rational lead = d.leading();
    num_ = LaurentQ::from_poly(p.scaled(1 / lead), shift);
    den_ = LaurentQ::from_poly(d.scaled(1 / lead), 0);
}

RationalQ RationalQ::operator+(const RationalQ& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (is_laurent() && o.is_laurent()) return RationalQ(num_ + o.num_);
    if (den_ == o.den_) return RationalQ(num_ + o.num_, den_);
    return RationalQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalQ RationalQ::operator-() const {
    RationalQ r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalQ RationalQ::operator-(const RationalQ& o) const { return *this + (-o); }

RationalQ RationalQ::operator*(const RationalQ& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (is_laurent() && o.is_laurent()) return RationalQ(num_ * o.num_);
    return RationalQ(num_ * o.num_, den_ * o.den_);
}

RationalQ RationalQ::inverse() const {
    if (is_zero()) throw InvalidArgument("inverse of zero rational function");
    return RationalQ(den_, num_);
}

RationalQ RationalQ::operator/(const RationalQ& o) const { return *this * o.inverse(); }

std::string RationalQ::to_string() const {
    if (is_laurent()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalQ RationalQ::parse(const std::string& text) {
    auto slash = text.find(")/(");
    if (slash != std::string::npos && text.front() == '(' && text.back() == ')') {
        LaurentQ n = LaurentQ::parse(text.substr(1, slash - 1));
        LaurentQ d = LaurentQ::parse(text.substr(slash + 3, text.size() - slash - 4));
        return RationalQ(n, d);
    }
    return RationalQ(LaurentQ::parse(text));
}

}  // namespace uqs
