#include "uqs/coeffs/cyclotomic.hpp"

#include "uqs/error.hpp"

#include <sstream>

namespace uqs {

CyclotomicScalar::CyclotomicScalar(long v) : p_(QPoly::constant(v)) {}

CyclotomicScalar::CyclotomicScalar(const Rational& v) : p_(QPoly::constant(v)) {}

CyclotomicScalar::CyclotomicScalar(int m, const QPoly& residue) : m_(m), p_(residue) {
    if (m < 0) throw InvalidArgument("negative root-of-unity order");
    if (m > 0 && p_.degree() >= cyclotomic_polynomial(m).degree()) p_ = p_.mod(cyclotomic_polynomial(m));
    if (m == 0 && p_.degree() > 0) throw InvalidArgument("non-constant residue without an order");
}

CyclotomicScalar CyclotomicScalar::root_power(int m, long k) {
    if (m < 1) throw InvalidArgument("root_power needs m >= 1");
    long r = ((k % m) + m) % m;
    return CyclotomicScalar(m, QPoly::monomial(static_cast<int>(r)));
}

int CyclotomicScalar::join(int a, int b) {
    if (a == 0) return b;
    if (b == 0 || a == b) return a;
    throw InvalidArgument("mixing cyclotomic scalars of orders " + std::to_string(a) + " and " + std::to_string(b));
}

Rational CyclotomicScalar::rational_value() const {
    if (!is_rational()) throw InvalidArgument("cyclotomic scalar is not rational");
    return p_.coeff(0);
}

std::vector<Rational> CyclotomicScalar::coeffs() const {
    int n = m_ == 0 ? 1 : cyclotomic_polynomial(m_).degree();
    std::vector<Rational> v(n);
    for (int i = 0; i < n; ++i) v[i] = p_.coeff(i);
    return v;
}

CyclotomicScalar CyclotomicScalar::operator+(const CyclotomicScalar& o) const {
    CyclotomicScalar r;
    r.m_ = join(m_, o.m_);
    r.p_ = p_ + o.p_;
    return r;
}

CyclotomicScalar CyclotomicScalar::operator-() const {
    CyclotomicScalar r = *this;
    r.p_ = -r.p_;
    return r;
}

CyclotomicScalar CyclotomicScalar::operator-(const CyclotomicScalar& o) const { return *this + (-o); }

CyclotomicScalar CyclotomicScalar::operator*(const CyclotomicScalar& o) const {
    int m = join(m_, o.m_);
    if (is_zero() || o.is_zero()) {
        CyclotomicScalar z;
        z.m_ = m;
        return z;
    }
    if (is_rational()) {
        CyclotomicScalar r = o;
        r.m_ = m;
        r.p_ = o.p_.scaled(p_.coeff(0));
        return r;
    }
    if (o.is_rational()) {
        CyclotomicScalar r = *this;
        r.m_ = m;
        r.p_ = p_.scaled(o.p_.coeff(0));
        return r;
    }
    return CyclotomicScalar(m, p_ * o.p_);
}

CyclotomicScalar CyclotomicScalar::inverse() const {
    if (is_zero()) throw InvalidArgument("inverse of zero cyclotomic scalar");
    if (is_rational()) {
        CyclotomicScalar r(1 / p_.coeff(0));
        r.m_ = m_;
        return r;
    }
    auto [g, u] = QPoly::gcd_inverse(p_, cyclotomic_polynomial(m_));
    if (g.degree() != 0) throw Defect("cyclotomic residue is not invertible");
    return CyclotomicScalar(m_, u);
}

CyclotomicScalar CyclotomicScalar::operator/(const CyclotomicScalar& o) const { return *this * o.inverse(); }

CyclotomicScalar CyclotomicScalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    CyclotomicScalar r(1), b = *this;
    r.m_ = m_;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

bool CyclotomicScalar::operator==(const CyclotomicScalar& o) const {
    if (m_ != o.m_ && m_ != 0 && o.m_ != 0) return false;
    return p_ == o.p_;
}

std::string CyclotomicScalar::to_string() const {
    int n = m_ == 0 ? 1 : cyclotomic_polynomial(m_).degree();
    std::ostringstream os;
    for (int i = 0; i < n; ++i) {
        Rational c = p_.coeff(i);
        if (i == 0) {
            os << c.get_str();
            continue;
        }
        os << (c < 0 ? " - " : " + ");
        Rational a = abs(c);
        if (a != 1) os << a.get_str() << "*";
        os << "e";
        if (i > 1) os << "^" << i;
    }
    os << " (m=" << m_ << ")";
    return os.str();
}

CyclotomicScalar CyclotomicScalar::parse(const std::string& text) {
    int m = 0;
    std::string body = text;
    auto open = text.rfind("(m=");
    if (open != std::string::npos) {
        auto close = text.find(')', open);
        if (close == std::string::npos) throw InvalidArgument("unterminated order tag in '" + text + "'");
        m = std::stoi(text.substr(open + 3, close - open - 3));
        body = text.substr(0, open);
    }
    QPoly acc;
    bool negative_power = false;
    parse_terms(body, 'e', [&](int e, const Rational& c) {
        if (e < 0) negative_power = true;
        acc = acc + QPoly::monomial(e < 0 ? 0 : e, c);
    });
    if (negative_power) throw InvalidArgument("negative powers of e are not accepted in '" + text + "'");
    if (m == 0) {
        if (acc.degree() > 0) throw InvalidArgument("cyclotomic scalar '" + text + "' lacks its order tag");
        return CyclotomicScalar(acc.coeff(0));
    }
    return CyclotomicScalar(m, acc);
}

}  // namespace uqs
