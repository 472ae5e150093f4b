#include "uqs/coeffs/qpoly.hpp"

#include "uqs/error.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace uqs {

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw InvalidArgument("not a rational number: '" + s + "'");
    r.canonicalize();
    return r;
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(int degree, const Rational& c) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> v(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return QPoly(std::move(v));
}

QPoly QPoly::scaled(const Rational& r) const {
    if (r == 0) return {};
    QPoly p = *this;
    for (auto& x : p.c_) x *= r;
    return p;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
    if (d.is_zero()) throw InvalidArgument("polynomial division by zero");
    std::vector<Rational> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {QPoly{}, *this};
    std::vector<Rational> q(degree() - dd + 1);
    Rational inv = 1 / d.leading();
    for (int k = degree(); k >= dd; --k) {
        if (r[k] == 0) continue;
        Rational f = r[k] * inv;
        q[k - dd] = f;
        for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * d.c_[j];
    }
    r.resize(dd);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / leading());
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.mod(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::pair<QPoly, QPoly> QPoly::gcd_inverse(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b, s0 = constant(1), s1;
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        QPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rational l = r0.leading();
    return {r0.scaled(1 / l), s0.scaled(1 / l)};
}

int euler_phi(int m) {
    int r = 0;
    for (int k = 1; k <= m; ++k)
        if (std::gcd(k, m) == 1) ++r;
    return r;
}

const QPoly& cyclotomic_polynomial(int m) {
    static std::mutex mu;
    static std::map<int, QPoly> cache;
    if (m < 1) throw InvalidArgument("cyclotomic polynomial needs m >= 1");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    QPoly p = QPoly::monomial(m, 1) - QPoly::constant(1);
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = p.divmod(cyclotomic_polynomial(d)).first;
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(m, std::move(p)).first->second;
}

}  // namespace uqs
