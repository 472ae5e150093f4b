#include "uqs/coeffs/laurent.hpp"

#include "uqs/error.hpp"

#include <cctype>
#include <sstream>

namespace uqs {

LaurentQ::LaurentQ(long v) {
    if (v != 0) c_.emplace_back(v);
}

LaurentQ::LaurentQ(const Rational& v) {
    if (v != 0) {
        c_.push_back(v);
        c_.back().canonicalize();
    }
}

LaurentQ LaurentQ::monomial(int exponent, const Rational& c) {
    LaurentQ r;
    if (c != 0) {
        r.lo_ = exponent;
        r.c_.push_back(c);
        r.c_.back().canonicalize();
    }
    return r;
}

void LaurentQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    if (k > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
        lo_ += static_cast<int>(k);
    }
    if (c_.empty()) lo_ = 0;
}

Rational LaurentQ::coeff(int e) const {
    if (e < lo_ || e > high()) return 0;
    return c_[e - lo_];
}

LaurentQ LaurentQ::operator+(const LaurentQ& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    LaurentQ r;
    r.lo_ = std::min(lo_, o.lo_);
    int hi = std::max(high(), o.high());
    r.c_.assign(hi - r.lo_ + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[lo_ - r.lo_ + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[o.lo_ - r.lo_ + i] += o.c_[i];
    r.trim();
    return r;
}

LaurentQ LaurentQ::operator-() const {
    LaurentQ r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentQ LaurentQ::operator-(const LaurentQ& o) const { return *this + (-o); }

LaurentQ LaurentQ::operator*(const LaurentQ& o) const {
    if (is_zero() || o.is_zero()) return {};
    LaurentQ r;
    r.lo_ = lo_ + o.lo_;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

LaurentQ LaurentQ::shifted(int k) const {
    LaurentQ r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
}

LaurentQ LaurentQ::scaled(const Rational& s) const {
    if (s == 0) return {};
    LaurentQ r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

QPoly LaurentQ::to_poly() const { return QPoly(c_); }

LaurentQ LaurentQ::from_poly(const QPoly& p, int shift) {
    LaurentQ r;
    r.c_ = p.coeffs();
    r.lo_ = shift;
    r.trim();
    return r;
}

std::optional<LaurentQ> LaurentQ::divide_exact(const LaurentQ& o) const {
    if (o.is_zero()) throw InvalidArgument("Laurent division by zero");
    if (is_zero()) return LaurentQ{};
    auto [quo, rem] = to_poly().divmod(o.to_poly());
    if (!rem.is_zero()) return std::nullopt;
    return from_poly(quo, lo_ - o.lo_);
}

std::string LaurentQ::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        int e = lo_ + i;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

namespace {

// Parses a sum of terms "c", "c*x^e", "x^e", "x" with x a fixed variable letter.
struct TermParser {
    const std::string& s;
    char var;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    [[noreturn]] void fail() const {
        throw InvalidArgument("cannot parse polynomial '" + s + "' near position " + std::to_string(pos));
    }
    long read_int() {
        skip();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start])))) fail();
        return std::stol(s.substr(start, pos - start));
    }
    Rational read_rational() {
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        if (start == pos) fail();
        return parse_rational(s.substr(start, pos - start));
    }

    template <class Emit>
    void run(Emit emit, size_t end) {
        bool any = false;
        while (true) {
            skip();
            if (pos >= end) break;
            int sign = 1;
            if (s[pos] == '+' || s[pos] == '-') {
                sign = s[pos] == '-' ? -1 : 1;
                ++pos;
                skip();
            } else if (any) {
                fail();
            }
            Rational c = 1;
            bool have_c = false;
            if (pos < end && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                c = read_rational();
                have_c = true;
                skip();
            }
            int e = 0;
            if (pos < end && s[pos] == '*') {
                ++pos;
                skip();
                if (pos >= end || s[pos] != var) fail();
            }
            if (pos < end && s[pos] == var) {
                ++pos;
                e = 1;
                skip();
                if (pos < end && s[pos] == '^') {
                    ++pos;
                    e = static_cast<int>(read_int());
                }
            } else if (!have_c) {
                fail();
            }
            emit(e, c * sign);
            any = true;
        }
        if (!any) fail();
    }
};

}  // namespace

void parse_terms(const std::string& text, char var, const std::function<void(int, const Rational&)>& emit) {
    TermParser p{text, var};
    p.run(emit, text.size());
}

LaurentQ LaurentQ::parse(const std::string& text) {
    LaurentQ r;
    parse_terms(text, 'q', [&](int e, const Rational& c) { r += monomial(e, c); });
    return r;
}

LaurentQ q_number(int n) {
    LaurentQ r;
    int sgn = n < 0 ? -1 : 1;
    int a = n < 0 ? -n : n;
    for (int k = 0; k < a; ++k) r += LaurentQ::monomial(a - 1 - 2 * k, sgn);
    return r;
}

LaurentQ q_factorial(int n) {
    if (n < 0) throw InvalidArgument("q_factorial of a negative integer");
    LaurentQ r = 1;
    for (int k = 2; k <= n; ++k) r *= q_number(k);
    return r;
}

LaurentQ q_binomial(int m, int n) {
    if (n < 0 || n > m) throw InvalidArgument("q_binomial requires 0 <= n <= m");
    auto r = q_factorial(m).divide_exact(q_factorial(n) * q_factorial(m - n));
    if (!r) throw Defect("q-binomial quotient is not a Laurent polynomial");
    return *r;
}

}  // namespace uqs
