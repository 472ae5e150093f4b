#include "uqs/coeffs/fields.hpp"

#include "uqs/error.hpp"

namespace uqs {

CyclotomicScalar specialize(const LaurentQ& x, int m) {
    if (m < 1) throw InvalidArgument("specialize needs m >= 1");
    std::vector<Rational> folded(m);
    const auto& c = x.dense();
    for (size_t i = 0; i < c.size(); ++i) {
        long e = x.low() + static_cast<long>(i);
        folded[((e % m) + m) % m] += c[i];
    }
    return CyclotomicScalar(m, QPoly(std::move(folded)));
}

CyclotomicScalar specialize(const RationalQ& x, int m) {
    CyclotomicScalar d = specialize(x.den(), m);
    if (d.is_zero()) throw SpecializationError(x.den().to_string(), m);
    CyclotomicScalar n = specialize(x.num(), m);
    if (x.is_laurent()) return n;
    return n / d;
}

}  // namespace uqs
