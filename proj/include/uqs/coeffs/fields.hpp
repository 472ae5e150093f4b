#pragma once

#include "uqs/coeffs/cyclotomic.hpp"
#include "uqs/coeffs/laurent.hpp"
#include "uqs/coeffs/rational_function.hpp"

#include <string>

namespace uqs {

// Image of x under q -> e (primitive m-th root of unity).
CyclotomicScalar specialize(const LaurentQ& x, int m);
// Throws SpecializationError when the denominator vanishes at e.
CyclotomicScalar specialize(const RationalQ& x, int m);

// Scalar field Q(q) with q generic.
struct GenericField {
    using Scalar = RationalQ;
    Scalar q_pow(long k) const { return RationalQ::q(static_cast<int>(k)); }
    Scalar lift(const RationalQ& x) const { return x; }
    Scalar from_rational(const Rational& r) const { return RationalQ(r); }
    std::string name() const { return "Q(q)"; }
    bool operator==(const GenericField&) const = default;
};

// Scalar field Q(e) with q specialized to a primitive m-th root of unity e.
struct CyclotomicField {
    using Scalar = CyclotomicScalar;
    int m = 3;
    Scalar q_pow(long k) const { return CyclotomicScalar::root_power(m, k); }
    Scalar lift(const RationalQ& x) const { return specialize(x, m); }
    Scalar from_rational(const Rational& r) const { return CyclotomicScalar(m, QPoly::constant(r)); }
    std::string name() const { return "Q(e), m=" + std::to_string(m); }
    bool operator==(const CyclotomicField&) const = default;
};

inline std::string scalar_to_string(const RationalQ& x) { return x.to_string(); }
inline std::string scalar_to_string(const CyclotomicScalar& x) { return x.to_string(); }

}  // namespace uqs

#include <ostream>

namespace uqs {
inline std::ostream& operator<<(std::ostream& os, const LaurentQ& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const RationalQ& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const CyclotomicScalar& x) { return os << x.to_string(); }
}  // namespace uqs
