#pragma once

#include <stdexcept>
#include <string>

namespace uqs {

// Base of every exception raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A rational-function coefficient whose denominator vanishes at the chosen root of unity.
class SpecializationError : public Error {
public:
    SpecializationError(const std::string& denominator, int m)
        : Error("denominator " + denominator + " vanishes at a primitive " + std::to_string(m) +
                "-th root of unity"),
          denominator_(denominator), order_(m) {}
    const std::string& denominator() const { return denominator_; }
    int order() const { return order_; }

private:
    std::string denominator_;
    int order_;
};

// Internal consistency failure: a computed object violates a structural identity it must satisfy.
class Defect : public Error {
public:
    using Error::Error;
};

// A search or computation exceeded its configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// The hypotheses of a conditional statement are not met; this is not a counterexample.
class PreconditionRejected : public Error {
public:
    using Error::Error;
};

}  // namespace uqs
