#pragma once

#include <stdexcept>
#include <string>

namespace hyptrans {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define HYPTRANS_ERROR(Name)                                            \
    class Name : public Error {                                         \
    public:                                                             \
        using Error::Error;                                             \
        const char* kind() const noexcept override { return #Name; }    \
    }

HYPTRANS_ERROR(PoleError);
HYPTRANS_ERROR(ConvergenceError);
HYPTRANS_ERROR(DomainError);
HYPTRANS_ERROR(ConstraintError);
HYPTRANS_ERROR(OverflowError);
HYPTRANS_ERROR(NonIntegrableError);
HYPTRANS_ERROR(SamplerExhaustedError);
HYPTRANS_ERROR(UnknownIdentityError);
HYPTRANS_ERROR(UnknownCaseError);

#undef HYPTRANS_ERROR

// Carries the best estimate so callers can still report it.
class NoConvergenceError : public Error {
public:
    NoConvergenceError(const std::string& what, double value, double err_est)
        : Error(what), value(value), err_est(err_est) {}
    const char* kind() const noexcept override { return "NoConvergenceError"; }
    double value;
    double err_est;
};

}  // namespace hyptrans
