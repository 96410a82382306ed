#pragma once

#include <stdexcept>
#include <string>

namespace ni {

enum class ErrorKind {
    Syntax,
    ZeroPolynomial,
    BadCoefficient,
    DegreeSubstitutionDetected,
    EmptyAfterReduction,
    UnclassifiableConfiguration,
    InvariantViolation,
    InconsistentChains,
    ChainMismatch,
    CapExceeded,
    NonGenericLifting,
    DegreeInvariantViolated,
    ResamplingExhausted,
    KernelDimensionNotOne,
    ZeroResultant,
    FactorSelectionAmbiguous,
    Io,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, long long value = 0)
        : std::runtime_error(what), kind_(kind), value_(value) {}

    ErrorKind kind() const { return kind_; }
    // Numeric payload: substitution degree, kernel dimension, staircase count.
    long long value() const { return value_; }

private:
    ErrorKind kind_;
    long long value_;
};

}  // namespace ni
