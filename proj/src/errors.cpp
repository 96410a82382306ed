#include "newton_implicit/errors.hpp"

namespace ni {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Syntax: return "Syntax";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::BadCoefficient: return "BadCoefficient";
        case ErrorKind::DegreeSubstitutionDetected: return "DegreeSubstitutionDetected";
        case ErrorKind::EmptyAfterReduction: return "EmptyAfterReduction";
        case ErrorKind::UnclassifiableConfiguration: return "UnclassifiableConfiguration";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::InconsistentChains: return "InconsistentChains";
        case ErrorKind::ChainMismatch: return "ChainMismatch";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::NonGenericLifting: return "NonGenericLifting";
        case ErrorKind::DegreeInvariantViolated: return "DegreeInvariantViolated";
        case ErrorKind::ResamplingExhausted: return "ResamplingExhausted";
        case ErrorKind::KernelDimensionNotOne: return "KernelDimensionNotOne";
        case ErrorKind::ZeroResultant: return "ZeroResultant";
        case ErrorKind::FactorSelectionAmbiguous: return "FactorSelectionAmbiguous";
        case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace ni
