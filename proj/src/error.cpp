#include "ardlkit/error.hpp"

namespace ardlkit {

std::string_view kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Alignment: return "alignment";
        case ErrorKind::Transform: return "transform";
        case ErrorKind::Shift: return "shift";
        case ErrorKind::Length: return "length";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Data: return "data";
        case ErrorKind::Io: return "io";
        case ErrorKind::Config: return "config";
        case ErrorKind::SampleTooSmall: return "sample_too_small";
        case ErrorKind::DegreesOfFreedom: return "degrees_of_freedom";
        case ErrorKind::SingularDesign: return "singular_design";
        case ErrorKind::SampleMismatch: return "sample_mismatch";
        case ErrorKind::Spec: return "spec";
        case ErrorKind::Normalization: return "normalization";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::UnknownDgp: return "unknown_dgp";
    }
    return "unknown";
}

}  // namespace ardlkit
