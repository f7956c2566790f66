#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ardlkit {

enum class ErrorKind {
    Alignment,
    Transform,
    Shift,
    Length,
    Parse,
    Data,
    Io,
    Config,
    SampleTooSmall,
    DegreesOfFreedom,
    SingularDesign,
    SampleMismatch,
    Spec,
    Normalization,
    Degenerate,
    UnknownDgp,
};

// Stable machine-readable category, e.g. "singular_design".
std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view category() const { return kind_name(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace ardlkit
