#pragma once

#include <stdexcept>
#include <string>

namespace gauge_radii {

enum class ErrorCode {
    InvalidArgument,
    Degenerate,
    Parse,
    Io,
    Numerical,
    Unsupported,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gauge_radii
