#pragma once

#include <stdexcept>
#include <string>

namespace hc {

/// Stable error categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
    Input,     // malformed or invalid user input
    Budget,    // a configured resource cap was exceeded
    Internal,  // a mathematical invariant was violated
};

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

inline Error input_error(const std::string& what) { return Error(ErrorKind::Input, what); }
inline Error budget_error(const std::string& what) { return Error(ErrorKind::Budget, what); }
inline Error internal_error(const std::string& what) { return Error(ErrorKind::Internal, what); }

}  // namespace hc
