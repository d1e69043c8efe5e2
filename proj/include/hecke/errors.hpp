#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

// Error taxonomy shared by the library and the CLI exit-code mapping:
//   parse/validation -> 2, mathematical precondition -> 3, resource bound -> 4.
enum class ErrorKind {
    Parse,
    Precondition,
    Bound,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& what)
        : std::runtime_error(what), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& code() const noexcept { return code_; }

    int exit_code() const noexcept {
        switch (kind_) {
            case ErrorKind::Parse: return 2;
            case ErrorKind::Precondition: return 3;
            case ErrorKind::Bound: return 4;
        }
        return 3;
    }

private:
    ErrorKind kind_;
    std::string code_;
};

inline Error parse_error(const std::string& code, const std::string& msg) {
    return Error(ErrorKind::Parse, code, msg);
}
inline Error precondition_error(const std::string& code, const std::string& msg) {
    return Error(ErrorKind::Precondition, code, msg);
}
inline Error bound_error(const std::string& code, const std::string& msg) {
    return Error(ErrorKind::Bound, code, msg);
}

}  // namespace hecke
