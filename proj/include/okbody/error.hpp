#ifndef OKBODY_ERROR_HPP
#define OKBODY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace okb {

// Error taxonomy mirrored by the C API status codes and the CLI exit codes:
//   Config     -> 2  (bad input data, failed validation, malformed files)
//   Hypothesis -> 3  (operation's mathematical hypothesis not met by the flag)
//   Internal   -> 4  (engine guard tripped; indicates a bug, not bad input)
enum class ErrorKind {
    Config,
    Hypothesis,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_config(const std::string& msg) {
    throw Error(ErrorKind::Config, msg);
}

[[noreturn]] inline void fail_hypothesis(const std::string& msg) {
    throw Error(ErrorKind::Hypothesis, msg);
}

[[noreturn]] inline void fail_internal(const std::string& msg) {
    throw Error(ErrorKind::Internal, msg);
}

} // namespace okb

#endif
