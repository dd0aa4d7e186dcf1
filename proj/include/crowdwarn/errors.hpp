#ifndef CROWDWARN_ERRORS_HPP
#define CROWDWARN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crowdwarn {

// Error categories map 1:1 onto CLI exit codes (see MANUAL.md).
enum class ErrorCode {
    io_error = 3,           // unreadable/unwritable file
    data_error = 4,         // malformed input data (bad row, bad format)
    insufficient_data = 5,  // not enough data to satisfy an operation's precondition
    invalid_parameter = 6,  // out-of-range flag or configuration value
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

} // namespace crowdwarn

#endif
