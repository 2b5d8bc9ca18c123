#ifndef RAM2CERT_ERRORS_HPP
#define RAM2CERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ram2 {

// Bad user input: malformed files, invalid CLI values, preconditions the
// caller is responsible for. Maps to exit code 2 in the CLI.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent table file.
class parse_error : public input_error {
public:
    explicit parse_error(const std::string& what) : input_error(what) {}
};

// Broken internal invariant. Should not be reachable from any input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace ram2

#endif
