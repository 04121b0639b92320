#pragma once

#include <stdexcept>
#include <string>

namespace aggdyn {

// Bad user input: malformed config, out-of-range parameters, invalid specs.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

// Config file problems carry the offending line for diagnostics.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Numerical failure during propagation (non-finite state, norm drift).
class NumericsError : public std::runtime_error {
public:
    NumericsError(const std::string& msg, double t_fail)
        : std::runtime_error(msg + " at t=" + std::to_string(t_fail)), t_fail_(t_fail) {}
    double failure_time() const { return t_fail_; }

private:
    double t_fail_;
};

} // namespace aggdyn
