#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace nlsabc {

// Process exit codes used by the command-line tool. Library code throws; the
// tool maps exception types onto these.
enum class ExitCode : int {
    ok = 0,
    failure = 1,
    config_error = 2,
    no_convergence = 3,
    blow_up = 4,
};

/// Invalid argument to a library function (bad grid, negative density, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Configuration file or override problem. Carries the offending key and,
/// when known, the 1-based line of the source file.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& what, int line = 0)
        : std::runtime_error(format(key, what, line)), key_(std::move(key)), line_(line) {}

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    static std::string format(const std::string& key, const std::string& what, int line) {
        std::string msg;
        if (line > 0) msg += "line " + std::to_string(line) + ": ";
        msg += "'" + key + "': " + what;
        return msg;
    }

    std::string key_;
    int line_;
};

/// Tridiagonal elimination hit a (numerically) zero pivot.
class SingularPivotError : public std::runtime_error {
public:
    explicit SingularPivotError(std::size_t row)
        : std::runtime_error("singular pivot at row " + std::to_string(row)), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

/// Picard iteration did not converge, or the field became non-finite.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(long step, const std::string& what)
        : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}

    long step() const noexcept { return step_; }

private:
    long step_;
};

/// The field amplitude exceeded the blow-up guard.
class BlowUpError : public std::runtime_error {
public:
    BlowUpError(long step, double amplitude)
        : std::runtime_error("step " + std::to_string(step) + ": amplitude " +
                             std::to_string(amplitude) + " exceeded blow-up guard"),
          step_(step) {}

    long step() const noexcept { return step_; }

private:
    long step_;
};

}  // namespace nlsabc
