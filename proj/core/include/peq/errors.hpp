#pragma once

#include <stdexcept>
#include <string>

namespace peq {

/// Bad configuration input: unparsable text, unknown keys, values that
/// violate a precondition. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Iterative solver failed to reach its tolerance within the iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double residual, int iterations)
        : std::runtime_error(msg), residual(residual), iterations(iterations) {}
    double residual;
    int iterations;
};

/// Neumann problem with incompatible (non mean-zero) right-hand side.
class SolvabilityError : public std::runtime_error {
public:
    explicit SolvabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite value appeared while time stepping.
class BlowUpError : public std::runtime_error {
public:
    BlowUpError(const std::string& msg, double t, int stage)
        : std::runtime_error(msg), t(t), stage(stage) {}
    double t;
    int stage;
};

/// Snapshot or ledger file problem: bad magic, truncation, shape mismatch.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Analysis input too small to evaluate (e.g. ledger with too few rows).
class InsufficientDataError : public std::runtime_error {
public:
    explicit InsufficientDataError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace peq
