#pragma once

#include <stdexcept>
#include <string>

namespace nwcost {

/// Process exit codes used by the command-line tool.
enum class ExitCode : int {
    Success = 0,
    Usage = 2,
    Config = 3,
    Model = 4,
};

/// Base class for every error raised by the library. Each error knows the
/// exit status the CLI should report and a short machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(std::string kind, ExitCode code, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)), code_(code) {}

    const std::string& kind() const noexcept { return kind_; }
    ExitCode exit_code() const noexcept { return code_; }

private:
    std::string kind_;
    ExitCode code_;
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error("usage", ExitCode::Usage, what) {}
};

// Parameter outside the mathematical domain of an operation (n_gates < 1, p >= 1, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain", ExitCode::Model, what) {}
};

// Evaluation point outside [1, 2 sqrt(N_G)].
class RangeError : public Error {
public:
    explicit RangeError(const std::string& what) : Error("range", ExitCode::Model, what) {}
};

// p at a pole of the closed-form normalization (0.5 or 1).
class DegenerateExponentError : public Error {
public:
    explicit DegenerateExponentError(const std::string& what)
        : Error("degenerate-exponent", ExitCode::Model, what) {}
};

class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& what) : Error("consistency", ExitCode::Model, what) {}
};

// A metal layer offers no routing capacity while wires remain unrouted.
class StuckProgressError : public Error {
public:
    explicit StuckProgressError(const std::string& what) : Error("stuck-progress", ExitCode::Model, what) {}
};

class ComparisonError : public Error {
public:
    explicit ComparisonError(const std::string& what) : Error("comparison", ExitCode::Model, what) {}
};

class InfeasibleTargetsError : public Error {
public:
    explicit InfeasibleTargetsError(const std::string& what)
        : Error("infeasible-targets", ExitCode::Model, what) {}
};

/// Malformed library document. Carries the 1-based line/column of the fault.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("parse", ExitCode::Config, what), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// A field violates a documented constraint. `field` is a dotted path such as
/// "profiles.tsv3d.via".
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& constraint)
        : Error("validation", ExitCode::Config, field + ": " + constraint), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class UnknownFieldError : public Error {
public:
    explicit UnknownFieldError(std::string field)
        : Error("unknown-field", ExitCode::Config, "unknown field '" + field + "'"), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error("config", ExitCode::Config, what) {}
};

}  // namespace nwcost
