#pragma once

#include <stdexcept>
#include <string>

namespace adi {

// Domain errors carry the name of the guard that tripped; the CLI maps them to exit 2.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string guard, const std::string& what)
        : std::runtime_error(what), guard_(std::move(guard)) {}
    const std::string& guard() const { return guard_; }

private:
    std::string guard_;
};

// Malformed on-disk input (JSON schema violations and the like); CLI exit 2.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter regimes the machinery deliberately does not handle; CLI exit 3.
class RegimeError : public std::runtime_error {
public:
    explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

// Internal convergence failures (series stalled, contour too coarse). Callers retry or abort.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

inline RegimeError regime_error_small_params() {
    return RegimeError(
        "requires ell >= 2 and n >= 1: the cases ell = 1 or n = 0 reduce to the two-variable "
        "setting already settled by Li and Ye (corollary covering Gamma, Gamma'); they are "
        "rejected here rather than re-derived");
}

}  // namespace adi
