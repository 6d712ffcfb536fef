#pragma once

#include <stdexcept>
#include <string>

namespace framedrag {

/// Raised when an input lies outside the domain of a formula (negative mass,
/// superluminal velocity, a point inside the horizon, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when an approximation is used outside its declared applicability
/// window. Callers can bypass the check with the guard's override flag.
class GuardViolation : public DomainError {
public:
    GuardViolation(std::string guard, const std::string& what)
        : DomainError(what), guard_(std::move(guard)) {}

    const std::string& guard() const noexcept { return guard_; }

private:
    std::string guard_;
};

/// Malformed configuration, spectrum or model file.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

} // namespace detail
} // namespace framedrag
