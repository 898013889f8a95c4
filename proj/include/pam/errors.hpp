#pragma once

#include <stdexcept>
#include <string>

namespace pam {

// Domain and feasibility violations. The CLI maps these to exit code 2.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Contraction ratio outside the model's admissible range; carries the
// bound that was violated so callers (the actuator inverse in particular)
// get a hard feasibility signal.
class ContractionError : public DomainError {
public:
    ContractionError(const std::string& msg, double eps, double eps_max)
        : DomainError(msg), eps(eps), eps_max(eps_max) {}
    double eps;
    double eps_max;
};

// Denominator within tolerance of zero (P + d poles, degenerate anchors).
class PoleError : public DomainError {
public:
    explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

class SingularMatrixError : public DomainError {
public:
    SingularMatrixError(const std::string& msg, double condition_estimate)
        : DomainError(msg), condition_estimate(condition_estimate) {}
    double condition_estimate;
};

// File and text-format problems. The CLI maps these to exit code 1.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pam
