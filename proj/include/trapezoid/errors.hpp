#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace trapezoid {

// A caller broke a documented precondition (index out of range, i == j, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Input data failed validation. Carries every violated invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> report);

    const std::vector<std::string>& report() const noexcept { return report_; }

private:
    std::vector<std::string> report_;
};

// Two independent computations that must agree did not.
class CrossCheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require(bool condition, const char* message) {
    if (!condition) {
        throw ContractViolation(message);
    }
}

}  // namespace trapezoid
