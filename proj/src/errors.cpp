#include "trapezoid/errors.hpp"

#include <numeric>

namespace trapezoid {

namespace {

std::string join_report(const std::vector<std::string>& report) {
    if (report.empty()) {
        return "invalid input";
    }
    return std::accumulate(std::next(report.begin()), report.end(), report.front(),
                           [](std::string acc, const std::string& line) { return acc + "; " + line; });
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> report)
    : std::runtime_error(join_report(report)), report_(std::move(report)) {}

}  // namespace trapezoid
