#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "trapezoid/connectivity.hpp"

namespace trapezoid {

enum class Algorithm { fast, quadratic, oracle };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

// The graph oracle materializes the intersection graph; refuse it above this.
inline constexpr Vertex kOracleLimit = 500;

// Dispatches to kappa_fast / kappa_quadratic / the max-flow oracle. The
// oracle path throws ContractViolation above kOracleLimit and never
// produces a witness.
ConnectivityResult compute_kappa(const TrapezoidDiagram& diagram, Algorithm algorithm, bool witness = false);

}  // namespace trapezoid
