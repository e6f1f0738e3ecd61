#include "trapezoid/algorithm.hpp"

#include "trapezoid/errors.hpp"
#include "trapezoid/oracle.hpp"

namespace trapezoid {

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::fast:
            return "fast";
        case Algorithm::quadratic:
            return "quadratic";
        case Algorithm::oracle:
            return "oracle";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    for (Algorithm a : {Algorithm::fast, Algorithm::quadratic, Algorithm::oracle}) {
        if (name == to_string(a)) return a;
    }
    return std::nullopt;
}

ConnectivityResult compute_kappa(const TrapezoidDiagram& diagram, Algorithm algorithm, bool witness) {
    switch (algorithm) {
        case Algorithm::fast:
            return kappa_fast(diagram, {.witness = witness});
        case Algorithm::quadratic:
            return kappa_quadratic(diagram, {.witness = witness});
        case Algorithm::oracle:
            if (diagram.size() > kOracleLimit) {
                throw ContractViolation("oracle refuses n = " + std::to_string(diagram.size()) + " (limit " +
                                        std::to_string(kOracleLimit) + ")");
            }
            return ConnectivityResult{oracle::kappa_bruteforce(intersection_graph(diagram)), std::nullopt,
                                      std::nullopt};
    }
    throw ContractViolation("unknown algorithm");
}

}  // namespace trapezoid
