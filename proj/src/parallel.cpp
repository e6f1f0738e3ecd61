#include "trapezoid/parallel.hpp"

#include <exception>

#include <omp.h>

namespace trapezoid::parallel {

IntersectionGraph intersection_graph(const TrapezoidDiagram& diagram) {
    const Vertex n = diagram.size();
    std::vector<std::vector<Vertex>> adjacency(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 64)
    for (Vertex i = 1; i <= n; ++i) {
        auto& row = adjacency[static_cast<std::size_t>(i - 1)];
        for (Vertex j = 1; j <= n; ++j) {
            if (j != i && is_adjacent(diagram, i, j)) row.push_back(j);
        }
    }
    return IntersectionGraph(std::move(adjacency));
}

std::vector<Count> kappa_batch(std::span<const TrapezoidDiagram> diagrams, Algorithm algorithm) {
    const auto count = static_cast<std::int64_t>(diagrams.size());
    std::vector<Count> out(diagrams.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
        try {
            out[static_cast<std::size_t>(k)] = compute_kappa(diagrams[static_cast<std::size_t>(k)], algorithm).kappa;
        } catch (...) {
#pragma omp critical(kappa_batch_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<Count> kappa_batch_serial(std::span<const TrapezoidDiagram> diagrams, Algorithm algorithm) {
    std::vector<Count> out;
    out.reserve(diagrams.size());
    for (const auto& d : diagrams) out.push_back(compute_kappa(d, algorithm).kappa);
    return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace trapezoid::parallel
