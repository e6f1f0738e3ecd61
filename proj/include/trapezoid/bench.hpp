#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "trapezoid/algorithm.hpp"

namespace trapezoid::bench {

struct Config {
    std::vector<Vertex> sizes;
    int seeds_per_size = 1;
    std::uint64_t base_seed = 1;  // instance k of a size uses base_seed + k
    std::vector<Algorithm> algorithms{Algorithm::fast, Algorithm::quadratic};
    int repeats = 1;  // best-of timing
    int threads = 1;  // >1 spreads instances over OpenMP workers
};

struct Row {
    Vertex n = 0;
    std::uint64_t seed = 0;
    Algorithm algorithm = Algorithm::fast;
    std::int64_t elapsed_ns = 0;
    Count kappa = 0;
};

// Times each algorithm on random_diagram(n, seed), excluding generation
// and point indexing. Throws CrossCheckError if the algorithms disagree on
// any instance.
std::vector<Row> run(const Config& config);

// Columns: n,seed,algorithm,elapsed_ns,kappa
void write_csv(std::ostream& out, std::span<const Row> rows);

struct Scaling {
    Algorithm algorithm;
    Vertex n;
    double median_ns;
    std::optional<double> ratio;  // vs the previous (smaller) size
};

// Median time per (algorithm, n), sizes ascending.
std::vector<Scaling> summarize(std::span<const Row> rows);

}  // namespace trapezoid::bench
