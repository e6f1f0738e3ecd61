#include "trapezoid/bench.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <ostream>


#include "trapezoid/errors.hpp"

namespace trapezoid::bench {

namespace {

Count run_once(const TrapezoidDiagram& diagram, const PointIndex& index, Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::fast:
            return kappa_fast(diagram, index).kappa;
        case Algorithm::quadratic:
            return kappa_quadratic(diagram, index).kappa;
        case Algorithm::oracle:
            return compute_kappa(diagram, Algorithm::oracle).kappa;
    }
    return -1;
}

std::vector<Row> run_instance(Vertex n, std::uint64_t seed, const Config& config) {
    const TrapezoidDiagram diagram = random_diagram(n, seed);
    const PointIndex index(diagram);
    std::vector<Row> rows;
    for (Algorithm algorithm : config.algorithms) {
        Row row{n, seed, algorithm, 0, 0};
        for (int r = 0; r < std::max(1, config.repeats); ++r) {
            const auto start = std::chrono::steady_clock::now();
            row.kappa = run_once(diagram, index, algorithm);
            const auto stop = std::chrono::steady_clock::now();
            const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
            row.elapsed_ns = (r == 0) ? ns : std::min<std::int64_t>(row.elapsed_ns, ns);
        }
        if (!rows.empty() && rows.front().kappa != row.kappa) {
            throw CrossCheckError("kappa disagreement at n = " + std::to_string(n) + ", seed = " +
                                  std::to_string(seed) + ": " + std::string(to_string(rows.front().algorithm)) + " = " +
                                  std::to_string(rows.front().kappa) + ", " + std::string(to_string(algorithm)) +
                                  " = " + std::to_string(row.kappa));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::vector<Row> run(const Config& config) {
    std::vector<std::pair<Vertex, std::uint64_t>> instances;
    for (Vertex n : config.sizes) {
        for (int k = 0; k < config.seeds_per_size; ++k) {
            instances.emplace_back(n, config.base_seed + static_cast<std::uint64_t>(k));
        }
    }
    std::vector<std::vector<Row>> per_instance(instances.size());
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(instances.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, config.threads))
    for (std::int64_t k = 0; k < count; ++k) {
        try {
            const auto [n, seed] = instances[static_cast<std::size_t>(k)];
            per_instance[static_cast<std::size_t>(k)] = run_instance(n, seed, config);
        } catch (...) {
#pragma omp critical(bench_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<Row> rows;
    for (auto& batch : per_instance) rows.insert(rows.end(), batch.begin(), batch.end());
    return rows;
}

void write_csv(std::ostream& out, std::span<const Row> rows) {
    out << "n,seed,algorithm,elapsed_ns,kappa\n";
    for (const Row& r : rows) {
        out << r.n << ',' << r.seed << ',' << to_string(r.algorithm) << ',' << r.elapsed_ns << ',' << r.kappa << '\n';
    }
}

std::vector<Scaling> summarize(std::span<const Row> rows) {
    std::map<std::pair<Algorithm, Vertex>, std::vector<std::int64_t>> times;
    for (const Row& r : rows) times[{r.algorithm, r.n}].push_back(r.elapsed_ns);

    std::vector<Scaling> out;
    for (auto& [key, samples] : times) {
        std::sort(samples.begin(), samples.end());
        const std::size_t mid = samples.size() / 2;
        const double median = (samples.size() % 2 == 1) ? double(samples[mid])
                                                        : 0.5 * double(samples[mid - 1] + samples[mid]);
        Scaling s{key.first, key.second, median, std::nullopt};
        if (!out.empty() && out.back().algorithm == key.first && out.back().median_ns > 0) {
            s.ratio = median / out.back().median_ns;
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace trapezoid::bench
