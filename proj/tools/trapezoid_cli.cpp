// trapezoid: batch front end for the trapezoid-graph toolkit.
//
//   trapezoid gen --n 8 --seed 42 --out d.txt
//   trapezoid validate d.txt
//   trapezoid kappa d.txt --algorithm fast --witness
//   trapezoid check d.txt --property bipartite
//   trapezoid export d.txt --format dot
//   trapezoid bench --sizes 4096,8192 --seeds 3 --algorithms fast,quadratic --csv out.csv
//
// Exit codes: 0 success, 1 parse/validation failure, 2 cross-check disagreement.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "trapezoid/algorithm.hpp"
#include "trapezoid/bench.hpp"
#include "trapezoid/errors.hpp"
#include "trapezoid/io.hpp"
#include "trapezoid/structure.hpp"

namespace {

using namespace trapezoid;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitDisagreement = 2;

std::int64_t elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
}

int cmd_gen(Vertex n, std::uint64_t seed, const std::string& out_path) {
    const TrapezoidDiagram diagram = random_diagram(n, seed);
    std::ostringstream text;
    io::write_diagram(text, diagram, "random diagram n=" + std::to_string(n) + " seed=" + std::to_string(seed));
    if (out_path.empty() || out_path == "-") {
        std::cout << text.str();
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    out << text.str();
    out.flush();
    if (!out) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return kExitInvalid;
    }
    return kExitOk;
}

int cmd_validate(const std::string& path, bool normalize) {
    const TrapezoidDiagram diagram = io::read_diagram_file(path, normalize);
    std::cout << io::ResultRecord().add("valid", "yes").add("n", diagram.size()).str() << '\n';
    return kExitOk;
}

int cmd_kappa(const std::string& path, const std::string& algorithm_name, bool witness, bool normalize) {
    const auto algorithm = parse_algorithm(algorithm_name);
    if (!algorithm) {
        std::cerr << "error: unknown algorithm '" << algorithm_name << "'\n";
        return kExitInvalid;
    }
    const TrapezoidDiagram diagram = io::read_diagram_file(path, normalize);
    if (*algorithm == Algorithm::oracle && diagram.size() > kOracleLimit) {
        std::cerr << "error: the oracle algorithm is limited to n <= " << kOracleLimit << " (got n = "
                  << diagram.size() << "); use fast or quadratic\n";
        return kExitInvalid;
    }
    const auto start = std::chrono::steady_clock::now();
    const ConnectivityResult result = compute_kappa(diagram, *algorithm, witness);
    const auto ns = elapsed_since(start);

    io::ResultRecord record;
    record.add("kappa", result.kappa).add("algorithm", std::string(to_string(*algorithm)));
    if (witness) {
        record.add("witness", result.witness ? io::join(*result.witness) : std::string{});
        if (result.achieved_cut) {
            record.add("cut", std::to_string(result.achieved_cut->x) + "," + std::to_string(result.achieved_cut->y));
        }
    }
    record.add("elapsed_ns", ns);
    std::cout << record.str() << '\n';
    return kExitOk;
}

int cmd_check(const std::string& path, const std::string& property, bool normalize) {
    const TrapezoidDiagram diagram = io::read_diagram_file(path, normalize);
    const auto start = std::chrono::steady_clock::now();
    const IntersectionGraph graph = intersection_graph(diagram);
    io::ResultRecord record;
    record.add("property", property);

    if (property == "bipartite") {
        const auto verdict = is_bipartite(graph);
        if (const auto* parts = std::get_if<Bipartition>(&verdict)) {
            std::vector<Vertex> side[2];
            for (Vertex v = 1; v <= graph.vertex_count(); ++v) side[parts->side[static_cast<std::size_t>(v - 1)]].push_back(v);
            record.add("verdict", "yes").add("side0", io::join(side[0])).add("side1", io::join(side[1]));
        } else {
            record.add("verdict", "no").add("odd_cycle", io::join(std::get<OddCycle>(verdict).vertices));
        }
    } else if (property == "triangle") {
        if (const auto t = has_triangle(graph)) {
            record.add("verdict", "yes").add("triangle", io::join(*t));
        } else {
            record.add("verdict", "no");
        }
    } else if (property == "caterpillar") {
        const auto verdict = is_caterpillar(graph);
        if (const auto* cd = std::get_if<CaterpillarDecomposition>(&verdict)) {
            std::string pendants;
            for (std::size_t k = 0; k < cd->spine.size(); ++k) {
                if (cd->pendants[k].empty()) continue;
                if (!pendants.empty()) pendants += ';';
                pendants += std::to_string(cd->spine[k]) + ':' + io::join(cd->pendants[k]);
            }
            record.add("verdict", "yes").add("spine", io::join(cd->spine)).add("pendants", pendants);
        } else {
            record.add("verdict", "no").add("reason", "\"" + to_string(std::get<CaterpillarRefusal>(verdict)) + "\"");
        }
    } else {
        std::cerr << "error: unknown property '" << property << "'\n";
        return kExitInvalid;
    }
    record.add("elapsed_ns", elapsed_since(start));
    std::cout << record.str() << '\n';
    return kExitOk;
}

int cmd_export(const std::string& path, const std::string& format, bool normalize) {
    const TrapezoidDiagram diagram = io::read_diagram_file(path, normalize);
    const IntersectionGraph graph = intersection_graph(diagram);
    if (format == "edgelist") {
        io::write_edgelist(std::cout, graph);
    } else if (format == "dot") {
        io::write_dot(std::cout, graph);
    } else {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kExitInvalid;
    }
    return kExitOk;
}

int cmd_bench(bench::Config config, const std::vector<std::string>& algorithm_names, const std::string& csv_path) {
    config.algorithms.clear();
    for (const auto& name : algorithm_names) {
        const auto a = parse_algorithm(name);
        if (!a) {
            std::cerr << "error: unknown algorithm '" << name << "'\n";
            return kExitInvalid;
        }
        config.algorithms.push_back(*a);
    }
    const auto rows = bench::run(config);

    if (csv_path.empty() || csv_path == "-") {
        bench::write_csv(std::cout, rows);
    } else {
        std::ofstream out(csv_path);
        bench::write_csv(out, rows);
        out.flush();
        if (!out) {
            std::cerr << "error: cannot write " << csv_path << '\n';
            return kExitInvalid;
        }
    }
    for (const auto& s : bench::summarize(rows)) {
        std::cerr << to_string(s.algorithm) << " n=" << s.n << " median_ns=" << static_cast<std::int64_t>(s.median_ns);
        if (s.ratio) std::cerr << " ratio=" << *s.ratio;
        std::cerr << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trapezoid graph toolkit: vertex connectivity and structural checks"};
    app.require_subcommand(1);

    bool normalize = false;
    auto add_input = [&](CLI::App* cmd, std::string& path) {
        cmd->add_option("input", path, "Diagram file")->required();
        cmd->add_flag("--normalize", normalize, "Accept arbitrary distinct integers and rank-normalize them");
    };

    Vertex gen_n = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Write a random diagram");
    gen->add_option("--n", gen_n, "Number of trapezoids")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "Random seed");
    gen->add_option("-o,--out", gen_out, "Output path (stdout if omitted)");

    std::string validate_in;
    auto* validate_cmd = app.add_subcommand("validate", "Check a diagram file");
    add_input(validate_cmd, validate_in);

    std::string kappa_in;
    std::string kappa_algorithm = "fast";
    bool kappa_witness = false;
    auto* kappa = app.add_subcommand("kappa", "Vertex connectivity of the diagram's graph");
    add_input(kappa, kappa_in);
    kappa->add_option("-a,--algorithm", kappa_algorithm, "fast | quadratic | oracle")
        ->check(CLI::IsMember({"fast", "quadratic", "oracle"}));
    kappa->add_flag("-w,--witness", kappa_witness, "Print a minimum vertex cut");

    std::string check_in;
    std::string check_property;
    auto* check = app.add_subcommand("check", "Structural property of the intersection graph");
    add_input(check, check_in);
    check->add_option("-p,--property", check_property, "bipartite | triangle | caterpillar")
        ->required()
        ->check(CLI::IsMember({"bipartite", "triangle", "caterpillar"}));

    std::string export_in;
    std::string export_format = "edgelist";
    auto* export_cmd = app.add_subcommand("export", "Print the intersection graph");
    add_input(export_cmd, export_in);
    export_cmd->add_option("-f,--format", export_format, "edgelist | dot")->check(CLI::IsMember({"edgelist", "dot"}));

    bench::Config bench_config;
    std::vector<std::string> bench_algorithms{"fast", "quadratic"};
    std::string bench_csv;
    auto* bench_cmd = app.add_subcommand("bench", "Time algorithms on random diagrams");
    bench_cmd->add_option("--sizes", bench_config.sizes, "Diagram sizes")->required()->delimiter(',');
    bench_cmd->add_option("--seeds", bench_config.seeds_per_size, "Instances per size")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--base-seed", bench_config.base_seed, "Seed of the first instance");
    bench_cmd->add_option("--algorithms", bench_algorithms, "Algorithms to compare")->delimiter(',');
    bench_cmd->add_option("--repeats", bench_config.repeats, "Best-of repeats per run")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--threads", bench_config.threads, "Worker threads across instances")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--csv", bench_csv, "CSV output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*gen) return cmd_gen(gen_n, gen_seed, gen_out);
        if (*validate_cmd) return cmd_validate(validate_in, normalize);
        if (*kappa) return cmd_kappa(kappa_in, kappa_algorithm, kappa_witness, normalize);
        if (*check) return cmd_check(check_in, check_property, normalize);
        if (*export_cmd) return cmd_export(export_in, export_format, normalize);
        if (*bench_cmd) return cmd_bench(bench_config, bench_algorithms, bench_csv);
    } catch (const ValidationError& e) {
        std::cerr << "invalid input:\n";
        for (const auto& line : e.report()) std::cerr << "  " << line << '\n';
        return kExitInvalid;
    } catch (const CrossCheckError& e) {
        std::cerr << "cross-check failed: " << e.what() << '\n';
        return kExitDisagreement;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitOk;
}
