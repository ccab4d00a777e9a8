// Command-line front end: recognize/check dissimilarity matrices, print
// mmodule-trees, generate instances, and benchmark the recognizer.
//
// Exit codes: 0 success / order compatible, 1 not Robinson / check failed,
// 2 malformed input or bad flags.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "robinson/mmodules.hpp"
#include "robinson/recognizer.hpp"
#include "robinson/testkit.hpp"

namespace {

robinson::DissimilaritySpace load_matrix(const std::string& path, int precision) {
    if (path.empty() || path == "-") return robinson::parse_matrix(std::cin, precision);
    std::ifstream in(path);
    if (!in) throw robinson::ParseError("cannot open '" + path + "'");
    return robinson::parse_matrix(in, precision);
}

void print_order(std::ostream& out, const robinson::Ordering& order) {
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out << ' ';
        out << order[i] + 1;
    }
    out << "\n";
}

int run_recognize(const std::string& path, int precision, bool structured) {
    const auto space = load_matrix(path, precision);
    const auto t0 = std::chrono::steady_clock::now();
    const auto result = robinson::recognize(space);
    const auto ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    if (result.robinson) {
        if (structured) {
            std::cout << "verdict=robinson\norder=";
            print_order(std::cout, result.order);
            std::cout << "time_ms=" << ms << "\n";
        } else {
            print_order(std::cout, result.order);
        }
        return 0;
    }
    if (structured)
        std::cout << "verdict=not-robinson\nwitness=" << result.witness << "\n";
    else
        std::cout << "NOT ROBINSON\n" << result.witness << "\n";
    return 1;
}

int run_check(const std::string& path, const std::string& order_text, int precision) {
    const auto space = load_matrix(path, precision);
    robinson::Ordering order;
    std::istringstream in(order_text);
    long long id;
    while (in >> id) order.push_back(static_cast<robinson::PointId>(id - 1));
    if (!in.eof()) throw robinson::ParseError("malformed order: '" + order_text + "'");
    if (!robinson::is_permutation_of_space(space, order))
        throw robinson::ParseError("order is not a permutation of 1.." +
                                   std::to_string(space.size()));
    if (auto violation = robinson::find_robinson_violation(space, order)) {
        std::cout << "violation: " << violation->describe(order) << "\n";
        return 1;
    }
    std::cout << "compatible\n";
    return 0;
}

int run_mmtree(const std::string& path, int precision) {
    const auto space = load_matrix(path, precision);
    std::cout << robinson::serialize(robinson::mmodule_tree(space)) << "\n";
    return 0;
}

robinson::testkit::GeneratorKind parse_kind(const std::string& name) {
    using robinson::testkit::GeneratorKind;
    if (name == "toeplitz") return GeneratorKind::Toeplitz;
    if (name == "ultrametric") return GeneratorKind::Ultrametric;
    if (name == "line") return GeneratorKind::LineDistance;
    if (name == "robinson") return GeneratorKind::ShuffledRobinson;
    if (name == "perturbed") return GeneratorKind::Perturbed;
    throw robinson::ParseError("unknown generator kind '" + name + "'");
}

int run_gen(const robinson::testkit::GeneratorSpec& spec, const std::string& out_path) {
    const auto space = robinson::testkit::generate(spec);
    if (out_path.empty() || out_path == "-") {
        robinson::write_matrix(std::cout, space, 0);
    } else {
        std::ofstream out(out_path);
        if (!out) throw robinson::ParseError("cannot open '" + out_path + "'");
        robinson::write_matrix(out, space, 0);
    }
    return 0;
}

int run_bench(const std::string& kind, const std::string& sizes_text, std::uint64_t seed,
              int repeats) {
    std::vector<int> sizes;
    std::stringstream in(sizes_text);
    std::string token;
    while (std::getline(in, token, ',')) sizes.push_back(std::stoi(token));
    std::cout << "n\tmean_ms\tratio\n";
    double previous = 0;
    for (std::size_t s = 0; s < sizes.size(); ++s) {
        double total = 0;
        for (int r = 0; r < repeats; ++r) {
            robinson::testkit::GeneratorSpec spec;
            spec.kind = parse_kind(kind);
            spec.n = sizes[s];
            spec.seed = seed + static_cast<std::uint64_t>(r);
            const auto space = robinson::testkit::generate(spec);
            const auto t0 = std::chrono::steady_clock::now();
            const auto result = robinson::recognize(space);
            total += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               t0)
                         .count();
            if (!result.robinson && (spec.kind == robinson::testkit::GeneratorKind::Toeplitz ||
                                     spec.kind == robinson::testkit::GeneratorKind::ShuffledRobinson))
                std::cerr << "warning: generated instance not recognized as Robinson\n";
        }
        const double mean = total / repeats;
        std::cout << sizes[s] << "\t" << mean << "\t";
        if (s == 0)
            std::cout << "-";
        else
            std::cout << mean / previous;
        std::cout << "\n";
        previous = mean;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robinson dissimilarity recognition toolkit"};
    app.require_subcommand(1);
    int precision = robinson::kDefaultPrecision;
    app.add_option("--precision", precision, "fractional digits accepted in matrix values")
        ->capture_default_str();

    std::string file = "-";
    bool structured = false;
    auto* recognize_cmd =
        app.add_subcommand("recognize", "compute a compatible order or report NOT ROBINSON");
    recognize_cmd->add_option("file", file, "matrix file ('-' for stdin)");
    recognize_cmd->add_flag("--structured", structured, "key=value output");

    std::string order_text;
    auto* check_cmd = app.add_subcommand("check", "verify an order against a matrix");
    check_cmd->add_option("file", file, "matrix file ('-' for stdin)");
    check_cmd->add_option("--order", order_text, "space-separated 1-based point ids")->required();

    auto* mmtree_cmd = app.add_subcommand("mmtree", "print the mmodule-tree");
    mmtree_cmd->add_option("file", file, "matrix file ('-' for stdin)");

    robinson::testkit::GeneratorSpec spec;
    std::string kind = "toeplitz";
    std::string out_path;
    long long max_val = 2;
    auto* gen_cmd = app.add_subcommand("gen", "generate a matrix file");
    gen_cmd->add_option("--kind", kind, "toeplitz|ultrametric|line|robinson|perturbed")
        ->capture_default_str();
    gen_cmd->add_option("--n", spec.n, "number of points")->required();
    gen_cmd->add_option("--seed", spec.seed, "64-bit seed")->capture_default_str();
    gen_cmd->add_option("--max-val", max_val, "value bound for toeplitz/robinson kinds")
        ->capture_default_str();
    gen_cmd->add_flag("--shuffle", spec.shuffle, "apply a seeded random permutation");
    gen_cmd->add_option("--perturb", spec.perturb_count, "random symmetric rewrites");
    gen_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    std::string sizes = "500,1000,2000";
    std::uint64_t bench_seed = 1;
    int repeats = 3;
    std::string bench_kind = "robinson";
    auto* bench_cmd = app.add_subcommand("bench", "time recognition across sizes");
    bench_cmd->add_option("--kind", bench_kind, "generator kind")->capture_default_str();
    bench_cmd->add_option("--sizes", sizes, "comma-separated point counts")->capture_default_str();
    bench_cmd->add_option("--seed", bench_seed, "base seed")->capture_default_str();
    bench_cmd->add_option("--repeats", repeats, "runs per size")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (recognize_cmd->parsed()) return run_recognize(file, precision, structured);
        if (check_cmd->parsed()) return run_check(file, order_text, precision);
        if (mmtree_cmd->parsed()) return run_mmtree(file, precision);
        if (gen_cmd->parsed()) {
            spec.kind = parse_kind(kind);
            spec.max_val = static_cast<robinson::Value>(max_val);
            return run_gen(spec, out_path);
        }
        if (bench_cmd->parsed()) return run_bench(bench_kind, sizes, bench_seed, repeats);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const robinson::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
