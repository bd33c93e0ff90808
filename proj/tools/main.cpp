#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "setgraph/constructions.hpp"
#include "setgraph/dot.hpp"
#include "setgraph/harness.hpp"
#include "setgraph/json_io.hpp"
#include "setgraph/search.hpp"

namespace {

using setgraph::json;

// Exit codes: 0 all checks pass, 1 property violation or refutation,
// 2 usage or domain error.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return json::parse(in);
}

setgraph::Graph load_graph(const std::string& path) { return setgraph::graph_from_json(load_json(path)); }

setgraph::OperatorKind parse_op(const std::string& name) {
    const auto op = setgraph::op_from_name(name);
    if (!op) throw std::invalid_argument("op must be union or intersection, got: " + name);
    return *op;
}

int run_gen(const std::string& family, int n, std::uint64_t seed) {
    const auto fam = setgraph::family_from_name(family);
    if (!fam) throw std::invalid_argument("unknown family: " + family);
    std::cout << setgraph::graph_to_json(setgraph::generate(*fam, n, seed)).dump(2) << "\n";
    return kExitOk;
}

int run_label(const std::string& graph_path, const std::string& op_str, const std::string& construction) {
    const setgraph::Graph g = load_graph(graph_path);
    const setgraph::OperatorKind op = parse_op(op_str);
    std::optional<setgraph::Labeling> lab;
    if (construction == "singleton") {
        if (op != setgraph::OperatorKind::Union)
            throw std::invalid_argument("the singleton construction induces labels by union");
        lab = setgraph::singleton_dsi(g);
    } else if (construction == "complement") {
        if (op != setgraph::OperatorKind::Intersection)
            throw std::invalid_argument("the complement construction induces labels by intersection");
        lab = setgraph::complement_csi(g);
    } else if (construction == "chain") {
        lab = op == setgraph::OperatorKind::Union ? setgraph::chain_dsi_tree(g)
                                                  : setgraph::chain_csi_tree(g);
    } else {
        throw std::invalid_argument("unknown construction: " + construction);
    }
    std::cout << setgraph::labeling_to_json(*lab).dump(2) << "\n";
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& labeling_path) {
    const setgraph::Graph g = load_graph(graph_path);
    setgraph::LabelingFile file = setgraph::labeling_file_from_json(load_json(labeling_path));
    const setgraph::VerificationReport rep =
        setgraph::full_report_checked(g, file.ground, file.op, file.labels);
    std::cout << setgraph::report_to_json(rep).dump(2) << "\n";
    const bool ok = rep.is_set_labeling && rep.is_set_indexer && rep.edge_exclusions_hold;
    return ok ? kExitOk : kExitViolation;
}

int run_min_index(const std::string& graph_path, const std::string& op_str, std::optional<int> max_size,
                  bool oracle) {
    const setgraph::Graph g = load_graph(graph_path);
    const setgraph::OperatorKind op = parse_op(op_str);
    const setgraph::SearchResult res =
        oracle ? setgraph::brute_force_min(g, op, max_size.value_or(setgraph::kMaxOracleGroundSize))
               : setgraph::min_index_number(g, op, max_size);
    std::cout << setgraph::search_result_to_json(res, g).dump(2) << "\n";
    return kExitOk;
}

int run_check(const std::string& suite, int max_n, int max_m) {
    setgraph::ClaimReport rep;
    if (suite == "thm2.8")
        rep = setgraph::check_thm_2_8(max_n, max_m);
    else if (suite == "indexing")
        rep = setgraph::check_indexing_number(max_n);
    else if (suite == "lemma2.7")
        rep = setgraph::check_lemma_2_7(max_n, max_m);
    else if (suite == "graceful")
        rep = setgraph::check_graceful_corollary(max_m);
    else
        throw std::invalid_argument("unknown suite: " + suite);
    std::cout << setgraph::claim_report_to_json(rep).dump(2) << "\n";
    return rep.refuted() ? kExitViolation : kExitOk;
}

int run_export(const std::string& graph_path, const std::string& labeling_path, const std::string& format) {
    if (format != "dot") throw std::invalid_argument("unknown format: " + format);
    const setgraph::Graph g = load_graph(graph_path);
    if (labeling_path.empty()) {
        std::cout << setgraph::export_dot(g);
    } else {
        const setgraph::Labeling lab = setgraph::labeling_from_json(load_json(labeling_path), g);
        std::cout << setgraph::export_dot(lab);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct, verify and optimize union/intersection set-labelings of finite graphs"};
    app.require_subcommand(1);

    std::string family, graph_path, labeling_path, op_str, construction, suite, format = "dot";
    int n = 0, max_n = 5, max_m = 3;
    std::uint64_t seed = 0;
    std::optional<int> max_size;
    bool oracle = false;

    auto* gen = app.add_subcommand("gen", "generate a graph from a standard family");
    gen->add_option("--family", family, "path|cycle|star|complete|random-tree")->required();
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--seed", seed, "seed for random families (default 0)");

    auto* label = app.add_subcommand("label", "apply a labeling construction to a graph");
    label->add_option("--graph", graph_path, "graph JSON file")->required();
    label->add_option("--op", op_str, "union|intersection")->required();
    label->add_option("--construction", construction, "singleton|complement|chain")->required();

    auto* verify = app.add_subcommand("verify", "verify a labeling against a graph");
    verify->add_option("--graph", graph_path, "graph JSON file")->required();
    verify->add_option("--labeling", labeling_path, "labeling JSON file")->required();

    auto* min_index = app.add_subcommand("min-index", "exact set-indexing number");
    min_index->add_option("--graph", graph_path, "graph JSON file")->required();
    min_index->add_option("--op", op_str, "union|intersection")->required();
    int max_size_value = 0;
    auto* max_size_opt = min_index->add_option("--max-size", max_size_value, "ground size cap");
    min_index->add_flag("--oracle", oracle, "force the brute-force oracle (n<=6, cap<=4)");

    auto* check = app.add_subcommand("check", "run a claim-checking suite");
    check->add_option("--suite", suite, "thm2.8|indexing|lemma2.7|graceful")->required();
    check->add_option("--max-n", max_n, "vertex bound (default 5)");
    check->add_option("--max-m", max_m, "ground size bound (default 3)");

    auto* exp = app.add_subcommand("export", "render a graph (and labeling) as DOT");
    exp->add_option("--graph", graph_path, "graph JSON file")->required();
    exp->add_option("--labeling", labeling_path, "labeling JSON file");
    exp->add_option("--format", format, "output format (dot)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) return run_gen(family, n, seed);
        if (*label) return run_label(graph_path, op_str, construction);
        if (*verify) return run_verify(graph_path, labeling_path);
        if (*min_index) {
            if (*max_size_opt) max_size = max_size_value;
            return run_min_index(graph_path, op_str, max_size, oracle);
        }
        if (*check) return run_check(suite, max_n, max_m);
        if (*exp) return run_export(graph_path, labeling_path, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
