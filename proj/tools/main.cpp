#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "recgraph/checks.hpp"
#include "recgraph/codes.hpp"
#include "recgraph/constructions.hpp"
#include "recgraph/graphs.hpp"
#include "recgraph/machine.hpp"
#include "recgraph/solvers.hpp"

namespace {

using recgraph::Nat;
using recgraph::constructions::TreeSpec;
using recgraph::graphs::ComputableGraph;
using recgraph::graphs::FinitePrefix;
using recgraph::machine::Program;

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct BuildOptions {
    std::string construction;
    std::string program;
    std::string tree;
    std::string trees;
    std::string programs;
    std::string injection;
    Nat n = 0;
    Nat e = 0;
    Nat count = 10;
    Nat budget = recgraph::kDefaultBudget;
    std::string format = "dot";
    std::string out;
    bool require_decided = false;
};

void require_flag(bool present, const std::string& message) {
    if (!present) throw recgraph::InvalidArgumentError(message);
}

ComputableGraph make_construction(const BuildOptions& opt) {
    namespace cons = recgraph::constructions;
    const std::string& name = opt.construction;
    if (name == "thm1" || name == "thm2" || name == "thm4" || name == "thm7-G") {
        require_flag(!opt.program.empty(), name + " needs --program");
        const Program& p = recgraph::machine::registry_get(opt.program);
        if (name == "thm1") return cons::thm1_graph(p);
        if (name == "thm2") return cons::thm2_graph(p);
        if (name == "thm4") return cons::thm4_graph(p);
        return cons::thm7_G(p);
    }
    if (name == "thm5") {
        require_flag(!opt.injection.empty(), "thm5 needs --injection");
        return cons::thm5_graph(cons::injection_get(opt.injection), opt.n);
    }
    if (name == "thm6" || name == "thm10-G3") {
        require_flag(!opt.tree.empty(), name + " needs --tree");
        TreeSpec spec(recgraph::machine::registry_get(opt.tree), opt.budget);
        return name == "thm6" ? cons::thm6_graph(spec) : cons::thm10_G3(spec);
    }
    if (name == "ray-triangle-H") return cons::ray_triangle_H();
    if (name == "cycle-ray-H") return cons::cycle_ray_H(opt.e);
    if (name == "thm9-G") {
        require_flag(!opt.programs.empty(), "thm9-G needs --programs a,b,...");
        std::vector<const Program*> ps;
        for (const auto& pname : split_list(opt.programs)) {
            ps.push_back(&recgraph::machine::registry_get(pname));
        }
        return cons::thm9_G(ps);
    }
    if (name == "thm10-G4") {
        require_flag(!opt.trees.empty(), "thm10-G4 needs --trees a,b,...");
        std::vector<TreeSpec> specs;
        for (const auto& tname : split_list(opt.trees)) {
            specs.emplace_back(recgraph::machine::registry_get(tname), opt.budget);
        }
        return cons::thm10_G4(specs);
    }
    throw recgraph::InvalidArgumentError("unknown construction: " + name);
}

int run_list_programs() {
    for (const Program* p : recgraph::machine::registry_list()) {
        std::cout << p->name() << "  [" << p->kind() << "]  " << p->ground_truth().summary
                  << "\n";
    }
    return 0;
}

int run_build(const BuildOptions& opt) {
    auto graph = make_construction(opt);
    auto f = recgraph::graphs::prefix(graph, opt.count, opt.budget);
    if (opt.require_decided && !f.decided()) {
        std::cerr << "prefix of " << graph.name() << " has " << f.undecided().size()
                  << " undecided pairs at budget " << opt.budget << "\n";
        return 2;
    }
    std::string text = opt.format == "json" ? f.to_json() : f.to_dot();
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out);
        if (!out) throw recgraph::InvalidArgumentError("cannot write " + opt.out);
        out << text;
    }
    return 0;
}

FinitePrefix load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw recgraph::InvalidArgumentError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return FinitePrefix::from_json(buffer.str());
}

struct SolveOptions {
    std::string task;
    std::vector<std::string> files;
    Nat k = 3;
    Nat size = 1;
    std::string vertex;
};

void require_files(const SolveOptions& opt, std::size_t n) {
    if (opt.files.size() != n) {
        throw recgraph::InvalidArgumentError(opt.task + " expects " + std::to_string(n) +
                                             " graph file(s)");
    }
}

int run_solve(const SolveOptions& opt) {
    namespace solvers = recgraph::solvers;
    using ordered_json = nlohmann::ordered_json;

    if (opt.task == "color") {
        require_files(opt, 1);
        auto f = load_graph(opt.files[0]);
        auto coloring = solvers::k_colorable(f, opt.k);
        if (!coloring) {
            std::cout << "none\n";
            return 0;
        }
        ordered_json j = ordered_json::object();
        for (std::size_t i = 0; i < f.size(); ++i) {
            j[std::to_string(i)] = *coloring->at(i);
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (opt.task == "chrom") {
        require_files(opt, 1);
        std::cout << solvers::chromatic_number(load_graph(opt.files[0])) << "\n";
        return 0;
    }
    if (opt.task == "clique" || opt.task == "indep") {
        require_files(opt, 1);
        auto f = load_graph(opt.files[0]);
        auto set = opt.task == "clique" ? solvers::has_clique(f, opt.size)
                                        : solvers::independent_set(f, opt.size);
        if (!set) {
            std::cout << "none\n";
            return 0;
        }
        std::cout << ordered_json(*set).dump() << "\n";
        return 0;
    }
    if (opt.task == "subiso") {
        require_files(opt, 2);
        auto h = load_graph(opt.files[0]);
        auto g = load_graph(opt.files[1]);
        auto emb = solvers::subgraph_embedding(h, g);
        if (!emb) {
            std::cout << "none\n";
            return 0;
        }
        ordered_json j = ordered_json::object();
        for (std::size_t i = 0; i < emb->image.size(); ++i) {
            j[std::to_string(i)] = emb->image[i];
        }
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (opt.task == "component") {
        require_files(opt, 1);
        auto f = load_graph(opt.files[0]);
        require_flag(!opt.vertex.empty(), "component needs --vertex <label>");
        auto comp =
            solvers::component_of(f, recgraph::graphs::VertexId::named(opt.vertex));
        std::cout << ordered_json(comp).dump() << "\n";
        return 0;
    }
    throw recgraph::InvalidArgumentError("unknown solve task: " + opt.task);
}

int run_check(const std::string& suite, Nat seed) {
    namespace checks = recgraph::checks;
    if (suite == "all") {
        bool ok = true;
        for (const auto& report : checks::run_all(seed)) {
            std::cout << checks::render(report);
            ok = ok && report.passed();
        }
        std::cout << "overall: " << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? 0 : 1;
    }
    auto report = checks::run_suite(suite, seed);
    std::cout << checks::render(report);
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recursive-graph constructions, finite solvers, property checks"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list-programs", "list registry programs");

    BuildOptions build;
    auto* build_cmd =
        app.add_subcommand("build", "emit a finite prefix of a graph construction");
    build_cmd->add_option("construction", build.construction,
                          "thm1|thm2|thm4|thm5|thm6|thm7-G|ray-triangle-H|cycle-ray-H|"
                          "thm9-G|thm10-G3|thm10-G4")
        ->required();
    build_cmd->add_option("--program", build.program, "registry program name");
    build_cmd->add_option("--tree", build.tree, "registry tree program name");
    build_cmd->add_option("--trees", build.trees, "comma-separated tree programs");
    build_cmd->add_option("--programs", build.programs, "comma-separated programs");
    build_cmd->add_option("--injection", build.injection, "injection name");
    build_cmd->add_option("--n", build.n, "target value for thm5");
    build_cmd->add_option("--e", build.e, "component parameter for cycle-ray-H");
    build_cmd->add_option("--count", build.count, "prefix vertex count")
        ->default_val(10);
    build_cmd->add_option("--budget", build.budget, "stage budget")
        ->default_val(recgraph::kDefaultBudget);
    build_cmd->add_option("--format", build.format, "dot or json")
        ->default_val("dot")
        ->check(CLI::IsMember({"dot", "json"}));
    build_cmd->add_option("--out", build.out, "output path (stdout when absent)");
    build_cmd->add_flag("--require-decided", build.require_decided,
                        "exit 2 when the prefix has undecided pairs");

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "run a finite solver on JSON graphs");
    solve_cmd->add_option("task", solve.task, "color|chrom|clique|subiso|indep|component")
        ->required()
        ->check(CLI::IsMember({"color", "chrom", "clique", "subiso", "indep", "component"}));
    solve_cmd->add_option("files", solve.files, "graph JSON file(s)");
    solve_cmd->add_option("--k", solve.k, "color count for color");
    solve_cmd->add_option("--size", solve.size, "set size for clique/indep");
    solve_cmd->add_option("--vertex", solve.vertex, "vertex label for component");

    std::string suite;
    Nat seed = 0;
    auto* check_cmd = app.add_subcommand("check", "run a property suite");
    check_cmd->add_option("suite", suite,
                          "thm1|thm2|eta|thm4|thm5|thm6|thm7|thm9|thm10-3|thm10-4|"
                          "solvers|all")
        ->required();
    check_cmd->add_option("--seed", seed, "seed for the randomized suites")
        ->default_val(0);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (list_cmd->parsed()) return run_list_programs();
        if (build_cmd->parsed()) return run_build(build);
        if (solve_cmd->parsed()) return run_solve(solve);
        if (check_cmd->parsed()) return run_check(suite, seed);
    } catch (const recgraph::BudgetExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
