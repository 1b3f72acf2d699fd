// Command-line front end: solve, verify, reduce, extract, oracle, generate,
// and end-to-end reduction checking.
//
// Exit codes: 0 found/ok/agree, 1 proven-none/violation/disagree,
// 2 budget-inconclusive, 64 parse or usage error, 65 invalid instance.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omdci/core.hpp"
#include "omdci/gen.hpp"
#include "omdci/io.hpp"
#include "omdci/oracle.hpp"
#include "omdci/reduce.hpp"
#include "omdci/solve.hpp"
#include "omdci/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw omdci::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw omdci::ParseError("cannot write file: " + path);
    out << content;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

std::string join_indices(const std::vector<std::size_t>& xs) {
    std::string out;
    for (std::size_t x : xs) out += " " + std::to_string(x);
    return out;
}

int check_threads_env() {
    const char* raw = std::getenv("OMDCI_THREADS");
    if (!raw) return 0;
    std::string v(raw);
    bool ok = !v.empty();
    for (char c : v)
        if (c < '0' || c > '9') ok = false;
    if (ok) ok = v.find_first_not_of('0') != std::string::npos;
    if (!ok) {
        std::cerr << "error: OMDCI_THREADS must be a positive integer\n";
        return 64;
    }
    return 0;
}

struct SolveArgs {
    std::string input;
    std::string variant;
    std::string out;
    std::optional<std::uint64_t> max_nodes;
};

int run_solve(const SolveArgs& args) {
    omdci::Instance inst = omdci::parse_instance(read_file(args.input));
    if (!args.variant.empty()) {
        omdci::Variant v = omdci::detail::parse_variant_token(args.variant, 0);
        inst = omdci::Instance(v, inst.m(), inst.a());
    }
    omdci::SolveBudget budget{args.max_nodes, std::nullopt};
    omdci::SolveOutcome outcome;
    switch (inst.variant()) {
        case omdci::Variant::general: outcome = omdci::solve_general(inst, budget); break;
        case omdci::Variant::omdci: outcome = omdci::solve_omdci_max(inst, budget); break;
        case omdci::Variant::omdci_plus: outcome = omdci::solve_plus_fpt(inst, budget); break;
    }
    if (outcome.k_max > 0) {
        emit(omdci::render_solution(*outcome.best), args.out);
        return 0;
    }
    std::cout << "NONE k_max=0 exhausted=" << (outcome.exhausted ? "true" : "false") << "\n";
    return outcome.exhausted ? 1 : 2;
}

int run_verify(const std::string& input, const std::string& solution) {
    omdci::Instance inst = omdci::parse_instance(read_file(input));
    omdci::SolutionPair sol = omdci::parse_solution(read_file(solution));
    omdci::VerifyResult r;
    switch (inst.variant()) {
        case omdci::Variant::general: r = omdci::verify_general(inst, sol); break;
        case omdci::Variant::omdci: r = omdci::verify_omdci(inst, sol); break;
        case omdci::Variant::omdci_plus: r = omdci::verify_plus(inst, sol); break;
    }
    std::cout << r.to_string() << "\n";
    return r.ok ? 0 : 1;
}

int run_reduce(const std::string& kind, const std::string& input, const std::string& out,
               const std::string& map_path) {
    std::string text = read_file(input);
    omdci::Instance inst{omdci::Variant::general, {}, {}};
    omdci::ReductionMap map;
    if (kind == "x3c") {
        auto reduced = omdci::reduce_x3c(omdci::parse_x3c(text));
        inst = std::move(reduced.first);
        map = std::move(reduced.second);
    } else {
        auto reduced = omdci::reduce_cohc(omdci::parse_graph(text));
        inst = std::move(reduced.first);
        map = std::move(reduced.second);
    }
    write_file(out, omdci::render_instance(inst));
    if (!map_path.empty()) write_file(map_path, omdci::render_reduction_map(map));
    return 0;
}

int run_check_x3c(const std::string& input, std::optional<std::uint64_t> budget) {
    omdci::X3CInstance x = omdci::parse_x3c(read_file(input));
    auto oracle_cover = omdci::x3c_oracle(x);
    auto [inst, map] = omdci::reduce_x3c(x);
    omdci::SolveOutcome outcome =
        omdci::solve_plus_fpt(inst, omdci::SolveBudget{budget, std::nullopt});
    if (outcome.k_max == 0 && !outcome.exhausted) {
        std::cout << "INCONCLUSIVE budget\n";
        return 2;
    }
    bool solver_pos = outcome.k_max > 0;
    bool oracle_pos = oracle_cover.has_value();
    if (solver_pos != oracle_pos) {
        std::cout << "DISAGREE oracle=" << (oracle_pos ? "yes" : "no")
                  << " solver=" << (solver_pos ? "yes" : "no") << "\n"
                  << "nodes: " << outcome.nodes_explored << "\n";
        return 1;
    }
    if (solver_pos) {
        std::vector<std::size_t> cover;
        try {
            cover = omdci::extract_cover(x, map, *outcome.best);
        } catch (const omdci::DomainError& e) {
            std::cout << "DISAGREE extraction failed: " << e.what() << "\n";
            return 1;
        }
        std::cout << "AGREE positive\ncover:" << join_indices(cover) << "\n"
                  << "nodes: " << outcome.nodes_explored << "\n";
    } else {
        std::cout << "AGREE negative\nnodes: " << outcome.nodes_explored << "\n";
    }
    return 0;
}

int run_check_cohc(const std::string& input, std::optional<std::uint64_t> budget) {
    omdci::Graph g = omdci::parse_graph(read_file(input));
    auto oracle_cycle = omdci::hamiltonian_oracle(g);
    auto [inst, map] = omdci::reduce_cohc(g);
    omdci::SolveOutcome outcome =
        omdci::solve_omdci_any(inst, omdci::SolveBudget{budget, std::nullopt});
    if (outcome.k_max == 0 && !outcome.exhausted) {
        std::cout << "INCONCLUSIVE budget\n";
        return 2;
    }
    bool solver_pos = outcome.k_max > 0;
    bool oracle_pos = oracle_cycle.has_value();
    if (solver_pos != oracle_pos) {
        std::cout << "DISAGREE oracle=" << (oracle_pos ? "yes" : "no")
                  << " solver=" << (solver_pos ? "yes" : "no") << "\n"
                  << "nodes: " << outcome.nodes_explored << "\n";
        return 1;
    }
    if (solver_pos) {
        std::vector<std::size_t> cycle;
        try {
            cycle = omdci::extract_cycle(g, map, *outcome.best);
            omdci::SolutionPair witness = omdci::witness_from_cycle(g, map, cycle);
            if (!omdci::verify_omdci(inst, witness).ok || witness.k() != 3 * g.n())
                throw omdci::DomainError("witness round-trip failed");
        } catch (const omdci::DomainError& e) {
            std::cout << "DISAGREE extraction failed: " << e.what() << "\n";
            return 1;
        }
        std::cout << "AGREE positive\ncycle:" << join_indices(cycle) << "\n"
                  << "nodes: " << outcome.nodes_explored << "\n";
    } else {
        std::cout << "AGREE negative\nnodes: " << outcome.nodes_explored << "\n";
    }
    return 0;
}

int run_extract(const std::string& kind, const std::string& input,
                const std::string& solution) {
    omdci::SolutionPair sol = omdci::parse_solution(read_file(solution));
    if (kind == "x3c") {
        omdci::X3CInstance x = omdci::parse_x3c(read_file(input));
        auto [inst, map] = omdci::reduce_x3c(x);
        std::cout << "cover:" << join_indices(omdci::extract_cover(x, map, sol)) << "\n";
    } else {
        omdci::Graph g = omdci::parse_graph(read_file(input));
        auto [inst, map] = omdci::reduce_cohc(g);
        std::cout << "cycle:" << join_indices(omdci::extract_cycle(g, map, sol)) << "\n";
    }
    return 0;
}

int run_oracle(const std::string& kind, const std::string& input) {
    if (kind == "x3c") {
        auto cover = omdci::x3c_oracle(omdci::parse_x3c(read_file(input)));
        if (!cover) {
            std::cout << "none\n";
            return 1;
        }
        std::cout << "cover:" << join_indices(*cover) << "\n";
        return 0;
    }
    auto cycle = omdci::hamiltonian_oracle(omdci::parse_graph(read_file(input)));
    if (!cycle) {
        std::cout << "none\n";
        return 1;
    }
    std::cout << "cycle:" << join_indices(*cycle) << "\n";
    return 0;
}

struct GenInstanceArgs {
    std::uint64_t seed = 1;
    std::string variant;
    std::size_t m_len = 0;
    std::size_t a_len = 0;
    std::size_t colors = 0;
    std::size_t chars = 0;
    std::string out;
};

struct GenGraphArgs {
    std::string kind;
    std::size_t n = 0;
    double p = 0.5;
    double extra_p = 0.2;
    std::uint64_t seed = 1;
    std::string out;
};

struct GenX3cArgs {
    std::uint64_t seed = 1;
    std::size_t q = 0;
    std::size_t m = 0;
    bool planted = false;
    std::string out;
};

int run_gen_instance(const GenInstanceArgs& a) {
    omdci::Variant v = omdci::detail::parse_variant_token(a.variant, 0);
    omdci::Instance inst =
        omdci::gen_random_instance(a.seed, v, a.m_len, a.a_len, a.colors, a.chars);
    emit(omdci::render_instance(inst), a.out);
    return 0;
}

int run_gen_graph(const GenGraphArgs& a) {
    omdci::Graph g{0, {}};
    if (a.kind == "cycle")
        g = omdci::make_cycle(a.n);
    else if (a.kind == "path")
        g = omdci::make_path(a.n);
    else if (a.kind == "complete")
        g = omdci::make_complete(a.n);
    else if (a.kind == "star")
        g = omdci::make_star(a.n);
    else if (a.kind == "petersen")
        g = omdci::make_petersen();
    else if (a.kind == "random")
        g = omdci::make_random_graph(a.n, a.p, a.seed);
    else if (a.kind == "planted-hc")
        g = omdci::make_planted_hc(a.n, a.extra_p, a.seed);
    else
        throw omdci::DomainError("unknown graph kind '" + a.kind + "'");
    emit(omdci::render_graph(g), a.out);
    return 0;
}

int run_gen_x3c(const GenX3cArgs& a) {
    emit(omdci::render_x3c(omdci::gen_x3c(a.seed, a.q, a.m, a.planted)), a.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (int rc = check_threads_env()) return rc;

    CLI::App app{"Colored-sequence pattern matching: solvers, verifiers, "
                 "hardness reductions, and generators"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
    solve_cmd->add_option("--input", solve_args.input, "instance file")->required();
    solve_cmd->add_option("--variant", solve_args.variant,
                          "override the file's variant (general|omdci|omdci+)");
    solve_cmd->add_option("--max-nodes", solve_args.max_nodes, "search budget");
    solve_cmd->add_option("--out", solve_args.out, "write the solution here");

    std::string verify_input, verify_solution;
    auto* verify_cmd = app.add_subcommand("verify", "Check a solution file");
    verify_cmd->add_option("--input", verify_input, "instance file")->required();
    verify_cmd->add_option("--solution", verify_solution, "solution file")->required();

    std::string reduce_kind, reduce_input, reduce_out, reduce_map;
    auto* reduce_cmd = app.add_subcommand("reduce", "Emit a reduced instance");
    reduce_cmd->add_option("kind", reduce_kind, "x3c or cohc")
        ->required()
        ->check(CLI::IsMember({"x3c", "cohc"}));
    reduce_cmd->add_option("--input", reduce_input, "problem file")->required();
    reduce_cmd->add_option("--out", reduce_out, "instance file to write")->required();
    reduce_cmd->add_option("--map", reduce_map, "also write the position map here");

    std::string check_kind, check_input;
    std::optional<std::uint64_t> check_budget;
    auto* check_cmd =
        app.add_subcommand("check-reduction", "Compare oracle and solver through a reduction");
    check_cmd->add_option("kind", check_kind, "x3c or cohc")
        ->required()
        ->check(CLI::IsMember({"x3c", "cohc"}));
    check_cmd->add_option("--input", check_input, "problem file")->required();
    check_cmd->add_option("--budget", check_budget, "solver budget");

    std::string extract_kind, extract_input, extract_solution;
    auto* extract_cmd =
        app.add_subcommand("extract", "Recover a cover or cycle from a solution");
    extract_cmd->add_option("kind", extract_kind, "x3c or cohc")
        ->required()
        ->check(CLI::IsMember({"x3c", "cohc"}));
    extract_cmd->add_option("--input", extract_input, "original problem file")->required();
    extract_cmd->add_option("--solution", extract_solution, "solution file")->required();

    std::string oracle_kind, oracle_input;
    auto* oracle_cmd = app.add_subcommand("oracle", "Run a brute-force decider");
    oracle_cmd->add_option("kind", oracle_kind, "x3c or hc")
        ->required()
        ->check(CLI::IsMember({"x3c", "hc"}));
    oracle_cmd->add_option("--input", oracle_input, "problem file")->required();

    auto* gen_cmd = app.add_subcommand("gen", "Generate seeded inputs");
    gen_cmd->require_subcommand(1);

    GenInstanceArgs gi;
    auto* gen_instance = gen_cmd->add_subcommand("instance", "Random instance");
    gen_instance->add_option("--seed", gi.seed, "rng seed");
    gen_instance->add_option("--variant", gi.variant, "general|omdci|omdci+")->required();
    gen_instance->add_option("--m-len", gi.m_len, "pattern length")->required();
    gen_instance->add_option("--a-len", gi.a_len, "program length")->required();
    gen_instance->add_option("--colors", gi.colors, "color alphabet size")->required();
    gen_instance->add_option("--chars", gi.chars, "char alphabet size")->required();
    gen_instance->add_option("--out", gi.out, "output path (stdout otherwise)");

    GenGraphArgs gg;
    auto* gen_graph = gen_cmd->add_subcommand("graph", "Named or random graph");
    gen_graph
        ->add_option("--kind", gg.kind,
                     "cycle|path|complete|star|petersen|random|planted-hc")
        ->required();
    gen_graph->add_option("--n", gg.n, "vertex count");
    gen_graph->add_option("--p", gg.p, "edge probability for kind=random");
    gen_graph->add_option("--extra-p", gg.extra_p, "extra-edge probability for kind=planted-hc");
    gen_graph->add_option("--seed", gg.seed, "rng seed");
    gen_graph->add_option("--out", gg.out, "output path (stdout otherwise)");

    GenX3cArgs gx;
    auto* gen_x3c_cmd = gen_cmd->add_subcommand("x3c", "Random exact-cover input");
    gen_x3c_cmd->add_option("--seed", gx.seed, "rng seed");
    gen_x3c_cmd->add_option("--q", gx.q, "cover size (base set 3q)")->required();
    gen_x3c_cmd->add_option("--m", gx.m, "triple count")->required();
    gen_x3c_cmd->add_flag("--planted", gx.planted, "guarantee a cover exists");
    gen_x3c_cmd->add_option("--out", gx.out, "output path (stdout otherwise)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_args);
        if (verify_cmd->parsed()) return run_verify(verify_input, verify_solution);
        if (reduce_cmd->parsed())
            return run_reduce(reduce_kind, reduce_input, reduce_out, reduce_map);
        if (check_cmd->parsed())
            return check_kind == "x3c" ? run_check_x3c(check_input, check_budget)
                                       : run_check_cohc(check_input, check_budget);
        if (extract_cmd->parsed())
            return run_extract(extract_kind, extract_input, extract_solution);
        if (oracle_cmd->parsed()) return run_oracle(oracle_kind, oracle_input);
        if (gen_instance->parsed()) return run_gen_instance(gi);
        if (gen_graph->parsed()) return run_gen_graph(gg);
        if (gen_x3c_cmd->parsed()) return run_gen_x3c(gx);
    } catch (const omdci::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const omdci::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    }
    return 64;
}
