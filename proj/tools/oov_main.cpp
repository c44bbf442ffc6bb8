#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>

#include "oov/cli.hpp"

using namespace oov;

namespace {

// shared engine options for the subcommands that build structures
void add_engine_options(CLI::App* cmd, cli::EngineOptions& opts) {
    cmd->add_option("--engine", opts.engine, "oracle, avg or worst")->capture_default_str();
    cmd->add_option_function<uint32_t>(
        "--t", [&opts](uint32_t v) { opts.t = v; }, "avg sparsity threshold");
    cmd->add_option_function<uint32_t>(
        "--i", [&opts](uint32_t v) { opts.i = v; }, "worst-case recursion parameter");
    cmd->add_option_function<std::string>(
        "--avg-p", [&opts](const std::string& v) { opts.p = Rational::parse(v); },
        "zero probability for avg auto-t (e.g. 1/2)");
    cmd->add_option_function<std::string>(
        "--avg-eps", [&opts](const std::string& v) { opts.eps_avg = Rational::parse(v); },
        "eps for avg auto-t (e.g. 1/2)");
    cmd->add_option_function<double>(
        "--schedule-c", [&opts](double v) { opts.sched_c = v; },
        "worst schedule for d = c log2 n");
    cmd->add_option_function<double>(
        "--schedule-delta", [&opts](double v) { opts.sched_delta = v; },
        "space exponent target for --schedule-c");
    cmd->add_option_function<double>(
        "--schedule-eps", [&opts](double v) { opts.sched_eps = v; },
        "worst schedule for query time n^(1-eps) d");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"online orthogonal vectors data structures"};
    app.require_subcommand(1);

    cli::GenOptions gen;
    std::string gen_p = "1/2";
    auto* cgen = app.add_subcommand("gen", "sample a B_p instance to a file");
    cgen->add_option("--n", gen.n, "vector count")->required();
    cgen->add_option("--d", gen.d, "dimension")->required();
    cgen->add_option("--p", gen_p, "per-bit zero probability")->capture_default_str();
    cgen->add_option("--seed", gen.seed, "generator seed")->capture_default_str();
    cgen->add_option("--out", gen.out_path, "output path")->required();
    cgen->add_flag("--binary", gen.binary, "write the bit-packed variant");

    cli::BuildOptions build;
    auto* cbuild = app.add_subcommand("build", "preprocess an instance into a structure file");
    cbuild->add_option("--in", build.in_path, "instance path")->required();
    cbuild->add_option("--out", build.out_path, "structure output path")->required();
    add_engine_options(cbuild, build.engine);

    cli::QueryOptions query;
    auto* cquery = app.add_subcommand("query", "answer queries against a structure file");
    cquery->add_option("--structure", query.structure_path, "structure path")->required();
    cquery->add_option("--queries", query.queries_path, "query file, one row per line")
        ->required();
    cquery->add_flag("--stats", query.stats, "print counters to stderr");
    cquery->add_flag("--no-shortcircuit", query.no_shortcircuit,
                     "measure worst-case counters (answers unchanged)");

    cli::VerifyOptions verify;
    auto* cverify = app.add_subcommand("verify", "compare an engine against the linear scan");
    cverify->add_option("--in", verify.in_path, "instance path")->required();
    cverify->add_option("--mode", verify.mode, "exhaustive or sampled")->capture_default_str();
    cverify->add_option("--samples", verify.sample_count, "query count for sampled mode")
        ->capture_default_str();
    cverify->add_option("--seed", verify.seed, "query seed for sampled mode")
        ->capture_default_str();
    cverify->add_flag("--ledger", verify.ledger, "print the space/time bound ledger");
    add_engine_options(cverify, verify.engine);

    cli::BenchOptions bench;
    std::string bench_p = "1/2";
    std::string n_list;
    auto* cbench = app.add_subcommand("bench", "counter and timing table over instance sizes");
    cbench->add_option("--n-list", n_list, "comma-separated instance sizes");
    cbench->add_option("--d-rule", bench.d_rule, "clogn:<c> or fixed:<d>")->capture_default_str();
    cbench->add_option("--p", bench_p, "instance zero probability")->capture_default_str();
    cbench->add_option("--seed", bench.seed, "instance seed")->capture_default_str();
    cbench->add_option("--queries", bench.query_count, "sampled queries per row")
        ->capture_default_str();
    cbench->add_option("--csv", bench.csv_path, "also write the table to this path");
    add_engine_options(cbench, bench.engine);

    cli::HardestOptions hardest;
    std::string hardest_delta = "1/2";
    auto* chardest = app.add_subcommand("hardest", "build the formula-independent instance");
    chardest->add_option("--n", hardest.n, "variable count")->capture_default_str();
    chardest->add_option("--k", hardest.k, "clause width")->capture_default_str();
    chardest->add_option("--delta", hardest_delta, "dimension exponent")->capture_default_str();
    chardest->add_option("--cnf", hardest.cnf_path, "check this DIMACS CNF against the oracle");

    cli::HampathOptions hampath;
    auto* champath = app.add_subcommand("hampath", "Hamiltonian path via the kSUM reduction");
    champath->add_option("--graph", hampath.graph_path, "edge-list digraph path")->required();
    champath->add_option("--k", hampath.k, "number of path segments")->capture_default_str();

    cli::ReduceOptions reduce;
    auto* creduce = app.add_subcommand("reduce", "answer PM/subset/containment/DNF queries");
    creduce->add_option("--problem", reduce.problem, "pm, subset, containment or dnf")
        ->required();
    creduce->add_option("--inputs", reduce.inputs_path, "problem input file")->required();
    creduce->add_option("--queries", reduce.queries_path, "query file")->required();
    creduce->add_flag("--check", reduce.check, "cross-check against direct semantics");
    add_engine_options(creduce, reduce.engine);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitUsage;
    }

    try {
        if (cgen->parsed()) {
            gen.p = Rational::parse(gen_p);
            return cli::cmd_gen(gen, std::cerr);
        }
        if (cbuild->parsed()) return cli::cmd_build(build, std::cerr);
        if (cquery->parsed()) return cli::cmd_query(query, std::cout, std::cerr);
        if (cverify->parsed()) return cli::cmd_verify(verify, std::cout);
        if (cbench->parsed()) {
            bench.p = Rational::parse(bench_p);
            if (!n_list.empty()) {
                std::istringstream ns(n_list);
                std::string token;
                while (std::getline(ns, token, ',')) bench.n_list.push_back(std::stoull(token));
            }
            return cli::cmd_bench(bench, std::cout);
        }
        if (chardest->parsed()) {
            hardest.delta = Rational::parse(hardest_delta);
            return cli::cmd_hardest(hardest, std::cout);
        }
        if (champath->parsed()) return cli::cmd_hampath(hampath, std::cout);
        if (creduce->parsed()) return cli::cmd_reduce(reduce, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    }
    return cli::kExitUsage;
}
