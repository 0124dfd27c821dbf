#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dlchs/dlchs.hpp"

namespace {

using namespace dlchs;

std::string json_ids(const std::vector<int>& ids) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) os << ",";
        os << ids[i] + 1;  // files are 1-based
    }
    os << "]";
    return os.str();
}

struct RunReport {
    bool feasible = false;
    std::vector<int> solution;
    bool verified = false;
    std::string engine;
    uint64_t seed = 0;
    std::optional<bool> agreement;

    std::string json() const {
        std::ostringstream os;
        os << "{\"feasible\":" << (feasible ? "true" : "false")
           << ",\"solution\":" << json_ids(solution)
           << ",\"size\":" << solution.size()
           << ",\"verified\":" << (verified ? "true" : "false")
           << ",\"engine\":\"" << engine << "\""
           << ",\"seed\":" << seed;
        if (agreement) os << ",\"agreement\":" << (*agreement ? "true" : "false");
        os << "}";
        return os.str();
    }

    std::string text() const {
        std::ostringstream os;
        os << (feasible ? "feasible" : "infeasible");
        if (feasible)
            os << " size=" << solution.size() << " solution=" << json_ids(solution)
               << (verified ? " verified" : " UNVERIFIED");
        if (agreement) os << (*agreement ? " agreement" : " MISMATCH");
        return os.str();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dlchs - exact solver for the directed long cycle hitting set problem"};
    std::string input, mode = "vertex", engine = "solver";
    int k = 0, ell = 1, max_oracle_n = dlchs::oracle::kDefaultCap;
    uint64_t seed = 1;
    bool json = false, verify = false;
    app.add_option("--input", input, "graph file (p dlchs format)")->required();
    app.add_option("--k", k, "deletion budget")->required();
    app.add_option("--ell", ell, "maximum allowed cycle length");
    app.add_option("--mode", mode, "vertex|arc|mixed-fvs")
        ->check(CLI::IsMember({"vertex", "arc", "mixed-fvs"}));
    app.add_option("--engine", engine, "solver|oracle|both")
        ->check(CLI::IsMember({"solver", "oracle", "both"}));
    app.add_option("--seed", seed, "seed for randomized subroutines");
    app.add_flag("--json", json, "emit a JSON report on stdout");
    app.add_flag("--verify", verify, "re-verify solutions with the oracle's cycle enumeration");
    app.add_option("--max-oracle-n", max_oracle_n, "oracle refuses instances above this size");
    CLI11_PARSE(app, argc, argv);

    ParsedGraph parsed;
    try {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "error: cannot open " << input << "\n";
            return 2;
        }
        parsed = parse_graph(in);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    if (parsed.has_edges && mode != "mixed-fvs") {
        std::cerr << "parse error: line 1: edge lines need --mode mixed-fvs\n";
        return 2;
    }

    // mixed FVS reduces to vertex deletion at ell = 2
    Digraph work = parsed.graph;
    OriginMap back_map;
    Mode solve_mode = Mode::vertex;
    if (mode == "mixed-fvs") {
        auto red = mixed_fvs_reduction(parsed.mixed);
        work = red.graph;
        back_map = red.origin;
        ell = 2;
    } else if (mode == "arc") {
        solve_mode = Mode::arc;
    }

    auto run_solver = [&](RunReport& rep) {
        Instance inst{work, k, ell, solve_mode, std::nullopt};
        SolveOptions opts;
        opts.seed = seed;
        auto sol = solve(inst, opts);
        rep.feasible = sol.has_value();
        if (sol) {
            if (mode == "mixed-fvs") {
                VertexSet lifted = back_map.lift(VertexSet(sol->elements.begin(), sol->elements.end()));
                rep.solution.assign(lifted.begin(), lifted.end());
                rep.verified =
                    !has_long_cycle(work.minus(lifted), ell).has_value();
            } else {
                rep.solution = sol->elements;
                rep.verified = sol->verified;
            }
            if (verify && rep.verified) {
                // independent route: exhaustive cycle enumeration
                if (solve_mode == Mode::arc) {
                    rep.verified =
                        oracle::brute_circumference(
                            work.minus_arcs(std::vector<ArcId>(sol->elements.begin(),
                                                               sol->elements.end())),
                            std::max(max_oracle_n, work.alive_count())) <= ell;
                } else {
                    VertexSet s(rep.solution.begin(), rep.solution.end());
                    rep.verified = oracle::brute_circumference(
                                       work.minus(s),
                                       std::max(max_oracle_n, work.alive_count())) <= ell;
                }
            }
        }
    };

    auto run_oracle = [&](RunReport& rep) {
        auto m = solve_mode == Mode::arc ? oracle::DeletionMode::arc : oracle::DeletionMode::vertex;
        auto res = oracle::brute_dlchs(work, k, ell, m, max_oracle_n);
        rep.feasible = res.feasible;
        if (res.feasible && !res.optima.empty()) {
            if (mode == "mixed-fvs") {
                VertexSet lifted =
                    back_map.lift(VertexSet(res.optima[0].begin(), res.optima[0].end()));
                rep.solution.assign(lifted.begin(), lifted.end());
                rep.verified = !has_long_cycle(work.minus(lifted), ell).has_value();
            } else {
                rep.solution = res.optima[0];
                rep.verified = true;  // by construction of the enumeration
            }
        }
    };

    RunReport rep;
    rep.seed = seed;
    rep.engine = engine;
    int exit_code = 0;
    try {
        if (engine == "solver") {
            run_solver(rep);
        } else if (engine == "oracle") {
            run_oracle(rep);
        } else {
            RunReport solver_rep = rep, oracle_rep = rep;
            run_solver(solver_rep);
            run_oracle(oracle_rep);
            rep = solver_rep;
            rep.engine = "both";
            bool agree = solver_rep.feasible == oracle_rep.feasible &&
                         (!solver_rep.feasible || solver_rep.verified);
            rep.agreement = agree;
            if (!agree) exit_code = 1;
        }
    } catch (const oracle::cap_exceeded& e) {
        std::cerr << "oracle refused: " << e.what() << "\n";
        return 3;
    }

    std::cout << (json ? rep.json() : rep.text()) << "\n";
    return exit_code;
}
