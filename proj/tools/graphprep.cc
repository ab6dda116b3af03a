// Copyright 2026 The graphprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "graphprep/budget.h"
#include "graphprep/edge_coloring.h"
#include "graphprep/errors.h"
#include "graphprep/gf2.h"
#include "graphprep/graph_io.h"
#include "graphprep/locmin.h"
#include "graphprep/planner.h"
#include "graphprep/schedule_json.h"
#include "graphprep/sigma.h"
#include "graphprep/verifier.h"

using namespace graphprep;

namespace {

constexpr uint64_t kDefaultSeed = 0x5eed;

enum Exit : int {
    kOk = 0,
    kFailed = 1,
    kUsage = 2,
    kBudget = 3,
};

struct Config {
    std::string input = "-";
    std::string format = "edge-list";
    std::string measure = "snl";
    bool allow_unitaries = true;
    bool lc_optimize = false;
    uint64_t seed = kDefaultSeed;
    std::string budget;
    std::string output = "-";
    bool pretty = false;
    bool exhaustive = false;
    size_t samples = 64;
    std::string d_set;
    std::string target;
};

std::string read_input(const std::string &path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string &path, const std::string &text) {
    if (path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot write " + path);
    }
    out << text << "\n";
}

Json indices(const BitVec &b) {
    return Json(b.ones());
}

Json steps(const LcSequence &s) {
    return Json(s.steps);
}

std::vector<size_t> parse_index_list(const std::string &text) {
    std::vector<size_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) {
            continue;
        }
        size_t pos = 0;
        unsigned long v = std::stoul(tok, &pos);
        if (pos != tok.size()) {
            throw std::invalid_argument("bad vertex index: " + tok);
        }
        out.push_back(v);
    }
    return out;
}

Budgets budgets_for(const Config &c) {
    Budgets b = Budgets::from_environment();
    if (!c.budget.empty()) {
        b.apply_overrides(c.budget);
    }
    return b;
}

Graph load_graph(const Config &c) {
    return parse_graph(read_input(c.input), parse_graph_format(c.format));
}

int cmd_analyze(const Config &c) {
    Budgets budgets = budgets_for(c);
    Graph g = load_graph(c);
    size_t n = g.num_vertices();
    Json j;
    j["n"] = n;
    j["m"] = g.num_edges();
    j["min_degree"] = g.min_degree();
    j["max_degree"] = g.max_degree();
    bool exact = g.num_edges() <= budgets.max_exact_coloring_edges;
    EdgeColoring col = edge_coloring(g, exact, budgets.max_exact_coloring_edges);
    j["chromatic_index"] = {{"value", col.num_colors}, {"exact", exact}};
    Gf2Matrix a(n, n);
    for (auto [u, v] : g.edges()) {
        a.set(u, v);
        a.set(v, u);
    }
    size_t r = rank(a);
    j["rank_adjacency"] = r;
    if (n == 0) {
        j["delta_loc"] = nullptr;
    } else {
        DeltaLocResult d = delta_loc_exact(g, budgets);
        j["delta_loc"] = {{"value", d.value},
                          {"witness", {{"K", indices(d.witness.k_set())}, {"D", indices(d.witness.d_set())}}},
                          {"reduction", steps(d.reduction)}};
        size_t bound = std::min(n / 2, r);
        j["corollary2"] = {{"bound", bound}, {"holds", d.value <= bound}};
    }
    if (c.pretty) {
        std::ostringstream os;
        os << "n=" << n << " m=" << g.num_edges() << " degree " << g.min_degree() << ".." << g.max_degree()
           << "\nchromatic index " << col.num_colors << (exact ? "" : " (greedy)") << "\nrank(A) " << r;
        if (n != 0) {
            os << "\ndelta_loc " << j["delta_loc"]["value"].get<size_t>() << "  K=" << j["delta_loc"]["witness"]["K"].dump()
               << " D=" << j["delta_loc"]["witness"]["D"].dump()
               << "\nreduction " << j["delta_loc"]["reduction"].dump()
               << "\ncorollary bound " << j["corollary2"]["bound"].get<size_t>()
               << (j["corollary2"]["holds"].get<bool>() ? " holds" : " VIOLATED");
        }
        write_output(c.output, os.str());
    } else {
        write_output(c.output, j.dump());
    }
    return kOk;
}

std::string pretty_report(const VerificationReport &r) {
    std::ostringstream os;
    os << (r.ok ? "ok" : "FAILED") << ": " << r.branches_checked << (r.exhaustive ? " exhaustive" : " sampled")
       << " branches, " << r.random_measurements << " random measurements";
    for (const BranchFailure &f : r.failures) {
        os << "\n  " << f.reason;
    }
    return os.str();
}

int cmd_plan(const Config &c) {
    PlanRequest req;
    req.measure = parse_measure(c.measure);
    req.allow_unitaries = c.allow_unitaries;
    req.lc_optimize = c.lc_optimize;
    req.budgets = budgets_for(c);
    Graph g = load_graph(c);
    Schedule s = plan(g, req);
    VerificationReport rep = verify(s, VerifyMode::sampled(c.seed, c.samples), req.budgets);
    if (!rep.ok) {
        std::cerr << report_to_json(rep).dump() << "\n";
        return kFailed;
    }
    if (c.pretty) {
        ComplexityMetrics m = metrics(s);
        std::ostringstream os;
        os << measure_name(req.measure) << (req.allow_unitaries ? "" : " measurements-only") << ": N=" << m.n_ancilla
           << " S=" << m.s_max << " L=" << m.l_depth << " (content " << m.l_content << "), " << s.ops.size()
           << " ops";
        write_output(c.output, os.str());
    } else {
        write_output(c.output, schedule_to_json(s).dump());
    }
    return kOk;
}

int cmd_verify(const Config &c) {
    Budgets budgets = budgets_for(c);
    Schedule s = schedule_from_string(read_input(c.input));
    VerifyMode mode = c.exhaustive ? VerifyMode::exhaustive_mode(c.seed) : VerifyMode::sampled(c.seed, c.samples);
    VerificationReport rep = verify(s, mode, budgets);
    write_output(c.output, c.pretty ? pretty_report(rep) : report_to_json(rep).dump());
    return rep.ok ? kOk : kFailed;
}

int cmd_sigma(const Config &c) {
    Graph g = load_graph(c);
    BitVec d = BitVec::from_indices(g.num_vertices(), parse_index_list(c.d_set));
    BitVec target(d.popcount());
    for (size_t i : parse_index_list(c.target)) {
        // Target vertices are vertex ids inside D.
        if (i >= g.num_vertices() || !d.get(i)) {
            throw BadSubsetError("target vertex " + std::to_string(i) + " is not in D");
        }
        size_t pos = 0;
        for (size_t v : d.ones()) {
            if (v == i) {
                break;
            }
            pos++;
        }
        target.set(pos);
    }
    auto sol = solve_press_outside(g, d, target);
    Json j;
    j["status"] = sol ? "reachable" : "unreachable";
    j["press"] = sol ? indices(sol->vertices) : Json(nullptr);
    j["rank"] = rank(submatrix_a_d(g, d));
    j["reachable_all"] = reachable_all(g, d);
    if (c.pretty) {
        write_output(c.output, j["status"].get<std::string>() + (sol ? " press " + j["press"].dump() : ""));
    } else {
        write_output(c.output, j.dump());
    }
    return kOk;
}

int cmd_orbit(const Config &c) {
    Budgets budgets = budgets_for(c);
    Graph g = load_graph(c);
    Orbit orbit = lc_orbit(g, budgets.max_orbit_size);
    Json members = Json::array();
    for (size_t i = 0; i < orbit.size(); i++) {
        members.push_back({{"graph6", to_graph6(orbit.graphs[i])},
                           {"min_degree", orbit.graphs[i].min_degree()},
                           {"path", steps(orbit.paths[i])}});
    }
    if (c.pretty) {
        std::ostringstream os;
        os << "orbit size " << orbit.size();
        for (const Json &m : members) {
            os << "\n" << m["graph6"].get<std::string>() << "  " << m["path"].dump();
        }
        write_output(c.output, os.str());
    } else {
        write_output(c.output, Json{{"size", orbit.size()}, {"members", members}}.dump());
    }
    return kOk;
}

void error_json(const std::string &kind, const std::string &what) {
    std::cerr << Json{{"error", kind}, {"message", what}}.dump() << "\n";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Graph state preparation planner"};
    app.require_subcommand(1, 1);
    Config c;

    auto common = [&](CLI::App *sub, bool graph_input) {
        sub->add_option("input", c.input, "input path, '-' for stdin");
        if (graph_input) {
            sub->add_option("--format", c.format, "edge-list or graph6")
                ->check(CLI::IsMember({"edge-list", "graph6"}));
        }
        sub->add_option("--budget", c.budget, "key=value overrides");
        sub->add_option("--output,-o", c.output, "output path");
        sub->add_flag("--pretty", c.pretty, "human summary");
    };

    CLI::App *analyze = app.add_subcommand("analyze", "graph invariants and delta_loc");
    common(analyze, true);

    CLI::App *plan_cmd = app.add_subcommand("plan", "plan and verify a schedule");
    common(plan_cmd, true);
    plan_cmd->add_option("--measure", c.measure, "snl, sln, lsn, lns, nsl or nls")
        ->check(CLI::IsMember({"snl", "sln", "lsn", "lns", "nsl", "nls"}));
    plan_cmd->add_flag("--allow-unitaries,!--measurements-only", c.allow_unitaries, "allow CZ gates");
    plan_cmd->add_flag("--lc-optimize", c.lc_optimize, "search the orbit first");
    plan_cmd->add_option("--seed", c.seed, "verification seed");
    plan_cmd->add_option("--samples", c.samples, "sampled branches");

    CLI::App *verify_cmd = app.add_subcommand("verify", "verify a schedule JSON");
    common(verify_cmd, false);
    verify_cmd->add_flag("--exhaustive", c.exhaustive, "every outcome branch");
    verify_cmd->add_option("--seed", c.seed, "seed");
    verify_cmd->add_option("--samples", c.samples, "sampled branches");

    CLI::App *sigma = app.add_subcommand("sigma", "press set outside D reaching a target on D");
    common(sigma, true);
    sigma->add_option("--d-set", c.d_set, "comma-separated vertices of D")->required();
    sigma->add_option("--target", c.target, "comma-separated vertices of D to flip");

    CLI::App *orbit = app.add_subcommand("orbit", "local complementation orbit");
    common(orbit, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) {
            return cmd_analyze(c);
        }
        if (*plan_cmd) {
            return cmd_plan(c);
        }
        if (*verify_cmd) {
            return cmd_verify(c);
        }
        if (*sigma) {
            return cmd_sigma(c);
        }
        return cmd_orbit(c);
    } catch (const BudgetExceededError &e) {
        error_json("budget", e.what());
        return kBudget;
    } catch (const TooLargeError &e) {
        error_json("budget", e.what());
        return kBudget;
    } catch (const ParseError &e) {
        error_json("parse", e.what());
        return kUsage;
    } catch (const std::invalid_argument &e) {
        error_json("usage", e.what());
        return kUsage;
    } catch (const Json::exception &e) {
        error_json("parse", e.what());
        return kUsage;
    } catch (const Error &e) {
        error_json("input", e.what());
        return kUsage;
    }
}
