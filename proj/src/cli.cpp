#include "twwcol/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "twwcol/errors.hpp"
#include "twwcol/generate.hpp"
#include "twwcol/io.hpp"
#include "twwcol/mincol.hpp"
#include "twwcol/oracles.hpp"
#include "twwcol/threecol.hpp"

namespace twwcol::cli {

namespace {

using json = nlohmann::ordered_json;

class Checks {
public:
    void pass(const std::string &name, const std::string &detail = "") { add(name, "pass", detail); }
    void fail(const std::string &name, const std::string &detail = "") {
        add(name, "fail", detail);
        failed_ = true;
    }
    void skip(const std::string &name, const std::string &detail = "") { add(name, "skip", detail); }
    void expect(bool ok, const std::string &name, const std::string &detail = "") {
        ok ? pass(name, detail) : fail(name, detail);
    }

    bool failed() const { return failed_; }
    const json &list() const { return list_; }

private:
    void add(const std::string &name, const char *status, const std::string &detail) {
        json entry = {{"name", name}, {"status", status}};
        if (!detail.empty())
            entry["detail"] = detail;
        list_.push_back(std::move(entry));
    }

    json list_ = json::array();
    bool failed_ = false;
};

std::size_t resolve_budget(std::optional<std::size_t> flag) {
    if (flag)
        return *flag;
    if (const char *env = std::getenv(kBudgetEnv)) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception &) {
            throw ParseError(std::string(kBudgetEnv) + " is not a number: '" + env + "'");
        }
    }
    return kDefaultBudget;
}

json graph_stats(const Trigraph &g) {
    return {{"N", g.size()}, {"black_edges", g.black_edges().size()}, {"red_edges", g.red_edges().size()}};
}

json formula_stats(const CnfFormula &f, const Trigraph &g) {
    json out = {{"n", f.var_count()}, {"m", f.clause_count()}};
    out.update(graph_stats(g));
    return out;
}

json width_report(const WidthProfile &profile, std::size_t bound, std::size_t steps) {
    return {{"max", profile.overall_width},
            {"argmax_step", profile.peak_step()},
            {"steps", steps},
            {"bound", bound},
            {"within_bound", profile.overall_width <= bound}};
}

json assignment_json(const Assignment &a) {
    json out = json::array();
    for (bool v : a.values())
        out.push_back(v ? 1 : 0);
    return out;
}

Trigraph load_graph(const std::string &path) {
    std::istringstream is(io::slurp(path));
    return io::read_trigraph(is);
}

CnfFormula load_cnf(const std::string &path, Dialect dialect) {
    return io::parse_dimacs_cnf(io::slurp(path), dialect);
}

void write_outputs(const Trigraph &g, const PartitionSequence &seq, const std::string &graph_out,
                   const std::string &seq_out, const std::string &roles_out, json &report) {
    json files = json::object();
    if (!graph_out.empty()) {
        io::dump(graph_out, io::to_text(g));
        files["graph"] = graph_out;
    }
    if (!seq_out.empty()) {
        io::dump(seq_out, io::to_text(seq));
        files["sequence"] = seq_out;
    }
    if (!roles_out.empty()) {
        std::ostringstream os;
        io::write_roles(os, g);
        io::dump(roles_out, os.str());
        files["roles"] = roles_out;
    }
    report["files"] = files;
}

// Colorability verdict, or nullopt when the oracle ran out of budget.
std::optional<ColorabilityResult> colorability(const Trigraph &g, int k, std::size_t budget, Checks &checks,
                                               const std::string &name) {
    try {
        return is_k_colorable(g, k, budget);
    } catch (const BudgetExceeded &e) {
        checks.skip(name, e.what());
        return std::nullopt;
    }
}

void roundtrip_mincol(const CnfFormula &f, std::size_t budget, json &report, Checks &checks) {
    const MinColInstance inst = build_mincol(f);
    report["instance"] = formula_stats(f, inst.graph);
    checks.expect(inst.graph.size() == static_cast<std::size_t>((4 * inst.n + 1) * inst.p), "size_law",
                  "N = (4n+1)(2n+m) = " + std::to_string(inst.vertex_count()));

    const PartitionSequence seq = build_mincol_3sequence(inst);
    const SequenceVerdict verdict = verify_d_sequence(inst.graph, seq, 3);
    report["width"] = width_report(verdict.profile, 3, seq.steps().size());
    checks.expect(verdict.within_bound, "sequence_within_3",
                  "width " + std::to_string(verdict.profile.overall_width));

    const auto solution = solve_sat(f);
    json verdicts = {{"satisfiable", solution.has_value()}};
    if (solution) {
        verdicts["assignment"] = assignment_json(*solution);
        const Coloring forward = mincol_coloring_from_assignment(inst, *solution);
        const bool proper = is_proper(inst.graph, forward) && forward.colors_used() <= inst.color_budget;
        checks.expect(proper, "forward_coloring_proper", "colors used " + std::to_string(forward.colors_used()));
        if (proper)
            checks.expect(f.satisfied_by(mincol_assignment_from_coloring(inst, forward)),
                          "backward_assignment_satisfies");
        else
            checks.skip("backward_assignment_satisfies", "forward coloring is not proper");
    }

    if (auto oracle = colorability(inst.graph, inst.color_budget, budget, checks, "colorability_matches_formula")) {
        verdicts["colorable_with_2n"] = oracle->colorable;
        checks.expect(oracle->colorable == solution.has_value(), "colorability_matches_formula");
        if (oracle->colorable) {
            const Assignment back = mincol_assignment_from_coloring(inst, *oracle->witness);
            checks.expect(f.satisfied_by(back), "oracle_coloring_maps_to_satisfying");
        }
    }
    try {
        const ChromaticResult chi = chromatic_number(inst.graph, budget);
        verdicts["chromatic_number"] = chi.chromatic_number;
        checks.expect((chi.chromatic_number <= inst.color_budget) == solution.has_value(),
                      "chromatic_number_matches_formula", "chi = " + std::to_string(chi.chromatic_number));
    } catch (const BudgetExceeded &e) {
        checks.skip("chromatic_number_matches_formula", e.what());
    }
    report["verdicts"] = verdicts;
}

void roundtrip_3col(const CnfFormula &f, int k, std::size_t budget, json &report, Checks &checks) {
    const ThreeColInstance inst = build_3col(f);
    report["instance"] = formula_stats(f, inst.graph);
    report["instance"]["subdivisions"] = inst.subdivisions.size();
    const std::size_t bound = static_cast<std::size_t>(3 * inst.m + (2 * inst.m - 1) * inst.n + 1);
    checks.expect(inst.graph.size() <= bound, "size_bound",
                  "N = " + std::to_string(inst.graph.size()) + " <= " + std::to_string(bound));

    const PartitionSequence seq = build_3col_4sequence(inst);
    const SequenceVerdict verdict = verify_d_sequence(inst.graph, seq, 4);
    report["width"] = width_report(verdict.profile, 4, seq.steps().size());
    checks.expect(verdict.within_bound, "sequence_within_4",
                  "width " + std::to_string(verdict.profile.overall_width));

    const auto solution = solve_nae(f);
    json verdicts = {{"nae_satisfiable", solution.has_value()}};
    if (solution) {
        verdicts["assignment"] = assignment_json(*solution);
        const Coloring forward = threecol_coloring_from_assignment(inst, *solution);
        const bool proper = is_proper(inst.graph, forward);
        checks.expect(proper, "forward_coloring_proper");
        if (proper)
            checks.expect(f.nae_satisfied_by(threecol_assignment_from_coloring(inst, forward)),
                          "backward_assignment_nae_satisfies");
        else
            checks.skip("backward_assignment_nae_satisfies", "forward coloring is not proper");
    }

    std::optional<bool> base_colorable;
    if (auto oracle = colorability(inst.graph, 3, budget, checks, "colorability_matches_formula")) {
        base_colorable = oracle->colorable;
        verdicts["three_colorable"] = oracle->colorable;
        checks.expect(oracle->colorable == solution.has_value(), "colorability_matches_formula");
        if (oracle->colorable) {
            const Assignment back = threecol_assignment_from_coloring(inst, *oracle->witness);
            checks.expect(f.nae_satisfied_by(back), "oracle_coloring_maps_to_nae_satisfying");
        }
    }

    if (k > 3) {
        const Trigraph lifted = lift_to_k(inst, k);
        const SequenceVerdict lifted_verdict = verify_d_sequence(lifted, lift_4sequence(inst, k), 4);
        report["lifted"] = {{"k", k}, {"N", lifted.size()}, {"width", lifted_verdict.profile.overall_width}};
        checks.expect(lifted_verdict.within_bound, "lifted_sequence_within_4");
        const std::string name = "lifted_colorability_matches_base";
        if (auto oracle = colorability(lifted, k, budget, checks, name)) {
            report["lifted"]["k_colorable"] = oracle->colorable;
            if (base_colorable)
                checks.expect(oracle->colorable == *base_colorable, name);
            else
                checks.expect(oracle->colorable == solution.has_value(), name);
        }
    }
    report["verdicts"] = verdicts;
}

}  // namespace

RunResult dispatch(const std::vector<std::string> &args) {
    const auto start = std::chrono::steady_clock::now();
    RunResult result;
    json &report = result.report;
    {
        std::string echo;
        for (const auto &a : args)
            echo += (echo.empty() ? "" : " ") + a;
        report["command"] = echo;
    }

    CLI::App app{"Twin-width coloring reductions: build, certify, and cross-check with exact oracles."};
    app.require_subcommand(1);

    std::string cnf_path, graph_path, seq_path, graph_out, seq_out, roles_out, coloring_out, assignment_out;
    std::optional<std::size_t> budget_flag;
    std::optional<int> k_flag;
    int k_lift = 3;
    std::size_t max_width = 0;

    auto *reduce = app.add_subcommand("reduce", "Build a reduction graph and its contraction sequence");
    reduce->require_subcommand(1);
    auto *red_mincol = reduce->add_subcommand("mincol", "3-SAT -> min-coloring, width-3 sequence");
    auto *red_3col = reduce->add_subcommand("3col", "NAE-3-SAT -> 3-coloring, width-4 sequence");
    for (auto *sub : {red_mincol, red_3col}) {
        sub->add_option("cnf", cnf_path, "DIMACS CNF input")->required();
        sub->add_option("--graph", graph_out, "Write the graph (tgf)");
        sub->add_option("--sequence", seq_out, "Write the contraction sequence (seq)");
        sub->add_option("--roles", roles_out, "Write vertex roles");
    }
    red_3col->add_option("--k", k_lift, "Add k-3 universal vertices")->check(CLI::PositiveNumber);

    auto *verify = app.add_subcommand("verify-sequence", "Check a sequence against a width bound");
    verify->add_option("graph", graph_path, "Trigraph (tgf)")->required();
    verify->add_option("sequence", seq_path, "Sequence (seq)")->required();
    verify->add_option("--max-width", max_width, "Width bound d")->required();

    auto *tww = app.add_subcommand("tww-exact", "Exact twin-width of a small trigraph");
    tww->add_option("graph", graph_path, "Trigraph (tgf)")->required();
    tww->add_option("--sequence", seq_out, "Write an optimal sequence");
    tww->add_option("--budget", budget_flag, "Node budget");

    auto *chrom = app.add_subcommand("chromatic", "Exact chromatic number, or k-colorability with --k");
    chrom->add_option("graph", graph_path, "Graph (tgf)")->required();
    chrom->add_option("--k", k_flag, "Decide k-colorability only");
    chrom->add_option("--coloring", coloring_out, "Write the witness coloring");
    chrom->add_option("--budget", budget_flag, "Node budget");

    auto *sat = app.add_subcommand("sat", "Smallest satisfying assignment of a 3-SAT formula");
    auto *nae = app.add_subcommand("nae", "Smallest NAE-satisfying assignment");
    for (auto *sub : {sat, nae}) {
        sub->add_option("cnf", cnf_path, "DIMACS CNF input")->required();
        sub->add_option("--assignment", assignment_out, "Write the assignment");
    }

    auto *rt = app.add_subcommand("roundtrip", "Run the whole pipeline and cross-check every step");
    bool rt_mincol = false, rt_3col = false;
    std::vector<int> random_nm;
    std::uint64_t seed = 1;
    auto *opt_mincol = rt->add_flag("--mincol", rt_mincol, "Min-coloring reduction");
    auto *opt_3col = rt->add_flag("--3col", rt_3col, "3-coloring reduction");
    opt_mincol->excludes(opt_3col);
    auto *opt_cnf = rt->add_option("cnf", cnf_path, "DIMACS CNF input");
    auto *opt_random = rt->add_option("--random", random_nm, "Random formula with N variables, M clauses")
                           ->expected(2);
    opt_cnf->excludes(opt_random);
    rt->add_option("--seed", seed, "Seed for --random");
    rt->add_option("--k", k_lift, "Also check the k-coloring lift (3col only)");
    rt->add_option("--budget", budget_flag, "Oracle node budget");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (*rt && !rt_mincol && !rt_3col)
            throw CLI::ValidationError("roundtrip", "one of --mincol or --3col is required");
        if (*rt && cnf_path.empty() && random_nm.empty())
            throw CLI::ValidationError("roundtrip", "give a CNF file or --random N M");
    } catch (const CLI::ParseError &e) {
        std::ostringstream out, err;
        int code = app.exit(e, out, err);
        if (code == 0) {
            result.help = out.str();
            result.exit_code = kExitOk;
        } else {
            report["error"] = {{"kind", "usage"}, {"message", e.what()}};
            result.exit_code = kExitUsage;
        }
        return result;
    }

    Checks checks;
    try {
        const std::size_t budget = resolve_budget(budget_flag);
        if (*red_mincol) {
            const CnfFormula f = load_cnf(cnf_path, Dialect::ThreeSat);
            const MinColInstance inst = build_mincol(f);
            const PartitionSequence seq = build_mincol_3sequence(inst);
            const SequenceVerdict v = verify_d_sequence(inst.graph, seq, 3);
            report["instance"] = formula_stats(f, inst.graph);
            report["width"] = width_report(v.profile, 3, seq.steps().size());
            checks.expect(v.within_bound, "sequence_within_3");
            write_outputs(inst.graph, seq, graph_out, seq_out, roles_out, report);
        } else if (*red_3col) {
            const CnfFormula f = load_cnf(cnf_path, Dialect::NaeThreeSat);
            const ThreeColInstance inst = build_3col(f);
            const Trigraph g = lift_to_k(inst, k_lift);
            const PartitionSequence seq = lift_4sequence(inst, k_lift);
            const SequenceVerdict v = verify_d_sequence(g, seq, 4);
            report["instance"] = formula_stats(f, g);
            report["instance"]["subdivisions"] = inst.subdivisions.size();
            report["instance"]["k"] = k_lift;
            report["width"] = width_report(v.profile, 4, seq.steps().size());
            checks.expect(v.within_bound, "sequence_within_4");
            write_outputs(g, seq, graph_out, seq_out, roles_out, report);
        } else if (*verify) {
            const Trigraph g = load_graph(graph_path);
            std::istringstream is(io::slurp(seq_path));
            const PartitionSequence seq = io::read_sequence(is);
            const SequenceVerdict v = verify_d_sequence(g, seq, max_width);
            report["instance"] = graph_stats(g);
            report["width"] = width_report(v.profile, max_width, seq.steps().size());
            report["width"]["per_step"] = v.profile.per_step_width;
            checks.expect(v.within_bound, "sequence_within_bound",
                          "width " + std::to_string(v.profile.overall_width) + ", bound " +
                              std::to_string(max_width));
        } else if (*tww) {
            const Trigraph g = load_graph(graph_path);
            report["instance"] = graph_stats(g);
            try {
                const TwinWidthResult r = exact_twinwidth(g, budget);
                const SequenceVerdict v = verify_d_sequence(g, r.witness, r.width);
                report["verdicts"] = {{"twin_width", r.width}, {"nodes", r.nodes}};
                checks.expect(v.within_bound, "witness_verifies");
                if (!seq_out.empty())
                    io::dump(seq_out, io::to_text(r.witness));
            } catch (const BudgetExceeded &e) {
                report["verdicts"] = {{"lower_bound", e.lower_bound()}, {"upper_bound", e.upper_bound()}};
                checks.fail("oracle_completed", e.what());
            }
        } else if (*chrom) {
            const Trigraph g = load_graph(graph_path);
            report["instance"] = graph_stats(g);
            try {
                std::optional<Coloring> witness;
                if (k_flag) {
                    const ColorabilityResult r = is_k_colorable(g, *k_flag, budget);
                    report["verdicts"] = {{"k", *k_flag}, {"colorable", r.colorable}, {"nodes", r.nodes}};
                    witness = r.witness;
                } else {
                    const ChromaticResult r = chromatic_number(g, budget);
                    report["verdicts"] = {{"chromatic_number", r.chromatic_number}, {"nodes", r.nodes}};
                    witness = r.witness;
                }
                if (witness) {
                    checks.expect(is_proper(g, *witness), "witness_proper");
                    if (!coloring_out.empty())
                        io::dump(coloring_out, io::to_text(*witness));
                }
            } catch (const BudgetExceeded &e) {
                report["verdicts"] = {{"lower_bound", e.lower_bound()}, {"upper_bound", e.upper_bound()}};
                checks.fail("oracle_completed", e.what());
            }
        } else if (*sat || *nae) {
            const Dialect d = *sat ? Dialect::ThreeSat : Dialect::NaeThreeSat;
            const CnfFormula f = load_cnf(cnf_path, d);
            const auto a = *sat ? solve_sat(f) : solve_nae(f);
            report["instance"] = {{"n", f.var_count()}, {"m", f.clause_count()}};
            report["verdicts"] = {{"satisfiable", a.has_value()}};
            if (a) {
                report["verdicts"]["assignment"] = assignment_json(*a);
                checks.expect(*sat ? f.satisfied_by(*a) : f.nae_satisfied_by(*a), "witness_satisfies");
                if (!assignment_out.empty())
                    io::dump(assignment_out, io::to_text(*a));
            }
        } else if (*rt) {
            const Dialect d = rt_mincol ? Dialect::ThreeSat : Dialect::NaeThreeSat;
            std::optional<CnfFormula> f;
            if (!random_nm.empty()) {
                f = random_formula(random_nm[0], random_nm[1], d, seed);
                report["seed"] = seed;
                report["formula"] = io::to_dimacs(*f);
            } else {
                f = load_cnf(cnf_path, d);
            }
            if (rt_mincol)
                roundtrip_mincol(*f, budget, report, checks);
            else
                roundtrip_3col(*f, k_lift, budget, report, checks);
        }
    } catch (const StructureError &e) {
        checks.fail("structure", e.what());
    } catch (const Error &e) {
        report["error"] = {{"kind", "input"}, {"message", e.what()}};
        result.exit_code = kExitUsage;
    }

    report["checks"] = checks.list();
    if (result.exit_code == kExitOk && checks.failed()) {
        result.exit_code = kExitCheckFailed;
        for (const auto &c : checks.list())
            if (c["status"] == "fail") {
                report["failed_check"] = c["name"];
                break;
            }
    }
    report["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace twwcol::cli
