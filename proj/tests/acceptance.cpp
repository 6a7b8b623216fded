// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "twwcol/errors.hpp"
#include "twwcol/generate.hpp"
#include "twwcol/mincol.hpp"
#include "twwcol/oracles.hpp"
#include "twwcol/threecol.hpp"

using namespace twwcol;
using namespace twwcol::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Failures {
    std::size_t count = 0;
    std::string first;

    void add(const std::string &what) {
        if (count++ == 0)
            first = what;
    }
    bool ok() const { return count == 0; }
    std::string summary() const { return ok() ? "" : "; " + std::to_string(count) + " failures, first: " + first; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// Formula corpora.

// Literal code 2(v-1) + (negative ? 1 : 0).
using Code = int;
using CodedClause = std::array<Code, 3>;
using CodedFormula = std::vector<CodedClause>;

CodedFormula canonical(CodedFormula f) {
    for (auto &c : f)
        std::sort(c.begin(), c.end());
    std::sort(f.begin(), f.end());
    return f;
}

// Smallest image under variable permutations and sign flips.
CodedFormula symmetry_min(const CodedFormula &f, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    CodedFormula best;
    bool first = true;
    do {
        for (int flips = 0; flips < (1 << n); ++flips) {
            CodedFormula g = f;
            for (auto &c : g)
                for (Code &lit : c) {
                    int v = lit / 2, s = lit % 2;
                    lit = 2 * perm[static_cast<std::size_t>(v)] + (s ^ (flips >> v & 1));
                }
            g = canonical(std::move(g));
            if (first || g < best) {
                best = std::move(g);
                first = false;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

CnfFormula decode(const CodedFormula &f, int n, Dialect d) {
    std::vector<Clause> clauses;
    for (const auto &c : f) {
        Clause out;
        for (std::size_t t = 0; t < 3; ++t)
            out[t] = Literal{c[t] / 2 + 1, c[t] % 2 == 0};
        clauses.push_back(out);
    }
    return CnfFormula::make(n, clauses, d);
}

// Every formula with n variables (all used) and 1..max_m distinct clauses,
// one representative per symmetry class. Clauses never hold a literal and
// its negation.
std::vector<CnfFormula> exhaustive_corpus(int n, int max_m, Dialect d) {
    std::vector<CodedClause> pool;
    int lits = 2 * n;
    for (int a = 0; a < lits; ++a)
        for (int b = a; b < lits; ++b)
            for (int c = b; c < lits; ++c) {
                bool same_var = a / 2 == b / 2 || b / 2 == c / 2 || a / 2 == c / 2;
                if (d == Dialect::NaeThreeSat && same_var)
                    continue;
                // Literal codes are sorted, so a variable's two signs are adjacent.
                bool complementary = (a / 2 == b / 2 && a != b) || (b / 2 == c / 2 && b != c) ||
                                     (a / 2 == c / 2 && a != c);
                if (complementary)
                    continue;
                pool.push_back({a, b, c});
            }

    std::set<CodedFormula> seen;
    std::vector<CnfFormula> out;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!pick.empty()) {
            CodedFormula f;
            std::vector<bool> used(static_cast<std::size_t>(n), false);
            for (std::size_t k : pick) {
                f.push_back(pool[k]);
                for (Code lit : pool[k])
                    used[static_cast<std::size_t>(lit / 2)] = true;
            }
            if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) {
                auto key = symmetry_min(f, n);
                if (seen.insert(key).second)
                    out.push_back(decode(key, n, d));
            }
        }
        if (pick.size() == static_cast<std::size_t>(max_m))
            return;
        for (std::size_t k = start; k < pool.size(); ++k) {
            pick.push_back(k);
            rec(k + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<CnfFormula> random_corpus(std::size_t count, int n_lo, int n_hi, int m_lo, int m_hi, Dialect d,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CnfFormula> out;
    while (out.size() < count) {
        int n = std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
        int m = std::uniform_int_distribution<int>(m_lo, m_hi)(rng);
        if (3 * m < n || (d == Dialect::NaeThreeSat && n < 3))
            continue;
        out.push_back(random_formula(n, m, d, rng));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fixtures.

const SubdivisionSet kSevenVarSubdivisions{{1, 4}, {2, 3}, {2, 6}, {3, 3}, {4, 5},
                                       {4, 6}, {5, 5}, {5, 7}, {6, 4}, {6, 6}};

// Occurrence colors on the variable paths of the 7-variable instance under
// "all true except x4"; rows are variables, columns clause indices.
const int kDrawnPath[7][8] = {
    {1, 2, 1, 1, 2, 1, 2, 1}, {2, 1, 1, 2, 1, 1, 2, 1}, {1, 2, 2, 1, 2, 1, 2, 1}, {1, 2, 1, 2, 2, 2, 1, 2},
    {2, 1, 2, 1, 1, 2, 2, 1}, {1, 2, 1, 1, 2, 2, 1, 2}, {1, 2, 1, 2, 1, 2, 1, 2},
};

// Subdivision rule read directly off the parity conditions.
SubdivisionSet subdivisions_by_rule(const CnfFormula &f) {
    SubdivisionSet out;
    for (int i = 1; i <= f.var_count(); ++i) {
        int last_j = 0;
        bool last_sign = false;
        for (std::size_t j = 1; j <= f.clause_count(); ++j)
            for (const Literal &lit : f.clause(j))
                if (lit.var == i) {
                    int jj = static_cast<int>(j);
                    if (last_j != 0) {
                        bool even = (jj - last_j) % 2 == 0;
                        bool same = lit.positive == last_sign;
                        if ((even && !same) || (!even && same))
                            out.insert({i, jj});
                    }
                    last_j = jj;
                    last_sign = lit.positive;
                }
    }
    return out;
}

// Random cograph on at most max_n vertices from a random cotree.
Trigraph random_cograph(std::size_t max_n, std::mt19937_64 &rng) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
    std::vector<std::vector<VertexId>> groups;
    for (VertexId v = 0; v < n; ++v)
        groups.push_back({v});
    std::vector<Edge> edges;
    std::bernoulli_distribution join(0.5);
    while (groups.size() > 1) {
        std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j)
            continue;
        if (join(rng))
            for (VertexId u : groups[i])
                for (VertexId v : groups[j])
                    edges.emplace_back(u, v);
        groups[i].insert(groups[i].end(), groups[j].begin(), groups[j].end());
        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(j));
    }
    return make_trigraph(n, edges);
}

// ---------------------------------------------------------------------------
// Criteria.

Outcome ac1() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1);
    Failures fail;
    std::size_t prefixes = 0;
    for (std::uint64_t mask = 0; mask < mask_count(5); ++mask) {
        auto g = graph_from_mask(5, mask);
        for (int s = 0; s < 50; ++s) {
            auto seq = random_sequence(5, 4, rng);
            ContractionState st(g);
            auto prof = replay(g, seq);
            std::size_t overall = max_red_degree(g);
            for (std::size_t k = 0; k < seq.steps().size(); ++k) {
                st.merge(seq.steps()[k].a, seq.steps()[k].b);
                auto parts = parts_after(seq, k + 1);
                auto scratch = quotient(g, Partition::make(5, parts));
                ++prefixes;
                if (!(st.quotient() == scratch) || !(scratch == reference_quotient(g, parts)))
                    fail.add("mask " + std::to_string(mask) + " step " + std::to_string(k + 1));
                std::size_t w = max_red_degree(scratch);
                if (prof.per_step_width[k] != w)
                    fail.add("width mismatch at mask " + std::to_string(mask));
                overall = std::max(overall, w);
            }
            if (prof.overall_width != overall)
                fail.add("overall width mismatch at mask " + std::to_string(mask));
        }
    }
    double secs = seconds_since(t0);
    bool fast = secs < 120.0;
    return {fail.ok() && fast, "1024 graphs x 50 sequences, " + std::to_string(prefixes) + " prefixes, " +
                                   std::to_string(fail.count) + " mismatches, " + std::to_string(secs) + "s" +
                                   (fast ? "" : " (over 120s)") + fail.summary()};
}

const std::vector<CnfFormula> &mincol_random() {
    static const auto corpus = random_corpus(200, 2, 6, 1, 8, Dialect::ThreeSat, 2);
    return corpus;
}

Outcome ac2() {
    Failures fail;
    for (const auto &f : mincol_random()) {
        int n = f.var_count(), m = static_cast<int>(f.clause_count());
        auto inst = build_mincol(f);
        std::size_t expect = static_cast<std::size_t>((4 * n + 1) * (2 * n + m));
        if (inst.graph.size() != expect)
            fail.add(f.to_string());
    }
    return {fail.ok(), std::to_string(mincol_random().size()) + " formulas, N = (4n+1)(2n+m) on all" + fail.summary()};
}

Outcome ac3() {
    Failures fail;
    for (const auto &f : mincol_random()) {
        auto inst = build_mincol(f);
        auto seq = build_mincol_3sequence(inst);
        if (!seq.is_full() || !verify_d_sequence(inst.graph, seq, 3).within_bound)
            fail.add(f.to_string());
    }
    auto two_clause = build_mincol(two_clause_formula());
    auto prof = replay(two_clause.graph, build_mincol_3sequence(two_clause));
    if (prof.overall_width != 3)
        fail.add("two-clause example width " + std::to_string(prof.overall_width));
    return {fail.ok(), "200 sequences within 3; two-clause example peaks at " + std::to_string(prof.overall_width) +
                           " (step " + std::to_string(prof.peak_step()) + ")" + fail.summary()};
}

struct MincolCorpus {
    std::vector<CnfFormula> formulas;
    std::size_t exhaustive = 0;
};

const MincolCorpus &mincol_equivalence_corpus() {
    static const MincolCorpus corpus = [] {
        MincolCorpus c;
        for (int n : {2, 3})
            for (auto &f : exhaustive_corpus(n, 3, Dialect::ThreeSat))
                c.formulas.push_back(std::move(f));
        c.exhaustive = c.formulas.size();
        for (auto &f : random_corpus(100, 2, 3, 1, 3, Dialect::ThreeSat, 4))
            c.formulas.push_back(std::move(f));
        return c;
    }();
    return corpus;
}

Outcome ac4() {
    const auto &corpus = mincol_equivalence_corpus();
    Failures fail;
    std::size_t sat = 0, unsat = 0, nodes = 0;
    for (const auto &f : corpus.formulas) {
        auto sol = solve_sat(f);
        if (sol != first_satisfying(f, false))
            fail.add("solver disagrees with enumeration on " + f.to_string());
        auto inst = build_mincol(f);
        try {
            auto r = is_k_colorable(inst.graph, 2 * f.var_count());
            nodes += r.nodes;
            if (r.colorable != sol.has_value())
                fail.add("verdict mismatch on " + f.to_string());
            (sol ? sat : unsat)++;
        } catch (const BudgetExceeded &) {
            fail.add("budget exceeded on " + f.to_string());
        }
    }
    int chi = -1;
    try {
        chi = chromatic_number(build_mincol(two_clause_formula()).graph).chromatic_number;
    } catch (const BudgetExceeded &) {
    }
    if (chi != 6)
        fail.add("chromatic number of the two-clause example is " + std::to_string(chi));
    return {fail.ok(), std::to_string(corpus.exhaustive) + " symmetry classes + " +
                           std::to_string(corpus.formulas.size() - corpus.exhaustive) + " random; " +
                           std::to_string(sat) + " sat, " + std::to_string(unsat) + " unsat, " +
                           std::to_string(nodes) + " search nodes; chi(two-clause example) = " +
                           std::to_string(chi) + fail.summary()};
}

Outcome ac5() {
    Failures fail;
    std::size_t checked = 0;
    for (const auto &f : mincol_equivalence_corpus().formulas) {
        if (!solve_sat(f))
            continue;
        auto inst = build_mincol(f);
        for (const Assignment &a : all_assignments(f.var_count())) {
            if (!f.satisfied_by(a))
                continue;
            ++checked;
            auto c = mincol_coloring_from_assignment(inst, a);
            if (!is_proper(inst.graph, c) || c.colors_used() != 2 * f.var_count())
                fail.add("forward coloring on " + f.to_string());
            else if (!f.satisfied_by(mincol_assignment_from_coloring(inst, c)))
                fail.add("backward assignment on " + f.to_string());
        }
    }
    return {fail.ok(), std::to_string(checked) + " (formula, satisfying assignment) pairs" + fail.summary()};
}

const std::vector<CnfFormula> &threecol_random() {
    static const auto corpus = random_corpus(200, 1, 7, 1, 8, Dialect::NaeThreeSat, 6);
    return corpus;
}

Outcome ac6() {
    Failures fail;
    for (const auto &f : threecol_random()) {
        int n = f.var_count(), m = static_cast<int>(f.clause_count());
        auto inst = build_3col(f);
        if (inst.graph.size() > static_cast<std::size_t>(3 * m + (2 * m - 1) * n + 1))
            fail.add(f.to_string());
        if (inst.subdivisions != subdivisions_by_rule(f))
            fail.add("subdivisions of " + f.to_string());
    }
    auto seven_var = build_3col(seven_var_formula());
    auto rule = subdivisions_by_rule(seven_var_formula());
    if (seven_var.graph.size() != 91)
        fail.add("seven-variable example has " + std::to_string(seven_var.graph.size()) + " vertices");
    if (rule != kSevenVarSubdivisions || seven_var.subdivisions != kSevenVarSubdivisions)
        fail.add("seven-variable example subdivision set");
    return {fail.ok(), "200 formulas within 3m+(2m-1)n+1; seven-variable example N = " +
                           std::to_string(seven_var.graph.size()) + ", " + std::to_string(seven_var.subdivisions.size()) +
                           " subdivisions match fixture" + fail.summary()};
}

Outcome ac7() {
    Failures fail;
    for (const auto &f : threecol_random()) {
        auto inst = build_3col(f);
        auto seq = build_3col_4sequence(inst);
        if (!seq.is_full() || !verify_d_sequence(inst.graph, seq, 4).within_bound)
            fail.add(f.to_string());
    }
    auto seven_var = build_3col(seven_var_formula());
    auto prof = replay(seven_var.graph, build_3col_4sequence(seven_var));
    if (prof.overall_width != 4)
        fail.add("seven-variable example width " + std::to_string(prof.overall_width));
    return {fail.ok(), "200 sequences within 4; seven-variable example peaks at " +
                           std::to_string(prof.overall_width) + " (step " + std::to_string(prof.peak_step()) + ")" +
                           fail.summary()};
}

struct NaeCorpus {
    std::vector<CnfFormula> formulas;
    std::size_t exhaustive = 0;
};

const NaeCorpus &nae_equivalence_corpus() {
    static const NaeCorpus corpus = [] {
        NaeCorpus c;
        for (auto &f : exhaustive_corpus(3, 5, Dialect::NaeThreeSat))
            c.formulas.push_back(std::move(f));
        for (auto &f : exhaustive_corpus(4, 3, Dialect::NaeThreeSat))
            c.formulas.push_back(std::move(f));
        c.exhaustive = c.formulas.size();
        for (auto &f : random_corpus(300, 3, 5, 1, 5, Dialect::NaeThreeSat, 8))
            c.formulas.push_back(std::move(f));
        c.formulas.push_back(seven_var_formula());
        return c;
    }();
    return corpus;
}

Outcome ac8() {
    const auto &corpus = nae_equivalence_corpus();
    Failures fail;
    std::size_t sat = 0, unsat = 0;
    for (const auto &f : corpus.formulas) {
        auto sol = solve_nae(f);
        if (sol != first_satisfying(f, true))
            fail.add("solver disagrees with enumeration on " + f.to_string());
        auto inst = build_3col(f);
        try {
            auto r = is_k_colorable(inst.graph, 3);
            if (r.colorable != sol.has_value())
                fail.add("verdict mismatch on " + f.to_string());
            if (r.colorable && !f.nae_satisfied_by(threecol_assignment_from_coloring(inst, *r.witness)))
                fail.add("oracle coloring maps to a non-witness on " + f.to_string());
            (sol ? sat : unsat)++;
        } catch (const BudgetExceeded &) {
            fail.add("budget exceeded on " + f.to_string());
        }
    }

    auto seven_var = build_3col(seven_var_formula());
    Assignment a({true, true, true, false, true, true, true});
    auto c = threecol_coloring_from_assignment(seven_var, a);
    bool pattern = is_proper(seven_var.graph, c);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 8; ++j)
            pattern = pattern && c[seven_var.x(i, j)] == kDrawnPath[i - 1][j - 1];
    if (!pattern)
        fail.add("drawn path pattern not reproduced");
    if (!is_k_colorable(seven_var.graph, 3).colorable)
        fail.add("seven-variable example not 3-colorable");
    return {fail.ok(), std::to_string(corpus.exhaustive) + " symmetry classes + " +
                           std::to_string(corpus.formulas.size() - corpus.exhaustive) + " others; " +
                           std::to_string(sat) + " sat, " + std::to_string(unsat) +
                           " unsat; drawn pattern reproduced on all 56 occurrences" + fail.summary()};
}

Outcome ac9() {
    Failures fail;
    std::size_t paths = 0, pairs = 0;
    auto check = [&](const CnfFormula &f) {
        auto inst = build_3col(f);
        for (int i = 1; i <= f.var_count(); ++i) {
            const auto &path = inst.path(i);
            std::map<VertexId, std::size_t> at;
            for (std::size_t k = 0; k < path.size(); ++k)
                at[path[k]] = k;
            std::vector<std::pair<std::size_t, bool>> occ;
            for (std::size_t j = 1; j <= f.clause_count(); ++j)
                for (const Literal &lit : f.clause(j))
                    if (lit.var == i)
                        occ.emplace_back(at.at(inst.x(i, static_cast<int>(j))), lit.positive);
            ++paths;
            for (int start : {1, 2})
                for (std::size_t x = 0; x < occ.size(); ++x)
                    for (std::size_t y = x + 1; y < occ.size(); ++y) {
                        int cx = occ[x].first % 2 == 0 ? start : 3 - start;
                        int cy = occ[y].first % 2 == 0 ? start : 3 - start;
                        ++pairs;
                        if ((cx == cy) != (occ[x].second == occ[y].second))
                            fail.add("variable " + std::to_string(i) + " of " + f.to_string());
                    }
        }
    };
    for (const auto &f : threecol_random())
        check(f);
    for (const auto &f : nae_equivalence_corpus().formulas)
        check(f);
    return {fail.ok(), std::to_string(paths) + " paths, " + std::to_string(pairs) + " occurrence pairs" +
                           fail.summary()};
}

Outcome ac10() {
    std::vector<CnfFormula> base;
    // Three NAE-unsatisfiable instances: all four sign classes on x1, x2, x3,
    // padded by extra clauses.
    std::vector<Clause> four;
    for (int s : {0, 1, 2, 4})
        four.push_back({Literal{1, (s & 1) != 0}, Literal{2, (s & 2) != 0}, Literal{3, (s & 4) != 0}});
    base.push_back(CnfFormula::make(3, four, Dialect::NaeThreeSat));
    auto with4 = four;
    with4.push_back({pos(1), neg(3), pos(4)});
    base.push_back(CnfFormula::make(4, with4, Dialect::NaeThreeSat));
    auto with5 = with4;
    with5.push_back({neg(2), pos(4), pos(5)});
    base.push_back(CnfFormula::make(5, with5, Dialect::NaeThreeSat));
    for (auto &f : random_corpus(17, 3, 5, 2, 5, Dialect::NaeThreeSat, 10))
        base.push_back(std::move(f));

    Failures fail;
    std::size_t colorable = 0;
    for (const auto &f : base) {
        auto inst = build_3col(f);
        bool three = is_k_colorable(inst.graph, 3).colorable;
        colorable += three;
        for (int k : {4, 5}) {
            auto g = lift_to_k(inst, k);
            if (g.size() != inst.graph.size() + static_cast<std::size_t>(k - 3))
                fail.add("lift size on " + f.to_string());
            if (is_k_colorable(g, k).colorable != three)
                fail.add("k=" + std::to_string(k) + " verdict on " + f.to_string());
            auto seq = lift_4sequence(inst, k);
            if (!seq.is_full() || !verify_d_sequence(g, seq, 4).within_bound)
                fail.add("k=" + std::to_string(k) + " sequence on " + f.to_string());
        }
    }
    return {fail.ok(), std::to_string(base.size()) + " instances (" + std::to_string(colorable) +
                           " 3-colorable) x k in {4,5}" + fail.summary()};
}

Outcome ac11() {
    Failures fail;
    std::size_t runs = 0;
    auto exact = [&](const Trigraph &g) {
        auto r = exact_twinwidth(g);
        ++runs;
        if (!r.witness.is_full() || !verify_d_sequence(g, r.witness, r.width).within_bound)
            fail.add("witness does not re-verify");
        return r.width;
    };

    std::mt19937_64 rng(12);
    std::vector<Trigraph> cographs{complete_graph(4), make_trigraph(4, std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}})};
    for (int t = 0; t < 300; ++t)
        cographs.push_back(random_cograph(8, rng));
    for (const auto &g : cographs)
        if (exact(g) != 0)
            fail.add("cograph with nonzero width");
    std::size_t p4 = exact(path_graph(4));
    if (p4 != 1)
        fail.add("P4 width " + std::to_string(p4));

    std::size_t redify_graphs = 0;
    for (std::uint64_t mask = 0; mask < mask_count(5); ++mask) {
        auto g = graph_from_mask(5, mask);
        if (exact(redify(g)) < exact(g))
            fail.add("redify lowered width on mask " + std::to_string(mask));
        ++redify_graphs;
    }
    return {fail.ok(), std::to_string(cographs.size()) + " cographs at width 0, P4 at " + std::to_string(p4) + ", " +
                           std::to_string(redify_graphs) + " 5-vertex graphs monotone, " + std::to_string(runs) +
                           " witnesses re-verified" + fail.summary()};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"incremental quotient equals from-scratch quotient", ac1},
        {"min-coloring instance size law", ac2},
        {"min-coloring 3-sequence certificate", ac3},
        {"min-coloring equivalence with satisfiability", ac4},
        {"min-coloring solution round trip", ac5},
        {"3-coloring instance size bound and subdivisions", ac6},
        {"3-coloring 4-sequence certificate", ac7},
        {"3-coloring equivalence with NAE satisfiability", ac8},
        {"variable path parity", ac9},
        {"k-coloring lift", ac10},
        {"exact twin-width sanity", ac11},
    };
    int failed = 0;
    auto start = std::chrono::steady_clock::now();
    int index = 0;
    for (const auto &c : criteria) {
        ++index;
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception &e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        failed += !out.pass;
        std::printf("AC%-2d %s  %s: %s [%.1fs]\n", index, out.pass ? "PASS" : "FAIL", c.name, out.detail.c_str(),
                    seconds_since(t0));
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed in %.1fs\n", index - failed, index, seconds_since(start));
    return failed == 0 ? 0 : 1;
}
