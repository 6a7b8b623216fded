#include "twwcol/mincol.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "twwcol/errors.hpp"

namespace twwcol {

namespace {

// Column of the A-side vertex that a literal's clause gadget attaches to:
// 2j-1 for a positive literal on x_j, 2j for a negative one.
int attached_column(const Literal &lit) { return 2 * lit.var - (lit.positive ? 1 : 0); }

}  // namespace

MinColInstance build_mincol(const CnfFormula &f) {
    if (f.dialect() != Dialect::ThreeSat)
        throw DialectError("min-coloring reduction takes a 3-SAT formula");
    if (f.var_count() < 2)
        throw TooFewVariablesError("min-coloring reduction needs at least 2 variables, got " +
                                   std::to_string(f.var_count()));
    for (std::size_t j = 1; j <= f.clause_count(); ++j)
        for (const Literal &x : f.clause(j))
            for (const Literal &y : f.clause(j))
                if (x.var == y.var && x.positive != y.positive)
                    throw DialectError("clause " + std::to_string(j) + " contains x" + std::to_string(x.var) +
                                       " and its negation; drop tautological clauses first");

    MinColInstance inst{f, f.var_count(), static_cast<int>(f.clause_count()), 0, {}, 0};
    inst.p = 2 * inst.n + inst.m;
    inst.color_budget = 2 * inst.n;
    const int n = inst.n, p = inst.p, width = 2 * n;
    const std::size_t path_len = static_cast<std::size_t>(width) * static_cast<std::size_t>(p);

    std::vector<Edge> edges;
    // A and B are the (2n-1)-th powers of paths on 2np vertices.
    for (VertexId offset : {inst.a(1, 1), inst.b(1, 1)})
        for (std::size_t t = 0; t < path_len; ++t)
            for (std::size_t s = t + 1; s < path_len && s - t <= static_cast<std::size_t>(width - 1); ++s)
                edges.emplace_back(static_cast<VertexId>(offset + t), static_cast<VertexId>(offset + s));

    auto attach_block_except = [&](int i, std::vector<VertexId> skip) {
        std::sort(skip.begin(), skip.end());
        for (int j = 1; j <= width; ++j)
            for (VertexId x : {inst.a(i, j), inst.b(i, j)})
                if (!std::binary_search(skip.begin(), skip.end(), x))
                    edges.emplace_back(inst.v(i), x);
    };

    // Variable gadgets.
    for (int i = 1; i <= n; ++i) {
        int odd = 2 * i - 1, even = 2 * i;
        attach_block_except(odd, {inst.a(odd, 2 * i - 1), inst.a(odd, 2 * i), inst.b(odd, 2 * i - 1)});
        attach_block_except(even, {inst.a(even, 2 * i - 1), inst.a(even, 2 * i), inst.b(even, 2 * i)});
    }

    // Clause gadgets.
    for (int c = 1; c <= inst.m; ++c) {
        const int i = 2 * n + c;
        const Clause &clause = f.clause(static_cast<std::size_t>(c));
        std::vector<int> missing;
        for (const Literal &lit : clause)
            missing.push_back(2 * lit.var);
        for (int j = 1; j <= width; ++j)
            if (std::find(missing.begin(), missing.end(), j) == missing.end())
                edges.emplace_back(inst.v(i), inst.b(i, j));
        for (const Literal &lit : clause)
            edges.emplace_back(inst.v(i), inst.a(i, attached_column(lit)));
    }

    std::vector<VertexRole> roles(inst.vertex_count());
    for (int i = 1; i <= p; ++i) {
        for (int j = 1; j <= width; ++j) {
            roles[inst.a(i, j)] = VertexRole::a(i, j);
            roles[inst.b(i, j)] = VertexRole::b(i, j);
        }
        roles[inst.v(i)] = VertexRole::v(i);
    }
    inst.graph = Trigraph::make(inst.vertex_count(), edges, {}).with_roles(std::move(roles));
    return inst;
}

namespace {

std::vector<std::pair<VertexId, VertexId>> stage1_merges(const MinColInstance &inst) {
    std::vector<std::pair<VertexId, VertexId>> merges;
    for (int j = 2; j <= 2 * inst.n; ++j)
        for (int i = 1; i <= inst.p; ++i) {
            merges.emplace_back(inst.a(i, 1), inst.a(i, j));
            merges.emplace_back(inst.b(i, 1), inst.b(i, j));
        }
    return merges;
}

}  // namespace

PartitionSequence build_mincol_stage1(const MinColInstance &inst) {
    return sequence_from_vertex_merges(inst.vertex_count(), stage1_merges(inst));
}

PartitionSequence build_mincol_3sequence(const MinColInstance &inst) {
    auto merges = stage1_merges(inst);
    for (int i = 2; i <= inst.p; ++i) {
        merges.emplace_back(inst.a(1, 1), inst.a(i, 1));
        merges.emplace_back(inst.b(1, 1), inst.b(i, 1));
        merges.emplace_back(inst.v(1), inst.v(i));
    }
    merges.emplace_back(inst.a(1, 1), inst.b(1, 1));
    merges.emplace_back(inst.a(1, 1), inst.v(1));
    return sequence_from_vertex_merges(inst.vertex_count(), merges);
}

Coloring mincol_coloring_from_assignment(const MinColInstance &inst, const Assignment &a) {
    if (a.var_count() != static_cast<std::size_t>(inst.n))
        throw RangeError("assignment has " + std::to_string(a.var_count()) + " variables, formula has " +
                         std::to_string(inst.n));
    if (!inst.formula.satisfied_by(a))
        throw NotSatisfyingError("assignment does not satisfy the formula");

    Coloring col{std::vector<int>(inst.vertex_count(), 0), inst.color_budget};
    for (int i = 1; i <= inst.p; ++i) {
        for (int j = 1; j <= 2 * inst.n; ++j)
            col.colors[inst.b(i, j)] = j;
        for (int j = 1; j <= inst.n; ++j) {
            bool t = a[j];
            col.colors[inst.a(i, 2 * j - 1)] = t ? 2 * j - 1 : 2 * j;
            col.colors[inst.a(i, 2 * j)] = t ? 2 * j : 2 * j - 1;
        }
    }
    for (int i = 1; i <= 2 * inst.n; ++i)
        col.colors[inst.v(i)] = i;
    for (int c = 1; c <= inst.m; ++c) {
        const Clause &clause = inst.formula.clause(static_cast<std::size_t>(c));
        auto h = std::find_if(clause.begin(), clause.end(), [&](const Literal &l) { return a.satisfies(l); });
        col.colors[inst.v(2 * inst.n + c)] = 2 * h->var;
    }
    return col;
}

Assignment mincol_assignment_from_coloring(const MinColInstance &inst, const Coloring &col) {
    if (col.colors.size() != inst.vertex_count())
        throw UncoloredError("coloring covers " + std::to_string(col.colors.size()) + " of " +
                             std::to_string(inst.vertex_count()) + " vertices");
    const int budget = inst.color_budget;
    int top = 0;
    for (int c : col.colors)
        top = std::max(top, c);
    if (col.colors_used() > budget)
        throw TooManyColorsError("coloring uses " + std::to_string(col.colors_used()) +
                                 " colors, budget is " + std::to_string(budget));
    if (!is_proper(inst.graph, Coloring{col.colors, std::max(top, col.k)}))
        throw NotProperError("coloring is not proper");

    // B_1 is a 2n-clique: rename its colors to 1..2n in column order.
    std::vector<int> rename(static_cast<std::size_t>(top) + 1, 0);
    for (int j = 1; j <= budget; ++j)
        rename[static_cast<std::size_t>(col[inst.b(1, j)])] = j;
    auto normalized = [&](VertexId v) {
        int c = rename[static_cast<std::size_t>(col[v])];
        if (c == 0)
            throw StructureError("color of vertex " + std::to_string(v) + " does not occur on B_1");
        return c;
    };

    Assignment a(std::vector<bool>(static_cast<std::size_t>(inst.n), false));
    for (int j = 1; j <= inst.n; ++j) {
        int first = normalized(inst.a(1, 2 * j - 1));
        int second = normalized(inst.a(1, 2 * j));
        if (std::minmax(first, second) != std::minmax(2 * j - 1, 2 * j))
            throw StructureError("columns " + std::to_string(2 * j - 1) + "," + std::to_string(2 * j) +
                                 " of A_1 do not carry colors {2j-1, 2j}");
        a.set(j, first == 2 * j - 1);
    }
    if (!inst.formula.satisfied_by(a))
        throw StructureError("extracted assignment does not satisfy the formula");
    return a;
}

}  // namespace twwcol
