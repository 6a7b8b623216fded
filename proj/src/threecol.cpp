#include "twwcol/threecol.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

#include "twwcol/errors.hpp"

namespace twwcol {

namespace {

struct Occurrence {
    int clause = 0;
    bool positive = true;
};

// Occurrences of each variable in increasing clause order.
std::vector<std::vector<Occurrence>> occurrences(const CnfFormula &f) {
    std::vector<std::vector<Occurrence>> occ(static_cast<std::size_t>(f.var_count()) + 1);
    for (std::size_t j = 1; j <= f.clause_count(); ++j)
        for (const Literal &lit : f.clause(j))
            occ[static_cast<std::size_t>(lit.var)].push_back({static_cast<int>(j), lit.positive});
    return occ;
}

void require_nae(const CnfFormula &f) {
    if (f.dialect() != Dialect::NaeThreeSat)
        throw DialectError("3-coloring reduction takes a NAE-3-SAT formula");
}

}  // namespace

SubdivisionSet subdivision_positions(const CnfFormula &f) {
    require_nae(f);
    SubdivisionSet out;
    auto occ = occurrences(f);
    for (int i = 1; i <= f.var_count(); ++i) {
        const auto &list = occ[static_cast<std::size_t>(i)];
        for (std::size_t h = 0; h + 1 < list.size(); ++h) {
            int gap = list[h + 1].clause - list[h].clause;
            bool same_sign = list[h].positive == list[h + 1].positive;
            bool even = gap % 2 == 0;
            if (even != same_sign)
                out.emplace(i, list[h + 1].clause);
        }
    }
    return out;
}

VertexId ThreeColInstance::x_prime(int i, int j) const {
    VertexId v = subdivision_.at(idx(i, j));
    if (v == graph.size())
        throw RangeError("no subdivision vertex x'_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    return v;
}

ThreeColInstance build_3col(const CnfFormula &f) {
    require_nae(f);
    if (f.clause_count() == 0)
        throw RangeError("3-coloring reduction needs at least one clause");

    ThreeColInstance inst;
    inst.formula = f;
    inst.n = f.var_count();
    inst.m = static_cast<int>(f.clause_count());
    inst.subdivisions = subdivision_positions(f);
    const int n = inst.n, m = inst.m;

    const std::size_t total = static_cast<std::size_t>(3 * m + n * m) + inst.subdivisions.size() + 1;
    inst.occurrence_.assign(static_cast<std::size_t>(n * m), 0);
    inst.subdivision_.assign(static_cast<std::size_t>(n * m), static_cast<VertexId>(total));
    inst.paths_.assign(static_cast<std::size_t>(n), {});

    std::vector<VertexRole> roles(total);
    for (int j = 1; j <= m; ++j)
        for (int slot = 0; slot < 3; ++slot)
            roles[inst.triangle(j, slot)] = VertexRole::triangle(j, slot);

    VertexId next = static_cast<VertexId>(3 * m);
    for (int i = 1; i <= n; ++i) {
        auto &path = inst.paths_[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= m; ++j) {
            if (inst.subdivisions.count({i, j})) {
                inst.subdivision_[inst.idx(i, j)] = next;
                roles[next] = VertexRole::subdiv(i, j);
                path.push_back(next++);
            }
            inst.occurrence_[inst.idx(i, j)] = next;
            roles[next] = VertexRole::path(i, j);
            path.push_back(next++);
        }
    }
    const VertexId z = next;
    roles[z] = VertexRole::z();

    std::vector<Edge> edges;
    for (int j = 1; j <= m; ++j) {
        edges.emplace_back(inst.triangle(j, 0), inst.triangle(j, 1));
        edges.emplace_back(inst.triangle(j, 1), inst.triangle(j, 2));
        edges.emplace_back(inst.triangle(j, 0), inst.triangle(j, 2));
        const Clause &c = f.clause(static_cast<std::size_t>(j));
        for (int slot = 0; slot < 3; ++slot)
            edges.emplace_back(inst.triangle(j, slot), inst.x(c[static_cast<std::size_t>(slot)].var, j));
    }
    for (const auto &path : inst.paths_) {
        for (std::size_t t = 0; t + 1 < path.size(); ++t)
            edges.emplace_back(path[t], path[t + 1]);
        for (VertexId x : path)
            edges.emplace_back(x, z);
    }

    inst.graph = Trigraph::make(total, edges, {}).with_roles(std::move(roles));
    return inst;
}

namespace {

std::vector<std::pair<VertexId, VertexId>> four_stage_merges(const ThreeColInstance &inst) {
    std::vector<std::pair<VertexId, VertexId>> merges;
    for (int j = 1; j <= inst.m; ++j) {
        merges.emplace_back(inst.triangle(j, 0), inst.triangle(j, 1));
        merges.emplace_back(inst.triangle(j, 0), inst.triangle(j, 2));
    }
    for (const auto &[i, j] : inst.subdivisions)
        merges.emplace_back(inst.x(i, j), inst.x_prime(i, j));
    for (int i = 2; i <= inst.n; ++i)
        for (int j = 1; j <= inst.m; ++j)
            merges.emplace_back(inst.x(1, j), inst.x(i, j));
    for (int j = 2; j <= inst.m; ++j) {
        merges.emplace_back(inst.x(1, 1), inst.x(1, j));
        merges.emplace_back(inst.triangle(1, 0), inst.triangle(j, 0));
    }
    merges.emplace_back(inst.x(1, 1), inst.z());
    merges.emplace_back(inst.x(1, 1), inst.triangle(1, 0));
    return merges;
}

}  // namespace

PartitionSequence build_3col_4sequence(const ThreeColInstance &inst) {
    return sequence_from_vertex_merges(inst.graph.size(), four_stage_merges(inst));
}

Coloring threecol_coloring_from_assignment(const ThreeColInstance &inst, const Assignment &a) {
    if (a.var_count() != static_cast<std::size_t>(inst.n))
        throw RangeError("assignment has " + std::to_string(a.var_count()) + " variables, formula has " +
                         std::to_string(inst.n));
    if (!inst.formula.nae_satisfied_by(a))
        throw NotNaeSatisfyingError("assignment does not NAE-satisfy the formula");

    Coloring col{std::vector<int>(inst.graph.size(), 0), 3};
    col.colors[inst.z()] = 3;

    auto occ = occurrences(inst.formula);
    for (int i = 1; i <= inst.n; ++i) {
        const Occurrence anchor = occ[static_cast<std::size_t>(i)].front();
        const int anchor_color = a.satisfies({i, anchor.positive}) ? 1 : 2;
        const auto &path = inst.path(i);
        const auto at = static_cast<std::size_t>(
            std::find(path.begin(), path.end(), inst.x(i, anchor.clause)) - path.begin());
        for (std::size_t t = 0; t < path.size(); ++t) {
            bool same = (t > at ? t - at : at - t) % 2 == 0;
            col.colors[path[t]] = same ? anchor_color : 3 - anchor_color;
        }
    }

    static constexpr std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (int j = 1; j <= inst.m; ++j) {
        const Clause &c = inst.formula.clause(static_cast<std::size_t>(j));
        std::array<int, 3> seen{};
        for (int slot = 0; slot < 3; ++slot)
            seen[static_cast<std::size_t>(slot)] = col.colors[inst.x(c[static_cast<std::size_t>(slot)].var, j)];
        auto pair = std::find_if(kPairs.begin(), kPairs.end(), [&](const auto &pr) {
            return seen[static_cast<std::size_t>(pr.first)] != seen[static_cast<std::size_t>(pr.second)];
        });
        for (int slot = 0; slot < 3; ++slot)
            col.colors[inst.triangle(j, slot)] = 3;
        for (int slot : {pair->first, pair->second})
            col.colors[inst.triangle(j, slot)] = 3 - seen[static_cast<std::size_t>(slot)];
    }
    return col;
}

Assignment threecol_assignment_from_coloring(const ThreeColInstance &inst, const Coloring &col) {
    if (col.colors.size() != inst.graph.size())
        throw UncoloredError("coloring covers " + std::to_string(col.colors.size()) + " of " +
                             std::to_string(inst.graph.size()) + " vertices");
    if (col.colors_used() > 3)
        throw TooManyColorsError("coloring uses " + std::to_string(col.colors_used()) + " colors");
    int top = *std::max_element(col.colors.begin(), col.colors.end());
    if (!is_proper(inst.graph, Coloring{col.colors, std::max(top, col.k)}))
        throw NotProperError("coloring is not proper");

    // z -> 3, x_{1,1} -> 1, the remaining color -> 2.
    const int cz = col[inst.z()], cx = col[inst.x(1, 1)];
    auto normalized = [&](VertexId v) {
        int c = col[v];
        return c == cz ? 3 : c == cx ? 1 : 2;
    };

    auto occ = occurrences(inst.formula);
    Assignment a(std::vector<bool>(static_cast<std::size_t>(inst.n), false));
    for (int i = 1; i <= inst.n; ++i) {
        const auto &list = occ[static_cast<std::size_t>(i)];
        auto pos = std::find_if(list.begin(), list.end(), [](const Occurrence &o) { return o.positive; });
        if (pos != list.end()) {
            a.set(i, normalized(inst.x(i, pos->clause)) == 1);
        } else {
            a.set(i, normalized(inst.x(i, list.front().clause)) != 1);
        }
    }
    if (!inst.formula.nae_satisfied_by(a))
        throw StructureError("extracted assignment does not NAE-satisfy the formula");
    return a;
}

Trigraph lift_to_k(const ThreeColInstance &inst, int k) {
    if (k < 3)
        throw KTooSmallError("k must be at least 3, got " + std::to_string(k));
    const std::size_t base = inst.graph.size();
    const std::size_t total = base + static_cast<std::size_t>(k - 3);
    std::vector<Edge> edges = inst.graph.black_edges();
    for (std::size_t u = base; u < total; ++u)
        for (std::size_t v = 0; v < u; ++v)
            edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(u));
    std::vector<VertexRole> roles = inst.graph.roles();
    for (int t = 1; t <= k - 3; ++t)
        roles.push_back(VertexRole::universal(t));
    return Trigraph::make(total, edges, {}).with_roles(std::move(roles));
}

PartitionSequence lift_4sequence(const ThreeColInstance &inst, int k) {
    if (k < 3)
        throw KTooSmallError("k must be at least 3, got " + std::to_string(k));
    const auto base = static_cast<VertexId>(inst.graph.size());
    const auto extra = static_cast<VertexId>(k - 3);
    std::vector<std::pair<VertexId, VertexId>> merges;
    for (VertexId t = 1; t < extra; ++t)
        merges.emplace_back(base, base + t);
    auto core = four_stage_merges(inst);
    merges.insert(merges.end(), core.begin(), core.end());
    if (extra > 0)
        merges.emplace_back(VertexId{0}, base);
    return sequence_from_vertex_merges(base + extra, merges);
}

}  // namespace twwcol
