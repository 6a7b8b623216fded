#pragma once

// Test-only reference implementations. Nothing here calls into the code
// paths it is used to check: the quotient is the literal pairwise
// definition, colorings and assignments are enumerated exhaustively.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "twwcol/cnf.hpp"
#include "twwcol/contraction.hpp"
#include "twwcol/trigraph.hpp"

namespace twwcol::testing {

inline std::vector<Edge> all_pairs(std::size_t n) {
    std::vector<Edge> out;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            out.emplace_back(u, v);
    return out;
}

// Plain graph whose edge set is the bitmask over all_pairs(n).
inline Trigraph graph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Edge> black;
    auto pairs = all_pairs(n);
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (mask >> k & 1)
            black.push_back(pairs[k]);
    return make_trigraph(n, black);
}

inline std::uint64_t mask_count(std::size_t n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

inline Trigraph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (VertexId v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    return make_trigraph(n, e);
}

inline Trigraph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (VertexId v = 0; v < n; ++v)
        e.emplace_back(v, static_cast<VertexId>((v + 1) % n));
    return make_trigraph(n, e);
}

inline Trigraph complete_graph(std::size_t n) { return make_trigraph(n, all_pairs(n)); }

// Each pair independently none / black / red.
inline Trigraph random_trigraph(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<Edge> black, red;
    for (const Edge &e : all_pairs(n)) {
        int c = pick(rng);
        if (c == 1)
            black.push_back(e);
        else if (c == 2)
            red.push_back(e);
    }
    return make_trigraph(n, black, red);
}

// G/P straight from the definition: for every pair of parts look at every
// cross pair of vertices.
inline Trigraph reference_quotient(const Trigraph &g, const std::vector<std::vector<VertexId>> &parts) {
    std::vector<Edge> black, red;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            bool all_black = true, any_red = false, any_black = false, any_non = false;
            for (VertexId u : parts[i])
                for (VertexId v : parts[j]) {
                    EdgeColor c = g.color(u, v);
                    all_black = all_black && c == EdgeColor::Black;
                    any_red = any_red || c == EdgeColor::Red;
                    any_black = any_black || c == EdgeColor::Black;
                    any_non = any_non || c == EdgeColor::None;
                }
            Edge e(static_cast<VertexId>(i), static_cast<VertexId>(j));
            if (all_black)
                black.push_back(e);
            else if (any_red || (any_black && any_non))
                red.push_back(e);
        }
    return make_trigraph(parts.size(), black, red);
}

// Every partition of 0..n-1 into at most max_parts parts, as restricted
// growth strings; parts come out ordered by smallest member.
inline void for_each_partition(std::size_t n, std::size_t max_parts,
                               const std::function<void(const std::vector<std::vector<VertexId>> &)> &visit) {
    std::vector<std::size_t> label(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t used) {
        if (v == n) {
            std::vector<std::vector<VertexId>> parts(used);
            for (VertexId x = 0; x < n; ++x)
                parts[label[x]].push_back(x);
            visit(parts);
            return;
        }
        for (std::size_t c = 0; c <= used && c < max_parts; ++c) {
            label[v] = c;
            rec(v + 1, std::max(used, c + 1));
        }
    };
    if (n == 0)
        visit({});
    else
        rec(0, 0);
}

// Uniformly random merge script (possibly partial) in normalized form.
inline PartitionSequence random_sequence(std::size_t n, std::size_t steps, std::mt19937_64 &rng) {
    std::vector<VertexId> reps(n);
    for (VertexId v = 0; v < n; ++v)
        reps[v] = v;
    std::vector<std::pair<VertexId, VertexId>> merges;
    for (std::size_t s = 0; s < steps && reps.size() > 1; ++s) {
        std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
        std::size_t i = pick(rng), j = pick(rng);
        while (j == i)
            j = pick(rng);
        merges.emplace_back(reps[i], reps[j]);
        VertexId lo = std::min(reps[i], reps[j]);
        reps[i] = lo;
        reps.erase(reps.begin() + static_cast<std::ptrdiff_t>(j));
    }
    return sequence_from_vertex_merges(n, merges);
}

// Parts after replaying the first `prefix` steps, ordered by representative.
inline std::vector<std::vector<VertexId>> parts_after(const PartitionSequence &seq, std::size_t prefix) {
    std::size_t n = seq.vertex_count();
    std::vector<VertexId> owner(n);
    for (VertexId v = 0; v < n; ++v)
        owner[v] = v;
    for (std::size_t s = 0; s < prefix; ++s) {
        auto [a, b] = seq.steps()[s];
        for (VertexId &o : owner)
            if (o == b)
                o = a;
    }
    std::vector<std::vector<VertexId>> parts;
    for (VertexId r = 0; r < n; ++r) {
        std::vector<VertexId> part;
        for (VertexId v = 0; v < n; ++v)
            if (owner[v] == r)
                part.push_back(v);
        if (!part.empty())
            parts.push_back(part);
    }
    return parts;
}

inline std::size_t reference_max_red_degree(const Trigraph &g) {
    std::size_t best = 0;
    for (VertexId v = 0; v < g.size(); ++v) {
        std::size_t d = 0;
        for (VertexId w = 0; w < g.size(); ++w)
            d += v != w && g.color(v, w) == EdgeColor::Red;
        best = std::max(best, d);
    }
    return best;
}

// Twin-width by trying every merge order (no memo, no pruning).
inline std::size_t brute_force_twinwidth(const Trigraph &g) {
    std::function<std::size_t(std::vector<std::vector<VertexId>>)> rec =
        [&](std::vector<std::vector<VertexId>> parts) -> std::size_t {
        std::size_t here = reference_max_red_degree(reference_quotient(g, parts));
        if (parts.size() <= 1)
            return here;
        std::size_t best = SIZE_MAX;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                auto next = parts;
                next[i].insert(next[i].end(), next[j].begin(), next[j].end());
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
                best = std::min(best, rec(next));
            }
        return std::max(here, best);
    };
    std::vector<std::vector<VertexId>> start;
    for (VertexId v = 0; v < g.size(); ++v)
        start.push_back({v});
    return rec(start);
}

// k-colorability by enumerating all k^n colorings.
inline bool brute_force_colorable(const Trigraph &g, int k) {
    std::size_t n = g.size();
    if (n == 0)
        return true;
    if (k <= 0)
        return false;
    std::vector<int> c(n, 0);
    for (;;) {
        bool ok = std::all_of(g.black_edges().begin(), g.black_edges().end(),
                              [&](const Edge &e) { return c[e.u] != c[e.v]; });
        if (ok)
            return true;
        std::size_t i = 0;
        while (i < n && ++c[i] == k)
            c[i++] = 0;
        if (i == n)
            return false;
    }
}

inline int brute_force_chromatic(const Trigraph &g) {
    int k = 0;
    while (!brute_force_colorable(g, k))
        ++k;
    return k;
}

// All assignments in lexicographic order (x1 most significant, false first).
inline std::vector<Assignment> all_assignments(int n) {
    std::vector<Assignment> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        std::vector<bool> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            v[static_cast<std::size_t>(i)] = bits >> (n - 1 - i) & 1;
        out.emplace_back(std::move(v));
    }
    return out;
}

inline std::optional<Assignment> first_satisfying(const CnfFormula &f, bool nae) {
    for (const Assignment &a : all_assignments(f.var_count()))
        if (nae ? f.nae_satisfied_by(a) : f.satisfied_by(a))
            return a;
    return std::nullopt;
}

inline Literal pos(int v) { return {v, true}; }
inline Literal neg(int v) { return {v, false}; }

// Two-clause example: (x1 | ~x2 | x3) & (~x1 | x2 | ~x3).
inline CnfFormula two_clause_formula() {
    return CnfFormula::make(3, {{pos(1), neg(2), pos(3)}, {neg(1), pos(2), neg(3)}}, Dialect::ThreeSat);
}

// Seven-variable example (7 variables, 8 clauses).
inline CnfFormula seven_var_formula() {
    return CnfFormula::make(7,
                            {
                                {pos(1), neg(2), pos(3)},
                                {neg(1), pos(4), pos(5)},
                                {pos(2), neg(3), pos(6)},
                                {pos(1), pos(6), neg(7)},
                                {pos(4), pos(5), pos(7)},
                                {pos(2), pos(4), neg(6)},
                                {neg(1), neg(5), pos(7)},
                                {pos(3), neg(6), neg(7)},
                            },
                            Dialect::NaeThreeSat);
}

}  // namespace twwcol::testing
