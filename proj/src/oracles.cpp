#include "twwcol/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "twwcol/errors.hpp"

namespace twwcol {

int Coloring::colors_used() const {
    std::vector<int> seen(colors);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return static_cast<int>(seen.size());
}

bool is_proper(const Trigraph &g, const Coloring &col) {
    if (!g.is_plain())
        throw RedEdgeError("propriety is defined on plain graphs only");
    if (col.colors.size() != g.size())
        throw UncoloredError("coloring covers " + std::to_string(col.colors.size()) + " of " +
                             std::to_string(g.size()) + " vertices");
    for (std::size_t v = 0; v < col.colors.size(); ++v) {
        if (col.colors[v] == 0)
            throw UncoloredError("vertex " + std::to_string(v) + " is uncolored");
        if (col.colors[v] < 0 || col.colors[v] > col.k)
            throw RangeError("vertex " + std::to_string(v) + " has color " +
                             std::to_string(col.colors[v]) + " outside [1, " +
                             std::to_string(col.k) + "]");
    }
    for (const Edge &e : g.black_edges())
        if (col.colors[e.u] == col.colors[e.v])
            return false;
    return true;
}

namespace {

void require_plain(const Trigraph &g) {
    if (!g.is_plain())
        throw RedEdgeError("coloring oracles take plain graphs only");
}

// Renames colors in order of first appearance along vertex ids.
Coloring canonical(std::vector<int> colors, int k) {
    std::vector<int> rename(colors.size() + static_cast<std::size_t>(k) + 1, 0);
    int next = 0;
    for (int &c : colors) {
        if (rename[static_cast<std::size_t>(c)] == 0)
            rename[static_cast<std::size_t>(c)] = ++next;
        c = rename[static_cast<std::size_t>(c)];
    }
    return Coloring{std::move(colors), k};
}

class DsaturSearch {
public:
    DsaturSearch(const Trigraph &g, int k, std::size_t budget)
        : g_(g),
          k_(k),
          budget_(budget),
          color_(g.size(), 0),
          seen_(g.size(), std::vector<int>(static_cast<std::size_t>(k) + 1, 0)),
          saturation_(g.size(), 0) {}

    bool run() { return extend(); }
    std::size_t nodes() const { return nodes_; }
    const std::vector<int> &colors() const { return color_; }

private:
    VertexId pick() const {
        VertexId best = 0;
        bool found = false;
        for (VertexId v = 0; v < g_.size(); ++v) {
            if (color_[v] != 0)
                continue;
            if (!found || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && g_.black_degree(v) > g_.black_degree(best))) {
                best = v;
                found = true;
            }
        }
        return best;
    }

    void assign(VertexId v, int c) {
        color_[v] = c;
        for (VertexId w : g_.black_neighbors(v))
            if (seen_[w][static_cast<std::size_t>(c)]++ == 0)
                ++saturation_[w];
    }

    void unassign(VertexId v) {
        int c = color_[v];
        color_[v] = 0;
        for (VertexId w : g_.black_neighbors(v))
            if (--seen_[w][static_cast<std::size_t>(c)] == 0)
                --saturation_[w];
    }

    bool extend() {
        if (colored_ == g_.size())
            return true;
        VertexId v = pick();
        int limit = std::min(k_, max_used_ + 1);
        for (int c = 1; c <= limit; ++c) {
            if (seen_[v][static_cast<std::size_t>(c)] != 0)
                continue;
            if (++nodes_ > budget_)
                throw BudgetExceeded("coloring search exceeded " + std::to_string(budget_) +
                                         " nodes",
                                     0, 0);
            int previous_max = max_used_;
            max_used_ = std::max(max_used_, c);
            assign(v, c);
            ++colored_;
            if (extend())
                return true;
            --colored_;
            unassign(v);
            max_used_ = previous_max;
        }
        return false;
    }

    const Trigraph &g_;
    int k_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::size_t colored_ = 0;
    int max_used_ = 0;
    std::vector<int> color_;
    std::vector<std::vector<int>> seen_;  // vertex x color -> #neighbors
    std::vector<int> saturation_;
};

// Greedy DSATUR without backtracking.
std::vector<int> greedy_coloring(const Trigraph &g) {
    std::vector<int> color(g.size(), 0);
    std::vector<std::unordered_set<int>> seen(g.size());
    for (std::size_t step = 0; step < g.size(); ++step) {
        VertexId best = 0;
        bool found = false;
        for (VertexId v = 0; v < g.size(); ++v) {
            if (color[v] != 0)
                continue;
            if (!found || seen[v].size() > seen[best].size() ||
                (seen[v].size() == seen[best].size() && g.black_degree(v) > g.black_degree(best))) {
                best = v;
                found = true;
            }
        }
        int c = 1;
        while (seen[best].count(c))
            ++c;
        color[best] = c;
        for (VertexId w : g.black_neighbors(best))
            seen[w].insert(c);
    }
    return color;
}

}  // namespace

std::size_t greedy_clique_size(const Trigraph &g) {
    std::vector<VertexId> order(g.size());
    std::iota(order.begin(), order.end(), VertexId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return g.black_degree(a) > g.black_degree(b); });
    std::vector<std::size_t> rank(g.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        rank[order[r]] = r;

    std::size_t best = g.size() ? 1 : 0;
    constexpr std::size_t kMaxSeeds = 64;
    for (std::size_t s = 0; s < order.size() && s < kMaxSeeds; ++s) {
        VertexId seed = order[s];
        if (best > g.black_degree(seed))
            break;
        std::vector<VertexId> candidates(g.black_neighbors(seed).begin(), g.black_neighbors(seed).end());
        std::sort(candidates.begin(), candidates.end(),
                  [&](VertexId a, VertexId b) { return rank[a] < rank[b]; });
        std::vector<VertexId> clique{seed};
        for (VertexId w : candidates) {
            bool all = std::all_of(clique.begin(), clique.end(), [&](VertexId x) {
                return g.color(x, w) == EdgeColor::Black;
            });
            if (all)
                clique.push_back(w);
        }
        best = std::max(best, clique.size());
    }
    return best;
}

ColorabilityResult is_k_colorable(const Trigraph &g, int k, std::size_t budget) {
    require_plain(g);
    ColorabilityResult result;
    if (g.size() == 0) {
        result.colorable = true;
        result.witness = Coloring{{}, k};
        return result;
    }
    if (k <= 0 || greedy_clique_size(g) > static_cast<std::size_t>(k))
        return result;

    DsaturSearch search(g, k, budget);
    bool ok = false;
    try {
        ok = search.run();
    } catch (const BudgetExceeded &) {
        std::vector<int> greedy = greedy_coloring(g);
        throw BudgetExceeded("k-colorability search exceeded " + std::to_string(budget) + " nodes",
                             greedy_clique_size(g),
                             static_cast<std::size_t>(*std::max_element(greedy.begin(), greedy.end())));
    }
    result.nodes = search.nodes();
    result.colorable = ok;
    if (ok)
        result.witness = canonical(search.colors(), k);
    return result;
}

ChromaticResult chromatic_number(const Trigraph &g, std::size_t budget) {
    require_plain(g);
    ChromaticResult result;
    if (g.size() == 0)
        return result;

    std::vector<int> greedy = greedy_coloring(g);
    const int upper = *std::max_element(greedy.begin(), greedy.end());
    const int lower = static_cast<int>(greedy_clique_size(g));

    std::size_t spent = 0;
    for (int k = lower; k < upper; ++k) {
        DsaturSearch search(g, k, budget - spent);
        bool ok = false;
        try {
            ok = search.run();
        } catch (const BudgetExceeded &) {
            throw BudgetExceeded("chromatic number search exceeded " + std::to_string(budget) +
                                     " nodes",
                                 static_cast<std::size_t>(k), static_cast<std::size_t>(upper));
        }
        spent += search.nodes();
        if (ok) {
            result.chromatic_number = k;
            result.witness = canonical(search.colors(), k);
            result.nodes = spent;
            return result;
        }
    }
    result.chromatic_number = upper;
    result.witness = canonical(std::move(greedy), upper);
    result.nodes = spent;
    return result;
}

namespace {

using Parts = std::vector<std::vector<VertexId>>;

// Parts sorted by smallest member, members sorted.
void normalize(Parts &parts) {
    for (auto &p : parts)
        std::sort(p.begin(), p.end());
    std::sort(parts.begin(), parts.end());
}

std::string encode(const Parts &parts, std::size_t n) {
    std::string key(n, '\0');
    for (std::size_t k = 0; k < parts.size(); ++k)
        for (VertexId v : parts[k])
            key[v] = static_cast<char>(k);
    return key;
}

Parts merged(const Parts &parts, std::size_t i, std::size_t j) {
    Parts next = parts;
    next[i].insert(next[i].end(), next[j].begin(), next[j].end());
    next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
    normalize(next);
    return next;
}

class TwinWidthSearch {
public:
    TwinWidthSearch(const Trigraph &g, std::size_t budget) : g_(g), budget_(budget) {}

    std::size_t width_of(const Parts &parts) {
        if (++nodes_ > budget_)
            throw BudgetExceeded("twin-width search exceeded " + std::to_string(budget_) + " nodes",
                                 0, 0);
        return max_red_degree(quotient(g_, Partition::make(g_.size(), parts)));
    }

    // Greedy: always take the lexicographically first merge of least width.
    std::pair<std::size_t, std::vector<std::pair<VertexId, VertexId>>> greedy(const Parts &start) {
        Parts parts = start;
        std::size_t width = width_of(parts);
        std::vector<std::pair<VertexId, VertexId>> merges;
        while (parts.size() > 1) {
            std::size_t best = SIZE_MAX, bi = 0, bj = 1;
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = i + 1; j < parts.size(); ++j) {
                    std::size_t w = width_of(merged(parts, i, j));
                    if (w < best) {
                        best = w;
                        bi = i;
                        bj = j;
                    }
                }
            merges.emplace_back(parts[bi].front(), parts[bj].front());
            parts = merged(parts, bi, bj);
            width = std::max(width, best);
        }
        return {width, merges};
    }

    bool find(const Parts &parts, std::size_t d, std::vector<std::pair<VertexId, VertexId>> &out) {
        if (parts.size() <= d + 1) {
            // Any quotient on at most d+1 vertices has width at most d.
            for (std::size_t j = 1; j < parts.size(); ++j)
                out.emplace_back(parts[0].front(), parts[j].front());
            return true;
        }
        std::string key = encode(parts, g_.size());
        if (failed_.count(key))
            return false;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                Parts next = merged(parts, i, j);
                if (width_of(next) > d)
                    continue;
                out.emplace_back(parts[i].front(), parts[j].front());
                if (find(next, d, out))
                    return true;
                out.pop_back();
            }
        failed_.insert(std::move(key));
        return false;
    }

    void reset_memo() { failed_.clear(); }
    std::size_t nodes() const { return nodes_; }

private:
    const Trigraph &g_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::unordered_set<std::string> failed_;
};

}  // namespace

TwinWidthResult exact_twinwidth(const Trigraph &g, std::size_t budget) {
    const std::size_t n = g.size();
    if (n > 127)
        throw RangeError("exact twin-width is limited to small trigraphs");
    Parts start(n);
    for (VertexId v = 0; v < n; ++v)
        start[v] = {v};

    TwinWidthSearch search(g, budget);
    std::size_t upper = 0;
    std::vector<std::pair<VertexId, VertexId>> upper_merges;
    try {
        std::tie(upper, upper_merges) = search.greedy(start);
    } catch (const BudgetExceeded &) {
        throw BudgetExceeded("twin-width search exceeded budget during greedy bound", max_red_degree(g),
                             n ? n - 1 : 0);
    }

    TwinWidthResult result;
    const std::size_t lower = max_red_degree(g);
    for (std::size_t d = lower; d < upper; ++d) {
        std::vector<std::pair<VertexId, VertexId>> merges;
        search.reset_memo();
        bool found = false;
        try {
            found = search.find(start, d, merges);
        } catch (const BudgetExceeded &) {
            throw BudgetExceeded("twin-width search exceeded " + std::to_string(budget) + " nodes",
                                 d, upper);
        }
        if (found) {
            result.width = d;
            result.witness = sequence_from_vertex_merges(n, merges);
            result.nodes = search.nodes();
            return result;
        }
    }
    result.width = upper;
    result.witness = sequence_from_vertex_merges(n, upper_merges);
    result.nodes = search.nodes();
    return result;
}

namespace {

enum class Semantics { Plain, Nae };

class AssignmentSearch {
public:
    AssignmentSearch(const CnfFormula &f, Semantics semantics)
        : f_(f), semantics_(semantics), values_(static_cast<std::size_t>(f.var_count()), false),
          completed_at_(static_cast<std::size_t>(f.var_count()) + 1) {
        // Each clause is checked once its largest variable is assigned.
        for (const Clause &c : f.clauses()) {
            int last = std::max({c[0].var, c[1].var, c[2].var});
            completed_at_[static_cast<std::size_t>(last)].push_back(&c);
        }
    }

    std::optional<Assignment> run() {
        if (!extend(1))
            return std::nullopt;
        return Assignment(values_);
    }

private:
    bool holds(const Clause &c) const {
        auto truth = [&](const Literal &l) {
            return values_[static_cast<std::size_t>(l.var - 1)] == l.positive;
        };
        bool t0 = truth(c[0]), t1 = truth(c[1]), t2 = truth(c[2]);
        if (semantics_ == Semantics::Plain)
            return t0 || t1 || t2;
        return !(t0 == t1 && t1 == t2);
    }

    bool extend(int var) {
        if (var > f_.var_count())
            return true;
        for (bool value : {false, true}) {
            values_[static_cast<std::size_t>(var - 1)] = value;
            const auto &due = completed_at_[static_cast<std::size_t>(var)];
            if (std::all_of(due.begin(), due.end(), [&](const Clause *c) { return holds(*c); }) &&
                extend(var + 1))
                return true;
        }
        values_[static_cast<std::size_t>(var - 1)] = false;
        return false;
    }

    const CnfFormula &f_;
    Semantics semantics_;
    std::vector<bool> values_;
    std::vector<std::vector<const Clause *>> completed_at_;
};

}  // namespace

std::optional<Assignment> solve_sat(const CnfFormula &f) {
    return AssignmentSearch(f, Semantics::Plain).run();
}

std::optional<Assignment> solve_nae(const CnfFormula &f) {
    return AssignmentSearch(f, Semantics::Nae).run();
}

}  // namespace twwcol
