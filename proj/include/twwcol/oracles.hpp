#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "twwcol/cnf.hpp"
#include "twwcol/contraction.hpp"
#include "twwcol/trigraph.hpp"

namespace twwcol {

// Vertex colors in 1..k, indexed by VertexId. 0 means uncolored.
struct Coloring {
    std::vector<int> colors;
    int k = 0;

    int operator[](VertexId v) const { return colors.at(v); }
    int colors_used() const;

    friend bool operator==(const Coloring &, const Coloring &) = default;
};

// Search budgets count node expansions, never wall time.
inline constexpr std::size_t kDefaultBudget = 50'000'000;

// Propriety over black edges of a plain graph.
bool is_proper(const Trigraph &g, const Coloring &col);

struct ColorabilityResult {
    bool colorable = false;
    std::optional<Coloring> witness;
    std::size_t nodes = 0;
};

// Exact k-colorability by DSATUR backtracking with color symmetry breaking.
ColorabilityResult is_k_colorable(const Trigraph &g, int k, std::size_t budget = kDefaultBudget);

struct ChromaticResult {
    int chromatic_number = 0;
    Coloring witness;
    std::size_t nodes = 0;
};

ChromaticResult chromatic_number(const Trigraph &g, std::size_t budget = kDefaultBudget);

// Size of a greedily grown clique (a lower bound on the chromatic number).
std::size_t greedy_clique_size(const Trigraph &g);

struct TwinWidthResult {
    std::size_t width = 0;
    PartitionSequence witness;
    std::size_t nodes = 0;
};

// Exact twin-width for small trigraphs (about 10 vertices or fewer).
TwinWidthResult exact_twinwidth(const Trigraph &g, std::size_t budget = kDefaultBudget);

// Lexicographically smallest satisfying assignment (x1 most significant,
// false before true), or nothing.
std::optional<Assignment> solve_sat(const CnfFormula &f);
std::optional<Assignment> solve_nae(const CnfFormula &f);

}  // namespace twwcol
