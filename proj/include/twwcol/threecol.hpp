#pragma once

#include <set>
#include <utility>
#include <vector>

#include "twwcol/cnf.hpp"
#include "twwcol/contraction.hpp"
#include "twwcol/oracles.hpp"
#include "twwcol/trigraph.hpp"

namespace twwcol {

// (variable i, clause j) pairs, 1-based, where the variable path gets an
// extra vertex x'_{i,j} between x_{i,j-1} and x_{i,j}.
using SubdivisionSet = std::set<std::pair<int, int>>;

SubdivisionSet subdivision_positions(const CnfFormula &f);

// 3-coloring instance built from a NAE-3-SAT formula: one triangle per
// clause, one parity-corrected path per variable, and an apex z adjacent
// to every path vertex.
//
// Vertex layout: triangles (u_j, v_j, w_j) first, then each variable path
// in path order (x'_{i,j} precedes x_{i,j}), then z.
struct ThreeColInstance {
    CnfFormula formula;
    int n = 0;
    int m = 0;
    Trigraph graph;
    SubdivisionSet subdivisions;

    VertexId triangle(int j, int slot) const { return static_cast<VertexId>(3 * (j - 1) + slot); }
    VertexId x(int i, int j) const { return occurrence_.at(idx(i, j)); }
    VertexId x_prime(int i, int j) const;  // throws RangeError when absent
    VertexId z() const { return static_cast<VertexId>(graph.size() - 1); }

    // Vertices of P_i in path order.
    const std::vector<VertexId> &path(int i) const { return paths_.at(static_cast<std::size_t>(i - 1)); }

private:
    friend ThreeColInstance build_3col(const CnfFormula &f);
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(m) + static_cast<std::size_t>(j - 1);
    }
    std::vector<VertexId> occurrence_;
    std::vector<VertexId> subdivision_;  // same indexing; graph.size() when absent
    std::vector<std::vector<VertexId>> paths_;
};

ThreeColInstance build_3col(const CnfFormula &f);

// Four stages: triangles, subdivisions, columns, then everything else.
PartitionSequence build_3col_4sequence(const ThreeColInstance &inst);

Coloring threecol_coloring_from_assignment(const ThreeColInstance &inst, const Assignment &a);
Assignment threecol_assignment_from_coloring(const ThreeColInstance &inst, const Coloring &col);

// Graph with k-3 universal vertices appended (labelled U 1..k-3).
Trigraph lift_to_k(const ThreeColInstance &inst, int k);

// Universal vertices merged first, then the 4-sequence, then one last merge.
PartitionSequence lift_4sequence(const ThreeColInstance &inst, int k);

}  // namespace twwcol
