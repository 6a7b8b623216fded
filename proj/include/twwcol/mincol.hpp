#pragma once

#include "twwcol/cnf.hpp"
#include "twwcol/contraction.hpp"
#include "twwcol/oracles.hpp"
#include "twwcol/trigraph.hpp"

namespace twwcol {

// Min-coloring instance built from a 3-SAT formula on n >= 2 variables and
// m clauses. Two path powers A and B (each p = 2n+m blocks of 2n vertices)
// and one gadget vertex v_i per block; chromatic number is 2n iff the
// formula is satisfiable.
//
// Vertex layout: a_{i,j} first (block-major), then b_{i,j}, then v_1..v_p.
struct MinColInstance {
    CnfFormula formula;
    int n = 0;
    int m = 0;
    int p = 0;
    Trigraph graph;
    int color_budget = 0;

    VertexId a(int i, int j) const { return static_cast<VertexId>((i - 1) * 2 * n + (j - 1)); }
    VertexId b(int i, int j) const { return static_cast<VertexId>(2 * n * p + (i - 1) * 2 * n + (j - 1)); }
    VertexId v(int i) const { return static_cast<VertexId>(4 * n * p + (i - 1)); }
    std::size_t vertex_count() const { return static_cast<std::size_t>(4 * n + 1) * static_cast<std::size_t>(p); }
};

// Rejects clauses holding a literal and its negation: the gadget vertex of
// such a clause can be left without a color even when the formula is
// satisfiable.
MinColInstance build_mincol(const CnfFormula &f);

// Two-stage sequence of width at most 3: blocks collapse left to right in
// stage 1, then the block parts and gadget vertices fold into three parts.
PartitionSequence build_mincol_3sequence(const MinColInstance &inst);

// Stage 1 only (partial).
PartitionSequence build_mincol_stage1(const MinColInstance &inst);

Coloring mincol_coloring_from_assignment(const MinColInstance &inst, const Assignment &a);
Assignment mincol_assignment_from_coloring(const MinColInstance &inst, const Coloring &col);

}  // namespace twwcol
