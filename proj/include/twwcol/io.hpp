#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twwcol/cnf.hpp"
#include "twwcol/contraction.hpp"
#include "twwcol/oracles.hpp"
#include "twwcol/trigraph.hpp"

// Text formats. Every on-disk id is 1-based; conversion to the internal
// 0-based ids happens here and nowhere else. `#` starts a comment in all
// formats except DIMACS, which uses `c` lines.
namespace twwcol::io {

// tgf <n> <#black> <#red>, then sorted `b u v` lines, then sorted `r u v`.
void write_trigraph(std::ostream &os, const Trigraph &g);
Trigraph read_trigraph(std::istream &is);

// seq <n> <#steps>, then `m u v` per step.
void write_sequence(std::ostream &os, const PartitionSequence &seq);
PartitionSequence read_sequence(std::istream &is);

// `<vertex> <role>` per line, sorted by vertex.
void write_roles(std::ostream &os, const Trigraph &g);
std::vector<VertexRole> read_roles(std::istream &is, std::size_t n);

// `<vertex> <color>` per line, sorted by vertex. k is the largest color.
void write_coloring(std::ostream &os, const Coloring &col);
Coloring read_coloring(std::istream &is);

// `<var> 0|1` per line.
void write_assignment(std::ostream &os, const Assignment &a);
Assignment read_assignment(std::istream &is);

CnfFormula parse_dimacs_cnf(std::istream &is, Dialect dialect);
void write_dimacs_cnf(std::ostream &os, const CnfFormula &f);

// String conveniences.
std::string to_text(const Trigraph &g);
std::string to_text(const PartitionSequence &seq);
std::string to_text(const Coloring &col);
std::string to_text(const Assignment &a);
std::string to_dimacs(const CnfFormula &f);
CnfFormula parse_dimacs_cnf(const std::string &text, Dialect dialect);

// Whole-file helpers; throw ParseError when the file cannot be opened.
std::string slurp(const std::string &path);
void dump(const std::string &path, const std::string &contents);

}  // namespace twwcol::io
