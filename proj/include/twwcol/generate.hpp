#pragma once

#include <cstdint>
#include <random>

#include "twwcol/cnf.hpp"

namespace twwcol {

// Random 3-literal formula in which every variable occurs. ThreeSat
// clauses draw variables independently and a repeated variable keeps its
// first sign, so no clause holds x and ~x; NAE clauses use three distinct
// variables. Needs 3m >= n, and n >= 3 for NAE.
CnfFormula random_formula(int n, int m, Dialect dialect, std::mt19937_64 &rng);

inline CnfFormula random_formula(int n, int m, Dialect dialect, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_formula(n, m, dialect, rng);
}

}  // namespace twwcol
