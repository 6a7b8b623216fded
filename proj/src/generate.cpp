#include "twwcol/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "twwcol/errors.hpp"

namespace twwcol {

CnfFormula random_formula(int n, int m, Dialect dialect, std::mt19937_64 &rng) {
    if (n < 1 || m < 1 || 3 * m < n)
        throw RangeError("cannot cover " + std::to_string(n) + " variables with " + std::to_string(m) +
                         " clauses");
    if (dialect == Dialect::NaeThreeSat && n < 3)
        throw RangeError("NAE clauses need at least 3 variables");

    std::uniform_int_distribution<int> var(1, n);
    std::bernoulli_distribution sign(0.5);

    // Rejection sampling; coverage fails rarely for the sizes we use.
    for (;;) {
        std::vector<Clause> clauses(static_cast<std::size_t>(m));
        for (Clause &c : clauses) {
            for (Literal &lit : c)
                lit = {var(rng), sign(rng)};
            if (dialect == Dialect::ThreeSat)
                for (Literal &lit : c)
                    lit.positive = c[0].var == lit.var ? c[0].positive
                                   : c[1].var == lit.var ? c[1].positive
                                                         : lit.positive;
            if (dialect == Dialect::NaeThreeSat) {
                std::vector<int> pool(static_cast<std::size_t>(n));
                std::iota(pool.begin(), pool.end(), 1);
                std::shuffle(pool.begin(), pool.end(), rng);
                for (std::size_t t = 0; t < 3; ++t)
                    c[t].var = pool[t];
            }
        }
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        for (const Clause &c : clauses)
            for (const Literal &lit : c)
                used[static_cast<std::size_t>(lit.var)] = true;
        if (std::count(used.begin() + 1, used.end(), true) == n)
            return CnfFormula::make(n, std::move(clauses), dialect);
    }
}

}  // namespace twwcol
