#include "twwcol/cnf.hpp"

#include <sstream>

#include "twwcol/errors.hpp"

namespace twwcol {

Assignment Assignment::complement() const {
    std::vector<bool> flipped(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        flipped[i] = !values_[i];
    return Assignment(std::move(flipped));
}

CnfFormula CnfFormula::make(int n_vars, std::vector<Clause> clauses, Dialect dialect) {
    if (n_vars < 0)
        throw RangeError("negative variable count");
    std::vector<bool> used(static_cast<std::size_t>(n_vars) + 1, false);
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        const Clause &c = clauses[j];
        for (const Literal &lit : c) {
            if (lit.var < 1 || lit.var > n_vars)
                throw RangeError("clause " + std::to_string(j + 1) + " names variable " +
                                 std::to_string(lit.var) + " outside [1, " +
                                 std::to_string(n_vars) + "]");
            used[static_cast<std::size_t>(lit.var)] = true;
        }
        if (dialect == Dialect::NaeThreeSat &&
            (c[0].var == c[1].var || c[0].var == c[2].var || c[1].var == c[2].var))
            throw DialectError("NAE clause " + std::to_string(j + 1) +
                               " does not use three distinct variables");
    }
    for (int v = 1; v <= n_vars; ++v)
        if (!used[static_cast<std::size_t>(v)])
            throw UnusedVariableError("variable " + std::to_string(v) + " occurs in no clause");

    CnfFormula f;
    f.n_vars_ = n_vars;
    f.clauses_ = std::move(clauses);
    f.dialect_ = dialect;
    return f;
}

CnfFormula CnfFormula::complemented() const {
    auto flipped = clauses_;
    for (Clause &c : flipped)
        for (Literal &lit : c)
            lit.positive = !lit.positive;
    return make(n_vars_, std::move(flipped), dialect_);
}

bool CnfFormula::satisfied_by(const Assignment &a) const {
    for (const Clause &c : clauses_)
        if (!a.satisfies(c[0]) && !a.satisfies(c[1]) && !a.satisfies(c[2]))
            return false;
    return true;
}

bool CnfFormula::nae_satisfied_by(const Assignment &a) const {
    for (const Clause &c : clauses_) {
        bool t0 = a.satisfies(c[0]), t1 = a.satisfies(c[1]), t2 = a.satisfies(c[2]);
        if (t0 == t1 && t1 == t2)
            return false;
    }
    return true;
}

std::string CnfFormula::to_string() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < clauses_.size(); ++j) {
        if (j)
            os << " & ";
        os << '(';
        for (std::size_t t = 0; t < 3; ++t) {
            if (t)
                os << " | ";
            if (!clauses_[j][t].positive)
                os << '~';
            os << 'x' << clauses_[j][t].var;
        }
        os << ')';
    }
    return os.str();
}

}  // namespace twwcol
