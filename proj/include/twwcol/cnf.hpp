#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace twwcol {

enum class Dialect { ThreeSat, NaeThreeSat };

struct Literal {
    int var = 1;  // 1-based
    bool positive = true;

    friend auto operator<=>(const Literal &, const Literal &) = default;
};

using Clause = std::array<Literal, 3>;

// Total truth assignment over variables 1..n.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

    std::size_t var_count() const noexcept { return values_.size(); }
    bool operator[](int var) const { return values_.at(static_cast<std::size_t>(var - 1)); }
    void set(int var, bool value) { values_.at(static_cast<std::size_t>(var - 1)) = value; }
    bool satisfies(const Literal &lit) const { return (*this)[lit.var] == lit.positive; }

    Assignment complement() const;
    const std::vector<bool> &values() const noexcept { return values_; }

    friend bool operator==(const Assignment &, const Assignment &) = default;

private:
    std::vector<bool> values_;
};

// 3-literal CNF. Every variable occurs somewhere; NAE clauses use three
// distinct variables, plain 3-SAT clauses may repeat a literal.
class CnfFormula {
public:
    static CnfFormula make(int n_vars, std::vector<Clause> clauses, Dialect dialect);

    int var_count() const noexcept { return n_vars_; }
    std::size_t clause_count() const noexcept { return clauses_.size(); }
    const std::vector<Clause> &clauses() const noexcept { return clauses_; }
    const Clause &clause(std::size_t j) const { return clauses_.at(j - 1); }  // 1-based
    Dialect dialect() const noexcept { return dialect_; }

    // Same clauses, other dialect (revalidated).
    CnfFormula as(Dialect dialect) const { return make(n_vars_, clauses_, dialect); }

    // Every literal negated.
    CnfFormula complemented() const;

    bool satisfied_by(const Assignment &a) const;      // plain CNF semantics
    bool nae_satisfied_by(const Assignment &a) const;  // not-all-equal semantics

    std::string to_string() const;

private:
    int n_vars_ = 0;
    std::vector<Clause> clauses_;
    Dialect dialect_ = Dialect::ThreeSat;
};

}  // namespace twwcol
