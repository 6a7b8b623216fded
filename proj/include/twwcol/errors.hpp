#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twwcol {

// Base of every error raised by the library. Each subclass maps to one
// failure condition of a public operation.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TWWCOL_DEFINE_ERROR(Name)              \
    class Name : public Error {                \
    public:                                    \
        using Error::Error;                    \
    }

// graph construction
TWWCOL_DEFINE_ERROR(OverlapError);
TWWCOL_DEFINE_ERROR(RangeError);
TWWCOL_DEFINE_ERROR(LoopError);
TWWCOL_DEFINE_ERROR(PartitionError);

// sequences
TWWCOL_DEFINE_ERROR(SequenceError);
TWWCOL_DEFINE_ERROR(PartialSequenceError);

// colorings
TWWCOL_DEFINE_ERROR(RedEdgeError);
TWWCOL_DEFINE_ERROR(UncoloredError);
TWWCOL_DEFINE_ERROR(NotProperError);
TWWCOL_DEFINE_ERROR(TooManyColorsError);

// formulas and reductions
TWWCOL_DEFINE_ERROR(ParseError);
TWWCOL_DEFINE_ERROR(DialectError);
TWWCOL_DEFINE_ERROR(UnusedVariableError);
TWWCOL_DEFINE_ERROR(TooFewVariablesError);
TWWCOL_DEFINE_ERROR(NotSatisfyingError);
TWWCOL_DEFINE_ERROR(NotNaeSatisfyingError);
TWWCOL_DEFINE_ERROR(KTooSmallError);

// Internal invariant of a reduction was violated. Unreachable on proper
// inputs; raised instead of returning a wrong answer.
TWWCOL_DEFINE_ERROR(StructureError);

#undef TWWCOL_DEFINE_ERROR

// Search ran out of node expansions. Carries the best bounds known when the
// budget ran out (lower == 0 when no lower bound is meaningful).
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string &what, std::size_t lower, std::size_t upper)
        : Error(what), lower_(lower), upper_(upper) {}

    std::size_t lower_bound() const noexcept { return lower_; }
    std::size_t upper_bound() const noexcept { return upper_; }

private:
    std::size_t lower_;
    std::size_t upper_;
};

}  // namespace twwcol
