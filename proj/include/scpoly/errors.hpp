#ifndef SCPOLY_ERRORS_HPP
#define SCPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scpoly {

// Every domain error carries a stable machine-parsable token; the CLI prints
// the token verbatim so scripts can match on it.
class Error : public std::runtime_error {
public:
    Error(std::string token, const std::string& what)
        : std::runtime_error(what), token_(std::move(token)) {}

    const std::string& token() const { return token_; }

private:
    std::string token_;
};

#define SCPOLY_DEFINE_ERROR(Name, Token)                       \
    class Name : public Error {                                \
    public:                                                    \
        explicit Name(const std::string& what = Token)         \
            : Error(Token, what) {}                            \
    };

SCPOLY_DEFINE_ERROR(DivisionByZeroPoly, "DIVISION_BY_ZERO_POLY")
SCPOLY_DEFINE_ERROR(BothZero, "BOTH_ZERO")
SCPOLY_DEFINE_ERROR(ZeroPolynomial, "ZERO_POLYNOMIAL")
SCPOLY_DEFINE_ERROR(NotAFactor, "NOT_A_FACTOR")
SCPOLY_DEFINE_ERROR(DuplicateNode, "DUPLICATE_NODE")
SCPOLY_DEFINE_ERROR(InsufficientNodes, "INSUFFICIENT_NODES")
SCPOLY_DEFINE_ERROR(ZeroDenominator, "ZERO_DENOMINATOR")
SCPOLY_DEFINE_ERROR(NotSquare, "NOT_SQUARE")
SCPOLY_DEFINE_ERROR(SizeMismatch, "SIZE_MISMATCH")
SCPOLY_DEFINE_ERROR(ScalarKindMismatch, "SCALAR_KIND_MISMATCH")
SCPOLY_DEFINE_ERROR(IrrationalSpectrum, "IRRATIONAL_SPECTRUM")
SCPOLY_DEFINE_ERROR(NotAlternating, "NOT_ALTERNATING")
SCPOLY_DEFINE_ERROR(OddSize, "ODD_SIZE")
SCPOLY_DEFINE_ERROR(DegreeBoundExceeded, "DEGREE_BOUND_EXCEEDED")
SCPOLY_DEFINE_ERROR(DegenerateForm, "DEGENERATE_FORM")
SCPOLY_DEFINE_ERROR(NotLagrangian, "NOT_LAGRANGIAN")
SCPOLY_DEFINE_ERROR(NotTransverse, "NOT_TRANSVERSE")
SCPOLY_DEFINE_ERROR(NotSelfAdjoint, "NOT_SELF_ADJOINT")
SCPOLY_DEFINE_ERROR(NonSplitSpectrum, "NON_SPLIT_SPECTRUM")
SCPOLY_DEFINE_ERROR(FactorizationFailed, "FACTORIZATION_FAILED")
SCPOLY_DEFINE_ERROR(RelationNotSatisfied, "RELATION_NOT_SATISFIED")
SCPOLY_DEFINE_ERROR(NotCommuting, "NOT_COMMUTING")
SCPOLY_DEFINE_ERROR(NotSymplecticallyNormal, "NOT_SYMPLECTICALLY_NORMAL")
SCPOLY_DEFINE_ERROR(NotDiagonalizable, "NOT_DIAGONALIZABLE")
SCPOLY_DEFINE_ERROR(NotSymplecticallyDiagonalizable, "NOT_SYMPLECTICALLY_DIAGONALIZABLE")
SCPOLY_DEFINE_ERROR(RepeatedPairFactor, "REPEATED_PAIR_FACTOR")
SCPOLY_DEFINE_ERROR(EqualPairValues, "EQUAL_PAIR_VALUES")
SCPOLY_DEFINE_ERROR(RatFunDimLimit, "RATFUN_DIM_LIMIT")
SCPOLY_DEFINE_ERROR(ParseError, "PARSE_ERROR")

#undef SCPOLY_DEFINE_ERROR

} // namespace scpoly

#endif // SCPOLY_ERRORS_HPP
