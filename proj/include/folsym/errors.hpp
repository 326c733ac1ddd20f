#pragma once

#include <stdexcept>
#include <string>

namespace folsym {

/** Base class for all library errors. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Two operands live in incompatible quadratic extensions, e.g. sqrt(2) + sqrt(3). */
struct FieldTowerMismatch : Error {
    using Error::Error;
};

/** A computation would need a second quadratic extension on top of the current one. */
struct FieldTowerExceeded : Error {
    using Error::Error;
};

/** Ordering requested on a non-real quadratic number. */
struct NotOrdered : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

/** Input text rejected by the expression grammar; position is a byte offset. */
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos) : Error(what), position(pos) {}
};

/** An index was requested along a curve the foliation does not leave invariant. */
struct NotInvariant : Error {
    using Error::Error;
};

/** Blowup budget exhausted before every singular point became reduced. */
struct BudgetExceeded : Error {
    using Error::Error;
};

/** Monomial map whose exponent matrix has |det| != 1. */
struct NonUnimodular : Error {
    using Error::Error;
};

/** Bounded conjugacy search ended without a sign-consistent representative. */
struct NotStabilizable : Error {
    using Error::Error;
};

/** The supplied set of maps is not closed under composition. */
struct NotAGroup : Error {
    using Error::Error;
};

/** Quotient generator incompatible with the declared lattice ring. */
struct InconsistentLattice : Error {
    using Error::Error;
};

/** Singular locus has a factor with no root in the quadratic tower. */
struct UnsolvableSingularLocus : Error {
    using Error::Error;
};

/** A flip was asked to produce a non-reduced local model. */
struct WouldCreateNonReduced : Error {
    using Error::Error;
};

/** Index sum requested along a curve carrying a non-reduced singular point. */
struct NonReducedOnCurve : Error {
    using Error::Error;
};

/** Eigen-direction extraction asked of a matrix with non-real spectrum. */
struct ComplexEigenvalues : Error {
    using Error::Error;
};

/** Finite order required but no power up to the bound is the identity. */
struct InfiniteOrder : Error {
    using Error::Error;
};

/** Two automorphisms living over different lattice models. */
struct LatticeMismatch : Error {
    using Error::Error;
};

/** A construction failed its own defensive certification. */
struct CertificationFailed : Error {
    using Error::Error;
};

}  // namespace folsym
