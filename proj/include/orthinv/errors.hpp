#ifndef ORTHINV_ERRORS_HPP
#define ORTHINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orthinv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// fields
struct NotPrime : Error {
    explicit NotPrime(const std::string& m) : Error(m) {}
};
struct ZeroInverse : Error {
    ZeroInverse() : Error("inverse of zero") {}
};
struct FieldMismatch : Error {
    FieldMismatch() : Error("operands belong to different fields") {}
};

// polyring
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(std::size_t pos, const std::string& m)
        : Error(m + " at position " + std::to_string(pos)), position(pos) {}
};
struct UnknownVariable : Error {
    std::size_t position;
    UnknownVariable(std::size_t pos, const std::string& name)
        : Error("unknown variable '" + name + "' at position " + std::to_string(pos)),
          position(pos) {}
};
struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial has no leading term") {}
};
struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
};

// matgroups
struct SingularGenerator : Error {
    SingularGenerator() : Error("generator is not invertible") {}
};
struct ClosureBudgetExceeded : Error {
    ClosureBudgetExceeded() : Error("closure exceeded element budget") {}
};
struct NoGeneratorFound : Error {
    explicit NoGeneratorFound(const std::string& m) : Error(m) {}
};
struct NotASubgroup : Error {
    NotASubgroup() : Error("H is not a subgroup of G") {}
};
struct PrimeTooLarge : Error {
    explicit PrimeTooLarge(const std::string& m) : Error(m) {}
};

// invariant-core
struct ModularOrder : Error {
    ModularOrder() : Error("group order is divisible by the characteristic") {}
};
struct ModularIndex : Error {
    ModularIndex() : Error("coset index is divisible by the characteristic") {}
};
struct NotHInvariant : Error {
    NotHInvariant() : Error("polynomial is not H-invariant") {}
};
struct NotInvariantGenerator : Error {
    explicit NotInvariantGenerator(const std::string& label)
        : Error("generator '" + label + "' is not invariant") {}
};
struct NegativeCoefficient : Error {
    explicit NegativeCoefficient(const std::string& m) : Error(m) {}
};
struct BadDenominator : Error {
    BadDenominator() : Error("denominator has zero constant term") {}
};

// catalog
struct RelationFailed : Error {
    explicit RelationFailed(const std::string& m) : Error(m) {}
};

// zerocheck
struct PrimeTooLargeForExact : Error {
    PrimeTooLargeForExact() : Error("exact leading-term determinant is only supported for p=3") {}
    explicit PrimeTooLargeForExact(const std::string& m) : Error(m) {}
};

} // namespace orthinv

#endif
