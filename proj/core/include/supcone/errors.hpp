#ifndef SUPCONE_ERRORS_HPP
#define SUPCONE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace supcone {

// Base of all domain errors. `name()` is the stable identifier surfaced by
// the CLI (exit code 1, "Name: detail").
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// (+inf) + (-inf) at the scalar level.
struct UndefinedSum : Error {
    explicit UndefinedSum(const std::string& what) : Error("UndefinedSum", what) {}
};

// Density precondition of function addition violated.
struct SumUndefined : Error {
    explicit SumUndefined(const std::string& what) : Error("SumUndefined", what) {}
};

// eval_at on a cell that straddles distinct values.
struct CellNotResolved : Error {
    explicit CellNotResolved(const std::string& what) : Error("CellNotResolved", what) {}
};

struct NotAPartition : Error {
    explicit NotAPartition(const std::string& what) : Error("NotAPartition", what) {}
};

// Negation requested for a function with a cell identically +/-inf.
struct NotNegatable : Error {
    explicit NotNegatable(const std::string& what) : Error("NotNegatable", what) {}
};

// Cone membership failed; carries a printable separating certificate.
struct NotInCone : Error {
    explicit NotInCone(const std::string& certificate)
        : Error("NotInCone", certificate) {}
};

struct NoLowerBound : Error {
    explicit NoLowerBound(const std::string& what) : Error("NoLowerBound", what) {}
};

// Riesz decomposition on x > u + v; carries a printable violation point.
struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& what)
        : Error("PreconditionFailed", what) {}
};

struct NotPositive : Error {
    explicit NotPositive(const std::string& what) : Error("NotPositive", what) {}
};

struct NotRepresentable : Error {
    explicit NotRepresentable(const std::string& what)
        : Error("NotRepresentable", what) {}
};

struct ParseError : Error {
    ParseError(std::size_t position, const std::string& expected)
        : Error("ParseError",
                "at offset " + std::to_string(position) + ": expected " + expected),
          position(position), expected(expected) {}

    std::size_t position;
    std::string expected;
};

}  // namespace supcone

#endif  // SUPCONE_ERRORS_HPP
