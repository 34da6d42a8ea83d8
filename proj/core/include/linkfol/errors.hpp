#ifndef LINKFOL_ERRORS_HPP
#define LINKFOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace linkfol {

// Base class for every failure the library reports. Each condition named in
// an operation contract gets its own type so callers can match on it.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroInverse : Error {
    explicit ZeroInverse(const std::string& w = "inverse of zero") : Error(w) {}
};
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& w) : Error(w) {}
};
struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& w, std::size_t pos)
        : Error(w + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};
struct IndeterminateForm : Error {
    explicit IndeterminateForm(const std::string& w) : Error(w) {}
};
struct NotSingular : Error {
    explicit NotSingular(const std::string& w) : Error(w) {}
};
struct NotSeparatrix : Error {
    explicit NotSeparatrix(const std::string& w) : Error(w) {}
};
struct Degenerate : Error {
    explicit Degenerate(const std::string& w) : Error(w) {}
};
struct UnknownPoint : Error {
    explicit UnknownPoint(const std::string& w) : Error(w) {}
};
struct UnknownIds : Error {
    explicit UnknownIds(const std::string& w) : Error(w) {}
};
struct NotContractible : Error {
    explicit NotContractible(const std::string& w) : Error(w) {}
};
struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& w) : Error(w) {}
};
struct NotInvariantFibre : Error {
    explicit NotInvariantFibre(const std::string& w) : Error(w) {}
};
struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& w) : Error(w) {}
};
struct WrongShape : Error {
    explicit WrongShape(const std::string& w) : Error(w) {}
};

} // namespace linkfol

#endif
