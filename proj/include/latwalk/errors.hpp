#ifndef LATWALK_ERRORS_HPP
#define LATWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latwalk {

// Caller handed us input that violates a documented precondition.
// The CLI maps this family to exit code 2.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what)
        : std::runtime_error(what) {}
};

// Shape mismatch between operands (vector length vs. rank, ...).
class DimensionError : public PreconditionError {
public:
    explicit DimensionError(const std::string& what)
        : PreconditionError(what) {}
};

// Unreadable or malformed input file.
class ParseError : public PreconditionError {
public:
    explicit ParseError(const std::string& what)
        : PreconditionError(what) {}
};

// An internal invariant failed to hold; always a bug, never user error.
// The CLI maps this to exit code 1.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what)
        : std::logic_error(what) {}
};

inline void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

inline void ensure(bool ok, const std::string& what) {
    if (!ok) throw InvariantError(what);
}

} // namespace latwalk

#endif
