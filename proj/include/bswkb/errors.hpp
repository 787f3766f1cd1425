#ifndef BSWKB_ERRORS_HPP
#define BSWKB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bswkb {

// Thrown when an iterative scheme fails to reach its tolerance
// (root bracketing, quadrature doubling, mesh refinement, fits).
// Exit-code mapping in the CLI: domain_error -> 1, ConvergenceError -> 2.
class ConvergenceError : public std::runtime_error {
  public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Bad usage of an API that is not a value-domain problem (unknown enum,
// calling evaluate() on the infinite well, malformed potential string).
class UsageError : public std::invalid_argument {
  public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace bswkb

#endif
