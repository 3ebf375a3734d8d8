#ifndef ORBITCUB_ERRORS_HPP_
#define ORBITCUB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace orbitcub {

struct UnsupportedAlgebra : std::invalid_argument {
  explicit UnsupportedAlgebra(const std::string& what)
      : std::invalid_argument(what) {}
};

struct NonDominantLabel : std::invalid_argument {
  explicit NonDominantLabel(const std::string& what)
      : std::invalid_argument(what) {}
};

struct NonStrictlyDominantLabel : std::invalid_argument {
  explicit NonStrictlyDominantLabel(const std::string& what)
      : std::invalid_argument(what) {}
};

struct InexactPoint : std::invalid_argument {
  explicit InexactPoint(const std::string& what)
      : std::invalid_argument(what) {}
};

struct InvalidM : std::invalid_argument {
  explicit InvalidM(const std::string& what) : std::invalid_argument(what) {}
};

struct StepOutOfRange : std::invalid_argument {
  explicit StepOutOfRange(const std::string& what)
      : std::invalid_argument(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a numerical consistency assertion fails inside the library
/// (e.g. an orbit sum that must be real carries a large imaginary residue).
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace orbitcub

#endif  // ORBITCUB_ERRORS_HPP_
