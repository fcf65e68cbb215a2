#ifndef WIGNER_ERROR_HPP
#define WIGNER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wigner {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raw multiplication table fails the group axioms.
struct NotAGroup : Error {
  using Error::Error;
};

/// Semidirect-product action map is not an automorphism of the normal factor.
struct InvalidAction : Error {
  using Error::Error;
};

/// Square-root dependent construction requested on a group of even order.
struct EvenOrderGroup : Error {
  using Error::Error;
};

/// Two Wigner tensors of different variants (or groups) were combined.
struct VariantMismatch : Error {
  using Error::Error;
};

/// Joint diagonalization of the class-sum matrices failed to separate rows.
struct DegenerateEigenproblem : Error {
  using Error::Error;
};

/// Extracted block of the regular representation is not irreducible.
struct ReducibleBlock : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace wigner

#endif
