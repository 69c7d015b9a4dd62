// sfscat - strict factorization systems and finite monoids
//
// This file contains the index types shared by every module and the single
// exception type thrown by the library.

#ifndef SFSCAT_TYPES_HPP_
#define SFSCAT_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace sfscat {

  //! Index of an element of a FiniteSemigroup.
  using Element = std::uint32_t;
  //! Index of an object of a FinCategory.
  using ObjectId = std::uint32_t;
  //! Index of an arrow of a FinCategory.
  using ArrowId = std::uint32_t;

  inline constexpr std::uint32_t UNDEFINED
      = std::numeric_limits<std::uint32_t>::max();

  enum class ErrorKind {
    non_associative,
    bad_identity,
    index_out_of_range,
    shape_mismatch,
    arity_mismatch,
    closure_budget_exceeded,
    budget_exceeded,
    not_idempotent,
    not_composable,
    not_a_monoid,
    invalid_homomorphism,
    invalid_functor,
    missing_unit,
    not_semi_pointed,
    certification_failed,
    signature_mismatch,
    not_a_conjugation,
    internal_disagreement,
    precondition_failed,
    verification_failed,
    unknown_example,
    param_out_of_range,
    unsupported,
    parse_error
  };

  char const* to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace sfscat

#endif  // SFSCAT_TYPES_HPP_
