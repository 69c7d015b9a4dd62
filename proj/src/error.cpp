// sfscat - strict factorization systems and finite monoids

#include "sfscat/types.hpp"

namespace sfscat {

  char const* to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::non_associative: return "NonAssociative";
      case ErrorKind::bad_identity: return "BadIdentity";
      case ErrorKind::index_out_of_range: return "IndexOutOfRange";
      case ErrorKind::shape_mismatch: return "ShapeMismatch";
      case ErrorKind::arity_mismatch: return "ArityMismatch";
      case ErrorKind::closure_budget_exceeded: return "ClosureBudgetExceeded";
      case ErrorKind::budget_exceeded: return "BudgetExceeded";
      case ErrorKind::not_idempotent: return "NotIdempotent";
      case ErrorKind::not_composable: return "NotComposable";
      case ErrorKind::not_a_monoid: return "NotAMonoid";
      case ErrorKind::invalid_homomorphism: return "InvalidHomomorphism";
      case ErrorKind::invalid_functor: return "InvalidFunctor";
      case ErrorKind::missing_unit: return "MissingUnit";
      case ErrorKind::not_semi_pointed: return "NotSemiPointed";
      case ErrorKind::certification_failed: return "CertificationFailed";
      case ErrorKind::signature_mismatch: return "SignatureMismatch";
      case ErrorKind::not_a_conjugation: return "NotAConjugation";
      case ErrorKind::internal_disagreement: return "InternalDisagreement";
      case ErrorKind::precondition_failed: return "PreconditionFailed";
      case ErrorKind::verification_failed: return "VerificationFailed";
      case ErrorKind::unknown_example: return "UnknownExample";
      case ErrorKind::param_out_of_range: return "ParamOutOfRange";
      case ErrorKind::unsupported: return "Unsupported";
      case ErrorKind::parse_error: return "ParseError";
    }
    return "Error";
  }

}  // namespace sfscat
