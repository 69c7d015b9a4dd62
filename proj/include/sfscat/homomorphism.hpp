// sfscat - strict factorization systems and finite monoids
//
// Semigroup homomorphisms: checking, composition, exhaustive enumeration and
// isomorphism search.

#ifndef SFSCAT_HOMOMORPHISM_HPP_
#define SFSCAT_HOMOMORPHISM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "semigroup.hpp"

namespace sfscat {

  //! A map between the carriers of two semigroups. Whether it is
  //! multiplicative is a property checked by check_homomorphism, not an
  //! invariant of the type.
  struct Homomorphism {
    SemigroupPtr         source;
    SemigroupPtr         target;
    std::vector<Element> map;

    Element operator()(Element a) const {
      return map[a];
    }
  };

  //! Same endpoints (by value) and the same map.
  bool operator==(Homomorphism const& f, Homomorphism const& g);

  enum class HomKind {
    //! map(ab) = map(a)map(b); morphisms of unital semigroups need not
    //! preserve the identity.
    semigroup,
    //! additionally map(1) = 1'.
    monoid
  };

  bool check_homomorphism(Homomorphism const& h,
                          HomKind             kind = HomKind::semigroup);

  Homomorphism identity_homomorphism(SemigroupPtr const& S);

  //! The composite g o f (apply f first). Throws signature_mismatch if the
  //! target of f is not the source of g.
  Homomorphism compose(Homomorphism const& g, Homomorphism const& f);

  struct HomEnumeration {
    std::vector<Homomorphism> homomorphisms;
    //! False when the budget ran out before the search finished.
    bool complete;
  };

  //! Every homomorphism S -> T, found by choosing images for the first
  //! unassigned element and propagating through products. \p budget bounds
  //! the number of candidate images tried.
  HomEnumeration enumerate_homomorphisms(SemigroupPtr const& S,
                                         SemigroupPtr const& T,
                                         std::size_t budget = 1'000'000,
                                         HomKind kind = HomKind::semigroup);

  //! A multiplication-preserving bijection S -> T, if one exists.
  std::optional<std::vector<Element>>
  find_isomorphism(FiniteSemigroup const& S, FiniteSemigroup const& T);

  bool is_isomorphism(FiniteSemigroup const& S, FiniteSemigroup const& T,
                      std::vector<Element> const& map);

}  // namespace sfscat

#endif  // SFSCAT_HOMOMORPHISM_HPP_
