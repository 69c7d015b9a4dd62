// sfscat - strict factorization systems and finite monoids
//
// Morita equivalence of monoids: enlargements e (idempotents with
// MeM = M), corner monoids eMe, the adjoint equivalence built from an
// enlargement and the enlargement extracted from an adjoint equivalence,
// and decision procedures for finite monoids.

#ifndef SFSCAT_MORITA_HPP_
#define SFSCAT_MORITA_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "conjugation.hpp"
#include "homomorphism.hpp"
#include "report.hpp"
#include "semigroup.hpp"

namespace sfscat {

  //! Whether {x e y : x, y in M} is all of M. Throws not_idempotent.
  bool is_enlargement(FiniteSemigroup const& M, Element e);

  struct CornerMonoid {
    //! eMe with identity e; its elements are listed in the order of M.
    SemigroupPtr monoid;
    //! Element i of the corner is embedding[i] in M.
    std::vector<Element> embedding;
  };

  //! Throws not_idempotent.
  CornerMonoid corner_monoid(SemigroupPtr const& M, Element e);

  //! An adjoint equivalence f -| g between M and M' in the 2-category of
  //! monoids, semigroup homomorphisms and conjugations.
  struct EquivalencePackage {
    Homomorphism f;  // M -> M'
    Homomorphism g;  // M' -> M
    Conjugation  eta;  // Id_M => g o f
    Conjugation  eps;  // f o g => Id_M'
    Element      beta;  // inverse element of eta, in M
    Element      mu;    // inverse element of eps, in M'
  };

  //! Re-verifies every invariant of a package from scratch: f and g are
  //! homomorphisms, eta and eps are conjugations of the right types with
  //! eta beta = 1, beta eta = gf(1), eps mu = fg(1'), mu eps = 1', and the
  //! triangle identities hold.
  Report verify_package(EquivalencePackage const& pkg);

  //! For an idempotent e and x, y with x e y = 1: M' = eMe,
  //! f(m) = e y m x e, g the inclusion, eta = xe, beta = ey, eps = eye and
  //! mu = exe. Throws precondition_failed on bad input and
  //! verification_failed if the result does not verify.
  EquivalencePackage equivalence_from_enlargement(SemigroupPtr const& M,
                                                  Element e, Element x,
                                                  Element y);

  struct EnlargementWitness {
    //! e = g(1').
    Element      e;
    CornerMonoid corner;
    //! The isomorphism M' -> eMe induced by g (corner indices).
    std::vector<Element> to_corner;
    //! Its inverse, h(m) = mu f(m) eps (elements of M').
    std::vector<Element> from_corner;
  };

  //! Pose e = g(1'), check that it is an enlargement and that g and
  //! h(m) = mu f(m) eps are mutually inverse between M' and eMe. Throws
  //! verification_failed naming the first failing equation.
  EnlargementWitness enlargement_from_equivalence(EquivalencePackage const& pkg);

  struct MoritaWitness {
    //! False when e is an idempotent of the first monoid (eMe ~ M'), true
    //! when it is one of the second (e M' e ~ M).
    bool         in_second;
    Element      e;
    CornerMonoid corner;
    //! Isomorphism from the corner onto the other monoid.
    std::vector<Element> iso;
  };

  //! Searches the idempotents of M, then those of M', for an enlargement
  //! whose corner is isomorphic to the other monoid. Throws
  //! budget_exceeded once more than \p budget idempotents were examined.
  std::optional<MoritaWitness> decide_morita(SemigroupPtr const& M,
                                             SemigroupPtr const& M2,
                                             std::size_t budget = 1'000'000);

  //! Searches hom pairs f : M -> M', g : M' -> M and invertible
  //! conjugations eta, eps satisfying the triangle identities. Throws
  //! budget_exceeded once more than \p budget hom pairs were examined.
  std::optional<EquivalencePackage>
  find_adjoint_equivalence(SemigroupPtr const& M, SemigroupPtr const& M2,
                           std::size_t budget = 1'000'000);

}  // namespace sfscat

#endif  // SFSCAT_MORITA_HPP_
