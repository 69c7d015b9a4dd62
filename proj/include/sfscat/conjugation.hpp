// sfscat - strict factorization systems and finite monoids
//
// Conjugations, the 2-cells between homomorphisms of unital semigroups: an
// element alpha of the target with f(1) alpha = alpha = alpha g(1) and
// f(m) alpha = alpha g(m) for all m. This file also contains their
// correspondence with natural transformations between D-functors, their
// inversion and the triangle identities of an adjoint equivalence.

#ifndef SFSCAT_CONJUGATION_HPP_
#define SFSCAT_CONJUGATION_HPP_

#include <optional>
#include <vector>

#include "functor.hpp"
#include "homomorphism.hpp"
#include "schutzenberger.hpp"

namespace sfscat {

  //! alpha : f => g. Whether the equations hold is checked by
  //! is_conjugation; make_conjugation only builds verified values.
  struct Conjugation {
    Homomorphism f;
    Homomorphism g;
    Element      alpha;
  };

  //! Throws signature_mismatch unless f and g share source and target, and
  //! not_a_monoid if the source has no identity.
  bool is_conjugation(Homomorphism const& f, Homomorphism const& g,
                      Element alpha);

  //! Throws not_a_conjugation if the equations fail.
  Conjugation make_conjugation(Homomorphism f, Homomorphism g, Element alpha);

  //! f(1) : f => f.
  Conjugation identity_conjugation(Homomorphism const& f);

  //! a1 : f => g then a2 : g => h gives a1 a2 : f => h. Throws
  //! not_composable unless a1.g == a2.f.
  Conjugation vcompose(Conjugation const& a1, Conjugation const& a2);

  //! Every alpha with alpha : f => g, in element order.
  std::vector<Element> enumerate_conjugations(Homomorphism const& f,
                                              Homomorphism const& g);

  //! The natural transformation D(f) => D(g) whose component at x is
  //! (f(x), f(x) alpha, g(x)). \p source and \p target must be D of the
  //! source and target of the homomorphisms.
  NatTransf conj_to_nat(Conjugation const& c, DPtr const& source,
                        DPtr const& target);

  //! The conjugation given by the label of the component at the unit of a
  //! natural transformation between D-functors. Throws not_a_conjugation if
  //! the element fails the defining equations, and precondition_failed if
  //! the functors are not D-images (their arrow maps are not determined by
  //! their object maps) or the source has no unit.
  Conjugation nat_to_conj(NatTransf const& n, DPtr const& source,
                          DPtr const& target);

  struct Inversion {
    //! An element with alpha beta = f(1) and beta alpha = g(1).
    Element beta;
    //! gamma = beta alpha beta : g => f.
    Conjugation gamma;
  };

  //! Searches the target for beta with alpha beta = f(1) and
  //! beta alpha = g(1), preferring (in element order) the first beta that
  //! is also a reflexive inverse of alpha (beta alpha beta = beta), which
  //! exists whenever any solution does. Returns the inverse conjugation
  //! gamma = beta alpha beta after verifying it; none when alpha is not
  //! invertible.
  std::optional<Inversion> invert_conjugation(Conjugation const& c);

  struct TriangleOptions {
    //! Also evaluate the triangle identities as equations between natural
    //! transformations of D-functors and require agreement
    //! (internal_disagreement otherwise).
    bool raw_check = false;
  };

  //! For f : M -> M', g : M' -> M, eta : Id_M => g o f and
  //! eps : f o g => Id_M', whether f(1) = f(eta) eps and g(1') = eta g(eps).
  //! Throws signature_mismatch when the pieces do not fit together.
  bool check_triangle_identities(Homomorphism const& f, Homomorphism const& g,
                                 Conjugation const& eta,
                                 Conjugation const& eps,
                                 TriangleOptions    options = {});

}  // namespace sfscat

#endif  // SFSCAT_CONJUGATION_HPP_
