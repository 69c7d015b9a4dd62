// sfscat - strict factorization systems and finite monoids
//
// Reconstruction of a monoid from a unital, complete and thin strict
// factorization system (a uc-CTSFS): the product a * b of two objects is the
// middle object of the factorization of the composite a >-> zeta ->> b.

#ifndef SFSCAT_SIGMA_HPP_
#define SFSCAT_SIGMA_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "category.hpp"
#include "functor.hpp"
#include "homomorphism.hpp"
#include "report.hpp"
#include "schutzenberger.hpp"
#include "sfs.hpp"

namespace sfscat {

  //! An SfsCategory together with the evidence that it is a uc-CTSFS at its
  //! declared unit. Instances can only be obtained through certify, so every
  //! operation taking a UcCtsfs may rely on the axioms.
  class UcCtsfs {
   public:
    //! Runs the checks "category laws", "strict factorization", "thin E",
    //! "thin M", "unital" and "complete". Throws certification_failed
    //! (listing the failures) if any fails.
    static UcCtsfs certify(SfsPtr A, Limits limits = {});

    //! As certify, returning the report and no certificate on failure.
    static std::pair<Report, std::optional<UcCtsfs>>
    try_certify(SfsPtr A, Limits limits = {});

    SfsPtr const& sfs() const noexcept {
      return _sfs;
    }

    FinCategory const& category() const noexcept {
      return _sfs->category;
    }

    ObjectId unit() const noexcept {
      return *_sfs->unit;
    }

    Report const& report() const noexcept {
      return _report;
    }

    FactorizationMap const& factorization() const noexcept {
      return _fact;
    }

    //! The unique M-arrow a >-> zeta.
    ArrowId to_unit(ObjectId a) const {
      return _to_unit[a];
    }

    //! The unique E-arrow zeta ->> b.
    ArrowId from_unit(ObjectId b) const {
      return _from_unit[b];
    }

    //! The middle object of the factorization of f.
    ObjectId middle(ArrowId f) const {
      return _fact.middle(category(), f);
    }

    ObjectId star(ObjectId a, ObjectId b) const {
      return _star[a * category().object_count() + b];
    }

    //! (C_0, *, zeta), built at certification.
    SemigroupPtr const& monoid() const noexcept {
      return _monoid;
    }

   private:
    UcCtsfs() = default;

    SfsPtr                _sfs;
    Report                _report;
    FactorizationMap      _fact;
    std::vector<ArrowId>  _to_unit;
    std::vector<ArrowId>  _from_unit;
    std::vector<ObjectId> _star;
    SemigroupPtr          _monoid;
  };

  //! The middle object of the factorization of a >-> zeta ->> b.
  ObjectId star(UcCtsfs const& A, ObjectId a, ObjectId b);

  //! The monoid (C_0, *, zeta) with the objects in their original order and
  //! their labels. Besides the associativity check of FiniteSemigroup, every
  //! triple product is compared with the middle object of the factorization
  //! of a >-> zeta ->> b >-> zeta ->> c.
  SemigroupPtr sigma_monoid(UcCtsfs const& A);

  struct HomMonoidIso {
    SemigroupPtr sigma;
    //! C(zeta, zeta) under composition; element i is endo_arrows[i].
    SemigroupPtr         endo;
    std::vector<ArrowId> endo_arrows;
    //! phi[x] is the index in endo of zeta ->> x >-> zeta.
    std::vector<Element> phi;
  };

  //! Builds C(zeta, zeta) and the bijection x |-> (zeta ->> x >-> zeta), and
  //! verifies that it is a monoid isomorphism (verification_failed
  //! otherwise).
  HomMonoidIso hom_monoid_iso(UcCtsfs const& A);

  struct CounitPair {
    //! D(Sigma(A)).
    DPtr d;
    //! D(Sigma(A)) -> A: (a, x, b) |-> (a ->> x)(x >-> b).
    Functor counit;
    //! A -> D(Sigma(A)): f |-> (dom f, middle object of f, cod f).
    Functor inverse;
  };

  //! The counit and its inverse; both are checked as SFS-preserving pointed
  //! functors composing to identities (verification_failed otherwise).
  CounitPair counit_pair(UcCtsfs const& A, Limits limits = {});

  //! The object map of H as a homomorphism Sigma(source) -> Sigma(target).
  //! Throws signature_mismatch if H does not go from source to target,
  //! invalid_functor if H is not an SFS-preserving functor and
  //! not_semi_pointed if H is not semi-pointed (or, for HomKind::monoid, not
  //! pointed).
  Homomorphism sigma_functor(Functor const& H, UcCtsfs const& source,
                             UcCtsfs const& target,
                             HomKind        kind = HomKind::semigroup);

}  // namespace sfscat

#endif  // SFSCAT_SIGMA_HPP_
