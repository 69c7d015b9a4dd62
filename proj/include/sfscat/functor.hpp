// sfscat - strict factorization systems and finite monoids
//
// Functors between factorization-system categories, natural
// transformations between them, and isomorphism search for finite
// categories.

#ifndef SFSCAT_FUNCTOR_HPP_
#define SFSCAT_FUNCTOR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "category.hpp"
#include "report.hpp"

namespace sfscat {

  //! An object map and an arrow map between the categories of two
  //! SfsCategory values. Being a functor is checked by check_functor.
  struct Functor {
    SfsPtr                source;
    SfsPtr                target;
    std::vector<ObjectId> object_map;
    std::vector<ArrowId>  arrow_map;

    ObjectId operator()(ObjectId a) const {
      return object_map[a];
    }

    ArrowId arrow(ArrowId f) const {
      return arrow_map[f];
    }
  };

  //! Same endpoints (by pointer) and the same maps.
  bool operator==(Functor const& F, Functor const& G);

  struct FunctorFlags {
    //! H(E) is contained in E' and H(M) in M'.
    bool sfs_preserving = false;
    //! H(zeta) = zeta'.
    bool pointed = false;
    //! The unique M-arrow H(zeta) -> zeta' followed by the unique E-arrow
    //! zeta' -> H(zeta) is the identity of H(zeta).
    bool semi_pointed = false;
  };

  //! Functor laws ("object map", "arrow map", "identities", "composition")
  //! followed by one check per requested flag. Throws missing_unit when a
  //! flag needs a unit that source or target does not declare.
  Report check_functor(Functor const& H, FunctorFlags flags = {},
                       Limits limits = {});

  Functor identity_functor(SfsPtr const& A);

  //! The composite G o F (apply F first). Throws signature_mismatch unless
  //! F.target and G.source are the same category.
  Functor compose(Functor const& G, Functor const& F);

  //! A family of arrows alpha_a : F(a) -> G(a), one per source object.
  struct NatTransf {
    Functor              source_functor;
    Functor              target_functor;
    std::vector<ArrowId> components;
  };

  //! Components have the right ends and F(f) alpha_b = alpha_a G(f) for
  //! every source arrow f : a -> b.
  bool is_natural(NatTransf const& alpha);

  //! Every natural transformation F => G, by backtracking over the
  //! hom-sets C'(F(a), G(a)) in object order. With \p pointed_only, only
  //! those whose component at the source unit is the identity of the target
  //! unit are kept. Throws budget_exceeded after \p budget candidates.
  std::vector<NatTransf>
  enumerate_natural_transformations(Functor const& F, Functor const& G,
                                    bool        pointed_only = false,
                                    std::size_t budget       = 10'000'000);

  struct CategoryIsomorphism {
    std::vector<ObjectId> objects;
    std::vector<ArrowId>  arrows;
  };

  //! An isomorphism A -> B of finite categories, if any. Objects are
  //! matched first, pruned by hom-set sizes; arrows are then assigned with
  //! propagation through composites.
  std::optional<CategoryIsomorphism>
  find_category_isomorphism(FinCategory const& A, FinCategory const& B);

  //! An invertible functor A -> B mapping E onto E' and M onto M', with its
  //! inverse.
  std::optional<std::pair<Functor, Functor>>
  find_category_isomorphism(SfsPtr const& A, SfsPtr const& B);

}  // namespace sfscat

#endif  // SFSCAT_FUNCTOR_HPP_
