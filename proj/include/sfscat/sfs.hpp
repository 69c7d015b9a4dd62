// sfscat - strict factorization systems and finite monoids
//
// Brute-force verification of category axioms and of the properties of a
// strict factorization system (E, M): unique factorization, the Grandis
// consequences, the spanned orthogonal system, thinness, properness,
// unitality and completeness.

#ifndef SFSCAT_SFS_HPP_
#define SFSCAT_SFS_HPP_

#include <optional>
#include <vector>

#include "category.hpp"
#include "report.hpp"

namespace sfscat {

  //! Category laws: identities are endomorphisms and act as units,
  //! composition is defined on every composable pair with the right ends,
  //! and it is associative. Throws budget_exceeded above the arrow cap.
  Report verify_category(FinCategory const& cat, Limits limits = {});

  //! For each arrow f its factorization f = e m (e in E, m in M), or
  //! UNDEFINED entries when the factorization does not exist or is not
  //! unique.
  struct FactorizationMap {
    std::vector<ArrowId> e_part;
    std::vector<ArrowId> m_part;

    bool defined(ArrowId f) const {
      return e_part[f] != UNDEFINED;
    }

    //! The middle object of the factorization of \p f.
    ObjectId middle(FinCategory const& cat, ArrowId f) const {
      return cat.cod(e_part[f]);
    }
  };

  struct SfsReport {
    Report           report;
    FactorizationMap factorization;

    bool passed() const noexcept {
      return report.passed();
    }
  };

  //! E and M contain every identity and are closed under composition, and
  //! every arrow has exactly one factorization em.
  SfsReport verify_sfs(SfsCategory const& A, Limits limits = {});

  //! (1) E and M intersect exactly in the identities; (2) every commuting
  //! square u m = e v has exactly one diagonal d with e d = u and d m = v.
  Report verify_grandis_properties(SfsCategory const& A, Limits limits = {});

  struct SpannedOfs {
    std::vector<ArrowId> isos;
    //! Arrows e i with e in E and i an isomorphism.
    std::vector<ArrowId> e;
    //! Arrows i m with i an isomorphism and m in M.
    std::vector<ArrowId> m;
  };

  SpannedOfs spanned_ofs(SfsCategory const& A, Limits limits = {});

  std::vector<ArrowId> isomorphisms(FinCategory const& cat);

  //! Every hom-set of W has at most one arrow.
  bool is_thin(FinCategory const& cat, WideSubcategory const& W);

  //! Every E-arrow is epi and every M-arrow is mono in the whole category.
  bool is_proper(SfsCategory const& A, Limits limits = {});

  //! For every object a there is exactly one E-arrow zeta -> a and exactly
  //! one M-arrow a -> zeta.
  bool is_unital_at(SfsCategory const& A, ObjectId zeta);

  //! The first object at which A is unital, if any.
  std::optional<ObjectId> find_unit(SfsCategory const& A);

  //! The unique arrow of W in hom(a, b), or UNDEFINED when there are zero
  //! or several.
  ArrowId unique_arrow(FinCategory const& cat, WideSubcategory const& W,
                       ObjectId a, ObjectId b);

  struct CompletenessReport {
    //! Both square-completion conditions.
    bool squares;
    //! The characterisation through the unit, when A declares a unit at
    //! which it is unital.
    std::optional<bool> via_unit;
    std::string         witness;
  };

  //! Pre: \p fact is the factorization map of A (verify_sfs passed).
  CompletenessReport completeness(SfsCategory const&      A,
                                  FactorizationMap const& fact,
                                  Limits                  limits = {});

  //! Completeness by squares; when A is unital at its declared unit, also
  //! evaluates the unit characterisation and throws internal_disagreement
  //! if the two differ. Throws precondition_failed when A is not an SFS.
  bool is_complete(SfsCategory const& A, Limits limits = {});

}  // namespace sfscat

#endif  // SFSCAT_SFS_HPP_
