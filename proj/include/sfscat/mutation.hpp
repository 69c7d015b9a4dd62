// sfscat - strict factorization systems and finite monoids
//
// Small structural edits producing inputs on which the property checkers
// must fail: moving arrows in or out of E and M, overriding composites or
// identities, and passing to generated subcategories.

#ifndef SFSCAT_MUTATION_HPP_
#define SFSCAT_MUTATION_HPP_

#include <vector>

#include "category.hpp"

namespace sfscat {

  enum class Part { e, m };

  //! A copy of \p A with \p f added to E or M.
  SfsCategory with_arrow(SfsCategory const& A, Part part, ArrowId f);

  //! A copy of \p A with \p f removed from E or M.
  SfsCategory without_arrow(SfsCategory const& A, Part part, ArrowId f);

  //! An explicit-table copy of \p cat in which the composite fg is \p h.
  FinCategory with_composite(FinCategory const& cat, ArrowId f, ArrowId g,
                             ArrowId h);

  //! A copy of \p cat whose identity at \p a is declared to be \p f.
  FinCategory with_identity(FinCategory const& cat, ObjectId a, ArrowId f);

  struct Subcategory {
    SfsCategory sfs;
    //! Arrow i of the subcategory is arrow embedding[i] of the host.
    std::vector<ArrowId> embedding;
  };

  //! The wide subcategory generated by \p generators and the identities,
  //! with E and M intersected with it and the unit kept.
  Subcategory generated_subcategory(SfsCategory const&          A,
                                    std::vector<ArrowId> const& generators);

}  // namespace sfscat

#endif  // SFSCAT_MUTATION_HPP_
