// sfscat - strict factorization systems and finite monoids
//
// Transformations of {1, ..., k} and closure of a generating set into a
// FiniteSemigroup. Products compose left to right: (st)(x) = t(s(x)).

#ifndef SFSCAT_TRANSFORMATION_HPP_
#define SFSCAT_TRANSFORMATION_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semigroup.hpp"

namespace sfscat {

  class Transformation {
   public:
    //! \p images holds the 1-based images of 1, ..., k. Throws
    //! index_out_of_range if an image is outside 1..k.
    explicit Transformation(std::vector<std::uint32_t> images);

    static Transformation identity(std::size_t arity);

    std::size_t arity() const noexcept {
      return _images.size();
    }

    //! Image of the point \p x (both 1-based).
    std::uint32_t operator[](std::uint32_t x) const {
      return _images[x - 1];
    }

    std::vector<std::uint32_t> const& images() const noexcept {
      return _images;
    }

    std::size_t rank() const;

    //! Tuple notation, e.g. "(1 2 3 3)".
    std::string to_string() const;

    auto operator<=>(Transformation const&) const = default;

   private:
    std::vector<std::uint32_t> _images;
  };

  //! Left-to-right product: apply \p s first, then \p t.
  Transformation operator*(Transformation const& s, Transformation const& t);

  //! The elements of a generated transformation semigroup alongside its
  //! Cayley table.
  struct TransformationClosure {
    std::vector<Transformation>             elements;
    FiniteSemigroup                         semigroup;
    std::map<Transformation, Element>       index;

    std::optional<Element> find(Transformation const& t) const;
    //! Like find, but throws index_out_of_range when \p t is absent.
    Element at(Transformation const& t) const;
  };

  //! Breadth-first closure: the identity (if requested), then the
  //! generators, then products element * generator in discovery order.
  //! Throws arity_mismatch or closure_budget_exceeded.
  TransformationClosure
  close_transformations(std::size_t                        arity,
                        std::vector<Transformation> const& generators,
                        bool                               include_identity,
                        std::size_t budget = 1u << 16);

  FiniteSemigroup
  generate_transformation_monoid(std::size_t                        arity,
                                 std::vector<Transformation> const& generators,
                                 bool        include_identity,
                                 std::size_t budget = 1u << 16);

  //! All k^k transformations, in lexicographic order of image tuples.
  TransformationClosure full_transformation_monoid(std::size_t arity);

  //! All k! permutations, in lexicographic order.
  TransformationClosure symmetric_group(std::size_t arity);

}  // namespace sfscat

#endif  // SFSCAT_TRANSFORMATION_HPP_
