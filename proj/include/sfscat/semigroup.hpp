// sfscat - strict factorization systems and finite monoids
//
// This file contains the declaration of FiniteSemigroup, a semigroup given
// by its Cayley table, together with the elementary structural queries used
// throughout the library (Green's preorders, idempotents, ...).

#ifndef SFSCAT_SEMIGROUP_HPP_
#define SFSCAT_SEMIGROUP_HPP_

#include <array>
#include <initializer_list>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace sfscat {

  //! A finite semigroup on the carrier {0, ..., n - 1}.
  //!
  //! Row i of the Cayley table holds the products i * j. Instances are
  //! immutable once constructed and always satisfy the semigroup axioms:
  //! the constructor rejects tables that are not associative and identities
  //! that do not act as a two-sided unit.
  class FiniteSemigroup {
   public:
    //! Validates \p table and builds the semigroup. When \p identity is
    //! empty an identity is searched for and recorded if one exists.
    //!
    //! Throws Error with kind shape_mismatch (empty or non-square table),
    //! index_out_of_range, non_associative (the message names a witness
    //! triple) or bad_identity.
    FiniteSemigroup(std::vector<std::vector<Element>> const& table,
                    std::optional<Element>                  identity = {},
                    std::vector<std::string>                labels   = {});

    //! Same as above from a flat row-major table of size n * n.
    FiniteSemigroup(std::size_t                n,
                    std::vector<Element>       flat_table,
                    std::optional<Element>     identity = {},
                    std::vector<std::string>   labels   = {});

    std::size_t size() const noexcept {
      return _size;
    }

    Element product(Element a, Element b) const noexcept {
      return _table[a * _size + b];
    }

    Element operator()(Element a, Element b) const noexcept {
      return product(a, b);
    }

    //! Product of a nonempty sequence, left to right.
    Element product(std::initializer_list<Element> factors) const;

    std::span<Element const> row(Element a) const noexcept {
      return {_table.data() + a * _size, _size};
    }

    std::vector<Element> const& table() const noexcept {
      return _table;
    }

    std::optional<Element> identity() const noexcept {
      return _identity;
    }

    bool is_monoid() const noexcept {
      return _identity.has_value();
    }

    //! The identity; throws not_a_monoid when there is none.
    Element one() const;

    bool has_labels() const noexcept {
      return !_labels.empty();
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    //! The display label of \p a (its index when no labels are stored).
    std::string label(Element a) const;

    //! Element with the given label, if any.
    std::optional<Element> find_label(std::string const& label) const;

    bool is_idempotent(Element a) const noexcept {
      return product(a, a) == a;
    }

    friend bool operator==(FiniteSemigroup const&, FiniteSemigroup const&)
        = default;

   private:
    void validate();

    std::size_t              _size;
    std::vector<Element>     _table;
    std::optional<Element>   _identity;
    std::vector<std::string> _labels;
  };

  using SemigroupPtr = std::shared_ptr<FiniteSemigroup const>;

  template <typename... Args>
  SemigroupPtr make_semigroup(Args&&... args) {
    return std::make_shared<FiniteSemigroup const>(std::forward<Args>(args)...);
  }

  //! Validated construction from a table; detects the identity when it is
  //! not supplied.
  FiniteSemigroup make_from_table(std::vector<std::vector<Element>> const& table,
                                  std::optional<Element> identity = {});

  //! First triple (a, b, c) with (ab)c != a(bc), scanning in index order.
  std::optional<std::array<Element, 3>>
  find_nonassociative_triple(std::size_t n, std::span<Element const> table);

  //! S^1: \p S itself if it already has an identity, otherwise S with a new
  //! identity appended as element n.
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S);

  enum class Side { left, right };

  //! Green's preorders: side left is x in S^1 y, side right is x in y S^1.
  bool green_leq(Side side, Element x, Element y, FiniteSemigroup const& S);

  //! Indicator vector of the principal ideal S^1 y (left) or y S^1 (right).
  std::vector<char> principal_ideal(Side side, Element y,
                                    FiniteSemigroup const& S);

  std::vector<Element> idempotents(FiniteSemigroup const& S);

  //! A pair (x, y) with e = xy and f = yx if one exists. Throws
  //! not_idempotent if either argument is not idempotent.
  std::optional<std::pair<Element, Element>>
  isomorphic_idempotents(Element e, Element f, FiniteSemigroup const& S);

  //! A greedy generating set in element order.
  std::vector<Element> generating_set(FiniteSemigroup const& S);

  //! Index and period of the monogenic subsemigroup generated by \p a.
  std::pair<std::size_t, std::size_t> index_and_period(Element a,
                                                       FiniteSemigroup const& S);

}  // namespace sfscat

#endif  // SFSCAT_SEMIGROUP_HPP_
