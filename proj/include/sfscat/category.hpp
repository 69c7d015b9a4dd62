// sfscat - strict factorization systems and finite monoids
//
// This file contains FinCategory (a finite category with explicit objects and
// arrows), its builder, and the wide subcategories and strict factorization
// data layered on top of it.

#ifndef SFSCAT_CATEGORY_HPP_
#define SFSCAT_CATEGORY_HPP_

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "types.hpp"

namespace sfscat {

  struct ArrowEnds {
    ObjectId dom;
    ObjectId cod;

    friend bool operator==(ArrowEnds const&, ArrowEnds const&) = default;
  };

  class FinCategory;

  //! Computes composites for categories whose composition follows a formula
  //! rather than a stored table (Schutzenberger categories, for instance).
  class CompositionRule {
   public:
    virtual ~CompositionRule() = default;
    //! The composite fg (f first), or UNDEFINED.
    virtual ArrowId compose(FinCategory const& cat, ArrowId f,
                            ArrowId g) const = 0;
  };

  //! A finite category. Arrows are numbered 0..arrow_count()-1; composition
  //! is written in diagrammatic order, so compose(f, g) is "f then g" and
  //! requires cod(f) = dom(g).
  //!
  //! The composition of a FinCategory is either a table over all composable
  //! pairs (possibly with holes, which verify_category reports) or a
  //! CompositionRule.
  class FinCategory {
   public:
    std::size_t object_count() const noexcept {
      return _objects;
    }

    std::size_t arrow_count() const noexcept {
      return _ends.size();
    }

    ArrowEnds ends(ArrowId f) const {
      return _ends[f];
    }

    ObjectId dom(ArrowId f) const {
      return _ends[f].dom;
    }

    ObjectId cod(ArrowId f) const {
      return _ends[f].cod;
    }

    ArrowId identity(ObjectId a) const {
      return _identities[a];
    }

    bool is_identity(ArrowId f) const {
      return _identities[_ends[f].dom] == f;
    }

    //! Arrows a -> b in increasing index order.
    std::span<ArrowId const> hom(ObjectId a, ObjectId b) const {
      auto const& v = _hom[a * _objects + b];
      return {v.data(), v.size()};
    }

    //! Arrows with domain a in increasing index order.
    std::span<ArrowId const> out(ObjectId a) const {
      return {_out[a].data(), _out[a].size()};
    }

    //! Arrows with codomain b in increasing index order.
    std::span<ArrowId const> in(ObjectId b) const {
      return {_in[b].data(), _in[b].size()};
    }

    bool composable(ArrowId f, ArrowId g) const {
      return _ends[f].cod == _ends[g].dom;
    }

    //! The composite fg, or UNDEFINED when the table has a hole. Throws
    //! not_composable when cod f != dom g.
    ArrowId try_compose(ArrowId f, ArrowId g) const;

    //! The composite fg. Throws not_composable for mismatched ends and when
    //! the composite is not defined.
    ArrowId compose(ArrowId f, ArrowId g) const;

    //! Composite of a nonempty path.
    ArrowId compose(std::initializer_list<ArrowId> path) const;

    bool has_rule() const noexcept {
      return static_cast<bool>(_rule);
    }

    std::shared_ptr<CompositionRule const> const& rule() const noexcept {
      return _rule;
    }

    //! Number of composable pairs (the size of a full composition table).
    std::size_t composable_pair_count() const noexcept {
      return _pairs;
    }

    std::vector<std::string> const& object_labels() const noexcept {
      return _object_labels;
    }

    std::vector<std::string> const& arrow_labels() const noexcept {
      return _arrow_labels;
    }

    std::string object_label(ObjectId a) const;
    std::string arrow_label(ArrowId f) const;

   private:
    friend class CategoryBuilder;

    std::size_t table_index(ArrowId f, ArrowId g) const {
      return _pair_offset[f] + _out_pos[g];
    }

    void index();

    std::size_t                            _objects = 0;
    std::vector<ArrowEnds>                 _ends;
    std::vector<ArrowId>                   _identities;
    std::vector<std::vector<ArrowId>>      _hom;
    std::vector<std::vector<ArrowId>>      _out;
    std::vector<std::vector<ArrowId>>      _in;
    std::vector<std::uint32_t>             _out_pos;
    std::vector<std::size_t>               _pair_offset;
    std::size_t                            _pairs = 0;
    std::vector<ArrowId>                   _table;
    std::shared_ptr<CompositionRule const> _rule;
    std::vector<std::string>               _object_labels;
    std::vector<std::string>               _arrow_labels;
  };

  //! Incremental construction of a FinCategory.
  class CategoryBuilder {
   public:
    explicit CategoryBuilder(std::size_t objects);

    //! Starts from an existing category; with \p keep_table the composites
    //! of \p cat are copied (materialised from its rule if it has one).
    explicit CategoryBuilder(FinCategory const& cat, bool keep_table = true);

    ArrowId add_arrow(ObjectId dom, ObjectId cod, std::string label = {});
    void    set_identity(ObjectId a, ArrowId f);
    //! Records fg = h. Throws not_composable if cod f != dom g and
    //! index_out_of_range for unknown arrows.
    void set_composite(ArrowId f, ArrowId g, ArrowId h);
    void set_object_label(ObjectId a, std::string label);

    std::size_t arrow_count() const noexcept {
      return _ends.size();
    }

    //! Builds a category with a composition table; every identity must have
    //! been set (bad_identity otherwise).
    FinCategory build() &&;
    //! Builds a category whose composition is computed by \p rule.
    FinCategory build(std::shared_ptr<CompositionRule const> rule) &&;

   private:
    struct Composite {
      ArrowId f, g, h;
    };

    std::size_t              _objects;
    std::vector<ArrowEnds>   _ends;
    std::vector<ArrowId>     _identities;
    std::vector<Composite>   _composites;
    std::vector<std::string> _object_labels;
    std::vector<std::string> _arrow_labels;
  };

  //! A set of arrows of a host category, intended to be a wide subcategory.
  //! Containing every identity and being closed under composition are
  //! properties checked by verify_sfs, not enforced here.
  class WideSubcategory {
   public:
    WideSubcategory() = default;
    WideSubcategory(std::size_t host_arrows, std::vector<ArrowId> arrows);

    bool contains(ArrowId f) const {
      return f < _member.size() && _member[f];
    }

    std::vector<ArrowId> const& arrows() const noexcept {
      return _arrows;
    }

    std::size_t size() const noexcept {
      return _arrows.size();
    }

    WideSubcategory with(ArrowId f) const;
    WideSubcategory without(ArrowId f) const;

    friend bool operator==(WideSubcategory const& a, WideSubcategory const& b) {
      return a._arrows == b._arrows;
    }

   private:
    std::vector<char>    _member;
    std::vector<ArrowId> _arrows;
  };

  //! A category together with a candidate strict factorization system (E, M)
  //! and an optional unit object.
  struct SfsCategory {
    FinCategory             category;
    WideSubcategory         e;
    WideSubcategory         m;
    std::optional<ObjectId> unit;
  };

  using SfsPtr = std::shared_ptr<SfsCategory const>;

  inline SfsPtr share(SfsCategory A) {
    return std::make_shared<SfsCategory const>(std::move(A));
  }

  //! An explicit-table copy of \p cat, which must have at most \p pair_cap
  //! composable pairs (budget_exceeded otherwise).
  FinCategory materialize(FinCategory const& cat, std::size_t pair_cap);

  //! One-object category of a monoid: arrows are elements, composition is
  //! the product (requires an identity; the element order is kept).
  class FiniteSemigroup;
  FinCategory delooping(FiniteSemigroup const& M);

}  // namespace sfscat

#endif  // SFSCAT_CATEGORY_HPP_
