// sfscat - strict factorization systems and finite monoids
//
// The Schutzenberger category D(S) of a finite semigroup S: objects are the
// elements of S and the arrows a -> b are the triples (a, x, b) with x in
// aS^1 and in S^1b. E consists of the arrows (a, x, x) and M of the arrows
// (x, x, b); when S is a monoid its identity is the unit object.
//
// This file also contains the quotient of the arrow category of the
// delooping of a monoid used as an independent construction of D(M), and
// the functor D(h) of a homomorphism h.

#ifndef SFSCAT_SCHUTZENBERGER_HPP_
#define SFSCAT_SCHUTZENBERGER_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "category.hpp"
#include "functor.hpp"
#include "homomorphism.hpp"
#include "semigroup.hpp"

namespace sfscat {

  struct DTriple {
    Element dom;
    Element label;
    Element cod;

    friend bool operator==(DTriple const&, DTriple const&) = default;
  };

  struct DOptions {
    //! Every composite is computed with every admissible witness and an
    //! internal_disagreement error is thrown if the labels differ.
    bool verify_witnesses = false;
    //! Arrow labels "(a,x,b)" are stored when there are at most this many
    //! arrows.
    std::size_t label_limit = 100'000;
  };

  class DCategory {
   public:
    struct Data;

    SemigroupPtr const& semigroup() const noexcept;
    //! S^1, whose extra element (if any) has index size().
    FiniteSemigroup const& unital() const noexcept;

    SfsPtr const& sfs() const noexcept {
      return _sfs;
    }

    FinCategory const& category() const noexcept {
      return _sfs->category;
    }

    DTriple const& triple(ArrowId f) const;

    std::optional<ArrowId> find(DTriple const& t) const;
    //! The arrow (a, x, b); throws index_out_of_range if it is not one.
    ArrowId arrow(Element a, Element x, Element b) const;

    //! "(a,x,b)" with the element labels of the semigroup.
    std::string label(ArrowId f) const;

    //! The least w in S^1 with b w = y, or UNDEFINED.
    Element witness(Element b, Element y) const;
    //! Every w in S^1 with b w = y, in increasing order.
    std::vector<Element> witnesses(Element b, Element y) const;

    explicit DCategory(std::shared_ptr<Data const> data, SfsPtr sfs)
        : _data(std::move(data)), _sfs(std::move(sfs)) {}

   private:
    std::shared_ptr<Data const> _data;
    SfsPtr                      _sfs;
  };

  using DPtr = std::shared_ptr<DCategory const>;

  DPtr build_d_category(SemigroupPtr const& S, DOptions options = {});

  //! The composite of (a, x, b) and (b, y, c): (a, x w, c) for the least
  //! witness w in S^1 with b w = y. Throws not_composable if f.cod != g.dom
  //! or the arguments are not arrows of D(S).
  DTriple compose_d(DTriple const& f, DTriple const& g,
                    FiniteSemigroup const& S);

  struct WitnessReport {
    bool        independent;
    std::size_t pairs_checked;
    std::string witness;
  };

  //! Evaluates every composable pair of D(S) under every admissible witness.
  WitnessReport check_witness_independence(DCategory const& D);

  //! Objects are the elements of M; the arrows a -> b are the classes of
  //! pairs (u, v) with u b = a v, two pairs being identified when a v and
  //! u b agree; (u, v)(r, w) = (ur, vw). Throws not_a_monoid.
  FinCategory build_freyd_quotient(FiniteSemigroup const& M);

  //! D(h) : D(S) -> D(T), (a, x, b) |-> (h(a), h(x), h(b)). Throws
  //! invalid_homomorphism unless h is a semigroup homomorphism.
  Functor d_functor(Homomorphism const& h, DPtr const& source,
                    DPtr const& target);
  Functor d_functor(Homomorphism const& h, DOptions options = {});

}  // namespace sfscat

#endif  // SFSCAT_SCHUTZENBERGER_HPP_
