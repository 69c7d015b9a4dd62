// sfscat - strict factorization systems and finite monoids
//
// Built-in example structures: standard finite monoids, the power-set and
// min-chain factorization-system categories, small submonoids of T(3) and
// the homomorphisms S(2) -> T(4) with their conjugations.

#ifndef SFSCAT_CORPUS_HPP_
#define SFSCAT_CORPUS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "category.hpp"
#include "conjugation.hpp"
#include "homomorphism.hpp"
#include "semigroup.hpp"

namespace sfscat {

  struct ExampleSpec {
    std::string      name;
    std::vector<int> params;

    //! Accepts "name", "name(k)" and "name:k". Throws parse_error.
    static ExampleSpec parse(std::string_view text);
    std::string        to_string() const;
  };

  //! The homomorphisms f, g, h : S(2) -> T(4) sending (a b) to (a b 3 4),
  //! (a b 3 3) and (a b 4 4), the element alpha = (1 2 3 3), which is a
  //! conjugation f => g and an invertible conjugation h => g, and
  //! beta = (1 2 4 4), which inverts the latter.
  struct S2T4Example {
    SemigroupPtr s2;
    SemigroupPtr t4;
    Homomorphism f;
    Homomorphism g;
    Homomorphism h;
    Element      alpha;
    Element      beta;
    Conjugation  alpha_fg;
    Conjugation  alpha_hg;
    Conjugation  beta_gh;
  };

  using Example = std::variant<SemigroupPtr, SfsPtr, S2T4Example>;

  struct RegisteredExample {
    std::string name;
    //! Parameter range; has_param is false for parameterless entries.
    bool        has_param;
    int         min_param;
    int         max_param;
    std::string description;
  };

  std::vector<RegisteredExample> const& registered_examples();

  //! Throws unknown_example, param_out_of_range, or unsupported for
  //! entries registered only for documentation.
  Example build_example(ExampleSpec const& spec);

  SemigroupPtr trivial_monoid();
  //! Z/n under addition.
  SemigroupPtr cyclic_group(std::size_t n);
  //! {0, ..., n} under min, identity n.
  SemigroupPtr min_monoid(std::size_t n);
  SemigroupPtr sym_group(std::size_t k);
  SemigroupPtr t_monoid(std::size_t k);
  //! {0, ..., n - 1} with x y = x (no identity for n >= 2).
  SemigroupPtr left_zero_semigroup(std::size_t n);
  //! {0, ..., n - 1} with x y = 0 (no identity for n >= 2).
  SemigroupPtr zero_semigroup(std::size_t n);

  //! Subsets of {1..k} as objects (indexed by bitmask), all functions
  //! between them as arrows, E the surjections and M the inclusions.
  SfsPtr powerset_category(std::size_t k);

  //! Objects 0..n, arrows a -x-> b for x <= min(a, b), composite label
  //! min(x, y); E(a, b) = {b} if b <= a, M(a, b) = {a} if a <= b; unit n.
  SfsPtr chain_min_category(std::size_t n);

  //! The submonoids of T(3) (containing its identity) with at most
  //! \p max_size elements, one per isomorphism class, smallest first.
  std::vector<SemigroupPtr> t3_submonoids(std::size_t max_size = 4);

  S2T4Example s2_t4_example();

  struct NamedSemigroup {
    std::string  name;
    SemigroupPtr semigroup;
  };

  //! Every corpus monoid of at most \p max_size elements, without repeats
  //! of the one-element monoid.
  std::vector<NamedSemigroup> corpus_monoids(std::size_t max_size);

  //! corpus_monoids plus the corpus semigroups without identity.
  std::vector<NamedSemigroup> corpus_semigroups(std::size_t max_size);

}  // namespace sfscat

#endif  // SFSCAT_CORPUS_HPP_
