// sfscat - strict factorization systems and finite monoids
//
// Tests for enlargements, corner monoids and adjoint equivalences of
// monoids.

#include "oracles.hpp"
#include "sfscat/corpus.hpp"
#include "sfscat/morita.hpp"
#include "test_main.hpp"

namespace sfscat {

  namespace {
    Element labelled(FiniteSemigroup const& S, std::string const& label) {
      auto x = S.find_label(label);
      REQUIRE(x.has_value());
      return x.value_or(UNDEFINED);
    }
  }  // namespace

  SFSCAT_TEST_CASE("Morita", "000", "is_enlargement examples",
                   "[quick][morita]") {
    auto M = min_monoid(2);
    REQUIRE(is_enlargement(*M, M->one()));
    REQUIRE(!is_enlargement(*M, 0));
    REQUIRE(!is_enlargement(*M, 1));
    auto T3 = t_monoid(3);
    REQUIRE(is_enlargement(*T3, T3->one()));
    REQUIRE(!is_enlargement(*T3, labelled(*T3, "(1 2 2)")));
    // Without an identity, x e y can still cover everything.
    REQUIRE(is_enlargement(*left_zero_semigroup(2), 0));
    REQUIRE(!is_enlargement(*zero_semigroup(2), 0));
    REQUIRE_THROWS_KIND(is_enlargement(*T3, labelled(*T3, "(2 3 1)")),
                        not_idempotent);
    REQUIRE_THROWS_KIND(is_enlargement(*T3, 27), index_out_of_range);

    for (auto const& [name, S] : corpus_semigroups(6)) {
      for (Element e : idempotents(*S)) {
        REQUIRE(is_enlargement(*S, e)
                == oracle::is_enlargement(oracle::table(*S), e));
      }
    }
  }

  SFSCAT_TEST_CASE("Morita", "001", "corner monoids", "[quick][morita]") {
    auto T3 = t_monoid(3);
    auto c  = corner_monoid(T3, labelled(*T3, "(1 2 2)"));
    REQUIRE(c.monoid->size() == 4);
    REQUIRE(c.monoid->is_monoid());
    REQUIRE(c.embedding[c.monoid->one()] == labelled(*T3, "(1 2 2)"));
    REQUIRE(find_isomorphism(*c.monoid, *t_monoid(2)).has_value());
    REQUIRE(c.monoid->label(c.monoid->one()) == "(1 2 2)");
    for (Element i = 0; i < c.monoid->size(); ++i) {
      for (Element j = 0; j < c.monoid->size(); ++j) {
        REQUIRE(c.embedding[(*c.monoid)(i, j)]
                == (*T3)(c.embedding[i], c.embedding[j]));
      }
    }

    auto M  = min_monoid(3);
    auto cm = corner_monoid(M, 1);
    REQUIRE(cm.embedding == std::vector<Element>{0, 1});
    REQUIRE(cm.monoid->table() == min_monoid(1)->table());
    REQUIRE(cm.monoid->identity() == Element(1));
    REQUIRE(corner_monoid(M, M->one()).monoid->table() == M->table());
    REQUIRE_THROWS_KIND(corner_monoid(T3, labelled(*T3, "(2 3 1)")),
                        not_idempotent);
  }

  SFSCAT_TEST_CASE("Morita", "002", "equivalence from an enlargement",
                   "[quick][morita]") {
    auto One = trivial_monoid();
    auto p1  = equivalence_from_enlargement(One, 0, 0, 0);
    REQUIRE(verify_package(p1).passed());
    REQUIRE(p1.f.target->size() == 1);

    auto T3 = t_monoid(3);
    auto x  = labelled(*T3, "(2 3 1)");
    auto y  = labelled(*T3, "(3 1 2)");
    auto p  = equivalence_from_enlargement(T3, T3->one(), x, y);
    auto r  = verify_package(p);
    REQUIRE(r.passed());
    REQUIRE(r.passed("triangle identities"));
    REQUIRE(p.eta.alpha == x);
    REQUIRE(p.beta == y);
    REQUIRE(p.f.target->size() == 27);
    REQUIRE(invert_conjugation(p.eta).has_value());
    REQUIRE(invert_conjugation(p.eps).has_value());

    auto S3 = sym_group(3);
    for (Element s = 0; s < S3->size(); ++s) {
      Element inv = UNDEFINED;
      for (Element t = 0; t < S3->size(); ++t) {
        if ((*S3)(s, t) == S3->one()) {
          inv = t;
        }
      }
      auto ps = equivalence_from_enlargement(S3, S3->one(), s, inv);
      REQUIRE(verify_package(ps).passed());
      // f is conjugation by s
      for (Element m = 0; m < S3->size(); ++m) {
        REQUIRE(ps.g(ps.f(m)) == S3->product({inv, m, s}));
      }
    }

    REQUIRE_THROWS_KIND(equivalence_from_enlargement(T3, T3->one(), x, x),
                        precondition_failed);
    REQUIRE_THROWS_KIND(equivalence_from_enlargement(T3, x, x, y),
                        precondition_failed);
    REQUIRE_THROWS_KIND(equivalence_from_enlargement(T3, 27, x, y),
                        precondition_failed);
    REQUIRE_THROWS_KIND(
        equivalence_from_enlargement(zero_semigroup(2), 0, 0, 0),
        precondition_failed);
  }

  SFSCAT_TEST_CASE("Morita", "003", "enlargement from an equivalence",
                   "[quick][morita]") {
    auto T3 = t_monoid(3);
    auto p  = equivalence_from_enlargement(T3, T3->one(), labelled(*T3, "(2 3 1)"),
                                          labelled(*T3, "(3 1 2)"));
    auto w  = enlargement_from_equivalence(p);
    REQUIRE(w.e == T3->one());
    REQUIRE(is_enlargement(*T3, w.e));
    REQUIRE(is_isomorphism(*p.f.target, *w.corner.monoid, w.to_corner));
    for (Element m = 0; m < w.to_corner.size(); ++m) {
      REQUIRE(w.from_corner[w.to_corner[m]] == m);
    }

    auto tampered      = p;
    tampered.eps.alpha = p.f.target->one() == 0 ? 1 : 0;
    REQUIRE(!verify_package(tampered).passed());
    REQUIRE_THROWS_KIND(enlargement_from_equivalence(tampered),
                        verification_failed);
    auto swapped = p;
    swapped.beta = p.eta.alpha;
    REQUIRE(!verify_package(swapped).passed("eta beta = 1, beta eta = gf(1)"));
    REQUIRE_THROWS_KIND(enlargement_from_equivalence(swapped),
                        verification_failed);
    auto nonhom = p;
    nonhom.f.map[0] = (nonhom.f.map[0] + 1) % nonhom.f.map.size();
    REQUIRE(!verify_package(nonhom).passed("f homomorphism"));
  }

  SFSCAT_TEST_CASE("Morita", "004", "decide_morita", "[quick][morita]") {
    REQUIRE(!decide_morita(sym_group(2), trivial_monoid()).has_value());
    REQUIRE(!decide_morita(min_monoid(1), cyclic_group(2)).has_value());
    auto w = decide_morita(cyclic_group(3), cyclic_group(3));
    REQUIRE(w.has_value());
    REQUIRE(!w->in_second);
    REQUIRE(w->e == cyclic_group(3)->one());
    REQUIRE(w->iso.size() == 3);

    auto corpus = corpus_monoids(4);
    for (auto const& [an, A] : corpus) {
      for (auto const& [bn, B] : corpus) {
        auto d = decide_morita(A, B);
        REQUIRE(d.has_value()
                == oracle::isomorphic(oracle::table(*A), oracle::table(*B)));
        if (d) {
          auto const& src = d->in_second ? B : A;
          auto const& dst = d->in_second ? A : B;
          REQUIRE(is_enlargement(*src, d->e));
          REQUIRE(is_isomorphism(*d->corner.monoid, *dst, d->iso));
        }
      }
    }
  }

  SFSCAT_TEST_CASE("Morita", "005", "adjoint equivalences agree",
                   "[quick][morita]") {
    auto corpus = corpus_monoids(3);
    for (auto const& [an, A] : corpus) {
      for (auto const& [bn, B] : corpus) {
        auto p = find_adjoint_equivalence(A, B);
        REQUIRE(p.has_value() == decide_morita(A, B).has_value());
        if (p) {
          REQUIRE(verify_package(*p).passed());
          auto w = enlargement_from_equivalence(*p);
          REQUIRE(is_isomorphism(*B, *w.corner.monoid, w.to_corner));
        }
      }
    }
    auto p = find_adjoint_equivalence(sym_group(3), sym_group(3));
    REQUIRE(p.has_value());
    REQUIRE(check_triangle_identities(p->f, p->g, p->eta, p->eps, {true}));
  }

  SFSCAT_TEST_CASE("Morita", "006", "budget", "[quick][morita]") {
    REQUIRE_THROWS_KIND(decide_morita(t_monoid(2), t_monoid(2), 0),
                        budget_exceeded);
    REQUIRE_THROWS_KIND(find_adjoint_equivalence(sym_group(3), sym_group(3), 2),
                        budget_exceeded);
    REQUIRE(decide_morita(t_monoid(2), t_monoid(2), 3).has_value());
  }

}  // namespace sfscat
