// sfscat - strict factorization systems and finite monoids
//
// Tests for the Schutzenberger category D(S), its composition, the Freyd
// quotient and D-images of homomorphisms.

#include <map>

#include "oracles.hpp"
#include "sfscat/corpus.hpp"
#include "sfscat/functor.hpp"
#include "sfscat/schutzenberger.hpp"
#include "sfscat/sfs.hpp"
#include "test_main.hpp"

namespace sfscat {

  SFSCAT_TEST_CASE("DCategory", "000", "sizes", "[quick][schutzenberger]") {
    auto D1 = build_d_category(trivial_monoid());
    REQUIRE(D1->category().object_count() == 1);
    REQUIRE(D1->category().arrow_count() == 1);
    auto D = build_d_category(min_monoid(2));
    REQUIRE(D->category().object_count() == 3);
    REQUIRE(D->category().arrow_count() == 14);
    REQUIRE(D->sfs()->unit == Element(2));
    REQUIRE(build_d_category(sym_group(2))->category().arrow_count() == 8);
    REQUIRE(!build_d_category(zero_semigroup(3))->sfs()->unit.has_value());
  }

  SFSCAT_TEST_CASE("DCategory", "001", "arrows agree with the oracle",
                   "[quick][schutzenberger]") {
    for (auto const& [name, S] : corpus_semigroups(8)) {
      auto D        = build_d_category(S);
      auto triples  = oracle::d_triples(oracle::table(*S));
      auto const& C = D->category();
      REQUIRE(C.arrow_count() == triples.size());
      for (ArrowId f = 0; f < C.arrow_count(); ++f) {
        auto const& t = D->triple(f);
        REQUIRE(t.dom == triples[f][0]);
        REQUIRE(t.label == triples[f][1]);
        REQUIRE(t.cod == triples[f][2]);
        REQUIRE(C.dom(f) == t.dom);
        REQUIRE(C.cod(f) == t.cod);
        REQUIRE(green_leq(Side::right, t.label, t.dom, *S));
        REQUIRE(green_leq(Side::left, t.label, t.cod, *S));
        REQUIRE(D->find(t) == f);
        REQUIRE(D->arrow(t.dom, t.label, t.cod) == f);
        bool in_e = t.label == t.cod;
        bool in_m = t.label == t.dom;
        REQUIRE(D->sfs()->e.contains(f) == in_e);
        REQUIRE(D->sfs()->m.contains(f) == in_m);
      }
      for (Element a = 0; a < S->size(); ++a) {
        REQUIRE(D->triple(C.identity(a)) == DTriple{a, a, a});
      }
      REQUIRE(verify_category(C).passed());
      REQUIRE(verify_sfs(*D->sfs()).passed());
      REQUIRE(is_thin(C, D->sfs()->e));
      REQUIRE(is_thin(C, D->sfs()->m));
    }
  }

  SFSCAT_TEST_CASE("DCategory", "002", "compose_d examples",
                   "[quick][schutzenberger]") {
    auto S = min_monoid(2);
    REQUIRE(compose_d({2, 1, 1}, {1, 0, 0}, *S) == DTriple{2, 0, 0});
    auto T = t_monoid(3);
    auto D = build_d_category(T);
    for (ArrowId f = 0; f < D->category().arrow_count(); ++f) {
      auto const& t = D->triple(f);
      // (a,x,x)(x,x,b) = (a,x,b)
      REQUIRE(compose_d({t.dom, t.label, t.label}, {t.label, t.label, t.cod}, *T)
              == t);
      REQUIRE(compose_d({t.dom, t.dom, t.dom}, t, *T) == t);
      REQUIRE(compose_d(t, {t.cod, t.cod, t.cod}, *T) == t);
      // the unique factorization is the one through the label
      auto const& fact = verify_sfs(*D->sfs()).factorization;
      REQUIRE(D->triple(fact.e_part[f]) == DTriple{t.dom, t.label, t.label});
      REQUIRE(D->triple(fact.m_part[f]) == DTriple{t.label, t.label, t.cod});
      if (f > 40) {
        break;
      }
    }
    REQUIRE_THROWS_KIND(compose_d({2, 1, 1}, {2, 0, 0}, *S), not_composable);
  }

  SFSCAT_TEST_CASE("DCategory", "003", "composition against the oracle",
                   "[quick][schutzenberger]") {
    for (auto const& [name, S] : corpus_semigroups(5)) {
      auto        D = build_d_category(S, {true});
      auto const& C = D->category();
      auto const  t = oracle::table(*S);
      for (ArrowId f = 0; f < C.arrow_count(); ++f) {
        for (ArrowId g : C.out(C.cod(f))) {
          auto const& tf     = D->triple(f);
          auto const& tg     = D->triple(g);
          auto        labels = oracle::d_composite_labels(t, tf.label, tg.dom,
                                                   tg.label);
          REQUIRE(labels.size() == 1);
          auto h = C.compose(f, g);
          REQUIRE(D->triple(h) == DTriple{tf.dom, *labels.begin(), tg.cod});
          REQUIRE(compose_d(tf, tg, *S) == D->triple(h));
        }
      }
      auto r = check_witness_independence(*D);
      REQUIRE(r.independent);
      REQUIRE(r.witness.empty());
    }
  }

  SFSCAT_TEST_CASE("DCategory", "004", "witnesses and labels",
                   "[quick][schutzenberger]") {
    auto S = min_monoid(2);
    auto D = build_d_category(S);
    // 1 w = 0 for w = 0 only
    REQUIRE(D->witnesses(1, 0) == std::vector<Element>{0});
    REQUIRE(D->witness(1, 0) == 0);
    // 2 w = 2 for w = 2 only, 1 w = 1 for w = 1, 2
    REQUIRE(D->witnesses(1, 1) == std::vector<Element>{1, 2});
    REQUIRE(D->witness(1, 1) == 1);
    REQUIRE(D->witness(0, 1) == UNDEFINED);
    REQUIRE(D->label(D->arrow(2, 1, 1)) == "(2,1,1)");
    REQUIRE(D->category().arrow_label(D->arrow(2, 1, 1)) == "(2,1,1)");
    REQUIRE_THROWS_KIND(D->arrow(0, 1, 1), index_out_of_range);
    REQUIRE(!D->find({0, 1, 1}).has_value());
    REQUIRE(D->unital() == *S);

    // Non-monoids use S^1 = S with an adjoined identity.
    auto L  = left_zero_semigroup(2);
    auto DL = build_d_category(L);
    REQUIRE(DL->unital().size() == 3);
    REQUIRE(DL->witnesses(0, 0) == std::vector<Element>{0, 1, 2});
    REQUIRE(DL->semigroup() == L);

    DOptions unlabelled;
    unlabelled.label_limit = 3;
    auto DU                = build_d_category(S, unlabelled);
    REQUIRE(DU->category().arrow_labels().empty());
    REQUIRE(DU->label(DU->arrow(2, 1, 1)) == "(2,1,1)");
  }

  SFSCAT_TEST_CASE("DCategory", "005", "D(T(4)) by rule",
                   "[quick][schutzenberger]") {
    auto T = t_monoid(4);
    auto D = build_d_category(T);
    REQUIRE(D->category().arrow_count()
            == oracle::d_triples(oracle::table(*T)).size());
    REQUIRE(D->category().has_rule());
    REQUIRE(D->category().arrow_labels().empty());
    auto e = T->find_label("(1 2 3 3)");
    REQUIRE(e.has_value());
    ArrowId f = D->arrow(T->one(), *e, *e);
    ArrowId g = D->arrow(*e, *e, T->one());
    REQUIRE(D->triple(D->category().compose(f, g)) == DTriple{T->one(), *e, T->one()});
  }

  SFSCAT_TEST_CASE("Freyd", "006", "quotient examples",
                   "[quick][schutzenberger]") {
    auto Q1 = build_freyd_quotient(*trivial_monoid());
    REQUIRE(Q1.object_count() == 1);
    REQUIRE(Q1.arrow_count() == 1);
    auto M  = min_monoid(2);
    auto Q  = build_freyd_quotient(*M);
    REQUIRE(Q.arrow_count() == 14);
    REQUIRE(verify_category(Q).passed());
    auto D = build_d_category(M);
    REQUIRE(find_category_isomorphism(Q, D->category()).has_value());
    REQUIRE(build_freyd_quotient(*sym_group(2)).arrow_count() == 8);
    REQUIRE_THROWS_KIND(build_freyd_quotient(*zero_semigroup(2)), not_a_monoid);
    for (auto const& [name, S] : corpus_monoids(5)) {
      auto Qs = build_freyd_quotient(*S);
      REQUIRE(verify_category(Qs).passed());
      REQUIRE(Qs.arrow_count() == oracle::d_triples(oracle::table(*S)).size());
      REQUIRE(Qs.object_labels() == S->labels());
    }
  }

  SFSCAT_TEST_CASE("DFunctor", "007", "D-images of homomorphisms",
                   "[quick][schutzenberger]") {
    auto M  = t_monoid(2);
    auto DM = build_d_category(M);
    REQUIRE(d_functor(identity_homomorphism(M), DM, DM)
            == identity_functor(DM->sfs()));

    auto x  = s2_t4_example();
    auto Ds = build_d_category(x.s2);
    auto Dt = build_d_category(x.t4);
    auto G  = d_functor(x.g, Ds, Dt);
    auto F  = d_functor(x.f, Ds, Dt);
    REQUIRE(check_functor(G, {true, false, true}).passed());
    REQUIRE(!check_functor(G, {false, true, false}).passed("pointed"));
    REQUIRE(check_functor(F, {true, true, true}).passed());
    for (ArrowId a = 0; a < Ds->category().arrow_count(); ++a) {
      auto const& t = Ds->triple(a);
      REQUIRE(Dt->triple(G.arrow(a)) == DTriple{x.g(t.dom), x.g(t.label), x.g(t.cod)});
    }

    Homomorphism bad{x.s2, x.t4, {0, 1}};
    REQUIRE(!check_homomorphism(bad));
    REQUIRE_THROWS_KIND(d_functor(bad, Ds, Dt), invalid_homomorphism);
    REQUIRE_THROWS_KIND(d_functor(x.g, Dt, Ds), signature_mismatch);
    REQUIRE(d_functor(x.f).source->category.arrow_count() == 8);
  }

  SFSCAT_TEST_CASE("DFunctor", "008", "functoriality and flags on the corpus",
                   "[quick][schutzenberger]") {
    auto                        corpus = corpus_semigroups(3);
    std::map<std::string, DPtr> d;
    for (auto const& [name, S] : corpus) {
      d[name] = build_d_category(S);
    }
    for (auto const& [an, A] : corpus) {
      for (auto const& [bn, B] : corpus) {
        auto hab = enumerate_homomorphisms(A, B).homomorphisms;
        for (auto const& h : hab) {
          auto F = d_functor(h, d[an], d[bn]);
          REQUIRE(check_functor(F, {true, false, false}).passed());
          if (A->is_monoid() && B->is_monoid()) {
            bool pointed = check_functor(F, {false, true, false}).passed();
            REQUIRE(pointed == (h(A->one()) == B->one()));
            REQUIRE(check_functor(F, {false, false, true}).passed());
          }
          for (auto const& [cn, Cm] : corpus) {
            for (auto const& k : enumerate_homomorphisms(B, Cm).homomorphisms) {
              REQUIRE(d_functor(compose(k, h), d[an], d[cn])
                      == compose(d_functor(k, d[bn], d[cn]), F));
            }
          }
        }
      }
    }
  }

}  // namespace sfscat
