// sfscat - strict factorization systems and finite monoids
//
// Tests for finite categories, strict factorization systems and their
// properties, functors and natural transformations.

#include <map>
#include <numeric>

#include "oracles.hpp"
#include "sfscat/corpus.hpp"
#include "sfscat/functor.hpp"
#include "sfscat/mutation.hpp"
#include "sfscat/schutzenberger.hpp"
#include "sfscat/sfs.hpp"
#include "test_main.hpp"

namespace sfscat {

  namespace {
    ArrowId by_label(FinCategory const& C, std::string const& label) {
      for (ArrowId f = 0; f < C.arrow_count(); ++f) {
        if (C.arrow_label(f) == label) {
          return f;
        }
      }
      FAIL("no arrow labelled " << label);
      return UNDEFINED;
    }

    // The one-object category of M with E = identities and M = everything.
    SfsPtr deloop(SemigroupPtr const& M) {
      auto                 C = delooping(*M);
      std::vector<ArrowId> all(C.arrow_count());
      std::iota(all.begin(), all.end(), 0);
      WideSubcategory e(C.arrow_count(), {C.identity(0)});
      WideSubcategory m(C.arrow_count(), all);
      return share({std::move(C), e, m, ObjectId(0)});
    }
  }  // namespace

  SFSCAT_TEST_CASE("FinCategory", "000", "verify_category examples",
                   "[quick][category]") {
    REQUIRE(verify_category(delooping(*trivial_monoid())).passed());
    auto chain = chain_min_category(2);
    auto r     = verify_category(chain->category);
    REQUIRE(r.passed());
    REQUIRE(r.passed("identities"));
    REQUIRE(r.passed("composition"));
    REQUIRE(r.passed("unit laws"));
    REQUIRE(r.passed("associativity"));
    REQUIRE_THROWS_AS(r.passed("no such check"), std::out_of_range);

    auto const& C    = chain->category;
    ArrowId     f101 = by_label(C, "(1,0,1)");
    auto        bad  = with_identity(C, 1, f101);
    auto        rb   = verify_category(bad);
    REQUIRE(!rb.passed());
    REQUIRE(!rb.passed("unit laws"));
    REQUIRE(!rb.find("unit laws")->witness.empty());
  }

  SFSCAT_TEST_CASE("FinCategory", "001", "composition table defects",
                   "[quick][category]") {
    auto const  holder = chain_min_category(2);
    auto const& C   = holder->category;
    ArrowId     f   = by_label(C, "(2,1,1)");
    ArrowId     g   = by_label(C, "(1,1,2)");
    ArrowId     bad = by_label(C, "(2,0,2)");
    // (2,1,1)(1,1,2) = (2,1,2); claiming (2,0,2) breaks associativity.
    REQUIRE(C.compose(f, g) == by_label(C, "(2,1,2)"));
    auto mutated = with_composite(C, f, g, bad);
    REQUIRE(mutated.compose(f, g) == bad);
    REQUIRE(!verify_category(mutated).passed());

    CategoryBuilder b(2);
    ArrowId         i0 = b.add_arrow(0, 0);
    ArrowId         i1 = b.add_arrow(1, 1);
    ArrowId         h  = b.add_arrow(0, 1);
    b.set_identity(0, i0);
    b.set_identity(1, i1);
    b.set_composite(i0, h, h);
    auto holes = std::move(b).build();
    REQUIRE(holes.try_compose(h, i1) == UNDEFINED);
    REQUIRE_THROWS_KIND(holes.compose(h, i1), not_composable);
    REQUIRE_THROWS_KIND(holes.try_compose(h, i0), not_composable);
    auto r = verify_category(holes);
    REQUIRE(!r.passed("composition"));

    CategoryBuilder nb(1);
    nb.add_arrow(0, 0);
    REQUIRE_THROWS_KIND(std::move(nb).build(), bad_identity);
  }

  SFSCAT_TEST_CASE("FinCategory", "002", "arrow cap", "[quick][category]") {
    auto const  holder = chain_min_category(4);
    auto const& C = holder->category;
    REQUIRE_THROWS_KIND(verify_category(C, Limits{10}), budget_exceeded);
    REQUIRE(materialize(C, 1'000'000).arrow_count() == C.arrow_count());
    REQUIRE_THROWS_KIND(materialize(C, 3), budget_exceeded);
  }

  SFSCAT_TEST_CASE("SfsCategory", "003", "verify_sfs examples",
                   "[quick][sfs]") {
    auto P = powerset_category(2);
    REQUIRE(P->category.object_count() == 4);
    // Functions between subsets of {1,2}: sum over |A|, |B| of |B|^|A|.
    REQUIRE(P->category.arrow_count() == 4 + 2 * 4 + 6);
    auto sp = verify_sfs(*P);
    REQUIRE(sp.passed());

    auto chain = chain_min_category(3);
    auto sc    = verify_sfs(*chain);
    REQUIRE(sc.passed());
    auto const& C = chain->category;
    for (ArrowId f = 0; f < C.arrow_count(); ++f) {
      // a -x-> b factors as a -x-> x -x-> b.
      auto   label = C.arrow_label(f);
      ArrowId e    = sc.factorization.e_part[f];
      ArrowId m    = sc.factorization.m_part[f];
      REQUIRE(C.compose(e, m) == f);
      REQUIRE(chain->e.contains(e));
      REQUIRE(chain->m.contains(m));
      REQUIRE(oracle::factorization_count(*chain, f) == 1);
      ObjectId x = sc.factorization.middle(C, f);
      REQUIRE(label.find("," + std::to_string(x) + ",") != std::string::npos);
    }

    SfsCategory swapped{C, chain->m, chain->e, chain->unit};
    auto        ss = verify_sfs(swapped);
    REQUIRE(!ss.passed());
    REQUIRE(!ss.report.passed("unique factorization"));
  }

  SFSCAT_TEST_CASE("SfsCategory", "004", "verify_sfs failures",
                   "[quick][sfs]") {
    auto const  A = chain_min_category(2);
    auto const& C = A->category;
    ArrowId     e = by_label(C, "(2,1,1)");
    ArrowId     m = by_label(C, "(1,1,2)");
    auto no_id    = without_arrow(*A, Part::e, C.identity(0));
    REQUIRE(!verify_sfs(no_id).report.passed("E contains identities"));
    auto no_m     = without_arrow(*A, Part::m, m);
    REQUIRE(!verify_sfs(no_m).report.passed("unique factorization"));
    auto open_e   = without_arrow(*A, Part::e, by_label(C, "(2,0,0)"));
    REQUIRE(!verify_sfs(open_e).report.passed("E closed"));
    auto extra    = with_arrow(*A, Part::e, m);
    REQUIRE(!verify_sfs(extra).report.passed("unique factorization"));
    REQUIRE(extra.e.contains(m));
    REQUIRE(!no_m.m.contains(m));
    REQUIRE(with_arrow(*A, Part::m, e).m.contains(e));
  }

  SFSCAT_TEST_CASE("SfsCategory", "005", "Grandis properties",
                   "[quick][sfs]") {
    for (auto const& [name, M] : corpus_monoids(6)) {
      auto D = build_d_category(M);
      auto r = verify_grandis_properties(*D->sfs());
      REQUIRE(r.passed("E and M meet in identities"));
      REQUIRE(r.passed("orthogonality"));
    }
    for (std::size_t k = 0; k <= 2; ++k) {
      REQUIRE(verify_grandis_properties(*powerset_category(k)).passed());
    }
    for (std::size_t n = 0; n <= 4; ++n) {
      REQUIRE(verify_grandis_properties(*chain_min_category(n)).passed());
    }
    auto const  A     = chain_min_category(2);
    ArrowId     m     = by_label(A->category, "(1,1,2)");
    auto        extra = with_arrow(*A, Part::e, m);
    auto        r     = verify_grandis_properties(extra);
    REQUIRE(!r.passed("E and M meet in identities"));
  }

  SFSCAT_TEST_CASE("SfsCategory", "006", "isomorphisms and spanned OFS",
                   "[quick][sfs]") {
    auto chain = chain_min_category(3);
    auto so    = spanned_ofs(*chain);
    REQUIRE(so.e == chain->e.arrows());
    REQUIRE(so.m == chain->m.arrows());
    REQUIRE(so.isos.size() == chain->category.object_count());

    auto D  = build_d_category(sym_group(2));
    auto sd = spanned_ofs(*D->sfs());
    REQUIRE(D->category().arrow_count() == 8);
    REQUIRE(sd.isos.size() == 8);  // every arrow of D(group) is invertible
    REQUIRE(sd.e.size() > D->sfs()->e.size());
    for (ArrowId f : D->sfs()->e.arrows()) {
      REQUIRE(std::find(sd.e.begin(), sd.e.end(), f) != sd.e.end());
    }

    auto P1 = powerset_category(1);
    auto sp = spanned_ofs(*P1);
    REQUIRE(sp.isos.size() == 2);
    REQUIRE(sp.e == P1->e.arrows());
    REQUIRE(sp.m == P1->m.arrows());
  }

  SFSCAT_TEST_CASE("SfsCategory", "007", "thin, proper, unital",
                   "[quick][sfs]") {
    auto P2 = powerset_category(2);
    REQUIRE(is_thin(P2->category, P2->m));
    REQUIRE(!is_thin(P2->category, P2->e));
    REQUIRE(is_proper(*P2));
    REQUIRE(!P2->unit.has_value());
    REQUIRE(!find_unit(*P2).has_value());
    auto P1 = powerset_category(1);
    REQUIRE(is_thin(P1->category, P1->e));
    REQUIRE(is_proper(*P1));
    REQUIRE(!is_unital_at(*P1, 1));  // X = {1}
    REQUIRE(!find_unit(*P1).has_value());
    REQUIRE(is_unital_at(*powerset_category(0), 0));

    auto one = deloop(trivial_monoid());
    REQUIRE(is_thin(one->category, one->e));
    REQUIRE(is_thin(one->category, one->m));
    REQUIRE(is_unital_at(*one, 0));

    for (std::size_t n = 0; n <= 6; ++n) {
      auto C = chain_min_category(n);
      REQUIRE(C->unit == ObjectId(n));
      REQUIRE(is_unital_at(*C, ObjectId(n)));
      REQUIRE(find_unit(*C) == ObjectId(n));
      if (n > 0) {
        REQUIRE(!is_unital_at(*C, 0));
      }
      REQUIRE(is_proper(*C));
    }
    // identity-only E and M are proper in any category
    auto const  holder = chain_min_category(2);
    auto const&     C = holder->category;
    std::vector<ArrowId> ids;
    for (ObjectId a = 0; a < C.object_count(); ++a) {
      ids.push_back(C.identity(a));
    }
    std::sort(ids.begin(), ids.end());
    SfsCategory trivial{C, WideSubcategory(C.arrow_count(), ids),
                        WideSubcategory(C.arrow_count(), ids), std::nullopt};
    REQUIRE(is_proper(trivial));
    // thin E and M imply proper on the corpus
    for (auto const& [name, M] : corpus_monoids(6)) {
      auto const  D = build_d_category(M);
      auto const& A = *D->sfs();
      REQUIRE(is_thin(A.category, A.e));
      REQUIRE(is_thin(A.category, A.m));
      REQUIRE(is_proper(A));
    }
  }

  SFSCAT_TEST_CASE("SfsCategory", "008", "completeness", "[quick][sfs]") {
    for (std::size_t k = 0; k <= 2; ++k) {
      REQUIRE(is_complete(*powerset_category(k)));
    }
    for (std::size_t n = 0; n <= 6; ++n) {
      auto C = chain_min_category(n);
      auto s = verify_sfs(*C);
      auto c = completeness(*C, s.factorization);
      REQUIRE(c.squares);
      REQUIRE(c.via_unit == true);
      REQUIRE(is_complete(*C));
    }
    // Keep only what (1,0,0) in E and (1,1,2) in M generate: the cospan
    // 1 -> 0, 1 -> 2 has no completing square.
    auto const  A   = chain_min_category(2);
    auto const& C   = A->category;
    auto        sub = generated_subcategory(
        *A, {by_label(C, "(1,0,0)"), by_label(C, "(1,1,2)")});
    REQUIRE(verify_category(sub.sfs.category).passed());
    REQUIRE(verify_sfs(sub.sfs).passed());
    REQUIRE(!is_complete(sub.sfs));
    auto c = completeness(sub.sfs, verify_sfs(sub.sfs).factorization);
    REQUIRE(!c.squares);
    REQUIRE(!c.witness.empty());

    auto swapped = SfsCategory{C, A->m, A->e, A->unit};
    REQUIRE_THROWS_KIND(is_complete(swapped), precondition_failed);
  }

  SFSCAT_TEST_CASE("SfsCategory", "009", "unique_arrow", "[quick][sfs]") {
    auto const  P = powerset_category(2);
    auto const& C = P->category;
    // Two surjections {1,2} -> {1,2}, one inclusion {} -> {1,2}.
    REQUIRE(unique_arrow(C, P->e, 3, 3) == UNDEFINED);
    REQUIRE(unique_arrow(C, P->m, 0, 3) != UNDEFINED);
    REQUIRE(unique_arrow(C, P->m, 3, 0) == UNDEFINED);
  }

  SFSCAT_TEST_CASE("Functor", "010", "check_functor flags",
                   "[quick][functor]") {
    auto D2 = build_d_category(t_monoid(2));
    auto r  = check_functor(identity_functor(D2->sfs()),
                            {true, true, true});
    REQUIRE(r.passed());
    REQUIRE(r.passed("sfs preserving"));
    REQUIRE(r.passed("pointed"));
    REQUIRE(r.passed("semi-pointed"));

    auto x  = s2_t4_example();
    auto Ds = build_d_category(x.s2);
    auto Dt = build_d_category(x.t4);
    auto G  = d_functor(x.g, Ds, Dt);
    auto rg = check_functor(G, {true, true, true});
    REQUIRE(rg.passed("composition"));
    REQUIRE(rg.passed("sfs preserving"));
    REQUIRE(rg.passed("semi-pointed"));
    REQUIRE(!rg.passed("pointed"));
    auto F  = d_functor(x.f, Ds, Dt);
    REQUIRE(check_functor(F, {true, true, true}).passed());

    auto P = powerset_category(1);
    REQUIRE_THROWS_KIND(check_functor(identity_functor(P), {false, true, false}),
                        missing_unit);
    REQUIRE(check_functor(identity_functor(P), {true, false, false}).passed());
  }

  SFSCAT_TEST_CASE("Functor", "011", "broken functors", "[quick][functor]") {
    auto A  = chain_min_category(2);
    auto id = identity_functor(A);
    auto const& C = A->category;

    auto wrong_ends         = id;
    wrong_ends.arrow_map[by_label(C, "(2,1,1)")] = by_label(C, "(1,1,2)");
    REQUIRE(!check_functor(wrong_ends).passed("arrow map"));

    auto wrong_object          = id;
    wrong_object.object_map[0] = 7;
    REQUIRE(!check_functor(wrong_object).passed("object map"));

    // Send (2,0,2) to (2,1,2): ends are right but composition breaks.
    auto wrong_comp = id;
    wrong_comp.arrow_map[by_label(C, "(2,0,2)")] = by_label(C, "(2,1,2)");
    auto r = check_functor(wrong_comp);
    REQUIRE(r.passed("arrow map"));
    REQUIRE(!r.passed("composition"));

    auto wrong_id = id;
    wrong_id.arrow_map[C.identity(1)] = by_label(C, "(1,0,1)");
    REQUIRE(!check_functor(wrong_id).passed("identities"));
  }

  SFSCAT_TEST_CASE("Functor", "012", "composition of functors",
                   "[quick][functor]") {
    auto corpus = corpus_monoids(3);
    std::map<std::string, DPtr> d;
    for (auto const& [name, M] : corpus) {
      d[name] = build_d_category(M);
    }
    std::size_t checked = 0;
    for (auto const& [an, A] : corpus) {
      for (auto const& [bn, B] : corpus) {
        for (auto const& [cn, Cm] : corpus) {
          auto hab = enumerate_homomorphisms(A, B).homomorphisms;
          auto hbc = enumerate_homomorphisms(B, Cm).homomorphisms;
          for (auto const& h : hab) {
            for (auto const& k : hbc) {
              auto F  = d_functor(h, d[an], d[bn]);
              auto G  = d_functor(k, d[bn], d[cn]);
              auto GF = compose(G, F);
              REQUIRE(check_functor(GF, {true, false, false}).passed());
              REQUIRE(GF == d_functor(compose(k, h), d[an], d[cn]));
              ++checked;
            }
          }
        }
      }
    }
    REQUIRE(checked > 100);
    auto F = identity_functor(d["trivial"]->sfs());
    auto G = identity_functor(d["cyclic(2)"]->sfs());
    REQUIRE_THROWS_KIND(compose(G, F), signature_mismatch);
  }

  SFSCAT_TEST_CASE("NatTransf", "013", "central elements of a group",
                   "[quick][functor]") {
    for (auto const& M : {sym_group(3), cyclic_group(4), t_monoid(2)}) {
      auto A  = deloop(M);
      auto id = identity_functor(A);
      auto nt = enumerate_natural_transformations(id, id);
      std::size_t central = 0;
      for (Element z = 0; z < M->size(); ++z) {
        bool c = true;
        for (Element y = 0; y < M->size(); ++y) {
          c = c && (*M)(z, y) == (*M)(y, z);
        }
        central += c;
      }
      REQUIRE(nt.size() == central);
      for (auto const& n : nt) {
        REQUIRE(is_natural(n));
      }
      auto pointed = enumerate_natural_transformations(id, id, true);
      REQUIRE(pointed.size() == 1);
      REQUIRE(pointed[0].components[0] == A->category.identity(0));
    }
  }

  SFSCAT_TEST_CASE("NatTransf", "014", "pointed filter and budget",
                   "[quick][functor]") {
    auto S = min_monoid(2);
    auto D = build_d_category(S);
    auto homs = enumerate_homomorphisms(S, S, 1'000'000, HomKind::monoid)
                    .homomorphisms;
    REQUIRE(homs.size() > 1);
    for (auto const& h : homs) {
      for (auto const& k : homs) {
        auto F   = d_functor(h, D, D);
        auto G   = d_functor(k, D, D);
        auto all = enumerate_natural_transformations(F, G);
        for (auto const& n : all) {
          REQUIRE(is_natural(n));
        }
        auto pointed = enumerate_natural_transformations(F, G, true);
        REQUIRE(pointed.size() == (h == k ? 1u : 0u));
      }
    }
    auto id = identity_functor(D->sfs());
    REQUIRE_THROWS_KIND(enumerate_natural_transformations(id, id, false, 1),
                        budget_exceeded);
    NatTransf bogus{id, id, std::vector<ArrowId>(3, 0)};
    REQUIRE(!is_natural(bogus));
  }

  SFSCAT_TEST_CASE("CategoryIsomorphism", "015", "search",
                   "[quick][functor]") {
    auto chain = chain_min_category(2);
    auto D     = build_d_category(min_monoid(2));
    REQUIRE(D->category().arrow_count() == 14);
    REQUIRE(chain->category.arrow_count() == 14);
    auto iso = find_category_isomorphism(D->sfs(), chain);
    REQUIRE(iso.has_value());
    auto const& [F, G] = *iso;
    REQUIRE(check_functor(F, {true, true, false}).passed());
    REQUIRE(check_functor(G, {true, true, false}).passed());
    REQUIRE(compose(G, F) == identity_functor(D->sfs()));
    REQUIRE(compose(F, G) == identity_functor(chain));

    auto self = find_category_isomorphism(chain, chain);
    REQUIRE(self.has_value());
    REQUIRE(find_category_isomorphism(chain->category, chain->category)
                .has_value());
    REQUIRE(!find_category_isomorphism(chain_min_category(3), chain)
                 .has_value());
    REQUIRE(!find_category_isomorphism(chain->category,
                                       powerset_category(2)->category)
                 .has_value());
    for (auto const& [an, A] : corpus_monoids(4)) {
      for (auto const& [bn, B] : corpus_monoids(4)) {
        auto DA = build_d_category(A);
        auto DB = build_d_category(B);
        bool found = find_category_isomorphism(DA->sfs(), DB->sfs()).has_value();
        // An SFS isomorphism carries the unit to a unit, so by the round
        // trip through Sigma this is monoid isomorphism.
        REQUIRE(found == find_isomorphism(*A, *B).has_value());
      }
    }
  }

}  // namespace sfscat
