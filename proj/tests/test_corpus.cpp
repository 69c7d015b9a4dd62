// sfscat - strict factorization systems and finite monoids
//
// Tests for the example registry and the named fixtures.

#include <set>

#include "oracles.hpp"
#include "sfscat/corpus.hpp"
#include "sfscat/sfs.hpp"
#include "sfscat/sigma.hpp"
#include "test_main.hpp"

namespace sfscat {

  namespace {
    // One representative per isomorphism class of submonoids of T(3) with
    // at most four elements, by closing every small subset.
    std::vector<oracle::Table> t3_submonoid_classes() {
      auto const        T   = oracle::table(*t_monoid(3));
      std::size_t const n   = T.n;
      oracle::u32 const one = *T.id;
      std::set<std::vector<oracle::u32>> seen;
      std::vector<oracle::Table>         classes;
      auto consider = [&](std::vector<oracle::u32> gens) {
        std::set<oracle::u32> s(gens.begin(), gens.end());
        s.insert(one);
        if (s.size() > 4) {
          return;
        }
        for (auto a : s) {
          for (auto b : s) {
            if (!s.count(T(a, b))) {
              return;  // not closed
            }
          }
        }
        std::vector<oracle::u32> elems(s.begin(), s.end());
        if (!seen.insert(elems).second) {
          return;
        }
        std::size_t   k = elems.size();
        oracle::Table sub{k, std::vector<oracle::u32>(k * k), std::nullopt};
        auto index = [&](oracle::u32 x) {
          return oracle::u32(std::find(elems.begin(), elems.end(), x)
                             - elems.begin());
        };
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            sub.t[i * k + j] = index(T(elems[i], elems[j]));
          }
        }
        sub.id = index(one);
        for (auto const& c : classes) {
          if (oracle::isomorphic(c, sub)) {
            return;
          }
        }
        classes.push_back(sub);
      };
      consider({});
      for (oracle::u32 a = 0; a < n; ++a) {
        consider({a});
        for (oracle::u32 b = a + 1; b < n; ++b) {
          consider({a, b});
          for (oracle::u32 c = b + 1; c < n; ++c) {
            consider({a, b, c});
          }
        }
      }
      return classes;
    }
  }  // namespace

  SFSCAT_TEST_CASE("ExampleSpec", "000", "parse", "[quick][corpus]") {
    auto a = ExampleSpec::parse("trivial");
    REQUIRE(a.name == "trivial");
    REQUIRE(a.params.empty());
    auto b = ExampleSpec::parse("cyclic(3)");
    REQUIRE(b.name == "cyclic");
    REQUIRE(b.params == std::vector<int>{3});
    REQUIRE(ExampleSpec::parse("cyclic:3").params == std::vector<int>{3});
    REQUIRE(ExampleSpec::parse("x(1,2)").params == std::vector<int>{1, 2});
    REQUIRE(b.to_string() == "cyclic(3)");
    REQUIRE(ExampleSpec::parse("chain_min:-1").params == std::vector<int>{-1});
    for (auto bad : {"", "(3)", "cyclic(3", "cyclic()", "cyclic(x)",
                     "cyclic:3a", "cyclic(1,)"}) {
      REQUIRE_THROWS_KIND(ExampleSpec::parse(bad), parse_error);
    }
  }

  SFSCAT_TEST_CASE("Corpus", "001", "build_example", "[quick][corpus]") {
    auto build = [](std::string const& s) {
      return build_example(ExampleSpec::parse(s));
    };
    REQUIRE(std::get<SemigroupPtr>(build("cyclic(4)"))->size() == 4);
    REQUIRE(std::get<SemigroupPtr>(build("t_monoid(3)"))->size() == 27);
    REQUIRE(std::get<SemigroupPtr>(build("min_monoid:0"))->size() == 1);
    REQUIRE(std::get<SfsPtr>(build("powerset(2)"))->category.arrow_count()
            == 18);
    REQUIRE(std::get<SfsPtr>(build("chain_min(1)"))->unit == ObjectId(1));
    REQUIRE(std::holds_alternative<S2T4Example>(build("s2_t4")));
    REQUIRE_THROWS_KIND(build("bogus"), unknown_example);
    REQUIRE_THROWS_KIND(build("cyclic(0)"), param_out_of_range);
    REQUIRE_THROWS_KIND(build("cyclic(13)"), param_out_of_range);
    REQUIRE_THROWS_KIND(build("cyclic"), param_out_of_range);
    REQUIRE_THROWS_KIND(build("trivial(1)"), param_out_of_range);
    REQUIRE_THROWS_KIND(build("cyclic(1,2)"), param_out_of_range);
    REQUIRE_THROWS_KIND(build("nat_add"), unsupported);

    std::set<std::string> names;
    for (auto const& r : registered_examples()) {
      REQUIRE(names.insert(r.name).second);
      REQUIRE(!r.description.empty());
      if (!r.has_param || r.name == "nat_add") {
        continue;
      }
      for (int p = r.min_param; p <= r.max_param; ++p) {
        if (r.name == "t_monoid" && p == 4) {
          continue;  // covered elsewhere
        }
        auto x = build_example({r.name, {p}});
        if (auto S = std::get_if<SemigroupPtr>(&x)) {
          REQUIRE(oracle::associative(oracle::table(**S)));
        } else {
          REQUIRE(verify_sfs(*std::get<SfsPtr>(x)).passed());
        }
      }
      REQUIRE_THROWS_KIND(build_example({r.name, {r.min_param - 1}}),
                          param_out_of_range);
      REQUIRE_THROWS_KIND(build_example({r.name, {r.max_param + 1}}),
                          param_out_of_range);
    }
    REQUIRE(names.count("s2_t4"));
    REQUIRE(names.count("nat_add"));
  }

  SFSCAT_TEST_CASE("Corpus", "002", "semigroup fixtures", "[quick][corpus]") {
    auto C = cyclic_group(5);
    for (Element a = 0; a < 5; ++a) {
      for (Element b = 0; b < 5; ++b) {
        REQUIRE((*C)(a, b) == (a + b) % 5);
      }
    }
    auto M = min_monoid(4);
    REQUIRE(M->one() == 4);
    REQUIRE((*M)(3, 1) == 1);
    REQUIRE(sym_group(3)->size() == 6);
    REQUIRE(sym_group(3)->label(sym_group(3)->one()) == "(1 2 3)");
    REQUIRE(t_monoid(2)->size() == 4);
    auto L = left_zero_semigroup(3);
    REQUIRE(!L->is_monoid());
    REQUIRE((*L)(2, 0) == 2);
    auto Z = zero_semigroup(3);
    REQUIRE(!Z->is_monoid());
    REQUIRE((*Z)(2, 1) == 0);

    auto monoids = corpus_monoids(6);
    std::set<std::string> names;
    for (auto const& [name, S] : monoids) {
      REQUIRE(names.insert(name).second);
      REQUIRE(S->size() <= 6);
      REQUIRE(S->is_monoid());
      REQUIRE(oracle::find_identity(oracle::table(*S)) == S->identity());
    }
    REQUIRE(names.count("trivial"));
    REQUIRE(names.count("t_monoid(2)"));
    REQUIRE(!names.count("t_monoid(3)"));
    auto semigroups = corpus_semigroups(6);
    REQUIRE(semigroups.size() == monoids.size() + 10);
  }

  SFSCAT_TEST_CASE("Corpus", "003", "t3 submonoids", "[quick][corpus]") {
    auto subs = t3_submonoids();
    REQUIRE(subs.size() == 20);
    auto classes = t3_submonoid_classes();
    REQUIRE(classes.size() == subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
      REQUIRE(subs[i]->is_monoid());
      REQUIRE(subs[i]->size() <= 4);
      if (i > 0) {
        REQUIRE(subs[i - 1]->size() <= subs[i]->size());
      }
      std::size_t matches = 0;
      for (auto const& c : classes) {
        matches += oracle::isomorphic(c, oracle::table(*subs[i]));
      }
      REQUIRE(matches == 1);
      for (std::size_t j = 0; j < i; ++j) {
        REQUIRE(!find_isomorphism(*subs[i], *subs[j]).has_value());
      }
    }
    REQUIRE(subs[0]->size() == 1);
    REQUIRE(t3_submonoids(2).size() < subs.size());
  }

  SFSCAT_TEST_CASE("Corpus", "004", "category fixtures", "[quick][corpus]") {
    auto const P0 = powerset_category(0);
    REQUIRE(P0->category.arrow_count() == 1);
    REQUIRE(find_unit(*P0).has_value());
    auto const P1 = powerset_category(1);
    REQUIRE(P1->category.object_count() == 2);
    REQUIRE(P1->category.arrow_count() == 3);
    REQUIRE(verify_sfs(*P1).passed());
    REQUIRE(is_thin(P1->category, P1->e));
    REQUIRE(is_thin(P1->category, P1->m));
    REQUIRE(!find_unit(*P1).has_value());
    REQUIRE(is_complete(*P1));
    auto const P2 = powerset_category(2);
    REQUIRE(P2->category.object_count() == 4);
    REQUIRE(P2->category.arrow_count() == 18);
    REQUIRE(verify_sfs(*P2).passed());
    REQUIRE(!is_thin(P2->category, P2->e));
    REQUIRE(is_thin(P2->category, P2->m));
    REQUIRE(is_complete(*P2));
    REQUIRE(!P2->unit.has_value());
    // sum over pairs of subsets of |B|^|A|
    REQUIRE(powerset_category(3)->category.arrow_count() == 170);

    for (std::size_t n = 0; n <= 6; ++n) {
      auto const A = chain_min_category(n);
      REQUIRE(A->category.object_count() == n + 1);
      std::size_t arrows = 0;
      for (std::size_t a = 0; a <= n; ++a) {
        for (std::size_t b = 0; b <= n; ++b) {
          arrows += std::min(a, b) + 1;
        }
      }
      REQUIRE(A->category.arrow_count() == arrows);
      REQUIRE(A->unit == ObjectId(n));
      auto [r, U] = UcCtsfs::try_certify(A);
      REQUIRE(r.passed());
      REQUIRE(U.has_value());
    }
  }

  SFSCAT_TEST_CASE("Corpus", "005", "s2_t4", "[quick][corpus]") {
    auto const x = s2_t4_example();
    REQUIRE(x.s2->size() == 2);
    REQUIRE(x.t4->size() == 256);
    REQUIRE(check_homomorphism(x.f, HomKind::monoid));
    REQUIRE(check_homomorphism(x.g));
    REQUIRE(check_homomorphism(x.h));
    REQUIRE(!check_homomorphism(x.g, HomKind::monoid));
    std::vector<std::string> f, g, h;
    for (Element s = 0; s < 2; ++s) {
      f.push_back(x.t4->label(x.f(s)));
      g.push_back(x.t4->label(x.g(s)));
      h.push_back(x.t4->label(x.h(s)));
    }
    REQUIRE(f == std::vector<std::string>{"(1 2 3 4)", "(2 1 3 4)"});
    REQUIRE(g == std::vector<std::string>{"(1 2 3 3)", "(2 1 3 3)"});
    REQUIRE(h == std::vector<std::string>{"(1 2 4 4)", "(2 1 4 4)"});
    REQUIRE(x.t4->label(x.alpha) == "(1 2 3 3)");
    REQUIRE(x.t4->label(x.beta) == "(1 2 4 4)");
    REQUIRE(x.alpha_fg.f == x.f);
    REQUIRE(x.alpha_fg.g == x.g);
    REQUIRE(x.alpha_hg.f == x.h);
    REQUIRE(x.alpha_hg.g == x.g);
    REQUIRE(x.beta_gh.alpha == x.beta);
  }

}  // namespace sfscat
