// sfscat - strict factorization systems and finite monoids

#include "sfscat/corpus.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <tuple>

#include "sfscat/sfs.hpp"
#include "sfscat/transformation.hpp"

namespace sfscat {

  namespace {

    void check_range(std::string const& name, long long v, long long lo,
                     long long hi) {
      if (v < lo || v > hi) {
        throw Error(ErrorKind::param_out_of_range,
                    name + " parameter " + std::to_string(v) + " not in ["
                        + std::to_string(lo) + ", " + std::to_string(hi) + "]");
      }
    }

    // Corpus structures must satisfy their axioms; a failure here is a bug.
    SfsPtr verified(SfsCategory A, char const* name) {
      if (!verify_category(A.category).passed() || !verify_sfs(A).passed()) {
        throw Error(ErrorKind::internal_disagreement,
                    std::string(name) + " fails its own verification");
      }
      return share(std::move(A));
    }

    std::string subset_label(unsigned mask, std::size_t k) {
      std::string s = "{";
      for (unsigned i = 0; i < k; ++i) {
        if (mask & (1u << i)) {
          s += (s.size() > 1 ? "," : "") + std::to_string(i + 1);
        }
      }
      return s + "}";
    }

    std::vector<unsigned> members(unsigned mask, std::size_t k) {
      std::vector<unsigned> out;
      for (unsigned i = 0; i < k; ++i) {
        if (mask & (1u << i)) {
          out.push_back(i);
        }
      }
      return out;
    }

  }  // namespace

  ExampleSpec ExampleSpec::parse(std::string_view text) {
    ExampleSpec spec;
    auto        bad = [&](std::string const& why) {
      return Error(ErrorKind::parse_error,
                   "example \"" + std::string(text) + "\": " + why);
    };
    std::size_t cut = text.find_first_of("(:");
    spec.name       = std::string(text.substr(0, cut));
    if (spec.name.empty()) {
      throw bad("missing name");
    }
    if (cut == std::string_view::npos) {
      return spec;
    }
    std::string_view rest = text.substr(cut + 1);
    if (text[cut] == '(') {
      if (rest.empty() || rest.back() != ')') {
        throw bad("missing ')'");
      }
      rest.remove_suffix(1);
    }
    while (true) {
      std::size_t      comma = rest.find(',');
      std::string_view tok   = rest.substr(0, comma);
      int              v     = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size()) {
        throw bad("parameter is not an integer");
      }
      spec.params.push_back(v);
      if (comma == std::string_view::npos) {
        break;
      }
      rest = rest.substr(comma + 1);
    }
    return spec;
  }

  std::string ExampleSpec::to_string() const {
    std::string s = name;
    if (!params.empty()) {
      s += "(";
      for (std::size_t i = 0; i < params.size(); ++i) {
        s += (i ? "," : "") + std::to_string(params[i]);
      }
      s += ")";
    }
    return s;
  }

  SemigroupPtr trivial_monoid() {
    return make_semigroup(std::size_t(1), std::vector<Element>{0}, Element(0));
  }

  SemigroupPtr cyclic_group(std::size_t n) {
    check_range("cyclic", n, 1, 12);
    std::vector<Element> t(n * n);
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        t[i * n + j] = (i + j) % n;
      }
    }
    return make_semigroup(n, std::move(t), Element(0));
  }

  SemigroupPtr min_monoid(std::size_t n) {
    check_range("min_monoid", n, 0, 10);
    std::size_t const    s = n + 1;
    std::vector<Element> t(s * s);
    for (Element i = 0; i < s; ++i) {
      for (Element j = 0; j < s; ++j) {
        t[i * s + j] = std::min(i, j);
      }
    }
    return make_semigroup(s, std::move(t), Element(n));
  }

  SemigroupPtr sym_group(std::size_t k) {
    check_range("sym_group", k, 1, 4);
    return make_semigroup(symmetric_group(k).semigroup);
  }

  SemigroupPtr t_monoid(std::size_t k) {
    check_range("t_monoid", k, 1, 4);
    return make_semigroup(full_transformation_monoid(k).semigroup);
  }

  SemigroupPtr left_zero_semigroup(std::size_t n) {
    check_range("left_zero", n, 1, 8);
    std::vector<Element> t(n * n);
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        t[i * n + j] = i;
      }
    }
    return make_semigroup(n, std::move(t));
  }

  SemigroupPtr zero_semigroup(std::size_t n) {
    check_range("zero_semigroup", n, 1, 8);
    return make_semigroup(n, std::vector<Element>(n * n, 0));
  }

  SfsPtr powerset_category(std::size_t k) {
    check_range("powerset", k, 0, 3);
    unsigned const n = 1u << k;
    using Key        = std::tuple<unsigned, unsigned, std::vector<unsigned>>;
    std::map<Key, ArrowId> index;
    std::vector<Key>       arrows;
    CategoryBuilder        b(n);
    for (unsigned A = 0; A < n; ++A) {
      b.set_object_label(A, subset_label(A, k));
    }
    for (unsigned A = 0; A < n; ++A) {
      auto dom = members(A, k);
      for (unsigned B = 0; B < n; ++B) {
        auto cod = members(B, k);
        if (cod.empty() && !dom.empty()) {
          continue;
        }
        // Image tuples in lexicographic order, counting in base |B|.
        std::vector<std::size_t> digits(dom.size(), 0);
        while (true) {
          std::vector<unsigned> images;
          std::string           label = subset_label(A, k) + "->"
                              + subset_label(B, k) + ":(";
          for (std::size_t i = 0; i < dom.size(); ++i) {
            images.push_back(cod[digits[i]]);
            label += (i ? " " : "") + std::to_string(cod[digits[i]] + 1);
          }
          ArrowId f = b.add_arrow(A, B, label + ")");
          index.emplace(Key{A, B, images}, f);
          arrows.emplace_back(A, B, std::move(images));
          std::size_t i = dom.size();
          while (i > 0 && ++digits[i - 1] == cod.size()) {
            digits[--i] = 0;
          }
          if (i == 0) {
            break;
          }
        }
      }
    }
    std::vector<ArrowId> e, m;
    for (ArrowId f = 0; f < arrows.size(); ++f) {
      auto const& [A, B, img] = arrows[f];
      auto const dom          = members(A, k);
      if (A == B && img == dom) {
        b.set_identity(A, f);
      }
      unsigned image_mask = 0;
      for (unsigned y : img) {
        image_mask |= 1u << y;
      }
      if (image_mask == B) {
        e.push_back(f);
      }
      if (img == dom) {
        m.push_back(f);
      }
      for (ArrowId g = 0; g < arrows.size(); ++g) {
        auto const& [B2, C, img2] = arrows[g];
        if (B2 != B) {
          continue;
        }
        auto const            mid = members(B, k);
        std::vector<unsigned> comp;
        for (unsigned y : img) {
          auto pos = std::find(mid.begin(), mid.end(), y) - mid.begin();
          comp.push_back(img2[pos]);
        }
        b.set_composite(f, g, index.at(Key{A, C, comp}));
      }
    }
    FinCategory cat = std::move(b).build();
    std::size_t na  = cat.arrow_count();
    return verified(SfsCategory{std::move(cat), WideSubcategory(na, e),
                                WideSubcategory(na, m), std::nullopt},
                    "powerset");
  }

  SfsPtr chain_min_category(std::size_t n) {
    check_range("chain_min", n, 0, 8);
    std::size_t const objects = n + 1;
    CategoryBuilder   b(objects);
    // first[a * objects + b]: the arrow a -0-> b; label x is first + x.
    std::vector<ArrowId> first(objects * objects);
    std::vector<ArrowId> e, m;
    for (Element a = 0; a < objects; ++a) {
      for (Element c = 0; c < objects; ++c) {
        first[a * objects + c] = static_cast<ArrowId>(b.arrow_count());
        for (Element x = 0; x <= std::min(a, c); ++x) {
          ArrowId f = b.add_arrow(a, c,
                                  "(" + std::to_string(a) + ","
                                      + std::to_string(x) + ","
                                      + std::to_string(c) + ")");
          if (x == c) {
            e.push_back(f);
          }
          if (x == a) {
            m.push_back(f);
          }
          if (a == c && x == a) {
            b.set_identity(a, f);
          }
        }
      }
    }
    for (Element a = 0; a < objects; ++a) {
      for (Element c = 0; c < objects; ++c) {
        for (Element d = 0; d < objects; ++d) {
          for (Element x = 0; x <= std::min(a, c); ++x) {
            for (Element y = 0; y <= std::min(c, d); ++y) {
              b.set_composite(first[a * objects + c] + x,
                              first[c * objects + d] + y,
                              first[a * objects + d] + std::min(x, y));
            }
          }
        }
      }
    }
    FinCategory cat = std::move(b).build();
    std::size_t na  = cat.arrow_count();
    return verified(SfsCategory{std::move(cat), WideSubcategory(na, e),
                                WideSubcategory(na, m), ObjectId(n)},
                    "chain_min");
  }

  namespace {
    std::vector<SemigroupPtr> compute_t3_submonoids(std::size_t max_size) {
      auto const        t3  = full_transformation_monoid(3);
      auto const&       T   = t3.semigroup;
      Element const     one = T.one();
      std::size_t const n   = T.size();
      auto              close = [&](std::uint32_t mask) {
        bool grew = true;
        while (grew) {
          grew = false;
          for (Element a = 0; a < n; ++a) {
            if (!(mask >> a & 1u)) {
              continue;
            }
            for (Element b = 0; b < n; ++b) {
              if ((mask >> b & 1u) && !(mask >> T(a, b) & 1u)) {
                mask |= 1u << T(a, b);
                grew = true;
              }
            }
          }
        }
        return mask;
      };
      std::vector<std::uint32_t> found{close(1u << one)};
      for (std::size_t i = 0; i < found.size(); ++i) {
        for (Element a = 0; a < n; ++a) {
          if (found[i] >> a & 1u) {
            continue;
          }
          std::uint32_t next = close(found[i] | 1u << a);
          if (static_cast<std::size_t>(std::popcount(next)) <= max_size
              && std::find(found.begin(), found.end(), next) == found.end()) {
            found.push_back(next);
          }
        }
      }
      std::sort(found.begin(), found.end(), [](std::uint32_t x, std::uint32_t y) {
        return std::make_pair(std::popcount(x), x)
               < std::make_pair(std::popcount(y), y);
      });
      std::vector<SemigroupPtr> out;
      for (std::uint32_t mask : found) {
        std::vector<Element> elems, index(n, UNDEFINED);
        for (Element a = 0; a < n; ++a) {
          if (mask >> a & 1u) {
            index[a] = static_cast<Element>(elems.size());
            elems.push_back(a);
          }
        }
        std::size_t const        k = elems.size();
        std::vector<Element>     table(k * k);
        std::vector<std::string> labels;
        for (Element i = 0; i < k; ++i) {
          for (Element j = 0; j < k; ++j) {
            table[i * k + j] = index[T(elems[i], elems[j])];
          }
          labels.push_back(T.label(elems[i]));
        }
        auto S = make_semigroup(k, std::move(table), index[one], std::move(labels));
        bool duplicate = std::any_of(out.begin(), out.end(), [&](auto const& R) {
          return R->size() == k && find_isomorphism(*R, *S).has_value();
        });
        if (!duplicate) {
          out.push_back(std::move(S));
        }
      }
      return out;
    }
  }  // namespace

  std::vector<SemigroupPtr> t3_submonoids(std::size_t max_size) {
    if (max_size == 4) {
      static std::vector<SemigroupPtr> const cache = compute_t3_submonoids(4);
      return cache;
    }
    return compute_t3_submonoids(max_size);
  }

  S2T4Example s2_t4_example() {
    auto s2c = symmetric_group(2);
    auto t4c = full_transformation_monoid(4);
    S2T4Example x;
    x.s2 = make_semigroup(s2c.semigroup);
    x.t4 = make_semigroup(t4c.semigroup);
    auto hom = [&](std::uint32_t c, std::uint32_t d) {
      Homomorphism h{x.s2, x.t4, {}};
      for (auto const& p : s2c.elements) {
        h.map.push_back(t4c.at(Transformation({p[1], p[2], c, d})));
      }
      return h;
    };
    x.f        = hom(3, 4);
    x.g        = hom(3, 3);
    x.h        = hom(4, 4);
    x.alpha    = t4c.at(Transformation({1, 2, 3, 3}));
    x.beta     = t4c.at(Transformation({1, 2, 4, 4}));
    x.alpha_fg = make_conjugation(x.f, x.g, x.alpha);
    x.alpha_hg = make_conjugation(x.h, x.g, x.alpha);
    x.beta_gh  = make_conjugation(x.g, x.h, x.beta);
    return x;
  }

  std::vector<RegisteredExample> const& registered_examples() {
    static std::vector<RegisteredExample> const list = [] {
      std::vector<RegisteredExample> v{
          {"trivial", false, 0, 0, "the one-element monoid"},
          {"cyclic", true, 1, 12, "the cyclic group Z/n"},
          {"min_monoid", true, 0, 10, "{0..n} under min, identity n"},
          {"sym_group", true, 1, 4, "the symmetric group S(k)"},
          {"t_monoid", true, 1, 4, "the full transformation monoid T(k)"},
          {"left_zero", true, 1, 8, "n elements with xy = x"},
          {"zero_semigroup", true, 1, 8, "n elements with xy = 0"},
          {"t3_submonoid", true, 0, 0,
           "the i-th submonoid of T(3) with at most 4 elements, up to "
           "isomorphism"},
          {"powerset", true, 0, 3,
           "subsets of {1..k}, all functions, (surjections, inclusions)"},
          {"chain_min", true, 0, 8,
           "objects 0..n, a -x-> b for x <= min(a,b), composite min, unit n"},
          {"s2_t4", false, 0, 0,
           "homomorphisms f, g, h : S(2) -> T(4) with alpha = (1 2 3 3) "
           "and beta = (1 2 4 4)"},
          {"nat_add", false, 0, 0,
           "D of (N, +, 0); infinite carrier, not constructible"},
      };
      v[7].max_param = static_cast<int>(t3_submonoids().size()) - 1;
      return v;
    }();
    return list;
  }

  Example build_example(ExampleSpec const& spec) {
    auto const& list = registered_examples();
    auto        it   = std::find_if(list.begin(), list.end(),
                             [&](auto const& r) { return r.name == spec.name; });
    if (it == list.end()) {
      throw Error(ErrorKind::unknown_example, spec.name);
    }
    if (it->has_param != (spec.params.size() == 1)
        || spec.params.size() > 1) {
      throw Error(ErrorKind::param_out_of_range,
                  spec.name + (it->has_param ? " takes one parameter"
                                             : " takes no parameter"));
    }
    int p = 0;
    if (it->has_param) {
      p = spec.params[0];
      check_range(spec.name, p, it->min_param, it->max_param);
    }
    auto const& name = spec.name;
    if (name == "trivial") {
      return trivial_monoid();
    } else if (name == "cyclic") {
      return cyclic_group(p);
    } else if (name == "min_monoid") {
      return min_monoid(p);
    } else if (name == "sym_group") {
      return sym_group(p);
    } else if (name == "t_monoid") {
      return t_monoid(p);
    } else if (name == "left_zero") {
      return left_zero_semigroup(p);
    } else if (name == "zero_semigroup") {
      return zero_semigroup(p);
    } else if (name == "t3_submonoid") {
      return t3_submonoids()[p];
    } else if (name == "powerset") {
      return powerset_category(p);
    } else if (name == "chain_min") {
      return chain_min_category(p);
    } else if (name == "s2_t4") {
      return s2_t4_example();
    }
    throw Error(ErrorKind::unsupported,
                name + ": the carrier is infinite and no finite truncation is "
                       "closed under composition");
  }

  std::vector<NamedSemigroup> corpus_monoids(std::size_t max_size) {
    std::vector<NamedSemigroup> out;
    auto add = [&](std::string name, SemigroupPtr S) {
      if (S->size() <= max_size) {
        out.push_back({std::move(name), std::move(S)});
      }
    };
    add("trivial", trivial_monoid());
    for (std::size_t n = 2; n <= 12 && n <= max_size; ++n) {
      add("cyclic(" + std::to_string(n) + ")", cyclic_group(n));
    }
    for (std::size_t n = 1; n <= 10 && n + 1 <= max_size; ++n) {
      add("min_monoid(" + std::to_string(n) + ")", min_monoid(n));
    }
    for (std::size_t k = 2; k <= 4; ++k) {
      add("sym_group(" + std::to_string(k) + ")", sym_group(k));
    }
    for (std::size_t k = 2; k <= 3; ++k) {
      add("t_monoid(" + std::to_string(k) + ")", t_monoid(k));
    }
    if (max_size >= 256) {
      add("t_monoid(4)", t_monoid(4));
    }
    auto subs = t3_submonoids();
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->size() > 1) {
        add("t3_submonoid(" + std::to_string(i) + ")", subs[i]);
      }
    }
    return out;
  }

  std::vector<NamedSemigroup> corpus_semigroups(std::size_t max_size) {
    auto out = corpus_monoids(max_size);
    for (std::size_t n = 2; n <= 8 && n <= max_size; ++n) {
      out.push_back({"left_zero(" + std::to_string(n) + ")",
                     left_zero_semigroup(n)});
      out.push_back({"zero_semigroup(" + std::to_string(n) + ")",
                     zero_semigroup(n)});
    }
    return out;
  }

}  // namespace sfscat
