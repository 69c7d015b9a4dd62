// sfscat - strict factorization systems and finite monoids

#include "sfscat/schutzenberger.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace sfscat {

  struct DCategory::Data {
    SemigroupPtr         S;
    FiniteSemigroup      S1;
    std::size_t          n;
    std::vector<DTriple> triples;
    // wit[b * n1 + y]: least w in S^1 with b w = y.
    std::vector<Element> wit;
    bool                 verify;

    Element first_witness(Element b, Element y) const {
      return wit[b * S1.size() + y];
    }

    std::optional<ArrowId> find(FinCategory const& cat, DTriple const& t) const {
      if (t.dom >= n || t.cod >= n || t.label >= n) {
        return std::nullopt;
      }
      auto hom = cat.hom(t.dom, t.cod);
      auto it  = std::lower_bound(
          hom.begin(), hom.end(), t.label,
          [&](ArrowId f, Element x) { return triples[f].label < x; });
      if (it == hom.end() || triples[*it].label != t.label) {
        return std::nullopt;
      }
      return *it;
    }
  };

  namespace {

    class DRule : public CompositionRule {
     public:
      explicit DRule(std::shared_ptr<DCategory::Data const> data)
          : _data(std::move(data)) {}

      ArrowId compose(FinCategory const& cat, ArrowId f,
                      ArrowId g) const override {
        auto const& d = *_data;
        DTriple const& s = d.triples[f];
        DTriple const& t = d.triples[g];
        Element        w = d.first_witness(t.dom, t.label);
        Element        x = d.S1(s.label, w);
        if (d.verify) {
          for (Element v = 0; v < d.S1.size(); ++v) {
            if (d.S1(t.dom, v) == t.label && d.S1(s.label, v) != x) {
              throw Error(ErrorKind::internal_disagreement,
                          "composite label depends on the witness");
            }
          }
        }
        auto h = d.find(cat, {s.dom, x, t.cod});
        return h ? *h : UNDEFINED;
      }

     private:
      std::shared_ptr<DCategory::Data const> _data;
    };

    std::vector<Element> make_witness_table(FiniteSemigroup const& S1,
                                            std::size_t            n) {
      std::size_t const    n1 = S1.size();
      std::vector<Element> wit(n * n1, UNDEFINED);
      for (Element b = 0; b < n; ++b) {
        for (Element w = 0; w < n1; ++w) {
          Element& slot = wit[b * n1 + S1(b, w)];
          if (slot == UNDEFINED) {
            slot = w;
          }
        }
      }
      return wit;
    }

  }  // namespace

  SemigroupPtr const& DCategory::semigroup() const noexcept {
    return _data->S;
  }

  FiniteSemigroup const& DCategory::unital() const noexcept {
    return _data->S1;
  }

  DTriple const& DCategory::triple(ArrowId f) const {
    return _data->triples.at(f);
  }

  std::optional<ArrowId> DCategory::find(DTriple const& t) const {
    return _data->find(category(), t);
  }

  ArrowId DCategory::arrow(Element a, Element x, Element b) const {
    auto f = find({a, x, b});
    if (!f) {
      throw Error(ErrorKind::index_out_of_range,
                  "(" + std::to_string(a) + "," + std::to_string(x) + ","
                      + std::to_string(b) + ") is not an arrow");
    }
    return *f;
  }

  std::string DCategory::label(ArrowId f) const {
    auto const& t = triple(f);
    auto const& S = *_data->S;
    return "(" + S.label(t.dom) + "," + S.label(t.label) + ","
           + S.label(t.cod) + ")";
  }

  Element DCategory::witness(Element b, Element y) const {
    return _data->first_witness(b, y);
  }

  std::vector<Element> DCategory::witnesses(Element b, Element y) const {
    std::vector<Element> out;
    for (Element w = 0; w < _data->S1.size(); ++w) {
      if (_data->S1(b, w) == y) {
        out.push_back(w);
      }
    }
    return out;
  }

  DPtr build_d_category(SemigroupPtr const& S, DOptions options) {
    auto data    = std::make_shared<DCategory::Data>(DCategory::Data{
        S, adjoin_identity(*S), S->size(), {}, {}, options.verify_witnesses});
    auto const& S1 = data->S1;
    std::size_t const n = data->n;
    data->wit = make_witness_table(S1, n);

    // right[a]: indicator of aS^1; left[b]: indicator of S^1 b.
    std::vector<std::vector<char>> right(n, std::vector<char>(n, 0)),
        left(n, std::vector<char>(n, 0));
    for (Element a = 0; a < n; ++a) {
      for (Element w = 0; w < S1.size(); ++w) {
        right[a][S1(a, w)] = 1;
        left[a][S1(w, a)]  = 1;
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element x = 0; x < n; ++x) {
          if (right[a][x] && left[b][x]) {
            data->triples.push_back({a, x, b});
          }
        }
      }
    }

    std::size_t const arrows = data->triples.size();
    bool const        label  = arrows <= options.label_limit;
    CategoryBuilder   b(n);
    if (S->has_labels()) {
      for (Element a = 0; a < n; ++a) {
        b.set_object_label(a, S->label(a));
      }
    }
    std::vector<ArrowId> e, m;
    for (ArrowId f = 0; f < arrows; ++f) {
      auto const& t = data->triples[f];
      b.add_arrow(t.dom, t.cod,
                  label ? "(" + S->label(t.dom) + "," + S->label(t.label) + ","
                              + S->label(t.cod) + ")"
                        : std::string());
      if (t.dom == t.label && t.label == t.cod) {
        b.set_identity(t.dom, f);
      }
      if (t.label == t.cod) {
        e.push_back(f);
      }
      if (t.label == t.dom) {
        m.push_back(f);
      }
    }
    std::shared_ptr<DCategory::Data const> cdata = data;
    FinCategory cat  = std::move(b).build(std::make_shared<DRule>(cdata));
    std::optional<ObjectId> unit;
    if (S->is_monoid()) {
      unit = S->one();
    }
    auto sfs = share(SfsCategory{std::move(cat),
                                 WideSubcategory(arrows, std::move(e)),
                                 WideSubcategory(arrows, std::move(m)), unit});
    return std::make_shared<DCategory const>(cdata, std::move(sfs));
  }

  DTriple compose_d(DTriple const& f, DTriple const& g,
                    FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    auto valid = [&](DTriple const& t) {
      return t.dom < n && t.cod < n && t.label < n
             && green_leq(Side::right, t.label, t.dom, S)
             && green_leq(Side::left, t.label, t.cod, S);
    };
    if (f.cod != g.dom || !valid(f) || !valid(g)) {
      throw Error(ErrorKind::not_composable, "triples do not compose");
    }
    FiniteSemigroup const S1 = adjoin_identity(S);
    for (Element w = 0; w < S1.size(); ++w) {
      if (S1(g.dom, w) == g.label) {
        return {f.dom, S1(f.label, w), g.cod};
      }
    }
    throw Error(ErrorKind::not_composable, "no witness");
  }

  WitnessReport check_witness_independence(DCategory const& D) {
    auto const&   cat = D.category();
    auto const&   S1  = D.unital();
    WitnessReport r{true, 0, {}};
    for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
      DTriple const& s = D.triple(f);
      for (ArrowId g : cat.out(s.cod)) {
        DTriple const& t = D.triple(g);
        ++r.pairs_checked;
        std::optional<Element> label;
        for (Element w : D.witnesses(t.dom, t.label)) {
          Element x = S1(s.label, w);
          if (label && *label != x) {
            r.independent = false;
            r.witness     = D.label(f) + " then " + D.label(g);
            return r;
          }
          label = x;
        }
        if (!label || !D.find({s.dom, *label, t.cod})) {
          r.independent = false;
          r.witness     = D.label(f) + " then " + D.label(g)
                      + " has no valid composite";
          return r;
        }
      }
    }
    return r;
  }

  FinCategory build_freyd_quotient(FiniteSemigroup const& M) {
    Element const     one = M.one();
    std::size_t const n   = M.size();
    struct Raw {
      Element u, v;
    };
    // Classes of a -> b keyed by (a v, u b), with their raw members.
    std::vector<std::map<std::pair<Element, Element>, ArrowId>> classes(n * n);
    std::vector<std::vector<Raw>>                               members;
    std::vector<ArrowEnds>                                      ends;
    CategoryBuilder                                             b(n);
    if (M.has_labels()) {
      for (Element a = 0; a < n; ++a) {
        b.set_object_label(a, M.label(a));
      }
    }
    auto class_of = [&](Element a, Element bb, Element u, Element v) {
      return classes[a * n + bb].at({M(a, v), M(u, bb)});
    };
    for (Element a = 0; a < n; ++a) {
      for (Element c = 0; c < n; ++c) {
        for (Element u = 0; u < n; ++u) {
          for (Element v = 0; v < n; ++v) {
            if (M(u, c) != M(a, v)) {
              continue;
            }
            auto [it, fresh] = classes[a * n + c].try_emplace(
                {M(a, v), M(u, c)}, static_cast<ArrowId>(members.size()));
            if (fresh) {
              b.add_arrow(a, c, "[" + M.label(u) + "," + M.label(v) + "]");
              members.emplace_back();
              ends.push_back({a, c});
            }
            members[it->second].push_back({u, v});
          }
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      b.set_identity(a, class_of(a, a, one, one));
    }
    std::vector<std::vector<ArrowId>> out(n);
    for (ArrowId f = 0; f < ends.size(); ++f) {
      out[ends[f].dom].push_back(f);
    }
    for (ArrowId f = 0; f < ends.size(); ++f) {
      for (ArrowId g : out[ends[f].cod]) {
        Element const a = ends[f].dom, c = ends[g].cod;
        ArrowId       h = UNDEFINED;
        for (Raw const& p : members[f]) {
          for (Raw const& q : members[g]) {
            ArrowId k = class_of(a, c, M(p.u, q.u), M(p.v, q.v));
            if (h != UNDEFINED && h != k) {
              throw Error(ErrorKind::internal_disagreement,
                          "quotient composition depends on representatives");
            }
            h = k;
          }
        }
        b.set_composite(f, g, h);
      }
    }
    return std::move(b).build();
  }

  Functor d_functor(Homomorphism const& h, DPtr const& source,
                    DPtr const& target) {
    auto same = [](SemigroupPtr const& x, SemigroupPtr const& y) {
      return x == y || *x == *y;
    };
    if (!same(source->semigroup(), h.source)
        || !same(target->semigroup(), h.target)) {
      throw Error(ErrorKind::signature_mismatch,
                  "D-categories do not match the homomorphism");
    }
    if (!check_homomorphism(h)) {
      throw Error(ErrorKind::invalid_homomorphism,
                  "map is not multiplicative");
    }
    auto const& S = source->category();
    Functor     F{source->sfs(), target->sfs(), h.map, {}};
    F.arrow_map.resize(S.arrow_count());
    for (ArrowId f = 0; f < S.arrow_count(); ++f) {
      auto const& t = source->triple(f);
      auto        g = target->find({h(t.dom), h(t.label), h(t.cod)});
      if (!g) {
        throw Error(ErrorKind::invalid_functor,
                    "image of " + source->label(f) + " is not an arrow");
      }
      F.arrow_map[f] = *g;
    }
    return F;
  }

  Functor d_functor(Homomorphism const& h, DOptions options) {
    if (!check_homomorphism(h)) {
      throw Error(ErrorKind::invalid_homomorphism,
                  "map is not multiplicative");
    }
    return d_functor(h, build_d_category(h.source, options),
                     build_d_category(h.target, options));
  }

}  // namespace sfscat
