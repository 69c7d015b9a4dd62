// sfscat - strict factorization systems and finite monoids

#include "sfscat/functor.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "sfscat/sfs.hpp"

namespace sfscat {

  bool operator==(Functor const& F, Functor const& G) {
    return F.source == G.source && F.target == G.target
           && F.object_map == G.object_map && F.arrow_map == G.arrow_map;
  }

  Report check_functor(Functor const& H, FunctorFlags flags, Limits limits) {
    auto const& S = H.source->category;
    auto const& T = H.target->category;
    if (S.arrow_count() > limits.arrow_cap) {
      throw Error(ErrorKind::budget_exceeded,
                  "check_functor: source has too many arrows");
    }
    if ((flags.pointed || flags.semi_pointed)
        && (!H.source->unit || !H.target->unit)) {
      throw Error(ErrorKind::missing_unit,
                  "pointedness needs a unit in source and target");
    }
    Report r;
    bool   ok = H.object_map.size() == S.object_count()
              && std::all_of(H.object_map.begin(), H.object_map.end(),
                             [&](ObjectId b) { return b < T.object_count(); });
    r.add("object map", ok, ok ? "" : "wrong size or out of range");
    if (!ok) {
      return r;
    }
    std::string witness;
    if (H.arrow_map.size() != S.arrow_count()) {
      witness = "wrong size";
    } else {
      for (ArrowId f = 0; f < S.arrow_count(); ++f) {
        ArrowId g = H.arrow_map[f];
        if (g >= T.arrow_count() || T.dom(g) != H(S.dom(f))
            || T.cod(g) != H(S.cod(f))) {
          witness = "arrow " + S.arrow_label(f) + " has the wrong image ends";
          break;
        }
      }
    }
    r.add("arrow map", witness.empty(), witness);
    if (!witness.empty()) {
      return r;
    }
    for (ObjectId a = 0; a < S.object_count(); ++a) {
      if (H.arrow(S.identity(a)) != T.identity(H(a))) {
        witness = "identity of " + S.object_label(a);
        break;
      }
    }
    r.add("identities", witness.empty(), witness);
    witness.clear();
    for (ArrowId f = 0; f < S.arrow_count() && witness.empty(); ++f) {
      for (ArrowId g : S.out(S.cod(f))) {
        if (H.arrow(S.compose(f, g)) != T.compose(H.arrow(f), H.arrow(g))) {
          witness = S.arrow_label(f) + " then " + S.arrow_label(g);
          break;
        }
      }
    }
    r.add("composition", witness.empty(), witness);
    if (flags.sfs_preserving) {
      witness.clear();
      for (ArrowId f = 0; f < S.arrow_count(); ++f) {
        if (H.source->e.contains(f) && !H.target->e.contains(H.arrow(f))) {
          witness = "E-arrow " + S.arrow_label(f) + " leaves E'";
          break;
        }
        if (H.source->m.contains(f) && !H.target->m.contains(H.arrow(f))) {
          witness = "M-arrow " + S.arrow_label(f) + " leaves M'";
          break;
        }
      }
      r.add("sfs preserving", witness.empty(), witness);
    }
    if (flags.pointed) {
      bool p = H(*H.source->unit) == *H.target->unit;
      r.add("pointed", p, p ? "" : "H(zeta) != zeta'");
    }
    if (flags.semi_pointed) {
      ObjectId const hz = H(*H.source->unit);
      ObjectId const z  = *H.target->unit;
      ArrowId        m  = unique_arrow(T, H.target->m, hz, z);
      ArrowId        e  = unique_arrow(T, H.target->e, z, hz);
      bool           p  = m != UNDEFINED && e != UNDEFINED
                 && T.compose(m, e) == T.identity(hz);
      r.add("semi-pointed", p,
            p ? "" : "H(zeta) -> zeta' -> H(zeta) is not the identity");
    }
    return r;
  }

  Functor identity_functor(SfsPtr const& A) {
    Functor F{A, A, {}, {}};
    F.object_map.resize(A->category.object_count());
    F.arrow_map.resize(A->category.arrow_count());
    for (ObjectId a = 0; a < F.object_map.size(); ++a) {
      F.object_map[a] = a;
    }
    for (ArrowId f = 0; f < F.arrow_map.size(); ++f) {
      F.arrow_map[f] = f;
    }
    return F;
  }

  Functor compose(Functor const& G, Functor const& F) {
    if (F.target != G.source) {
      throw Error(ErrorKind::signature_mismatch,
                  "functors are not composable");
    }
    Functor H{F.source, G.target, F.object_map, F.arrow_map};
    for (auto& a : H.object_map) {
      a = G.object_map[a];
    }
    for (auto& f : H.arrow_map) {
      f = G.arrow_map[f];
    }
    return H;
  }

  bool is_natural(NatTransf const& alpha) {
    auto const& F = alpha.source_functor;
    auto const& G = alpha.target_functor;
    if (F.source != G.source || F.target != G.target) {
      return false;
    }
    auto const& S = F.source->category;
    auto const& T = F.target->category;
    if (alpha.components.size() != S.object_count()) {
      return false;
    }
    for (ObjectId a = 0; a < S.object_count(); ++a) {
      ArrowId c = alpha.components[a];
      if (c >= T.arrow_count() || T.dom(c) != F(a) || T.cod(c) != G(a)) {
        return false;
      }
    }
    for (ArrowId f = 0; f < S.arrow_count(); ++f) {
      ObjectId a = S.dom(f), b = S.cod(f);
      if (T.compose(F.arrow(f), alpha.components[b])
          != T.compose(alpha.components[a], G.arrow(f))) {
        return false;
      }
    }
    return true;
  }

  std::vector<NatTransf>
  enumerate_natural_transformations(Functor const& F, Functor const& G,
                                    bool pointed_only, std::size_t budget) {
    if (F.source != G.source || F.target != G.target) {
      throw Error(ErrorKind::signature_mismatch,
                  "functors must share source and target");
    }
    auto const& S = F.source->category;
    auto const& T = F.target->category;
    if (pointed_only && (!F.source->unit || !F.target->unit)) {
      throw Error(ErrorKind::missing_unit, "pointed filter needs units");
    }
    std::size_t const      n = S.object_count();
    std::vector<ArrowId>   comp(n, UNDEFINED);
    std::vector<NatTransf> result;
    std::size_t            tried = 0;

    // Naturality squares on arrows between objects <= a, given comp[a].
    auto consistent = [&](ObjectId a) {
      for (ObjectId b = 0; b <= a; ++b) {
        for (ArrowId f : S.hom(a, b)) {
          if (T.compose(F.arrow(f), comp[b]) != T.compose(comp[a], G.arrow(f))) {
            return false;
          }
        }
        if (b == a) {
          continue;
        }
        for (ArrowId f : S.hom(b, a)) {
          if (T.compose(F.arrow(f), comp[a]) != T.compose(comp[b], G.arrow(f))) {
            return false;
          }
        }
      }
      return true;
    };

    auto search = [&](auto&& self, ObjectId a) -> void {
      if (a == n) {
        result.push_back({F, G, comp});
        return;
      }
      auto candidates = T.hom(F(a), G(a));
      for (ArrowId c : candidates) {
        if (pointed_only && a == *F.source->unit
            && c != T.identity(*F.target->unit)) {
          continue;
        }
        if (++tried > budget) {
          throw Error(ErrorKind::budget_exceeded,
                      "natural transformation search exceeded "
                          + std::to_string(budget) + " candidates");
        }
        comp[a] = c;
        if (consistent(a)) {
          self(self, a + 1);
        }
      }
      comp[a] = UNDEFINED;
    };
    search(search, 0);
    return result;
  }

  namespace {

    using HomSignature = std::array<std::uint32_t, 4>;

    class IsoSearch {
     public:
      IsoSearch(FinCategory const& A, FinCategory const& B,
                std::vector<std::uint8_t> const& ca,
                std::vector<std::uint8_t> const& cb)
          : _A(A), _B(B), _ca(ca), _cb(cb) {}

      std::optional<CategoryIsomorphism> run() {
        if (_A.object_count() != _B.object_count()
            || _A.arrow_count() != _B.arrow_count()) {
          return std::nullopt;
        }
        std::size_t const n = _A.object_count();
        _phi.assign(n, UNDEFINED);
        _taken.assign(n, 0);
        std::vector<std::vector<HomSignature>> sa(n), sb(n);
        for (ObjectId a = 0; a < n; ++a) {
          sa[a] = object_signature(_A, _ca, a);
          sb[a] = object_signature(_B, _cb, a);
        }
        _candidates.assign(n, {});
        for (ObjectId a = 0; a < n; ++a) {
          for (ObjectId b = 0; b < n; ++b) {
            if (sa[a] == sb[b]) {
              _candidates[a].push_back(b);
            }
          }
          if (_candidates[a].empty()) {
            return std::nullopt;
          }
        }
        if (assign_objects(0)) {
          return _found;
        }
        return std::nullopt;
      }

     private:
      static HomSignature hom_signature(FinCategory const&               C,
                                        std::vector<std::uint8_t> const& cls,
                                        ObjectId a, ObjectId b) {
        HomSignature s{};
        for (ArrowId f : C.hom(a, b)) {
          ++s[cls[f]];
        }
        return s;
      }

      static std::vector<HomSignature>
      object_signature(FinCategory const&               C,
                       std::vector<std::uint8_t> const& cls, ObjectId a) {
        std::vector<HomSignature> out, in;
        for (ObjectId b = 0; b < C.object_count(); ++b) {
          out.push_back(hom_signature(C, cls, a, b));
          in.push_back(hom_signature(C, cls, b, a));
        }
        std::sort(out.begin(), out.end());
        std::sort(in.begin(), in.end());
        std::vector<HomSignature> sig{hom_signature(C, cls, a, a)};
        sig.insert(sig.end(), out.begin(), out.end());
        sig.insert(sig.end(), in.begin(), in.end());
        return sig;
      }

      bool assign_objects(ObjectId a) {
        if (a == _A.object_count()) {
          return assign_arrows();
        }
        for (ObjectId b : _candidates[a]) {
          if (_taken[b]) {
            continue;
          }
          bool ok = true;
          for (ObjectId c = 0; c < a && ok; ++c) {
            ok = hom_signature(_A, _ca, a, c)
                     == hom_signature(_B, _cb, b, _phi[c])
                 && hom_signature(_A, _ca, c, a)
                        == hom_signature(_B, _cb, _phi[c], b);
          }
          if (ok && hom_signature(_A, _ca, a, a) == hom_signature(_B, _cb, b, b)) {
            _phi[a]   = b;
            _taken[b] = 1;
            if (assign_objects(a + 1)) {
              return true;
            }
            _taken[b] = 0;
            _phi[a]   = UNDEFINED;
          }
        }
        return false;
      }

      struct State {
        std::vector<ArrowId> psi;
        std::vector<char>    used;
      };

      // Records psi(f) = g and closes under composition with already
      // assigned arrows. Returns false on a contradiction.
      bool set(State& st, ArrowId f, ArrowId g) const {
        std::vector<std::pair<ArrowId, ArrowId>> work{{f, g}};
        while (!work.empty()) {
          auto [x, y] = work.back();
          work.pop_back();
          if (st.psi[x] != UNDEFINED) {
            if (st.psi[x] != y) {
              return false;
            }
            continue;
          }
          if (st.used[y] || _ca[x] != _cb[y] || _B.dom(y) != _phi[_A.dom(x)]
              || _B.cod(y) != _phi[_A.cod(x)]) {
            return false;
          }
          st.psi[x]  = y;
          st.used[y] = 1;
          for (ArrowId z : _A.out(_A.cod(x))) {
            if (st.psi[z] != UNDEFINED) {
              work.emplace_back(_A.compose(x, z), _B.compose(y, st.psi[z]));
            }
          }
          for (ArrowId z : _A.in(_A.dom(x))) {
            if (st.psi[z] != UNDEFINED) {
              work.emplace_back(_A.compose(z, x), _B.compose(st.psi[z], y));
            }
          }
        }
        return true;
      }

      bool assign_arrows() {
        State st{std::vector<ArrowId>(_A.arrow_count(), UNDEFINED),
                 std::vector<char>(_B.arrow_count(), 0)};
        for (ObjectId a = 0; a < _A.object_count(); ++a) {
          if (!set(st, _A.identity(a), _B.identity(_phi[a]))) {
            return false;
          }
        }
        return extend(st);
      }

      bool extend(State& st) {
        ArrowId     best = UNDEFINED;
        std::size_t best_count = SIZE_MAX;
        for (ArrowId f = 0; f < _A.arrow_count(); ++f) {
          if (st.psi[f] != UNDEFINED) {
            continue;
          }
          std::size_t count = 0;
          for (ArrowId g : _B.hom(_phi[_A.dom(f)], _phi[_A.cod(f)])) {
            count += !st.used[g] && _cb[g] == _ca[f];
          }
          if (count < best_count) {
            best       = f;
            best_count = count;
            if (count <= 1) {
              break;
            }
          }
        }
        if (best == UNDEFINED) {
          _found = {_phi, st.psi};
          return true;
        }
        for (ArrowId g : _B.hom(_phi[_A.dom(best)], _phi[_A.cod(best)])) {
          if (st.used[g] || _cb[g] != _ca[best]) {
            continue;
          }
          State next = st;
          if (set(next, best, g) && extend(next)) {
            return true;
          }
        }
        return false;
      }

      FinCategory const&                 _A;
      FinCategory const&                 _B;
      std::vector<std::uint8_t> const&   _ca;
      std::vector<std::uint8_t> const&   _cb;
      std::vector<std::vector<ObjectId>> _candidates;
      std::vector<ObjectId>              _phi;
      std::vector<char>                  _taken;
      CategoryIsomorphism                _found;
    };

    std::vector<std::uint8_t> sfs_classes(SfsCategory const& A) {
      std::vector<std::uint8_t> c(A.category.arrow_count(), 0);
      for (ArrowId f = 0; f < c.size(); ++f) {
        c[f] = (A.e.contains(f) ? 1 : 0) | (A.m.contains(f) ? 2 : 0);
      }
      return c;
    }

  }  // namespace

  std::optional<CategoryIsomorphism>
  find_category_isomorphism(FinCategory const& A, FinCategory const& B) {
    std::vector<std::uint8_t> ca(A.arrow_count(), 0), cb(B.arrow_count(), 0);
    return IsoSearch(A, B, ca, cb).run();
  }

  std::optional<std::pair<Functor, Functor>>
  find_category_isomorphism(SfsPtr const& A, SfsPtr const& B) {
    auto ca  = sfs_classes(*A);
    auto cb  = sfs_classes(*B);
    auto iso = IsoSearch(A->category, B->category, ca, cb).run();
    if (!iso) {
      return std::nullopt;
    }
    Functor F{A, B, iso->objects, iso->arrows};
    Functor G{B, A, std::vector<ObjectId>(iso->objects.size()),
              std::vector<ArrowId>(iso->arrows.size())};
    for (ObjectId a = 0; a < iso->objects.size(); ++a) {
      G.object_map[iso->objects[a]] = a;
    }
    for (ArrowId f = 0; f < iso->arrows.size(); ++f) {
      G.arrow_map[iso->arrows[f]] = f;
    }
    return std::make_pair(std::move(F), std::move(G));
  }

}  // namespace sfscat
