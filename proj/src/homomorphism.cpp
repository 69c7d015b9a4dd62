// sfscat - strict factorization systems and finite monoids

#include "sfscat/homomorphism.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <tuple>

namespace sfscat {

  namespace {
    bool same(SemigroupPtr const& a, SemigroupPtr const& b) {
      return a == b || (a && b && *a == *b);
    }

    // Partial map between two semigroups closed under products as far as
    // the assigned elements determine it.
    class PartialMap {
     public:
      PartialMap(FiniteSemigroup const& S,
                 FiniteSemigroup const& T,
                 bool                   injective)
          : _S(&S),
            _T(&T),
            _injective(injective),
            _map(S.size(), UNDEFINED),
            _used(injective ? T.size() : 0, 0) {}

      bool assign(Element x, Element y) {
        std::vector<std::pair<Element, Element>> work{{x, y}};
        while (!work.empty()) {
          auto [a, ia] = work.back();
          work.pop_back();
          if (_map[a] != UNDEFINED) {
            if (_map[a] != ia) {
              return false;
            }
            continue;
          }
          if (_injective) {
            if (_used[ia]) {
              return false;
            }
            _used[ia] = 1;
          }
          _map[a] = ia;
          _mapped.push_back(a);
          for (Element b : _mapped) {
            work.emplace_back((*_S)(a, b), (*_T)(ia, _map[b]));
            work.emplace_back((*_S)(b, a), (*_T)(_map[b], ia));
          }
        }
        return true;
      }

      std::optional<Element> first_unmapped() const {
        for (Element a = 0; a < _map.size(); ++a) {
          if (_map[a] == UNDEFINED) {
            return a;
          }
        }
        return std::nullopt;
      }

      std::vector<Element> const& map() const noexcept {
        return _map;
      }

      bool used(Element y) const {
        return _injective && _used[y];
      }

     private:
      FiniteSemigroup const* _S;
      FiniteSemigroup const* _T;
      bool                   _injective;
      std::vector<Element>   _map;
      std::vector<char>      _used;
      std::vector<Element>   _mapped;
    };

    using Invariant = std::array<std::size_t, 6>;

    std::vector<Invariant> invariants(FiniteSemigroup const& S) {
      std::vector<Invariant> out(S.size());
      for (Element a = 0; a < S.size(); ++a) {
        auto [index, period] = index_and_period(a, S);
        auto left            = principal_ideal(Side::left, a, S);
        auto right           = principal_ideal(Side::right, a, S);
        out[a]               = {S.identity() == a,
                                static_cast<std::size_t>(S.is_idempotent(a)),
                                index,
                                period,
                                static_cast<std::size_t>(
                                    std::count(left.begin(), left.end(), 1)),
                                static_cast<std::size_t>(
                                    std::count(right.begin(), right.end(), 1))};
      }
      return out;
    }
  }  // namespace

  bool operator==(Homomorphism const& f, Homomorphism const& g) {
    return f.map == g.map && same(f.source, g.source)
           && same(f.target, g.target);
  }

  bool check_homomorphism(Homomorphism const& h, HomKind kind) {
    auto const& S = *h.source;
    auto const& T = *h.target;
    if (h.map.size() != S.size()) {
      return false;
    }
    for (Element im : h.map) {
      if (im >= T.size()) {
        return false;
      }
    }
    for (Element a = 0; a < S.size(); ++a) {
      for (Element b = 0; b < S.size(); ++b) {
        if (h.map[S(a, b)] != T(h.map[a], h.map[b])) {
          return false;
        }
      }
    }
    if (kind == HomKind::monoid) {
      if (!S.is_monoid() || !T.is_monoid()) {
        return false;
      }
      return h.map[S.one()] == T.one();
    }
    return true;
  }

  Homomorphism identity_homomorphism(SemigroupPtr const& S) {
    std::vector<Element> map(S->size());
    for (Element a = 0; a < S->size(); ++a) {
      map[a] = a;
    }
    return {S, S, std::move(map)};
  }

  Homomorphism compose(Homomorphism const& g, Homomorphism const& f) {
    if (!same(f.target, g.source)) {
      throw Error(ErrorKind::signature_mismatch,
                  "composite g o f needs target(f) = source(g)");
    }
    std::vector<Element> map(f.map.size());
    for (Element a = 0; a < f.map.size(); ++a) {
      map[a] = g.map[f.map[a]];
    }
    return {f.source, g.target, std::move(map)};
  }

  HomEnumeration enumerate_homomorphisms(SemigroupPtr const& S,
                                         SemigroupPtr const& T,
                                         std::size_t         budget,
                                         HomKind             kind) {
    HomEnumeration result{{}, true};
    PartialMap     start(*S, *T, false);
    if (kind == HomKind::monoid) {
      if (!S->is_monoid() || !T->is_monoid()) {
        return result;
      }
      if (!start.assign(S->one(), T->one())) {
        return result;
      }
    }
    std::size_t tried = 0;

    std::function<void(PartialMap const&)> search = [&](PartialMap const& pm) {
      if (!result.complete) {
        return;
      }
      auto x = pm.first_unmapped();
      if (!x) {
        result.homomorphisms.push_back({S, T, pm.map()});
        return;
      }
      for (Element y = 0; y < T->size(); ++y) {
        if (++tried > budget) {
          result.complete = false;
          return;
        }
        PartialMap next = pm;
        if (next.assign(*x, y)) {
          search(next);
          if (!result.complete) {
            return;
          }
        }
      }
    };
    search(start);
    return result;
  }

  bool is_isomorphism(FiniteSemigroup const&      S,
                      FiniteSemigroup const&      T,
                      std::vector<Element> const& map) {
    if (S.size() != T.size() || map.size() != S.size()) {
      return false;
    }
    std::vector<char> hit(T.size(), 0);
    for (Element im : map) {
      if (im >= T.size() || hit[im]) {
        return false;
      }
      hit[im] = 1;
    }
    for (Element a = 0; a < S.size(); ++a) {
      for (Element b = 0; b < S.size(); ++b) {
        if (map[S(a, b)] != T(map[a], map[b])) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<Element>>
  find_isomorphism(FiniteSemigroup const& S, FiniteSemigroup const& T) {
    if (S.size() != T.size() || S.is_monoid() != T.is_monoid()) {
      return std::nullopt;
    }
    auto inv_s = invariants(S);
    auto inv_t = invariants(T);
    {
      auto a = inv_s;
      auto b = inv_t;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        return std::nullopt;
      }
    }
    std::optional<std::vector<Element>>    found;
    std::function<void(PartialMap const&)> search = [&](PartialMap const& pm) {
      auto x = pm.first_unmapped();
      if (!x) {
        found = pm.map();
        return;
      }
      for (Element y = 0; y < T.size() && !found; ++y) {
        if (inv_s[*x] != inv_t[y] || pm.used(y)) {
          continue;
        }
        PartialMap next = pm;
        if (next.assign(*x, y)) {
          search(next);
        }
      }
    };
    search(PartialMap(S, T, true));
    return found;
  }

}  // namespace sfscat
