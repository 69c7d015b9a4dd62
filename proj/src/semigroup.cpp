// sfscat - strict factorization systems and finite monoids

#include "sfscat/semigroup.hpp"

#include <algorithm>
#include <string>

namespace sfscat {

  namespace {
    std::vector<Element> flatten(std::vector<std::vector<Element>> const& t) {
      if (t.empty()) {
        throw Error(ErrorKind::shape_mismatch, "empty Cayley table");
      }
      std::vector<Element> flat;
      flat.reserve(t.size() * t.size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].size() != t.size()) {
          throw Error(ErrorKind::shape_mismatch,
                      "row " + std::to_string(i) + " has "
                          + std::to_string(t[i].size()) + " entries, expected "
                          + std::to_string(t.size()));
        }
        flat.insert(flat.end(), t[i].begin(), t[i].end());
      }
      return flat;
    }

    std::optional<Element> search_identity(std::size_t                n,
                                           std::vector<Element> const& t) {
      for (Element e = 0; e < n; ++e) {
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a) {
          ok = t[e * n + a] == a && t[a * n + e] == a;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  FiniteSemigroup::FiniteSemigroup(
      std::vector<std::vector<Element>> const& table,
      std::optional<Element>                  identity,
      std::vector<std::string>                labels)
      : FiniteSemigroup(table.size(), flatten(table), identity,
                        std::move(labels)) {}

  FiniteSemigroup::FiniteSemigroup(std::size_t              n,
                                   std::vector<Element>     flat_table,
                                   std::optional<Element>   identity,
                                   std::vector<std::string> labels)
      : _size(n),
        _table(std::move(flat_table)),
        _identity(identity),
        _labels(std::move(labels)) {
    validate();
  }

  void FiniteSemigroup::validate() {
    if (_size == 0) {
      throw Error(ErrorKind::shape_mismatch, "a semigroup needs elements");
    }
    if (_table.size() != _size * _size) {
      throw Error(ErrorKind::shape_mismatch,
                  "table has " + std::to_string(_table.size())
                      + " entries, expected " + std::to_string(_size * _size));
    }
    for (std::size_t i = 0; i < _table.size(); ++i) {
      if (_table[i] >= _size) {
        throw Error(ErrorKind::index_out_of_range,
                    "entry (" + std::to_string(i / _size) + ","
                        + std::to_string(i % _size)
                        + ") = " + std::to_string(_table[i]));
      }
    }
    if (!_labels.empty() && _labels.size() != _size) {
      throw Error(ErrorKind::shape_mismatch, "label count differs from size");
    }
    if (auto t = find_nonassociative_triple(_size, _table)) {
      auto [a, b, c] = *t;
      throw Error(ErrorKind::non_associative,
                  "(ab)c != a(bc) for (a,b,c) = (" + std::to_string(a) + ","
                      + std::to_string(b) + "," + std::to_string(c) + ")");
    }
    if (_identity) {
      if (*_identity >= _size) {
        throw Error(ErrorKind::index_out_of_range, "identity index");
      }
      Element e = *_identity;
      for (Element a = 0; a < _size; ++a) {
        if (product(e, a) != a || product(a, e) != a) {
          throw Error(ErrorKind::bad_identity,
                      std::to_string(e) + " does not fix "
                          + std::to_string(a));
        }
      }
    } else {
      _identity = search_identity(_size, _table);
    }
  }

  Element FiniteSemigroup::product(std::initializer_list<Element> factors) const {
    auto it = factors.begin();
    Element acc = *it++;
    for (; it != factors.end(); ++it) {
      acc = product(acc, *it);
    }
    return acc;
  }

  Element FiniteSemigroup::one() const {
    if (!_identity) {
      throw Error(ErrorKind::not_a_monoid, "semigroup has no identity");
    }
    return *_identity;
  }

  std::string FiniteSemigroup::label(Element a) const {
    return _labels.empty() ? std::to_string(a) : _labels[a];
  }

  std::optional<Element> FiniteSemigroup::find_label(
      std::string const& lbl) const {
    for (Element a = 0; a < _size; ++a) {
      if (label(a) == lbl) {
        return a;
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup make_from_table(std::vector<std::vector<Element>> const& t,
                                  std::optional<Element> identity) {
    return FiniteSemigroup(t, identity);
  }

  std::optional<std::array<Element, 3>>
  find_nonassociative_triple(std::size_t n, std::span<Element const> t) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element ab = t[a * n + b];
        for (Element c = 0; c < n; ++c) {
          if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
            return std::array<Element, 3>{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S) {
    if (S.is_monoid()) {
      return S;
    }
    std::size_t const    n = S.size();
    std::vector<Element> t((n + 1) * (n + 1));
    for (Element a = 0; a <= n; ++a) {
      for (Element b = 0; b <= n; ++b) {
        t[a * (n + 1) + b]
            = a == n ? b : (b == n ? a : S.product(a, b));
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels()) {
      labels = S.labels();
      labels.push_back("1");
    }
    return FiniteSemigroup(n + 1, std::move(t), static_cast<Element>(n),
                           std::move(labels));
  }

  std::vector<char> principal_ideal(Side side, Element y,
                                    FiniteSemigroup const& S) {
    std::vector<char> in(S.size(), 0);
    in[y] = 1;
    for (Element u = 0; u < S.size(); ++u) {
      in[side == Side::left ? S(u, y) : S(y, u)] = 1;
    }
    return in;
  }

  bool green_leq(Side side, Element x, Element y, FiniteSemigroup const& S) {
    if (x >= S.size() || y >= S.size()) {
      throw Error(ErrorKind::index_out_of_range, "green_leq argument");
    }
    if (x == y) {
      return true;
    }
    for (Element u = 0; u < S.size(); ++u) {
      if ((side == Side::left ? S(u, y) : S(y, u)) == x) {
        return true;
      }
    }
    return false;
  }

  std::vector<Element> idempotents(FiniteSemigroup const& S) {
    std::vector<Element> out;
    for (Element a = 0; a < S.size(); ++a) {
      if (S.is_idempotent(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::optional<std::pair<Element, Element>>
  isomorphic_idempotents(Element e, Element f, FiniteSemigroup const& S) {
    if (e >= S.size() || f >= S.size()) {
      throw Error(ErrorKind::index_out_of_range, "isomorphic_idempotents");
    }
    if (!S.is_idempotent(e) || !S.is_idempotent(f)) {
      throw Error(ErrorKind::not_idempotent,
                  "isomorphic_idempotents needs idempotent arguments");
    }
    if (e == f) {
      return std::pair{e, e};
    }
    for (Element x = 0; x < S.size(); ++x) {
      for (Element y = 0; y < S.size(); ++y) {
        if (S(x, y) == e && S(y, x) == f) {
          return std::pair{x, y};
        }
      }
    }
    return std::nullopt;
  }

  std::vector<Element> generating_set(FiniteSemigroup const& S) {
    std::size_t const    n = S.size();
    std::vector<char>    reached(n, 0);
    std::vector<Element> gens;
    for (Element a = 0; a < n; ++a) {
      if (reached[a]) {
        continue;
      }
      gens.push_back(a);
      // Recompute the closure under right multiplication by generators.
      std::fill(reached.begin(), reached.end(), 0);
      std::vector<Element> members(gens.begin(), gens.end());
      for (Element g : gens) {
        reached[g] = 1;
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (Element g : gens) {
          Element p = S(members[i], g);
          if (!reached[p]) {
            reached[p] = 1;
            members.push_back(p);
          }
        }
      }
    }
    return gens;
  }

  std::pair<std::size_t, std::size_t> index_and_period(Element a,
                                                       FiniteSemigroup const& S) {
    std::vector<std::size_t> seen(S.size(), 0);
    Element                  p = a;
    for (std::size_t k = 1;; ++k) {
      if (seen[p] != 0) {
        return {seen[p], k - seen[p]};
      }
      seen[p] = k;
      p       = S(p, a);
    }
  }

}  // namespace sfscat
