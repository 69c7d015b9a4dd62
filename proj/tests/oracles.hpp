// sfscat - strict factorization systems and finite monoids
//
// Brute-force reference implementations used as test oracles. They work on
// raw Cayley tables and read nothing from the library beyond the table of a
// FiniteSemigroup, so a bug in a library algorithm cannot hide in its oracle.

#ifndef SFSCAT_TESTS_ORACLES_HPP_
#define SFSCAT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "sfscat/category.hpp"
#include "sfscat/semigroup.hpp"

namespace oracle {

  using u32 = std::uint32_t;

  struct Table {
    std::size_t        n;
    std::vector<u32>   t;
    std::optional<u32> id;

    u32 operator()(u32 a, u32 b) const {
      return t[a * n + b];
    }
  };

  inline Table table(sfscat::FiniteSemigroup const& S) {
    return {S.size(), S.table(), S.identity()};
  }

  inline std::optional<u32> find_identity(Table const& S) {
    for (u32 e = 0; e < S.n; ++e) {
      bool ok = true;
      for (u32 a = 0; a < S.n && ok; ++a) {
        ok = S(e, a) == a && S(a, e) == a;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  inline bool associative(Table const& S) {
    for (u32 a = 0; a < S.n; ++a) {
      for (u32 b = 0; b < S.n; ++b) {
        for (u32 c = 0; c < S.n; ++c) {
          if (S(S(a, b), c) != S(a, S(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // S with a fresh identity n appended, unless S already has one.
  inline Table adjoin(Table const& S) {
    if (find_identity(S)) {
      Table T = S;
      T.id    = find_identity(S);
      return T;
    }
    std::size_t m = S.n + 1;
    Table       T{m, std::vector<u32>(m * m), u32(S.n)};
    for (u32 a = 0; a < m; ++a) {
      for (u32 b = 0; b < m; ++b) {
        T.t[a * m + b] = a == S.n ? b : b == S.n ? a : S(a, b);
      }
    }
    return T;
  }

  using Triple = std::array<u32, 3>;

  // Every (a, x, b) with x in aS^1 and x in S^1 b, in (a, b, x) order.
  inline std::vector<Triple> d_triples(Table const& S) {
    Table const       S1 = adjoin(S);
    std::size_t const n  = S.n;
    // right[a * n + x]: x in a S^1; left[b * n + x]: x in S^1 b.
    std::vector<char> right(n * n, 0), left(n * n, 0);
    for (u32 a = 0; a < n; ++a) {
      for (u32 u = 0; u < S1.n; ++u) {
        right[a * n + S1(a, u)] = 1;
        left[a * n + S1(u, a)]  = 1;
      }
    }
    std::vector<Triple> out;
    for (u32 a = 0; a < n; ++a) {
      for (u32 b = 0; b < n; ++b) {
        for (u32 x = 0; x < n; ++x) {
          if (right[a * n + x] && left[b * n + x]) {
            out.push_back({a, x, b});
          }
        }
      }
    }
    return out;
  }

  // Labels x w over every witness w in S^1 with b w = y, for the composite
  // (a, x, b)(b, y, c).
  inline std::set<u32> d_composite_labels(Table const& S, u32 x, u32 b,
                                          u32 y) {
    Table const   S1 = adjoin(S);
    std::set<u32> out;
    for (u32 w = 0; w < S1.n; ++w) {
      if (S1(b, w) == y) {
        out.insert(S1(x, w));
      }
    }
    return out;
  }

  // Number of pairs (e, m) with e in E, m in M and em = f.
  inline std::size_t factorization_count(sfscat::SfsCategory const& A,
                                         sfscat::ArrowId            f) {
    auto const& C     = A.category;
    std::size_t count = 0;
    for (auto e : A.e.arrows()) {
      if (C.dom(e) != C.dom(f)) {
        continue;
      }
      for (auto m : A.m.arrows()) {
        if (C.dom(m) == C.cod(e) && C.cod(m) == C.cod(f)
            && C.try_compose(e, m) == f) {
          ++count;
        }
      }
    }
    return count;
  }

  // Permutation search; only for small carriers.
  inline bool isomorphic(Table const& S, Table const& T) {
    if (S.n != T.n) {
      return false;
    }
    std::vector<u32> p(S.n);
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (u32 a = 0; a < S.n && ok; ++a) {
        for (u32 b = 0; b < S.n && ok; ++b) {
          ok = p[S(a, b)] == T(p[a], p[b]);
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  inline bool is_hom(Table const& S, Table const& T, std::vector<u32> const& h) {
    for (u32 a = 0; a < S.n; ++a) {
      for (u32 b = 0; b < S.n; ++b) {
        if (h[S(a, b)] != T(h[a], h[b])) {
          return false;
        }
      }
    }
    return true;
  }

  // Every multiplicative map S -> T, by exhausting all T.n^S.n maps.
  inline std::vector<std::vector<u32>> homomorphisms(Table const& S,
                                                     Table const& T,
                                                     bool monoid = false) {
    std::vector<std::vector<u32>> out;
    std::vector<u32>              h(S.n, 0);
    while (true) {
      if (is_hom(S, T, h)
          && (!monoid || (S.id && T.id && h[*S.id] == *T.id))) {
        out.push_back(h);
      }
      std::size_t i = 0;
      while (i < S.n && ++h[i] == T.n) {
        h[i++] = 0;
      }
      if (i == S.n) {
        return out;
      }
    }
  }

  // Elements alpha of T with f(1) alpha = alpha = alpha g(1) and
  // f(m) alpha = alpha g(m) for every m.
  inline std::vector<u32> conjugations(Table const& S, Table const& T,
                                       std::vector<u32> const& f,
                                       std::vector<u32> const& g) {
    std::vector<u32> out;
    u32 const        one = *S.id;
    for (u32 alpha = 0; alpha < T.n; ++alpha) {
      bool ok = T(f[one], alpha) == alpha && T(alpha, g[one]) == alpha;
      for (u32 m = 0; m < S.n && ok; ++m) {
        ok = T(f[m], alpha) == T(alpha, g[m]);
      }
      if (ok) {
        out.push_back(alpha);
      }
    }
    return out;
  }

  // Whether {x e y} covers all of M.
  inline bool is_enlargement(Table const& M, u32 e) {
    std::vector<char> hit(M.n, 0);
    for (u32 x = 0; x < M.n; ++x) {
      for (u32 y = 0; y < M.n; ++y) {
        hit[M(M(x, e), y)] = 1;
      }
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c; });
  }

  // Size of the closure of a set of transformations (1-based image
  // tuples) under left-to-right composition, optionally with the identity.
  inline std::size_t transformation_closure_size(
      std::size_t k, std::vector<std::vector<u32>> const& gens,
      bool with_identity) {
    std::set<std::vector<u32>>    seen;
    std::vector<std::vector<u32>> todo;
    auto push = [&](std::vector<u32> const& t) {
      if (seen.insert(t).second) {
        todo.push_back(t);
      }
    };
    if (with_identity) {
      std::vector<u32> id(k);
      std::iota(id.begin(), id.end(), 1);
      push(id);
    }
    for (auto const& g : gens) {
      push(g);
    }
    while (!todo.empty()) {
      auto s = todo.back();
      todo.pop_back();
      for (auto const& g : gens) {
        std::vector<u32> st(k);
        for (std::size_t i = 0; i < k; ++i) {
          st[i] = g[s[i] - 1];
        }
        push(st);
      }
    }
    return seen.size();
  }

}  // namespace oracle

#endif  // SFSCAT_TESTS_ORACLES_HPP_
