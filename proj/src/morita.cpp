// sfscat - strict factorization systems and finite monoids

#include "sfscat/morita.hpp"

#include <string>

namespace sfscat {

  namespace {

    void require_idempotent(FiniteSemigroup const& M, Element e) {
      if (e >= M.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "element " + std::to_string(e));
      }
      if (!M.is_idempotent(e)) {
        throw Error(ErrorKind::not_idempotent,
                    M.label(e) + " is not idempotent");
      }
    }

  }  // namespace

  bool is_enlargement(FiniteSemigroup const& M, Element e) {
    require_idempotent(M, e);
    std::vector<char> hit(M.size(), 0);
    std::size_t       count = 0;
    for (Element x = 0; x < M.size(); ++x) {
      Element xe = M(x, e);
      for (Element y = 0; y < M.size(); ++y) {
        char& h = hit[M(xe, y)];
        if (!h) {
          h = 1;
          ++count;
        }
      }
    }
    return count == M.size();
  }

  CornerMonoid corner_monoid(SemigroupPtr const& M, Element e) {
    require_idempotent(*M, e);
    std::vector<char> in(M->size(), 0);
    for (Element m = 0; m < M->size(); ++m) {
      in[M->product({e, m, e})] = 1;
    }
    CornerMonoid         out;
    std::vector<Element> index(M->size(), UNDEFINED);
    for (Element m = 0; m < M->size(); ++m) {
      if (in[m]) {
        index[m] = static_cast<Element>(out.embedding.size());
        out.embedding.push_back(m);
      }
    }
    std::size_t const        k = out.embedding.size();
    std::vector<Element>     table(k * k);
    std::vector<std::string> labels;
    for (Element i = 0; i < k; ++i) {
      for (Element j = 0; j < k; ++j) {
        table[i * k + j] = index[(*M)(out.embedding[i], out.embedding[j])];
      }
      if (M->has_labels()) {
        labels.push_back(M->label(out.embedding[i]));
      }
    }
    out.monoid = make_semigroup(k, std::move(table), index[e], std::move(labels));
    return out;
  }

  Report verify_package(EquivalencePackage const& p) {
    Report r;
    r.add("f homomorphism", check_homomorphism(p.f));
    r.add("g homomorphism", check_homomorphism(p.g));
    if (!r.passed()) {
      return r;
    }
    auto const& M  = *p.f.source;
    auto const& M2 = *p.f.target;
    bool        sig = *p.g.source == M2 && *p.g.target == M;
    r.add("signatures", sig);
    if (!sig) {
      return r;
    }
    Homomorphism const id  = identity_homomorphism(p.f.source);
    Homomorphism const id2 = identity_homomorphism(p.f.target);
    Homomorphism const gf  = compose(p.g, p.f);
    Homomorphism const fg  = compose(p.f, p.g);
    sig = p.eta.f == id && p.eta.g == gf && p.eps.f == fg && p.eps.g == id2;
    r.add("conjugation types", sig);
    if (!sig) {
      return r;
    }
    Element const one = M.one(), one2 = M2.one();
    r.add("eta conjugation", is_conjugation(id, gf, p.eta.alpha));
    r.add("eps conjugation", is_conjugation(fg, id2, p.eps.alpha));
    r.add("beta conjugation", is_conjugation(gf, id, p.beta));
    r.add("mu conjugation", is_conjugation(id2, fg, p.mu));
    r.add("eta beta = 1, beta eta = gf(1)",
          M(p.eta.alpha, p.beta) == one && M(p.beta, p.eta.alpha) == gf(one));
    r.add("eps mu = fg(1'), mu eps = 1'",
          M2(p.eps.alpha, p.mu) == fg(one2) && M2(p.mu, p.eps.alpha) == one2);
    if (r.passed()) {
      r.add("triangle identities",
            check_triangle_identities(p.f, p.g, p.eta, p.eps));
    }
    return r;
  }

  EquivalencePackage equivalence_from_enlargement(SemigroupPtr const& Mp,
                                                  Element e, Element x,
                                                  Element y) {
    auto const& M = *Mp;
    if (e >= M.size() || x >= M.size() || y >= M.size() || !M.is_monoid()) {
      throw Error(ErrorKind::precondition_failed,
                  "elements out of range or no identity");
    }
    if (!M.is_idempotent(e)) {
      throw Error(ErrorKind::precondition_failed,
                  M.label(e) + " is not idempotent");
    }
    if (M.product({x, e, y}) != M.one()) {
      throw Error(ErrorKind::precondition_failed, "x e y != 1");
    }
    CornerMonoid         corner = corner_monoid(Mp, e);
    std::vector<Element> index(M.size(), UNDEFINED);
    for (Element i = 0; i < corner.embedding.size(); ++i) {
      index[corner.embedding[i]] = i;
    }
    Homomorphism f{Mp, corner.monoid, {}};
    for (Element m = 0; m < M.size(); ++m) {
      f.map.push_back(index[M.product({e, y, m, x, e})]);
    }
    Homomorphism g{corner.monoid, Mp, corner.embedding};
    Element const eta  = M(x, e);
    Element const beta = M(e, y);
    Element const eps  = index[M.product({e, y, e})];
    Element const mu   = index[M.product({e, x, e})];
    auto          pkg  = EquivalencePackage{
        f,
        g,
        Conjugation{identity_homomorphism(Mp), compose(g, f), eta},
        Conjugation{compose(f, g), identity_homomorphism(corner.monoid), eps},
        beta,
        mu};
    Report r = verify_package(pkg);
    if (!r.passed()) {
      throw Error(ErrorKind::verification_failed, r.to_string());
    }
    return pkg;
  }

  EnlargementWitness enlargement_from_equivalence(EquivalencePackage const& p) {
    auto fail = [](std::string const& what) {
      throw Error(ErrorKind::verification_failed, what);
    };
    Report r = verify_package(p);
    for (auto const& c : r.checks()) {
      if (!c.passed) {
        fail(c.name);
      }
    }
    auto const&   M    = *p.f.source;
    auto const&   M2   = *p.f.target;
    Element const one  = M.one();
    Element const one2 = M2.one();
    Element const e    = p.g(one2);
    if (!M.is_idempotent(e)) {
      fail("e = g(1') is idempotent");
    }
    for (Element m2 = 0; m2 < M2.size(); ++m2) {
      if (M.product({e, p.g(m2), e}) != p.g(m2)) {
        fail("g(m') = e g(m') e");
      }
    }
    if (M(p.g(p.mu), p.beta) != e) {
      fail("e = g(mu) beta");
    }
    if (M2(p.mu, p.f(p.beta)) != p.f(one)) {
      fail("f(1) = mu f(beta)");
    }
    EnlargementWitness w{e, corner_monoid(p.f.source, e), {}, {}};
    std::vector<Element> index(M.size(), UNDEFINED);
    for (Element i = 0; i < w.corner.embedding.size(); ++i) {
      index[w.corner.embedding[i]] = i;
    }
    for (Element m2 = 0; m2 < M2.size(); ++m2) {
      w.to_corner.push_back(index[p.g(m2)]);
    }
    for (Element m : w.corner.embedding) {
      Element h = M2.product({p.mu, p.f(m), p.eps.alpha});
      if (p.g(h) != M.product({e, m, e})) {
        fail("g(h(m)) = eme");
      }
      w.from_corner.push_back(h);
    }
    for (Element m2 = 0; m2 < M2.size(); ++m2) {
      if (w.from_corner[w.to_corner[m2]] != m2) {
        fail("h(g(m')) = m'");
      }
    }
    if (M.product({p.eta.alpha, e, p.g(p.f(one)), p.beta}) != one) {
      fail("1 = eta e g(f(1)) beta");
    }
    if (!is_enlargement(M, e)) {
      fail("MeM = M");
    }
    if (!is_isomorphism(M2, *w.corner.monoid, w.to_corner)) {
      fail("g restricts to an isomorphism M' -> eMe");
    }
    return w;
  }

  std::optional<MoritaWitness> decide_morita(SemigroupPtr const& M,
                                             SemigroupPtr const& M2,
                                             std::size_t         budget) {
    std::size_t examined = 0;
    for (bool second : {false, true}) {
      auto const& A = second ? M2 : M;
      auto const& B = second ? M : M2;
      for (Element e : idempotents(*A)) {
        if (++examined > budget) {
          throw Error(ErrorKind::budget_exceeded,
                      "more than " + std::to_string(budget)
                          + " idempotents examined");
        }
        if (!is_enlargement(*A, e)) {
          continue;
        }
        CornerMonoid corner = corner_monoid(A, e);
        if (auto iso = find_isomorphism(*corner.monoid, *B)) {
          return MoritaWitness{second, e, std::move(corner), std::move(*iso)};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<EquivalencePackage>
  find_adjoint_equivalence(SemigroupPtr const& M, SemigroupPtr const& M2,
                           std::size_t budget) {
    auto fs = enumerate_homomorphisms(M, M2, budget);
    auto gs = enumerate_homomorphisms(M2, M, budget);
    if (!fs.complete || !gs.complete) {
      throw Error(ErrorKind::budget_exceeded, "homomorphism enumeration");
    }
    Homomorphism const id  = identity_homomorphism(M);
    Homomorphism const id2 = identity_homomorphism(M2);
    std::size_t        pairs = 0;
    for (auto const& f : fs.homomorphisms) {
      for (auto const& g : gs.homomorphisms) {
        if (++pairs > budget) {
          throw Error(ErrorKind::budget_exceeded,
                      "more than " + std::to_string(budget)
                          + " homomorphism pairs examined");
        }
        Homomorphism const gf = compose(g, f);
        Homomorphism const fg = compose(f, g);
        for (Element eta : enumerate_conjugations(id, gf)) {
          Conjugation c_eta{id, gf, eta};
          auto        inv_eta = invert_conjugation(c_eta);
          if (!inv_eta) {
            continue;
          }
          for (Element eps : enumerate_conjugations(fg, id2)) {
            Conjugation c_eps{fg, id2, eps};
            auto        inv_eps = invert_conjugation(c_eps);
            if (!inv_eps || !check_triangle_identities(f, g, c_eta, c_eps)) {
              continue;
            }
            EquivalencePackage pkg{f,     g,     c_eta, c_eps, inv_eta->beta,
                                   inv_eps->beta};
            if (!verify_package(pkg).passed()) {
              throw Error(ErrorKind::internal_disagreement,
                          "found package does not re-verify");
            }
            return pkg;
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace sfscat
