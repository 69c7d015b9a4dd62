// sfscat - strict factorization systems and finite monoids

#include "sfscat/conjugation.hpp"

#include <string>

namespace sfscat {

  namespace {

    void check_signature(Homomorphism const& f, Homomorphism const& g) {
      auto same = [](SemigroupPtr const& x, SemigroupPtr const& y) {
        return x == y || *x == *y;
      };
      if (!same(f.source, g.source) || !same(f.target, g.target)) {
        throw Error(ErrorKind::signature_mismatch,
                    "homomorphisms have different sources or targets");
      }
    }

  }  // namespace

  bool is_conjugation(Homomorphism const& f, Homomorphism const& g,
                      Element alpha) {
    check_signature(f, g);
    auto const& T = *f.target;
    if (alpha >= T.size()) {
      throw Error(ErrorKind::index_out_of_range,
                  "element " + std::to_string(alpha));
    }
    Element const one = f.source->one();
    if (T(f(one), alpha) != alpha || T(alpha, g(one)) != alpha) {
      return false;
    }
    for (Element m = 0; m < f.source->size(); ++m) {
      if (T(f(m), alpha) != T(alpha, g(m))) {
        return false;
      }
    }
    return true;
  }

  Conjugation make_conjugation(Homomorphism f, Homomorphism g, Element alpha) {
    if (!is_conjugation(f, g, alpha)) {
      throw Error(ErrorKind::not_a_conjugation,
                  f.target->label(alpha) + " is not a conjugation");
    }
    return Conjugation{std::move(f), std::move(g), alpha};
  }

  Conjugation identity_conjugation(Homomorphism const& f) {
    return make_conjugation(f, f, f(f.source->one()));
  }

  Conjugation vcompose(Conjugation const& a1, Conjugation const& a2) {
    if (!(a1.g == a2.f)) {
      throw Error(ErrorKind::not_composable,
                  "target homomorphism of the first conjugation differs from "
                  "the source of the second");
    }
    return make_conjugation(a1.f, a2.g, (*a1.f.target)(a1.alpha, a2.alpha));
  }

  std::vector<Element> enumerate_conjugations(Homomorphism const& f,
                                              Homomorphism const& g) {
    check_signature(f, g);
    std::vector<Element> out;
    for (Element a = 0; a < f.target->size(); ++a) {
      if (is_conjugation(f, g, a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  NatTransf conj_to_nat(Conjugation const& c, DPtr const& source,
                        DPtr const& target) {
    if (!is_conjugation(c.f, c.g, c.alpha)) {
      throw Error(ErrorKind::not_a_conjugation, "invalid conjugation");
    }
    auto const& T = *c.f.target;
    NatTransf   n{d_functor(c.f, source, target), d_functor(c.g, source, target),
                {}};
    for (Element x = 0; x < c.f.source->size(); ++x) {
      n.components.push_back(
          target->arrow(c.f(x), T(c.f(x), c.alpha), c.g(x)));
    }
    if (!is_natural(n)) {
      throw Error(ErrorKind::verification_failed,
                  "conjugation components are not natural");
    }
    return n;
  }

  Conjugation nat_to_conj(NatTransf const& n, DPtr const& source,
                          DPtr const& target) {
    if (!source->sfs()->unit) {
      throw Error(ErrorKind::precondition_failed,
                  "source D-category has no unit");
    }
    Homomorphism f{source->semigroup(), target->semigroup(),
                   n.source_functor.object_map};
    Homomorphism g{source->semigroup(), target->semigroup(),
                   n.target_functor.object_map};
    if (!check_homomorphism(f) || !check_homomorphism(g)
        || d_functor(f, source, target).arrow_map
               != n.source_functor.arrow_map
        || d_functor(g, source, target).arrow_map
               != n.target_functor.arrow_map) {
      throw Error(ErrorKind::precondition_failed,
                  "functors are not images of homomorphisms");
    }
    Element alpha = target->triple(n.components.at(*source->sfs()->unit)).label;
    return make_conjugation(std::move(f), std::move(g), alpha);
  }

  std::optional<Inversion> invert_conjugation(Conjugation const& c) {
    auto const&   T     = *c.f.target;
    Element const one   = c.f.source->one();
    Element const f1    = c.f(one);
    Element const g1    = c.g(one);
    Element const alpha = c.alpha;
    std::optional<Element> beta;
    for (Element b = 0; b < T.size(); ++b) {
      if (T(alpha, b) == f1 && T(b, alpha) == g1
          && T.product({b, alpha, b}) == b) {
        beta = b;
        break;
      }
    }
    if (!beta) {
      return std::nullopt;
    }
    Element gamma = T.product({*beta, alpha, *beta});
    bool    ok    = is_conjugation(c.g, c.f, gamma) && T.is_idempotent(T(alpha, *beta))
                && T.is_idempotent(T(*beta, alpha))
                && T.product({alpha, gamma, alpha}) == alpha
                && T.product({gamma, alpha, gamma}) == gamma;
    if (!ok) {
      throw Error(ErrorKind::internal_disagreement,
                  "inverse of an invertible conjugation failed verification");
    }
    Conjugation g{c.g, c.f, gamma};
    if (vcompose(c, g).alpha != f1 || vcompose(g, c).alpha != g1) {
      throw Error(ErrorKind::internal_disagreement,
                  "inverse conjugation does not compose to identities");
    }
    return Inversion{*beta, std::move(g)};
  }

  bool check_triangle_identities(Homomorphism const& f, Homomorphism const& g,
                                 Conjugation const& eta,
                                 Conjugation const& eps,
                                 TriangleOptions    options) {
    auto const& M  = *f.source;
    auto const& M2 = *f.target;
    if (!(*g.source == M2) || !(*g.target == M)
        || !(eta.f == identity_homomorphism(f.source))
        || !(eta.g == compose(g, f)) || !(eps.f == compose(f, g))
        || !(eps.g == identity_homomorphism(f.target))) {
      throw Error(ErrorKind::signature_mismatch,
                  "eta must go Id => g o f and eps f o g => Id");
    }
    if (!is_conjugation(eta.f, eta.g, eta.alpha)
        || !is_conjugation(eps.f, eps.g, eps.alpha)) {
      throw Error(ErrorKind::not_a_conjugation,
                  "eta and eps must be conjugations");
    }
    Element const one  = M.one();
    Element const one2 = M2.one();
    bool const    reduced = f(one) == M2(f(eta.alpha), eps.alpha)
                         && g(one2) == M(eta.alpha, g(eps.alpha));
    if (!options.raw_check) {
      return reduced;
    }
    // Whiskered components: F(eta_x) eps_{F(x)} and eta_{G(y)} G(eps_y).
    auto  D  = build_d_category(f.source);
    auto  D2 = build_d_category(f.target);
    auto  F  = d_functor(f, D, D2);
    auto  G  = d_functor(g, D2, D);
    auto  n_eta = conj_to_nat(eta, D, D);
    auto  n_eps = conj_to_nat(eps, D2, D2);
    bool  raw   = true;
    for (Element x = 0; x < M.size() && raw; ++x) {
      raw = D2->category().compose(F.arrow(n_eta.components[x]),
                                   n_eps.components[f(x)])
            == D2->category().identity(f(x));
    }
    for (Element y = 0; y < M2.size() && raw; ++y) {
      raw = D->category().compose(n_eta.components[g(y)],
                                  G.arrow(n_eps.components[y]))
            == D->category().identity(g(y));
    }
    if (raw != reduced) {
      throw Error(ErrorKind::internal_disagreement,
                  "reduced and whiskered triangle identities differ");
    }
    return reduced;
  }

}  // namespace sfscat
