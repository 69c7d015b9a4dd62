// sfscat - strict factorization systems and finite monoids

#include "sfscat/sigma.hpp"

#include <string>

namespace sfscat {

  std::pair<Report, std::optional<UcCtsfs>> UcCtsfs::try_certify(SfsPtr A,
                                                                  Limits limits) {
    Report r;
    auto const& cat = A->category;
    Report      laws = verify_category(cat, limits);
    r.add("category laws", laws.passed(), laws.to_string());
    if (!laws.passed()) {
      return {r, std::nullopt};
    }
    SfsReport sfs = verify_sfs(*A, limits);
    std::string witness;
    for (auto const& c : sfs.report.checks()) {
      if (!c.passed) {
        witness = c.name + ": " + c.witness;
        break;
      }
    }
    r.add("strict factorization", sfs.passed(), witness);
    if (!sfs.passed()) {
      return {r, std::nullopt};
    }
    r.add("thin E", is_thin(cat, A->e));
    r.add("thin M", is_thin(cat, A->m));
    bool unital = A->unit && is_unital_at(*A, *A->unit);
    r.add("unital", unital, A->unit ? "" : "no unit declared");
    auto c = completeness(*A, sfs.factorization, limits);
    if (c.via_unit && *c.via_unit != c.squares) {
      throw Error(ErrorKind::internal_disagreement,
                  "completeness by squares and through the unit differ");
    }
    r.add("complete", c.squares, c.witness);
    if (!r.passed()) {
      return {r, std::nullopt};
    }

    UcCtsfs U;
    U._sfs    = std::move(A);
    U._report = r;
    U._fact   = std::move(sfs.factorization);
    std::size_t const n = cat.object_count();
    ObjectId const    z = U.unit();
    U._to_unit.resize(n);
    U._from_unit.resize(n);
    for (ObjectId a = 0; a < n; ++a) {
      U._to_unit[a]   = unique_arrow(cat, U._sfs->m, a, z);
      U._from_unit[a] = unique_arrow(cat, U._sfs->e, z, a);
    }
    U._star.resize(n * n);
    std::vector<Element> table(n * n);
    for (ObjectId a = 0; a < n; ++a) {
      for (ObjectId b = 0; b < n; ++b) {
        U._star[a * n + b] = table[a * n + b]
            = U.middle(cat.compose(U._to_unit[a], U._from_unit[b]));
      }
    }
    std::vector<std::string> labels;
    if (!cat.object_labels().empty()) {
      labels = cat.object_labels();
    }
    U._monoid = make_semigroup(n, std::move(table), Element(z),
                               std::move(labels));
    for (ObjectId a = 0; a < n; ++a) {
      for (ObjectId b = 0; b < n; ++b) {
        for (ObjectId d = 0; d < n; ++d) {
          ArrowId zig = cat.compose({U._to_unit[a], U._from_unit[b],
                                     U._to_unit[b], U._from_unit[d]});
          if (U.middle(zig) != U.star(U.star(a, b), d)) {
            throw Error(ErrorKind::internal_disagreement,
                        "triple product differs from the zig-zag middle object");
          }
        }
      }
    }
    return {r, std::move(U)};
  }

  UcCtsfs UcCtsfs::certify(SfsPtr A, Limits limits) {
    auto [r, U] = try_certify(std::move(A), limits);
    if (!U) {
      std::string failed;
      for (auto const& c : r.checks()) {
        if (!c.passed) {
          failed += (failed.empty() ? "" : "; ") + c.name;
          if (!c.witness.empty()) {
            failed += " (" + c.witness + ")";
          }
        }
      }
      throw Error(ErrorKind::certification_failed, failed);
    }
    return std::move(*U);
  }

  ObjectId star(UcCtsfs const& A, ObjectId a, ObjectId b) {
    return A.star(a, b);
  }

  SemigroupPtr sigma_monoid(UcCtsfs const& A) {
    return A.monoid();
  }

  HomMonoidIso hom_monoid_iso(UcCtsfs const& A) {
    auto const&       cat   = A.category();
    ObjectId const    z     = A.unit();
    auto              arrows = cat.hom(z, z);
    std::size_t const k     = arrows.size();
    std::vector<Element> index(cat.arrow_count(), UNDEFINED);
    for (Element i = 0; i < k; ++i) {
      index[arrows[i]] = i;
    }
    std::vector<Element> table(k * k);
    for (Element i = 0; i < k; ++i) {
      for (Element j = 0; j < k; ++j) {
        table[i * k + j] = index[cat.compose(arrows[i], arrows[j])];
      }
    }
    std::vector<std::string> labels;
    if (!cat.arrow_labels().empty()) {
      for (ArrowId f : arrows) {
        labels.push_back(cat.arrow_label(f));
      }
    }
    HomMonoidIso out;
    out.sigma = A.monoid();
    out.endo  = make_semigroup(k, std::move(table), index[cat.identity(z)],
                              std::move(labels));
    out.endo_arrows.assign(arrows.begin(), arrows.end());
    std::size_t const n = cat.object_count();
    out.phi.resize(n);
    for (ObjectId x = 0; x < n; ++x) {
      out.phi[x] = index[cat.compose(A.from_unit(x), A.to_unit(x))];
    }
    if (k != n || !is_isomorphism(*out.sigma, *out.endo, out.phi)
        || out.phi[z] != *out.endo->identity()) {
      throw Error(ErrorKind::verification_failed,
                  "x |-> (zeta ->> x >-> zeta) is not a monoid isomorphism");
    }
    return out;
  }

  CounitPair counit_pair(UcCtsfs const& A, Limits limits) {
    auto const& cat = A.category();
    CounitPair  out;
    out.d = build_d_category(A.monoid());
    auto const& D = out.d->category();

    out.counit = Functor{out.d->sfs(), A.sfs(), {}, {}};
    for (ObjectId a = 0; a < cat.object_count(); ++a) {
      out.counit.object_map.push_back(a);
    }
    out.counit.arrow_map.resize(D.arrow_count());
    for (ArrowId f = 0; f < D.arrow_count(); ++f) {
      auto const& t = out.d->triple(f);
      ArrowId     e = unique_arrow(cat, A.sfs()->e, t.dom, t.label);
      ArrowId     m = unique_arrow(cat, A.sfs()->m, t.label, t.cod);
      if (e == UNDEFINED || m == UNDEFINED) {
        throw Error(ErrorKind::verification_failed,
                    "no E/M path for " + out.d->label(f));
      }
      out.counit.arrow_map[f] = cat.compose(e, m);
    }

    out.inverse = Functor{A.sfs(), out.d->sfs(), out.counit.object_map, {}};
    out.inverse.arrow_map.resize(cat.arrow_count());
    for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
      auto g = out.d->find({cat.dom(f), A.middle(f), cat.cod(f)});
      if (!g) {
        throw Error(ErrorKind::verification_failed,
                    "arrow " + cat.arrow_label(f) + " has no triple image");
      }
      out.inverse.arrow_map[f] = *g;
    }

    FunctorFlags flags{true, true, false};
    for (Functor const* F : {&out.counit, &out.inverse}) {
      Report r = check_functor(*F, flags, limits);
      if (!r.passed()) {
        throw Error(ErrorKind::verification_failed,
                    "counit functor check failed:\n" + r.to_string());
      }
    }
    if (!(compose(out.inverse, out.counit) == identity_functor(out.d->sfs()))
        || !(compose(out.counit, out.inverse) == identity_functor(A.sfs()))) {
      throw Error(ErrorKind::verification_failed,
                  "counit and inverse do not compose to identities");
    }
    return out;
  }

  Homomorphism sigma_functor(Functor const& H, UcCtsfs const& source,
                             UcCtsfs const& target, HomKind kind) {
    if (H.source != source.sfs() || H.target != target.sfs()) {
      throw Error(ErrorKind::signature_mismatch,
                  "functor endpoints differ from the certificates");
    }
    FunctorFlags flags{true, kind == HomKind::monoid, true};
    Report       r = check_functor(H, flags);
    for (auto const& c : r.checks()) {
      if (c.passed) {
        continue;
      }
      if (c.name == "semi-pointed" || c.name == "pointed") {
        throw Error(ErrorKind::not_semi_pointed,
                    c.name + " check failed: " + c.witness);
      }
      throw Error(ErrorKind::invalid_functor,
                  c.name + " check failed: " + c.witness);
    }
    Homomorphism h{source.monoid(), target.monoid(), H.object_map};
    if (!check_homomorphism(h, kind)) {
      throw Error(ErrorKind::verification_failed,
                  "object map is not a homomorphism of the Sigma monoids");
    }
    return h;
  }

}  // namespace sfscat
