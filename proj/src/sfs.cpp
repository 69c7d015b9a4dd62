// sfscat - strict factorization systems and finite monoids

#include "sfscat/sfs.hpp"

#include <algorithm>
#include <string>

namespace sfscat {

  namespace {

    void check_cap(FinCategory const& cat, Limits limits, char const* what) {
      if (cat.arrow_count() > limits.arrow_cap) {
        throw Error(ErrorKind::budget_exceeded,
                    std::string(what) + ": " + std::to_string(cat.arrow_count())
                        + " arrows exceed the cap of "
                        + std::to_string(limits.arrow_cap));
      }
    }

    std::string show(FinCategory const& cat, ArrowId f) {
      return cat.arrow_label(f) + ":" + cat.object_label(cat.dom(f)) + "->"
             + cat.object_label(cat.cod(f));
    }

    // Arrows of W leaving / entering each object.
    struct Incidence {
      std::vector<std::vector<ArrowId>> out, in;

      Incidence(FinCategory const& cat, WideSubcategory const& W)
          : out(cat.object_count()), in(cat.object_count()) {
        for (ArrowId f : W.arrows()) {
          out[cat.dom(f)].push_back(f);
          in[cat.cod(f)].push_back(f);
        }
      }
    };

    void check_wide(FinCategory const& cat, WideSubcategory const& W,
                    char const* name, Report& r) {
      std::string witness;
      for (ObjectId a = 0; a < cat.object_count() && witness.empty(); ++a) {
        if (!W.contains(cat.identity(a))) {
          witness = "identity of " + cat.object_label(a) + " missing";
        }
      }
      r.add(std::string(name) + " contains identities", witness.empty(),
            witness);
      witness.clear();
      Incidence inc(cat, W);
      for (ArrowId f : W.arrows()) {
        for (ArrowId g : inc.out[cat.cod(f)]) {
          ArrowId h = cat.try_compose(f, g);
          if (h == UNDEFINED || !W.contains(h)) {
            witness = show(cat, f) + " then " + show(cat, g) + " leaves "
                      + name;
            break;
          }
        }
        if (!witness.empty()) {
          break;
        }
      }
      r.add(std::string(name) + " closed", witness.empty(), witness);
    }

  }  // namespace

  Report verify_category(FinCategory const& cat, Limits limits) {
    check_cap(cat, limits, "verify_category");
    Report      r;
    std::string witness;
    for (ObjectId a = 0; a < cat.object_count(); ++a) {
      ArrowId i = cat.identity(a);
      if (i >= cat.arrow_count() || cat.dom(i) != a || cat.cod(i) != a) {
        witness = "identity of " + cat.object_label(a)
                  + " is not an endomorphism of it";
        break;
      }
    }
    r.add("identities", witness.empty(), witness);
    if (!witness.empty()) {
      return r;
    }

    witness.clear();
    for (ArrowId f = 0; f < cat.arrow_count() && witness.empty(); ++f) {
      for (ArrowId g : cat.out(cat.cod(f))) {
        ArrowId h = cat.try_compose(f, g);
        if (h == UNDEFINED) {
          witness = show(cat, f) + " then " + show(cat, g) + " undefined";
          break;
        }
        if (h >= cat.arrow_count() || cat.dom(h) != cat.dom(f)
            || cat.cod(h) != cat.cod(g)) {
          witness = show(cat, f) + " then " + show(cat, g)
                    + " has the wrong ends";
          break;
        }
      }
    }
    r.add("composition", witness.empty(), witness);
    if (!witness.empty()) {
      return r;
    }

    witness.clear();
    for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
      if (cat.compose(cat.identity(cat.dom(f)), f) != f) {
        witness = "identity then " + show(cat, f) + " != " + show(cat, f);
        break;
      }
      if (cat.compose(f, cat.identity(cat.cod(f))) != f) {
        witness = show(cat, f) + " then identity != " + show(cat, f);
        break;
      }
    }
    r.add("unit laws", witness.empty(), witness);

    witness.clear();
    for (ArrowId f = 0; f < cat.arrow_count() && witness.empty(); ++f) {
      for (ArrowId g : cat.out(cat.cod(f))) {
        ArrowId fg = cat.compose(f, g);
        for (ArrowId h : cat.out(cat.cod(g))) {
          if (cat.compose(fg, h) != cat.compose(f, cat.compose(g, h))) {
            witness = "(" + show(cat, f) + ", " + show(cat, g) + ", "
                      + show(cat, h) + ")";
            break;
          }
        }
        if (!witness.empty()) {
          break;
        }
      }
    }
    r.add("associativity", witness.empty(), witness);
    return r;
  }

  SfsReport verify_sfs(SfsCategory const& A, Limits limits) {
    auto const& cat = A.category;
    check_cap(cat, limits, "verify_sfs");
    SfsReport out;
    check_wide(cat, A.e, "E", out.report);
    check_wide(cat, A.m, "M", out.report);

    std::size_t const    n = cat.arrow_count();
    std::vector<ArrowId> e_part(n, UNDEFINED), m_part(n, UNDEFINED);
    std::vector<std::uint32_t> count(n, 0);
    Incidence                  m_inc(cat, A.m);
    for (ArrowId e : A.e.arrows()) {
      for (ArrowId m : m_inc.out[cat.cod(e)]) {
        ArrowId h = cat.try_compose(e, m);
        if (h == UNDEFINED) {
          continue;
        }
        if (count[h]++ == 0) {
          e_part[h] = e;
          m_part[h] = m;
        }
      }
    }
    std::string witness;
    for (ArrowId f = 0; f < n; ++f) {
      if (count[f] != 1) {
        if (witness.empty()) {
          witness = show(cat, f) + " has " + std::to_string(count[f])
                    + " factorizations";
        }
        e_part[f] = m_part[f] = UNDEFINED;
      }
    }
    out.report.add("unique factorization", witness.empty(), witness);
    out.factorization = {std::move(e_part), std::move(m_part)};
    return out;
  }

  Report verify_grandis_properties(SfsCategory const& A, Limits limits) {
    auto const& cat = A.category;
    check_cap(cat, limits, "verify_grandis_properties");
    Report      r;
    std::string witness;
    for (ArrowId f : A.e.arrows()) {
      if (A.m.contains(f) && !cat.is_identity(f)) {
        witness = show(cat, f) + " lies in E and M";
        break;
      }
    }
    r.add("E and M meet in identities", witness.empty(), witness);

    witness.clear();
    Incidence m_inc(cat, A.m);
    for (ArrowId e : A.e.arrows()) {
      ObjectId const a = cat.dom(e), b = cat.cod(e);
      for (ArrowId u : cat.out(a)) {
        ObjectId const c = cat.cod(u);
        for (ArrowId m : m_inc.out[c]) {
          ObjectId const d  = cat.cod(m);
          ArrowId const  um = cat.compose(u, m);
          for (ArrowId v : cat.hom(b, d)) {
            if (cat.compose(e, v) != um) {
              continue;
            }
            std::size_t fillers = 0;
            for (ArrowId k : cat.hom(b, c)) {
              if (cat.compose(e, k) == u && cat.compose(k, m) == v) {
                ++fillers;
              }
            }
            if (fillers != 1) {
              witness = "square e=" + show(cat, e) + ", m=" + show(cat, m)
                        + ", u=" + show(cat, u) + ", v=" + show(cat, v)
                        + " has " + std::to_string(fillers) + " diagonals";
              goto done;
            }
          }
        }
      }
    }
  done:
    r.add("orthogonality", witness.empty(), witness);
    return r;
  }

  std::vector<ArrowId> isomorphisms(FinCategory const& cat) {
    std::vector<ArrowId> isos;
    for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
      ObjectId a = cat.dom(f), b = cat.cod(f);
      for (ArrowId g : cat.hom(b, a)) {
        if (cat.compose(f, g) == cat.identity(a)
            && cat.compose(g, f) == cat.identity(b)) {
          isos.push_back(f);
          break;
        }
      }
    }
    return isos;
  }

  SpannedOfs spanned_ofs(SfsCategory const& A, Limits limits) {
    auto const& cat = A.category;
    check_cap(cat, limits, "spanned_ofs");
    SpannedOfs        out;
    out.isos = isomorphisms(cat);
    std::vector<char> in_e(cat.arrow_count(), 0), in_m(cat.arrow_count(), 0);
    std::vector<std::vector<ArrowId>> iso_out(cat.object_count()),
        iso_in(cat.object_count());
    for (ArrowId i : out.isos) {
      iso_out[cat.dom(i)].push_back(i);
      iso_in[cat.cod(i)].push_back(i);
    }
    for (ArrowId e : A.e.arrows()) {
      for (ArrowId i : iso_out[cat.cod(e)]) {
        in_e[cat.compose(e, i)] = 1;
      }
    }
    for (ArrowId m : A.m.arrows()) {
      for (ArrowId i : iso_in[cat.dom(m)]) {
        in_m[cat.compose(i, m)] = 1;
      }
    }
    for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
      if (in_e[f]) {
        out.e.push_back(f);
      }
      if (in_m[f]) {
        out.m.push_back(f);
      }
    }
    return out;
  }

  bool is_thin(FinCategory const& cat, WideSubcategory const& W) {
    std::vector<char> seen(cat.object_count() * cat.object_count(), 0);
    for (ArrowId f : W.arrows()) {
      char& s = seen[cat.dom(f) * cat.object_count() + cat.cod(f)];
      if (s) {
        return false;
      }
      s = 1;
    }
    return true;
  }

  bool is_proper(SfsCategory const& A, Limits limits) {
    auto const& cat = A.category;
    check_cap(cat, limits, "is_proper");
    for (ArrowId e : A.e.arrows()) {
      auto out = cat.out(cat.cod(e));
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
          if (cat.cod(out[i]) == cat.cod(out[j])
              && cat.compose(e, out[i]) == cat.compose(e, out[j])) {
            return false;
          }
        }
      }
    }
    for (ArrowId m : A.m.arrows()) {
      auto in = cat.in(cat.dom(m));
      for (std::size_t i = 0; i < in.size(); ++i) {
        for (std::size_t j = i + 1; j < in.size(); ++j) {
          if (cat.dom(in[i]) == cat.dom(in[j])
              && cat.compose(in[i], m) == cat.compose(in[j], m)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ArrowId unique_arrow(FinCategory const& cat, WideSubcategory const& W,
                       ObjectId a, ObjectId b) {
    ArrowId found = UNDEFINED;
    for (ArrowId f : cat.hom(a, b)) {
      if (W.contains(f)) {
        if (found != UNDEFINED) {
          return UNDEFINED;
        }
        found = f;
      }
    }
    return found;
  }

  bool is_unital_at(SfsCategory const& A, ObjectId zeta) {
    auto const& cat = A.category;
    if (zeta >= cat.object_count()) {
      throw Error(ErrorKind::index_out_of_range,
                  "object " + std::to_string(zeta));
    }
    for (ObjectId a = 0; a < cat.object_count(); ++a) {
      if (unique_arrow(cat, A.e, zeta, a) == UNDEFINED
          || unique_arrow(cat, A.m, a, zeta) == UNDEFINED) {
        return false;
      }
    }
    return true;
  }

  std::optional<ObjectId> find_unit(SfsCategory const& A) {
    for (ObjectId z = 0; z < A.category.object_count(); ++z) {
      if (is_unital_at(A, z)) {
        return z;
      }
    }
    return std::nullopt;
  }

  CompletenessReport completeness(SfsCategory const&      A,
                                  FactorizationMap const& fact,
                                  Limits                  limits) {
    auto const& cat = A.category;
    check_cap(cat, limits, "completeness");
    CompletenessReport out{true, std::nullopt, {}};
    Incidence          e_inc(cat, A.e), m_inc(cat, A.m);

    // For e: a ->> b and m: a >-> c, some e': c ->> d makes m e' factor
    // through e.
    for (ArrowId e : A.e.arrows()) {
      for (ArrowId m : m_inc.out[cat.dom(e)]) {
        bool ok = false;
        for (ArrowId e2 : e_inc.out[cat.cod(m)]) {
          if (fact.e_part[cat.compose(m, e2)] == e) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          out.squares = false;
          out.witness = "no square for e=" + show(cat, e)
                        + ", m=" + show(cat, m);
          goto dual;
        }
      }
    }
  dual:
    // For e': c ->> d and m': b >-> d, some m: a >-> c makes m e' factor
    // through m'.
    if (out.squares) {
      for (ArrowId e2 : A.e.arrows()) {
        for (ArrowId m2 : m_inc.in[cat.cod(e2)]) {
          bool ok = false;
          for (ArrowId m : m_inc.in[cat.dom(e2)]) {
            if (fact.m_part[cat.compose(m, e2)] == m2) {
              ok = true;
              break;
            }
          }
          if (!ok) {
            out.squares = false;
            out.witness = "no square for e'=" + show(cat, e2)
                          + ", m'=" + show(cat, m2);
            goto unit;
          }
        }
      }
    }
  unit:
    if (!A.unit || !is_unital_at(A, *A.unit)) {
      return out;
    }
    ObjectId const       z = *A.unit;
    std::size_t const    n = cat.object_count();
    std::vector<ArrowId> to_z(n), from_z(n);
    for (ObjectId a = 0; a < n; ++a) {
      to_z[a]   = unique_arrow(cat, A.m, a, z);
      from_z[a] = unique_arrow(cat, A.e, z, a);
    }
    bool via = true;
    for (ArrowId e : A.e.arrows() ) {
      bool ok = false;
      for (ObjectId u = 0; u < n && !ok; ++u) {
        ok = fact.e_part[cat.compose(to_z[cat.dom(e)], from_z[u])] == e;
      }
      if (!ok) {
        via = false;
        break;
      }
    }
    for (ArrowId m : A.m.arrows()) {
      if (!via) {
        break;
      }
      bool ok = false;
      for (ObjectId v = 0; v < n && !ok; ++v) {
        ok = fact.m_part[cat.compose(to_z[v], from_z[cat.cod(m)])] == m;
      }
      via = ok;
    }
    out.via_unit = via;
    return out;
  }

  bool is_complete(SfsCategory const& A, Limits limits) {
    auto sfs = verify_sfs(A, limits);
    if (!sfs.passed()) {
      throw Error(ErrorKind::precondition_failed,
                  "is_complete requires a strict factorization system");
    }
    auto c = completeness(A, sfs.factorization, limits);
    if (c.via_unit && *c.via_unit != c.squares) {
      throw Error(ErrorKind::internal_disagreement,
                  "completeness by squares and through the unit differ");
    }
    return c.squares;
  }

}  // namespace sfscat
