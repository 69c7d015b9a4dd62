// sfscat - strict factorization systems and finite monoids

#include "sfscat/mutation.hpp"

#include <algorithm>

namespace sfscat {

  namespace {
    WideSubcategory& part_of(SfsCategory& A, Part part) {
      return part == Part::e ? A.e : A.m;
    }
  }  // namespace

  SfsCategory with_arrow(SfsCategory const& A, Part part, ArrowId f) {
    SfsCategory B = A;
    part_of(B, part) = part_of(B, part).with(f);
    return B;
  }

  SfsCategory without_arrow(SfsCategory const& A, Part part, ArrowId f) {
    SfsCategory B = A;
    part_of(B, part) = part_of(B, part).without(f);
    return B;
  }

  FinCategory with_composite(FinCategory const& cat, ArrowId f, ArrowId g,
                             ArrowId h) {
    CategoryBuilder b(cat, true);
    b.set_composite(f, g, h);
    return std::move(b).build();
  }

  FinCategory with_identity(FinCategory const& cat, ObjectId a, ArrowId f) {
    CategoryBuilder b(cat, true);
    b.set_identity(a, f);
    return std::move(b).build();
  }

  Subcategory generated_subcategory(SfsCategory const&          A,
                                    std::vector<ArrowId> const& generators) {
    auto const&       cat = A.category;
    std::vector<char> in(cat.arrow_count(), 0);
    std::vector<ArrowId> work;
    auto add = [&](ArrowId f) {
      if (!in.at(f)) {
        in[f] = 1;
        work.push_back(f);
      }
    };
    for (ObjectId a = 0; a < cat.object_count(); ++a) {
      add(cat.identity(a));
    }
    for (ArrowId f : generators) {
      add(f);
    }
    while (!work.empty()) {
      ArrowId f = work.back();
      work.pop_back();
      for (ArrowId g : cat.out(cat.cod(f))) {
        if (in[g]) {
          add(cat.compose(f, g));
        }
      }
      for (ArrowId g : cat.in(cat.dom(f))) {
        if (in[g]) {
          add(cat.compose(g, f));
        }
      }
    }
    Subcategory          out;
    std::vector<ArrowId> index(cat.arrow_count(), UNDEFINED);
    CategoryBuilder      b(cat.object_count());
    for (ObjectId a = 0; a < cat.object_count(); ++a) {
      if (!cat.object_labels().empty()) {
        b.set_object_label(a, cat.object_label(a));
      }
    }
    for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
      if (in[f]) {
        index[f] = b.add_arrow(cat.dom(f), cat.cod(f), cat.arrow_labels().empty()
                                                           ? std::string()
                                                           : cat.arrow_label(f));
        out.embedding.push_back(f);
      }
    }
    for (ObjectId a = 0; a < cat.object_count(); ++a) {
      b.set_identity(a, index[cat.identity(a)]);
    }
    std::vector<ArrowId> e, m;
    for (ArrowId i = 0; i < out.embedding.size(); ++i) {
      ArrowId f = out.embedding[i];
      for (ArrowId g : cat.out(cat.cod(f))) {
        if (in[g]) {
          b.set_composite(i, index[g], index[cat.compose(f, g)]);
        }
      }
      if (A.e.contains(f)) {
        e.push_back(i);
      }
      if (A.m.contains(f)) {
        m.push_back(i);
      }
    }
    FinCategory sub = std::move(b).build();
    std::size_t n   = sub.arrow_count();
    out.sfs = SfsCategory{std::move(sub), WideSubcategory(n, std::move(e)),
                          WideSubcategory(n, std::move(m)), A.unit};
    return out;
  }

}  // namespace sfscat
