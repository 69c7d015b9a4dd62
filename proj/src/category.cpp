// sfscat - strict factorization systems and finite monoids

#include "sfscat/category.hpp"

#include <algorithm>

#include "sfscat/semigroup.hpp"

namespace sfscat {

  ArrowId FinCategory::try_compose(ArrowId f, ArrowId g) const {
    if (f >= arrow_count() || g >= arrow_count()) {
      throw Error(ErrorKind::index_out_of_range, "arrow index");
    }
    if (!composable(f, g)) {
      throw Error(ErrorKind::not_composable,
                  "cod(" + std::to_string(f) + ") != dom(" + std::to_string(g)
                      + ")");
    }
    if (_rule) {
      return _rule->compose(*this, f, g);
    }
    return _table[table_index(f, g)];
  }

  ArrowId FinCategory::compose(ArrowId f, ArrowId g) const {
    ArrowId h = try_compose(f, g);
    if (h == UNDEFINED) {
      throw Error(ErrorKind::not_composable,
                  "composite of " + std::to_string(f) + " and "
                      + std::to_string(g) + " is undefined");
    }
    return h;
  }

  ArrowId FinCategory::compose(std::initializer_list<ArrowId> path) const {
    auto    it  = path.begin();
    ArrowId acc = *it++;
    for (; it != path.end(); ++it) {
      acc = compose(acc, *it);
    }
    return acc;
  }

  std::string FinCategory::object_label(ObjectId a) const {
    return _object_labels.empty() ? std::to_string(a) : _object_labels[a];
  }

  std::string FinCategory::arrow_label(ArrowId f) const {
    return _arrow_labels.empty() || _arrow_labels[f].empty()
               ? std::to_string(f)
               : _arrow_labels[f];
  }

  void FinCategory::index() {
    std::size_t const n = _objects;
    _hom.assign(n * n, {});
    _out.assign(n, {});
    _in.assign(n, {});
    _out_pos.assign(_ends.size(), 0);
    for (ArrowId f = 0; f < _ends.size(); ++f) {
      auto [a, b] = _ends[f];
      _hom[a * n + b].push_back(f);
      _out_pos[f] = static_cast<std::uint32_t>(_out[a].size());
      _out[a].push_back(f);
      _in[b].push_back(f);
    }
    _pair_offset.assign(_ends.size(), 0);
    _pairs = 0;
    for (ArrowId f = 0; f < _ends.size(); ++f) {
      _pair_offset[f] = _pairs;
      _pairs += _out[_ends[f].cod].size();
    }
  }

  CategoryBuilder::CategoryBuilder(std::size_t objects)
      : _objects(objects), _identities(objects, UNDEFINED) {}

  CategoryBuilder::CategoryBuilder(FinCategory const& cat, bool keep_table)
      : _objects(cat.object_count()),
        _ends(cat._ends),
        _identities(cat._identities),
        _object_labels(cat._object_labels),
        _arrow_labels(cat._arrow_labels) {
    if (keep_table) {
      for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
        for (ArrowId g : cat.out(cat.cod(f))) {
          ArrowId h = cat.try_compose(f, g);
          if (h != UNDEFINED) {
            _composites.push_back({f, g, h});
          }
        }
      }
    }
  }

  ArrowId CategoryBuilder::add_arrow(ObjectId dom, ObjectId cod,
                                     std::string label) {
    if (dom >= _objects || cod >= _objects) {
      throw Error(ErrorKind::index_out_of_range, "arrow endpoint");
    }
    _ends.push_back({dom, cod});
    if (!label.empty() || !_arrow_labels.empty()) {
      _arrow_labels.resize(_ends.size() - 1);
      _arrow_labels.push_back(std::move(label));
    }
    return static_cast<ArrowId>(_ends.size() - 1);
  }

  void CategoryBuilder::set_identity(ObjectId a, ArrowId f) {
    if (a >= _objects || f >= _ends.size()) {
      throw Error(ErrorKind::index_out_of_range, "identity assignment");
    }
    _identities[a] = f;
  }

  void CategoryBuilder::set_composite(ArrowId f, ArrowId g, ArrowId h) {
    if (f >= _ends.size() || g >= _ends.size() || h >= _ends.size()) {
      throw Error(ErrorKind::index_out_of_range, "composite entry");
    }
    if (_ends[f].cod != _ends[g].dom) {
      throw Error(ErrorKind::not_composable,
                  "cod(" + std::to_string(f) + ") != dom(" + std::to_string(g)
                      + ")");
    }
    _composites.push_back({f, g, h});
  }

  void CategoryBuilder::set_object_label(ObjectId a, std::string label) {
    if (_object_labels.empty()) {
      _object_labels.resize(_objects);
      for (ObjectId b = 0; b < _objects; ++b) {
        _object_labels[b] = std::to_string(b);
      }
    }
    _object_labels.at(a) = std::move(label);
  }

  FinCategory CategoryBuilder::build() && {
    FinCategory cat = std::move(*this).build(nullptr);
    cat._table.assign(cat._pairs, UNDEFINED);
    for (auto const& c : _composites) {
      cat._table[cat.table_index(c.f, c.g)] = c.h;
    }
    return cat;
  }

  FinCategory
  CategoryBuilder::build(std::shared_ptr<CompositionRule const> rule) && {
    for (ObjectId a = 0; a < _objects; ++a) {
      if (_identities[a] == UNDEFINED) {
        throw Error(ErrorKind::bad_identity,
                    "object " + std::to_string(a) + " has no identity");
      }
    }
    if (!_arrow_labels.empty()) {
      _arrow_labels.resize(_ends.size());
    }
    FinCategory cat;
    cat._objects       = _objects;
    cat._ends          = std::move(_ends);
    cat._identities    = std::move(_identities);
    cat._object_labels = std::move(_object_labels);
    cat._arrow_labels  = std::move(_arrow_labels);
    cat._rule          = std::move(rule);
    cat.index();
    return cat;
  }

  WideSubcategory::WideSubcategory(std::size_t          host_arrows,
                                   std::vector<ArrowId> arrows)
      : _member(host_arrows, 0) {
    for (ArrowId f : arrows) {
      if (f >= host_arrows) {
        throw Error(ErrorKind::index_out_of_range,
                    "arrow " + std::to_string(f) + " not in host category");
      }
      _member[f] = 1;
    }
    for (ArrowId f = 0; f < host_arrows; ++f) {
      if (_member[f]) {
        _arrows.push_back(f);
      }
    }
  }

  WideSubcategory WideSubcategory::with(ArrowId f) const {
    auto v = _arrows;
    v.push_back(f);
    return WideSubcategory(_member.size(), std::move(v));
  }

  WideSubcategory WideSubcategory::without(ArrowId f) const {
    auto v = _arrows;
    v.erase(std::remove(v.begin(), v.end(), f), v.end());
    return WideSubcategory(_member.size(), std::move(v));
  }

  FinCategory materialize(FinCategory const& cat, std::size_t pair_cap) {
    if (cat.composable_pair_count() > pair_cap) {
      throw Error(ErrorKind::budget_exceeded,
                  std::to_string(cat.composable_pair_count())
                      + " composable pairs exceed the cap of "
                      + std::to_string(pair_cap));
    }
    return CategoryBuilder(cat, true).build();
  }

  FinCategory delooping(FiniteSemigroup const& M) {
    CategoryBuilder b(1);
    for (Element x = 0; x < M.size(); ++x) {
      b.add_arrow(0, 0, M.label(x));
    }
    b.set_identity(0, M.one());
    for (Element x = 0; x < M.size(); ++x) {
      for (Element y = 0; y < M.size(); ++y) {
        b.set_composite(x, y, M(x, y));
      }
    }
    return std::move(b).build();
  }

}  // namespace sfscat
