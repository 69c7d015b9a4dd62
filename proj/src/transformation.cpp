// sfscat - strict factorization systems and finite monoids

#include "sfscat/transformation.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sfscat {

  Transformation::Transformation(std::vector<std::uint32_t> images)
      : _images(std::move(images)) {
    if (_images.empty()) {
      throw Error(ErrorKind::arity_mismatch, "transformation of arity 0");
    }
    for (auto im : _images) {
      if (im < 1 || im > _images.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "image " + std::to_string(im) + " outside 1.."
                        + std::to_string(_images.size()));
      }
    }
  }

  Transformation Transformation::identity(std::size_t arity) {
    std::vector<std::uint32_t> im(arity);
    std::iota(im.begin(), im.end(), 1u);
    return Transformation(std::move(im));
  }

  std::size_t Transformation::rank() const {
    return std::set<std::uint32_t>(_images.begin(), _images.end()).size();
  }

  std::string Transformation::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < _images.size(); ++i) {
      out += (i ? " " : "") + std::to_string(_images[i]);
    }
    return out + ")";
  }

  Transformation operator*(Transformation const& s, Transformation const& t) {
    if (s.arity() != t.arity()) {
      throw Error(ErrorKind::arity_mismatch, "product of transformations");
    }
    std::vector<std::uint32_t> im(s.arity());
    for (std::uint32_t x = 1; x <= s.arity(); ++x) {
      im[x - 1] = t[s[x]];
    }
    return Transformation(std::move(im));
  }

  std::optional<Element>
  TransformationClosure::find(Transformation const& t) const {
    auto it = index.find(t);
    if (it == index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Element TransformationClosure::at(Transformation const& t) const {
    auto r = find(t);
    if (!r) {
      throw Error(ErrorKind::index_out_of_range,
                  t.to_string() + " is not an element");
    }
    return *r;
  }

  namespace {
    TransformationClosure tabulate(std::vector<Transformation> elements) {
      std::map<Transformation, Element> index;
      for (Element i = 0; i < elements.size(); ++i) {
        index.emplace(elements[i], i);
      }
      std::size_t const    n = elements.size();
      std::vector<Element> table(n * n);
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          table[a * n + b] = index.at(elements[a] * elements[b]);
        }
      }
      std::vector<std::string> labels;
      labels.reserve(n);
      for (auto const& t : elements) {
        labels.push_back(t.to_string());
      }
      FiniteSemigroup S(n, std::move(table), std::nullopt, std::move(labels));
      return {std::move(elements), std::move(S), std::move(index)};
    }
  }  // namespace

  TransformationClosure
  close_transformations(std::size_t                        arity,
                        std::vector<Transformation> const& generators,
                        bool                               include_identity,
                        std::size_t                        budget) {
    for (auto const& g : generators) {
      if (g.arity() != arity) {
        throw Error(ErrorKind::arity_mismatch,
                    g.to_string() + " does not have arity "
                        + std::to_string(arity));
      }
    }
    if (generators.empty() && !include_identity) {
      throw Error(ErrorKind::shape_mismatch, "no generators");
    }
    std::vector<Transformation> elements;
    std::set<Transformation>    seen;
    auto add = [&](Transformation const& t) {
      if (seen.insert(t).second) {
        if (elements.size() == budget) {
          throw Error(ErrorKind::closure_budget_exceeded,
                      "more than " + std::to_string(budget) + " elements");
        }
        elements.push_back(t);
      }
    };
    if (include_identity) {
      add(Transformation::identity(arity));
    }
    for (auto const& g : generators) {
      add(g);
    }
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : generators) {
        add(elements[i] * g);
      }
    }
    return tabulate(std::move(elements));
  }

  FiniteSemigroup
  generate_transformation_monoid(std::size_t                        arity,
                                 std::vector<Transformation> const& generators,
                                 bool        include_identity,
                                 std::size_t budget) {
    return close_transformations(arity, generators, include_identity, budget)
        .semigroup;
  }

  TransformationClosure full_transformation_monoid(std::size_t arity) {
    std::vector<Transformation> elements;
    std::vector<std::uint32_t>  im(arity, 1);
    while (true) {
      elements.emplace_back(im);
      std::size_t i = arity;
      while (i > 0 && im[i - 1] == arity) {
        im[i - 1] = 1;
        --i;
      }
      if (i == 0) {
        break;
      }
      ++im[i - 1];
    }
    return tabulate(std::move(elements));
  }

  TransformationClosure symmetric_group(std::size_t arity) {
    std::vector<Transformation> elements;
    std::vector<std::uint32_t>  im(arity);
    std::iota(im.begin(), im.end(), 1u);
    do {
      elements.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return tabulate(std::move(elements));
  }

}  // namespace sfscat
