// sfscat - strict factorization systems and finite monoids

#include "sfscat/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfscat {

  void Report::add(std::string name, bool passed, std::string witness) {
    _checks.push_back({std::move(name), passed, std::move(witness)});
  }

  void Report::merge(Report const& other) {
    _checks.insert(_checks.end(), other._checks.begin(), other._checks.end());
  }

  bool Report::passed() const noexcept {
    return std::all_of(_checks.begin(), _checks.end(), [](Check const& c) {
      return c.passed;
    });
  }

  bool Report::passed(std::string_view name) const {
    Check const* c = find(name);
    if (c == nullptr) {
      throw std::out_of_range("no check named " + std::string(name));
    }
    return c->passed;
  }

  Check const* Report::find(std::string_view name) const noexcept {
    for (auto const& c : _checks) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }

  std::string Report::to_string() const {
    std::string out;
    for (auto const& c : _checks) {
      out += c.name;
      out += c.passed ? ": PASS" : ": FAIL";
      if (!c.passed && !c.witness.empty()) {
        out += " (" + c.witness + ")";
      }
      out += '\n';
    }
    return out;
  }

}  // namespace sfscat
