// sfscat - strict factorization systems and finite monoids
//
// Verification reports: an ordered list of named checks, each with a
// pass/fail flag and, on failure, a human-readable witness.

#ifndef SFSCAT_REPORT_HPP_
#define SFSCAT_REPORT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sfscat {

  struct Check {
    std::string name;
    bool        passed;
    std::string witness;
  };

  class Report {
   public:
    void add(std::string name, bool passed, std::string witness = {});
    void merge(Report const& other);

    //! True iff every check passed.
    bool passed() const noexcept;
    //! Result of the named check; throws std::out_of_range if absent.
    bool passed(std::string_view name) const;

    Check const* find(std::string_view name) const noexcept;

    std::vector<Check> const& checks() const noexcept {
      return _checks;
    }

    //! One "name: PASS" / "name: FAIL (witness)" line per check.
    std::string to_string() const;

   private:
    std::vector<Check> _checks;
  };

  //! Caps guarding brute-force checks.
  struct Limits {
    std::size_t arrow_cap = 20'000;
  };

}  // namespace sfscat

#endif  // SFSCAT_REPORT_HPP_
