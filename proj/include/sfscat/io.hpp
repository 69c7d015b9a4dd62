// sfscat - strict factorization systems and finite monoids
//
// Plain-text formats. Blank lines and text after '#' are ignored (except in
// the payload of label lines).
//
// Cayley table:
//   semigroup <n>
//   <n lines of n 0-based indices>   row i holds the products i * j
//   identity <k>                     optional
//   label <k> <string>               optional, any number
//
// Transformation generators (loaded as the generated monoid, identity
// included):
//   transformations <k>
//   <one generator per line: k 1-based images>
//
// Category:
//   category <objects> <arrows>
//   object <id> <string>             optional object label
//   arrow <id> <dom> <cod>           one per arrow
//   label <arrow-id> <string>        optional arrow label
//   identity <obj> <arrow-id>        one per object
//   compose <f> <g> <fg>             one per composable pair
//   E <arrow-id ...>                 may be repeated
//   M <arrow-id ...>                 may be repeated
//   unit <obj>                       optional
//
// Map between carriers:
//   map <n>
//   <n 0-based indices>

#ifndef SFSCAT_IO_HPP_
#define SFSCAT_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "category.hpp"
#include "semigroup.hpp"

namespace sfscat {

  //! Reads either a Cayley table or a transformation file. Throws
  //! parse_error ("line L, column C: ...") for malformed text; validation
  //! errors of the structure itself keep their own kinds.
  FiniteSemigroup parse_semigroup(std::string_view text);
  std::string     write_semigroup(FiniteSemigroup const& S);

  SfsCategory parse_category(std::string_view text);
  std::string write_category(SfsCategory const& A);

  std::vector<Element> parse_map(std::string_view text);
  std::string          write_map(std::vector<Element> const& map);

  //! Throws parse_error if the file cannot be read.
  std::string read_file(std::string const& path);
  //! Throws parse_error if the file cannot be written.
  void write_file(std::string const& path, std::string const& content);

}  // namespace sfscat

#endif  // SFSCAT_IO_HPP_
