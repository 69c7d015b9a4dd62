// sfscat - strict factorization systems and finite monoids
//
// This file contains the command-line front end. Every line of a report is
// the outcome of a library-level check; the front end only reads files,
// calls the library and formats the results.
//
// Subcommands:
//
//   check-sfs <category>          pass/fail per strict factorization axiom
//   d-category <semigroup>        dump D(S) (to --out or standard output)
//   freyd <monoid>                build the Freyd quotient and compare to D(M)
//   sigma <category>              certify and emit the reconstructed monoid
//   roundtrip <monoid>            check that Sigma(D(M)) = M
//   conjugations <A> <B> --f <map> --g <map>
//                                 list the conjugations f => g
//   morita <A> <B>                decide Morita equivalence
//   corpus list                   list the built-in examples
//   corpus dump <name>            write a built-in example
//
// Global flags: --out <path>, --debug-witness-check, --budget <n>,
// --format text|machine. Machine format prints one key=value per line, where
// keys are report names with spaces replaced by underscores.
//
// Exit status: 0 when the property holds (or the command succeeded), 1 when
// it is false, 2 for unreadable input or invalid arguments.

#ifndef SFSCAT_CLI_HPP_
#define SFSCAT_CLI_HPP_

#include <string>
#include <vector>

namespace sfscat::cli {

  struct CliResult {
    int         exit_code;
    std::string out;
    std::string err;
  };

  //! Runs one command; \p args excludes the program name.
  CliResult run(std::vector<std::string> const& args);

}  // namespace sfscat::cli

#endif  // SFSCAT_CLI_HPP_
