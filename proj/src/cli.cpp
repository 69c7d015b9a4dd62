// sfscat - strict factorization systems and finite monoids

#include "sfscat/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "sfscat/conjugation.hpp"
#include "sfscat/corpus.hpp"
#include "sfscat/functor.hpp"
#include "sfscat/io.hpp"
#include "sfscat/morita.hpp"
#include "sfscat/schutzenberger.hpp"
#include "sfscat/sfs.hpp"
#include "sfscat/sigma.hpp"

namespace sfscat::cli {

  namespace {

    struct Options {
      std::string              out;
      bool                     debug_witness_check = false;
      std::size_t              budget              = 1'000'000;
      std::string              format              = "text";
      std::vector<std::string> inputs;
      std::string              f_map;
      std::string              g_map;
      std::string              corpus_action;
      std::string              corpus_name;
    };

    // Collects report lines in either output format.
    class Printer {
     public:
      explicit Printer(bool machine) : _machine(machine) {}

      void value(std::string const& key, std::string const& value) {
        if (_machine) {
          _out << machine_key(key) << '=' << value << '\n';
        } else {
          _out << key << ": " << value << '\n';
        }
      }

      void check(std::string const& name, bool passed,
                 std::string const& witness = {}) {
        if (_machine) {
          _out << machine_key(name) << '=' << (passed ? "PASS" : "FAIL")
               << '\n';
          if (!passed && !witness.empty()) {
            _out << machine_key(name) << "_witness=" << witness << '\n';
          }
        } else {
          _out << name << ": " << (passed ? "PASS" : "FAIL");
          if (!passed && !witness.empty()) {
            _out << " (" << witness << ')';
          }
          _out << '\n';
        }
      }

      void report(Report const& r) {
        for (auto const& c : r.checks()) {
          check(c.name, c.passed, c.witness);
        }
      }

      // Free-form text (a dumped file); emitted verbatim in both formats.
      void raw(std::string const& text) {
        _out << text;
      }

      std::string str() const {
        return _out.str();
      }

     private:
      static std::string machine_key(std::string key) {
        std::replace(key.begin(), key.end(), ' ', '_');
        return key;
      }

      bool               _machine;
      std::ostringstream _out;
    };

    // Argument errors that are not library errors.
    struct UsageError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    SemigroupPtr load_semigroup(std::string const& path) {
      return make_semigroup(parse_semigroup(read_file(path)));
    }

    SfsPtr load_category(std::string const& path) {
      return share(parse_category(read_file(path)));
    }

    // Writes \p text to --out when given, otherwise to the report.
    void emit(Options const& o, Printer& p, std::string const& text,
              std::string const& what) {
      if (o.out.empty()) {
        p.raw(text);
      } else {
        write_file(o.out, text);
        p.value(what, o.out);
      }
    }

    std::string first_failure(Report const& r) {
      for (auto const& c : r.checks()) {
        if (!c.passed) {
          return c.witness.empty() ? c.name : c.name + ": " + c.witness;
        }
      }
      return {};
    }

    int check_sfs(Options const& o, Printer& p) {
      auto const  A    = load_category(o.inputs.at(0));
      auto const& cat  = A->category;
      Report      laws = verify_category(cat);
      p.check("category laws", laws.passed(), first_failure(laws));
      if (!laws.passed()) {
        return 1;
      }
      SfsReport sfs = verify_sfs(*A);
      p.report(sfs.report);
      if (!sfs.passed()) {
        return 1;
      }
      p.report(verify_grandis_properties(*A));
      bool const thin_e = is_thin(cat, A->e), thin_m = is_thin(cat, A->m);
      std::string thin_witness = !thin_e && !thin_m ? "E, M"
                                 : !thin_e          ? "E"
                                                    : "M";
      p.check("thin", thin_e && thin_m, thin_witness);
      p.check("proper", is_proper(*A));
      if (A->unit) {
        p.check("unital", is_unital_at(*A, *A->unit),
                "not unital at object " + std::to_string(*A->unit));
      } else {
        auto zeta = find_unit(*A);
        p.check("unital", zeta.has_value());
        if (zeta) {
          p.value("unit", std::to_string(*zeta));
        }
      }
      auto complete = completeness(*A, sfs.factorization);
      p.check("complete", complete.squares, complete.witness);
      if (complete.via_unit) {
        p.check("complete via unit", *complete.via_unit);
      }
      return 0;
    }

    DOptions d_options(Options const& o) {
      DOptions d;
      d.verify_witnesses = o.debug_witness_check;
      return d;
    }

    int d_category(Options const& o, Printer& p) {
      auto S = load_semigroup(o.inputs.at(0));
      auto D = build_d_category(S, d_options(o));
      if (!o.out.empty()) {
        p.value("objects", std::to_string(D->category().object_count()));
        p.value("arrows", std::to_string(D->category().arrow_count()));
      }
      emit(o, p, write_category(*D->sfs()), "written");
      return 0;
    }

    int freyd(Options const& o, Printer& p) {
      auto S = load_semigroup(o.inputs.at(0));
      auto Q = build_freyd_quotient(*S);
      auto D = build_d_category(S, d_options(o));
      p.value("quotient objects", std::to_string(Q.object_count()));
      p.value("quotient arrows", std::to_string(Q.arrow_count()));
      p.value("D(S) objects", std::to_string(D->category().object_count()));
      p.value("D(S) arrows", std::to_string(D->category().arrow_count()));
      bool iso = find_category_isomorphism(Q, D->category()).has_value();
      p.check("isomorphic to D(S)", iso);
      return iso ? 0 : 1;
    }

    int sigma(Options const& o, Printer& p) {
      auto A           = load_category(o.inputs.at(0));
      auto [report, U] = UcCtsfs::try_certify(A);
      p.report(report);
      if (!U) {
        return 1;
      }
      emit(o, p, write_semigroup(*U->monoid()), "written");
      return 0;
    }

    int roundtrip(Options const& o, Printer& p) {
      auto S           = load_semigroup(o.inputs.at(0));
      auto D           = build_d_category(S, d_options(o));
      auto [report, U] = UcCtsfs::try_certify(D->sfs());
      if (!U) {
        p.report(report);
        return 1;
      }
      auto const& M     = *U->monoid();
      bool        equal = M.table() == S->table() && M.identity() == S->identity();
      p.value("Σ∘D = Id", equal ? "table identical" : "table differs");
      return equal ? 0 : 1;
    }

    Homomorphism load_map(std::string const& path, SemigroupPtr const& S,
                          SemigroupPtr const& T, char const* name) {
      Homomorphism h{S, T, parse_map(read_file(path))};
      if (h.map.size() != S->size()) {
        throw UsageError(std::string(name) + " has " + std::to_string(h.map.size())
                         + " entries, the source has "
                         + std::to_string(S->size()) + " elements");
      }
      for (Element x : h.map) {
        if (x >= T->size()) {
          throw UsageError(std::string(name) + " maps to " + std::to_string(x)
                           + ", outside the target");
        }
      }
      if (!check_homomorphism(h)) {
        throw UsageError(std::string(name) + " is not a homomorphism");
      }
      return h;
    }

    int conjugations(Options const& o, Printer& p) {
      if (o.f_map.empty() || o.g_map.empty()) {
        throw UsageError("conjugations requires --f and --g");
      }
      auto S     = load_semigroup(o.inputs.at(0));
      auto T     = load_semigroup(o.inputs.at(1));
      auto f     = load_map(o.f_map, S, T, "--f");
      auto g     = load_map(o.g_map, S, T, "--g");
      auto found = enumerate_conjugations(f, g);
      p.value("conjugations", std::to_string(found.size()));
      for (Element alpha : found) {
        auto inv = invert_conjugation(make_conjugation(f, g, alpha));
        std::string status
            = inv ? "invertible (beta = " + T->label(inv->beta) + ")"
                  : "non-invertible";
        p.value("alpha " + T->label(alpha), status);
      }
      return found.empty() ? 1 : 0;
    }

    int morita(Options const& o, Printer& p) {
      auto M  = load_semigroup(o.inputs.at(0));
      auto M2 = load_semigroup(o.inputs.at(1));
      auto w  = decide_morita(M, M2, o.budget);
      if (!w) {
        p.value("Morita", "not equivalent");
        return 1;
      }
      auto const& big   = w->in_second ? *M2 : *M;
      auto const& other = w->in_second ? *M : *M2;
      p.value("Morita", "equivalent");
      p.value("idempotent", big.label(w->e)
                                + (w->in_second ? " (second monoid)"
                                                : " (first monoid)"));
      p.value("corner size", std::to_string(w->corner.monoid->size()));
      std::string iso;
      for (std::size_t i = 0; i < w->iso.size(); ++i) {
        iso += (i ? ", " : "") + big.label(w->corner.embedding[i]) + " -> "
               + other.label(w->iso[i]);
      }
      p.value("isomorphism", iso);
      return 0;
    }

    int corpus(Options const& o, Printer& p) {
      if (o.corpus_action == "list") {
        for (auto const& r : registered_examples()) {
          std::string name = r.name;
          if (r.has_param) {
            name += "(" + std::to_string(r.min_param) + ".."
                    + std::to_string(r.max_param) + ")";
          }
          p.value(name, r.description);
        }
        return 0;
      }
      if (o.corpus_action != "dump") {
        throw UsageError("corpus expects \"list\" or \"dump <name>\"");
      }
      if (o.corpus_name.empty()) {
        throw UsageError("corpus dump requires an example name");
      }
      auto example = build_example(ExampleSpec::parse(o.corpus_name));
      if (auto const* S = std::get_if<SemigroupPtr>(&example)) {
        emit(o, p, write_semigroup(**S), "written");
      } else if (auto const* A = std::get_if<SfsPtr>(&example)) {
        emit(o, p, write_category(**A), "written");
      } else {
        auto const& x = std::get<S2T4Example>(example);
        if (o.out.empty()) {
          throw UsageError("dumping " + o.corpus_name
                           + " requires --out <directory>");
        }
        std::filesystem::path dir(o.out);
        std::filesystem::create_directories(dir);
        std::pair<char const*, std::string> files[] = {
            {"s2.sgp", write_semigroup(*x.s2)},
            {"t4.sgp", write_semigroup(*x.t4)},
            {"f.map", write_map(x.f.map)},
            {"g.map", write_map(x.g.map)},
            {"h.map", write_map(x.h.map)}};
        for (auto const& [file, text] : files) {
          write_file((dir / file).string(), text);
          p.value("written", (dir / file).string());
        }
      }
      return 0;
    }

  }  // namespace

  CliResult run(std::vector<std::string> const& args) {
    Options  o;
    CLI::App app{"Strict factorization systems and finite monoids", "sfscat"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--out", o.out, "Output file (or directory for corpus dump)");
    app.add_flag("--debug-witness-check", o.debug_witness_check,
                 "Assert that every witness gives the same composite in D(S)");
    app.add_option("--budget", o.budget, "Search budget");
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}));

    auto* check = app.add_subcommand("check-sfs", "Verify the SFS axioms");
    check->add_option("category", o.inputs, "Category file")->required();
    auto* dcat = app.add_subcommand("d-category", "Build and dump D(S)");
    dcat->add_option("semigroup", o.inputs, "Semigroup file")->required();
    auto* fr = app.add_subcommand("freyd", "Compare the Freyd quotient to D(M)");
    fr->add_option("monoid", o.inputs, "Monoid file")->required();
    auto* sg = app.add_subcommand("sigma", "Certify and reconstruct a monoid");
    sg->add_option("category", o.inputs, "Category file")->required();
    auto* rt = app.add_subcommand("roundtrip", "Check Sigma(D(M)) = M");
    rt->add_option("monoid", o.inputs, "Monoid file")->required();
    auto* cj = app.add_subcommand("conjugations", "List conjugations f => g");
    cj->add_option("semigroups", o.inputs, "Source and target files")
        ->required()
        ->expected(2);
    cj->add_option("--f", o.f_map, "Map file of f")->required();
    cj->add_option("--g", o.g_map, "Map file of g")->required();
    auto* mo = app.add_subcommand("morita", "Decide Morita equivalence");
    mo->add_option("monoids", o.inputs, "Two monoid files")
        ->required()
        ->expected(2);
    auto* co = app.add_subcommand("corpus", "List or dump built-in examples");
    co->add_option("action", o.corpus_action, "list or dump")->required();
    co->add_option("name", o.corpus_name, "Example name, e.g. cyclic(3)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      std::ostringstream out, err;
      int                code = app.exit(e, out, err);
      return {code == 0 ? 0 : 2, out.str(), err.str()};
    }

    Printer p(o.format == "machine");
    try {
      int code = 0;
      if (check->parsed()) {
        code = check_sfs(o, p);
      } else if (dcat->parsed()) {
        code = d_category(o, p);
      } else if (fr->parsed()) {
        code = freyd(o, p);
      } else if (sg->parsed()) {
        code = sigma(o, p);
      } else if (rt->parsed()) {
        code = roundtrip(o, p);
      } else if (cj->parsed()) {
        code = conjugations(o, p);
      } else if (mo->parsed()) {
        code = morita(o, p);
      } else {
        code = corpus(o, p);
      }
      return {code, p.str(), {}};
    } catch (std::exception const& e) {
      return {2, p.str(), std::string("error: ") + e.what() + "\n"};
    }
  }

}  // namespace sfscat::cli
