// sfscat - strict factorization systems and finite monoids

#include "sfscat/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "sfscat/transformation.hpp"

namespace sfscat {

  namespace {

    struct Token {
      std::string_view text;
      std::size_t      column;
    };

    struct Line {
      std::size_t        number;
      std::string_view   raw;
      std::vector<Token> tokens;
    };

    [[noreturn]] void fail(std::size_t line, std::size_t column,
                           std::string const& what) {
      throw Error(ErrorKind::parse_error,
                  "line " + std::to_string(line) + ", column "
                      + std::to_string(column) + ": " + what);
    }

    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\r';
    }

    // Non-blank lines, with comments removed from the tokens (label payloads
    // are taken from the raw text).
    std::vector<Line> split(std::string_view text) {
      std::vector<Line> lines;
      std::size_t       number = 0;
      while (!text.empty() || number == 0) {
        ++number;
        std::size_t      nl  = text.find('\n');
        std::string_view raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
        Line line{number, raw, {}};
        std::string_view body = raw.substr(0, raw.find('#'));
        std::size_t      i    = 0;
        while (i < body.size()) {
          while (i < body.size() && is_space(body[i])) {
            ++i;
          }
          std::size_t start = i;
          while (i < body.size() && !is_space(body[i])) {
            ++i;
          }
          if (i > start) {
            line.tokens.push_back({body.substr(start, i - start), start + 1});
          }
        }
        if (!line.tokens.empty()) {
          lines.push_back(std::move(line));
        }
        if (nl == std::string_view::npos) {
          break;
        }
      }
      return lines;
    }

    std::uint32_t number(Line const& line, std::size_t i) {
      if (i >= line.tokens.size()) {
        fail(line.number, line.raw.size() + 1, "missing number");
      }
      Token const&  t = line.tokens[i];
      std::uint32_t v = 0;
      auto [p, ec]    = std::from_chars(t.text.data(),
                                     t.text.data() + t.text.size(), v);
      if (ec != std::errc() || p != t.text.data() + t.text.size()) {
        fail(line.number, t.column,
             "expected a non-negative integer, found \"" + std::string(t.text)
                 + "\"");
      }
      return v;
    }

    void expect_count(Line const& line, std::size_t count) {
      if (line.tokens.size() != count) {
        std::size_t col = line.tokens.size() > count
                              ? line.tokens[count].column
                              : line.raw.size() + 1;
        fail(line.number, col,
             "expected " + std::to_string(count) + " fields, found "
                 + std::to_string(line.tokens.size()));
      }
    }

    // Text after the first two fields of a label line.
    std::string payload(Line const& line) {
      if (line.tokens.size() < 3) {
        fail(line.number, line.raw.size() + 1, "missing label text");
      }
      std::string_view s = line.raw.substr(line.tokens[2].column - 1);
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return std::string(s);
    }

    void check_index(Line const& line, std::size_t i, std::uint32_t v,
                     std::size_t bound, char const* what) {
      if (v >= bound) {
        fail(line.number, line.tokens[i].column,
             std::string(what) + " " + std::to_string(v) + " out of range");
      }
    }

    FiniteSemigroup parse_transformations(std::vector<Line> const& lines) {
      Line const&   head = lines[0];
      expect_count(head, 2);
      std::uint32_t k = number(head, 1);
      if (k == 0) {
        fail(head.number, head.tokens[1].column, "arity must be positive");
      }
      std::vector<Transformation> gens;
      for (std::size_t i = 1; i < lines.size(); ++i) {
        expect_count(lines[i], k);
        std::vector<std::uint32_t> images;
        for (std::size_t j = 0; j < k; ++j) {
          std::uint32_t v = number(lines[i], j);
          if (v < 1 || v > k) {
            fail(lines[i].number, lines[i].tokens[j].column,
                 "image " + std::to_string(v) + " not in 1.."
                     + std::to_string(k));
          }
          images.push_back(v);
        }
        gens.emplace_back(std::move(images));
      }
      return generate_transformation_monoid(k, gens, true);
    }

  }  // namespace

  FiniteSemigroup parse_semigroup(std::string_view text) {
    auto lines = split(text);
    if (lines.empty()) {
      fail(1, 1, "empty input");
    }
    Line const& head = lines[0];
    if (head.tokens[0].text == "transformations") {
      return parse_transformations(lines);
    }
    if (head.tokens[0].text != "semigroup") {
      fail(head.number, 1, "expected \"semigroup\" or \"transformations\"");
    }
    expect_count(head, 2);
    std::uint32_t n = number(head, 1);
    if (n == 0) {
      fail(head.number, head.tokens[1].column, "size must be positive");
    }
    if (lines.size() < n + 1) {
      fail(lines.back().number + 1, 1, "missing table rows");
    }
    std::vector<Element> table;
    table.reserve(std::size_t(n) * n);
    for (std::size_t i = 1; i <= n; ++i) {
      expect_count(lines[i], n);
      for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t v = number(lines[i], j);
        check_index(lines[i], j, v, n, "element");
        table.push_back(v);
      }
    }
    std::optional<Element>   identity;
    std::vector<std::string> labels;
    for (std::size_t i = n + 1; i < lines.size(); ++i) {
      Line const& line = lines[i];
      auto        word = line.tokens[0].text;
      if (word == "identity") {
        expect_count(line, 2);
        std::uint32_t k = number(line, 1);
        check_index(line, 1, k, n, "element");
        identity = k;
      } else if (word == "label") {
        std::uint32_t k = number(line, 1);
        check_index(line, 1, k, n, "element");
        if (labels.empty()) {
          labels.resize(n);
          for (Element a = 0; a < n; ++a) {
            labels[a] = std::to_string(a);
          }
        }
        labels[k] = payload(line);
      } else {
        fail(line.number, line.tokens[0].column,
             "unexpected \"" + std::string(word) + "\"");
      }
    }
    return FiniteSemigroup(n, std::move(table), identity, std::move(labels));
  }

  std::string write_semigroup(FiniteSemigroup const& S) {
    std::ostringstream out;
    std::size_t const  n = S.size();
    out << "semigroup " << n << '\n';
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        out << (b ? " " : "") << S(a, b);
      }
      out << '\n';
    }
    if (S.identity()) {
      out << "identity " << *S.identity() << '\n';
    }
    if (S.has_labels()) {
      for (Element a = 0; a < n; ++a) {
        out << "label " << a << ' ' << S.label(a) << '\n';
      }
    }
    return out.str();
  }

  SfsCategory parse_category(std::string_view text) {
    auto lines = split(text);
    if (lines.empty()) {
      fail(1, 1, "empty input");
    }
    Line const& head = lines[0];
    if (head.tokens[0].text != "category") {
      fail(head.number, 1, "expected \"category\"");
    }
    expect_count(head, 3);
    std::uint32_t const objects = number(head, 1);
    std::uint32_t const arrows  = number(head, 2);

    std::vector<ArrowEnds>   ends(arrows, {UNDEFINED, UNDEFINED});
    std::vector<std::string> arrow_labels(arrows), object_labels;
    std::vector<ArrowId>     identities(objects, UNDEFINED);
    struct Entry {
      ArrowId     f, g, h;
      std::size_t line;
    };
    std::vector<Entry>      composites;
    std::vector<ArrowId>    e, m;
    std::optional<ObjectId> unit;

    for (std::size_t i = 1; i < lines.size(); ++i) {
      Line const& line = lines[i];
      auto        word = line.tokens[0].text;
      if (word == "arrow") {
        expect_count(line, 4);
        std::uint32_t f = number(line, 1), a = number(line, 2),
                      b = number(line, 3);
        check_index(line, 1, f, arrows, "arrow");
        check_index(line, 2, a, objects, "object");
        check_index(line, 3, b, objects, "object");
        if (ends[f].dom != UNDEFINED) {
          fail(line.number, line.tokens[1].column, "arrow declared twice");
        }
        ends[f] = {a, b};
      } else if (word == "label") {
        std::uint32_t f = number(line, 1);
        check_index(line, 1, f, arrows, "arrow");
        arrow_labels[f] = payload(line);
      } else if (word == "object") {
        std::uint32_t a = number(line, 1);
        check_index(line, 1, a, objects, "object");
        if (object_labels.empty()) {
          object_labels.resize(objects);
          for (ObjectId b = 0; b < objects; ++b) {
            object_labels[b] = std::to_string(b);
          }
        }
        object_labels[a] = payload(line);
      } else if (word == "identity") {
        expect_count(line, 3);
        std::uint32_t a = number(line, 1), f = number(line, 2);
        check_index(line, 1, a, objects, "object");
        check_index(line, 2, f, arrows, "arrow");
        identities[a] = f;
      } else if (word == "compose") {
        expect_count(line, 4);
        std::uint32_t f = number(line, 1), g = number(line, 2),
                      h = number(line, 3);
        check_index(line, 1, f, arrows, "arrow");
        check_index(line, 2, g, arrows, "arrow");
        check_index(line, 3, h, arrows, "arrow");
        composites.push_back({f, g, h, line.number});
      } else if (word == "E" || word == "M") {
        auto& target = word == "E" ? e : m;
        for (std::size_t j = 1; j < line.tokens.size(); ++j) {
          std::uint32_t f = number(line, j);
          check_index(line, j, f, arrows, "arrow");
          target.push_back(f);
        }
      } else if (word == "unit") {
        expect_count(line, 2);
        std::uint32_t a = number(line, 1);
        check_index(line, 1, a, objects, "object");
        unit = a;
      } else {
        fail(line.number, line.tokens[0].column,
             "unexpected \"" + std::string(word) + "\"");
      }
    }
    CategoryBuilder b(objects);
    for (ArrowId f = 0; f < arrows; ++f) {
      if (ends[f].dom == UNDEFINED) {
        fail(head.number, head.tokens[2].column,
             "arrow " + std::to_string(f) + " is never declared");
      }
      b.add_arrow(ends[f].dom, ends[f].cod, arrow_labels[f]);
    }
    for (ObjectId a = 0; a < object_labels.size(); ++a) {
      b.set_object_label(a, object_labels[a]);
    }
    for (ObjectId a = 0; a < objects; ++a) {
      if (identities[a] == UNDEFINED) {
        fail(head.number, head.tokens[1].column,
             "object " + std::to_string(a) + " has no identity line");
      }
      b.set_identity(a, identities[a]);
    }
    for (auto const& c : composites) {
      if (ends[c.f].cod != ends[c.g].dom) {
        fail(c.line, 1, "compose line for a non-composable pair");
      }
      b.set_composite(c.f, c.g, c.h);
    }
    FinCategory cat = std::move(b).build();
    return SfsCategory{std::move(cat), WideSubcategory(arrows, std::move(e)),
                       WideSubcategory(arrows, std::move(m)), unit};
  }

  std::string write_category(SfsCategory const& A) {
    auto const&        cat = A.category;
    std::ostringstream out;
    out << "category " << cat.object_count() << ' ' << cat.arrow_count()
        << '\n';
    if (!cat.object_labels().empty()) {
      for (ObjectId a = 0; a < cat.object_count(); ++a) {
        out << "object " << a << ' ' << cat.object_label(a) << '\n';
      }
    }
    bool const labelled = !cat.arrow_labels().empty();
    for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
      out << "arrow " << f << ' ' << cat.dom(f) << ' ' << cat.cod(f) << '\n';
      if (labelled && !cat.arrow_labels()[f].empty()) {
        out << "label " << f << ' ' << cat.arrow_labels()[f] << '\n';
      }
    }
    for (ObjectId a = 0; a < cat.object_count(); ++a) {
      out << "identity " << a << ' ' << cat.identity(a) << '\n';
    }
    for (ArrowId f = 0; f < cat.arrow_count(); ++f) {
      for (ArrowId g : cat.out(cat.cod(f))) {
        ArrowId h = cat.try_compose(f, g);
        if (h != UNDEFINED) {
          out << "compose " << f << ' ' << g << ' ' << h << '\n';
        }
      }
    }
    out << "E";
    for (ArrowId f : A.e.arrows()) {
      out << ' ' << f;
    }
    out << "\nM";
    for (ArrowId f : A.m.arrows()) {
      out << ' ' << f;
    }
    out << '\n';
    if (A.unit) {
      out << "unit " << *A.unit << '\n';
    }
    return out.str();
  }

  std::vector<Element> parse_map(std::string_view text) {
    auto lines = split(text);
    if (lines.empty()) {
      fail(1, 1, "empty input");
    }
    Line const& head = lines[0];
    if (head.tokens[0].text != "map") {
      fail(head.number, 1, "expected \"map\"");
    }
    expect_count(head, 2);
    std::uint32_t const  n = number(head, 1);
    std::vector<Element> map;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      for (std::size_t j = 0; j < lines[i].tokens.size(); ++j) {
        map.push_back(number(lines[i], j));
      }
    }
    if (map.size() != n) {
      fail(lines.back().number, 1,
           "expected " + std::to_string(n) + " indices, found "
               + std::to_string(map.size()));
    }
    return map;
  }

  std::string write_map(std::vector<Element> const& map) {
    std::ostringstream out;
    out << "map " << map.size() << '\n';
    for (std::size_t i = 0; i < map.size(); ++i) {
      out << (i ? " " : "") << map[i];
    }
    out << '\n';
    return out.str();
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorKind::parse_error, "cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void write_file(std::string const& path, std::string const& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) {
      throw Error(ErrorKind::parse_error, "cannot write " + path);
    }
  }

}  // namespace sfscat
