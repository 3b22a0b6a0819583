#include "bqalg/qv_format.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "bqalg/error.hpp"

namespace bqalg {

  bool is_identifier(std::string_view s) noexcept {
    if (s.empty()) {
      return false;
    }
    for (char c : s) {
      auto const u = static_cast<unsigned char>(c);
      if (u > 127 || (!std::isalnum(u) && c != '_')) {
        return false;
      }
    }
    return true;
  }

  namespace {

    std::vector<std::string> tokens(std::string_view line) {
      std::vector<std::string> out;
      std::istringstream       is{std::string(line)};
      std::string              tok;
      while (is >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    std::size_t parse_count(std::string const& s, std::size_t line, char const* what) {
      std::size_t value = 0;
      auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(line, std::string("expected a nonnegative integer for ") + what
                                   + ", got \"" + s + "\"");
      }
      return value;
    }

  }  // namespace

  QuiverFile parse_qv(std::string_view text) {
    QuiverFile  file;
    bool        have_quiver = false;
    std::size_t lineno      = 0;
    std::size_t start       = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(start, end - start);
      start                 = end + 1;
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto const tok = tokens(line);
      if (tok.empty()) {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      std::string const& directive = tok[0];
      if (directive == "quiver") {
        if (have_quiver) {
          throw ParseError(lineno, "duplicate quiver line");
        }
        if (tok.size() != 2) {
          throw ParseError(lineno, "expected: quiver <n>");
        }
        file.quiver = Quiver(parse_count(tok[1], lineno, "the vertex count"));
        have_quiver = true;
      } else if (directive == "arrow") {
        if (!have_quiver) {
          throw ParseError(lineno, "arrow before the quiver line");
        }
        if (file.has_relations) {
          throw ParseError(lineno, "arrow inside the relations section");
        }
        if (tok.size() != 4) {
          throw ParseError(lineno, "expected: arrow <id> <source> <target>");
        }
        if (!is_identifier(tok[1])) {
          throw ParseError(lineno, "arrow id \"" + tok[1] + "\" is not an identifier");
        }
        try {
          file.quiver.add_arrow(tok[1],
                                parse_count(tok[2], lineno, "the source"),
                                parse_count(tok[3], lineno, "the target"));
        } catch (InvalidInput const& e) {
          throw ParseError(lineno, e.what());
        }
      } else if (directive == "relations") {
        if (!have_quiver) {
          throw ParseError(lineno, "relations before the quiver line");
        }
        if (tok.size() != 1 || file.has_relations) {
          throw ParseError(lineno, "expected a single relations line");
        }
        file.has_relations = true;
      } else if (directive == "rel") {
        if (!file.has_relations) {
          throw ParseError(lineno, "rel outside the relations section");
        }
        if (tok.size() < 2) {
          throw ParseError(lineno, "expected: rel <arrow id> ...");
        }
        try {
          file.relations.push_back(
              file.quiver.path_from_ids(std::vector<std::string>(tok.begin() + 1, tok.end())));
        } catch (Error const& e) {
          throw ParseError(lineno, e.what());
        }
      } else {
        throw ParseError(lineno, "unknown directive \"" + directive + "\"");
      }
      if (end == text.size()) {
        break;
      }
    }
    if (!have_quiver) {
      throw ParseError(lineno == 0 ? 1 : lineno, "missing quiver line");
    }
    return file;
  }

  std::string emit_qv(QuiverFile const& file) {
    Quiver const&      q = file.quiver;
    std::ostringstream os;
    os << "# QV1 quiver file; relation words list arrows in traversal order\n";
    os << "quiver " << q.vertex_count() << '\n';
    for (auto const& a : q.arrows()) {
      os << "arrow " << a.id << ' ' << a.source << ' ' << a.target << '\n';
    }
    if (file.has_relations) {
      os << "relations\n";
      for (auto const& r : file.relations) {
        os << "rel " << q.word_to_string(r.word()) << "  # " << q.composition_string(r.word())
           << '\n';
      }
    }
    return os.str();
  }

}  // namespace bqalg
