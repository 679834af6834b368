#ifndef HOCHSCHILD_DOCUMENT_HPP_
#define HOCHSCHILD_DOCUMENT_HPP_

// Line-oriented input documents.
//
//   # comment
//   quiver <name>                   poset <name>
//   vertex <id>                     element <id>
//   arrow <id> <source> <target>    covers <upper> <lower>
//   relation monomial <arrow> ...   relation <a> <= <b>
//   relation truncate <m>           end
//   end
//
// Names must be defined before use. A quiver document takes either monomial
// relations (one per line, arrows in traversal order) or a single truncate
// line, never both.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "poset.hpp"
#include "presentation.hpp"
#include "quiver.hpp"

namespace hochschild {

  class ParseError : public Error {
   public:
    ParseError(ErrorKind kind, std::size_t line, std::size_t column,
               std::string const& detail)
        : Error(kind, "line " + std::to_string(line) + ", column "
                          + std::to_string(column) + ": " + detail),
          _line(line),
          _column(column) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }
    [[nodiscard]] std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

  struct InputDocument {
    enum class Kind { quiver_presentation, poset };

    Kind                                      kind;
    std::string                               name;
    std::variant<AlgebraPresentation, Poset> body;

    [[nodiscard]] AlgebraPresentation const* presentation() const noexcept {
      return std::get_if<AlgebraPresentation>(&body);
    }
    [[nodiscard]] Poset const* poset() const noexcept {
      return std::get_if<Poset>(&body);
    }

    bool operator==(InputDocument const&) const = default;
  };

  namespace detail {
    struct Token {
      std::string text;
      std::size_t column;
    };

    inline std::vector<Token> tokenize(std::string const& line) {
      std::vector<Token> out;
      std::size_t        i   = 0;
      std::size_t const  end = std::min(line.find('#'), line.size());
      while (i < end) {
        while (i < end && std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        if (i >= end) {
          break;
        }
        std::size_t start = i;
        while (i < end && !std::isspace(static_cast<unsigned char>(line[i]))) {
          ++i;
        }
        out.push_back({line.substr(start, i - start), start + 1});
      }
      return out;
    }

    inline bool is_identifier(std::string const& s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.'
               || c == '-' || c == '\'';
      });
    }

    class Parser {
     public:
      explicit Parser(std::string const& text) {
        std::istringstream in(text);
        std::string        line;
        while (std::getline(in, line)) {
          if (!line.empty() && line.back() == '\r') {
            line.pop_back();
          }
          _lines.push_back(tokenize(line));
        }
      }

      InputDocument parse() {
        std::optional<InputDocument> doc;
        for (_line = 0; _line < _lines.size(); ++_line) {
          auto const& toks = _lines[_line];
          if (toks.empty()) {
            continue;
          }
          if (_finished) {
            fail(ErrorKind::syntax, toks[0], "content after 'end'");
          }
          if (!_header) {
            header(toks);
            continue;
          }
          if (toks[0].text == "end") {
            arity(toks, 1);
            doc = finish(toks[0]);
            _finished = true;
          } else if (_kind == InputDocument::Kind::quiver_presentation) {
            quiver_line(toks);
          } else {
            poset_line(toks);
          }
        }
        if (!_header) {
          throw ParseError(ErrorKind::syntax, _lines.size() + 1, 1,
                           "expected 'quiver <name>' or 'poset <name>'");
        }
        if (!doc) {
          throw ParseError(ErrorKind::syntax, _lines.size() + 1, 1,
                           "missing 'end'");
        }
        return std::move(*doc);
      }

     private:
      [[noreturn]] void fail(ErrorKind kind, Token const& t,
                             std::string const& what) const {
        throw ParseError(kind, _line + 1, t.column, what);
      }

      void arity(std::vector<Token> const& toks, std::size_t n) const {
        if (toks.size() != n) {
          auto const& at = toks.size() > n ? toks[n] : toks.back();
          fail(ErrorKind::syntax, at,
               "'" + toks[0].text + "' takes " + std::to_string(n - 1)
                   + " argument(s)");
        }
      }

      void identifier(Token const& t) const {
        if (!is_identifier(t.text)) {
          fail(ErrorKind::syntax, t, "invalid identifier '" + t.text + "'");
        }
      }

      void header(std::vector<Token> const& toks) {
        if (toks[0].text == "quiver") {
          _kind = InputDocument::Kind::quiver_presentation;
        } else if (toks[0].text == "poset") {
          _kind = InputDocument::Kind::poset;
        } else {
          fail(ErrorKind::syntax, toks[0],
               "unknown directive '" + toks[0].text
                   + "', expected 'quiver' or 'poset'");
        }
        arity(toks, 2);
        identifier(toks[1]);
        _name   = toks[1].text;
        _header = true;
      }

      void define(std::unordered_set<std::string>& names, Token const& t,
                  char const* what) const {
        identifier(t);
        if (!names.insert(t.text).second) {
          fail(ErrorKind::duplicate_definition, t,
               std::string(what) + " '" + t.text + "' already defined");
        }
      }

      void resolve(std::unordered_set<std::string> const& names, Token const& t,
                   char const* what) const {
        if (!names.contains(t.text)) {
          fail(ErrorKind::unresolved_name, t,
               std::string(what) + " '" + t.text + "' is not defined");
        }
      }

      void quiver_line(std::vector<Token> const& toks) {
        auto const& d = toks[0].text;
        if (d == "vertex") {
          arity(toks, 2);
          define(_vertex_names, toks[1], "vertex");
          _quiver.vertices.push_back(toks[1].text);
        } else if (d == "arrow") {
          arity(toks, 4);
          define(_arrow_names, toks[1], "arrow");
          resolve(_vertex_names, toks[2], "vertex");
          resolve(_vertex_names, toks[3], "vertex");
          _quiver.arrows.push_back({toks[1].text, toks[2].text, toks[3].text});
        } else if (d == "relation") {
          if (toks.size() < 2) {
            fail(ErrorKind::syntax, toks[0], "'relation' needs a kind");
          }
          if (toks[1].text == "monomial") {
            if (_truncate) {
              fail(ErrorKind::syntax, toks[1],
                   "monomial and truncate relations cannot be mixed");
            }
            if (toks.size() < 3) {
              fail(ErrorKind::syntax, toks[1], "empty monomial relation");
            }
            std::vector<std::string> arrows;
            for (std::size_t i = 2; i < toks.size(); ++i) {
              resolve(_arrow_names, toks[i], "arrow");
              arrows.push_back(toks[i].text);
            }
            _relations.push_back({std::move(arrows), _line});
          } else if (toks[1].text == "truncate") {
            if (!_relations.empty()) {
              fail(ErrorKind::syntax, toks[1],
                   "monomial and truncate relations cannot be mixed");
            }
            if (_truncate) {
              fail(ErrorKind::duplicate_definition, toks[1],
                   "truncation level already given");
            }
            arity(toks, 3);
            auto const& m = toks[2].text;
            if (m.empty() || m.size() > 9
                || !std::all_of(m.begin(), m.end(),
                                [](char c) { return c >= '0' && c <= '9'; })
                || std::stoul(m) < 2) {
              fail(ErrorKind::syntax, toks[2],
                   "truncation level must be an integer >= 2");
            }
            _truncate = std::stoul(m);
          } else {
            fail(ErrorKind::syntax, toks[1],
                 "unknown relation kind '" + toks[1].text + "'");
          }
        } else {
          fail(ErrorKind::syntax, toks[0], "unknown directive '" + d + "'");
        }
      }

      void poset_line(std::vector<Token> const& toks) {
        auto const& d = toks[0].text;
        if (d == "element") {
          arity(toks, 2);
          define(_vertex_names, toks[1], "element");
          _elements.push_back(toks[1].text);
        } else if (d == "covers") {
          arity(toks, 3);
          resolve(_vertex_names, toks[1], "element");
          resolve(_vertex_names, toks[2], "element");
          _pairs.emplace_back(toks[2].text, toks[1].text);
        } else if (d == "relation") {
          arity(toks, 4);
          if (toks[2].text != "<=") {
            fail(ErrorKind::syntax, toks[2], "expected '<='");
          }
          resolve(_vertex_names, toks[1], "element");
          resolve(_vertex_names, toks[3], "element");
          _pairs.emplace_back(toks[1].text, toks[3].text);
        } else {
          fail(ErrorKind::syntax, toks[0], "unknown directive '" + d + "'");
        }
      }

      InputDocument finish(Token const& end) {
        auto rethrow = [&](Error const& e, std::size_t line) {
          throw ParseError(e.kind(), line + 1, 1, e.what());
        };
        if (_kind == InputDocument::Kind::poset) {
          try {
            return {_kind, _name, Poset(_elements, _pairs)};
          } catch (ParseError const&) {
            throw;
          } catch (Error const& e) {
            rethrow(e, _line);
          }
        }
        std::optional<Quiver> q;
        try {
          q.emplace(_quiver);
        } catch (Error const& e) {
          rethrow(e, _line);
        }
        if (_truncate) {
          return {_kind, _name, AlgebraPresentation::truncated(*q, *_truncate)};
        }
        if (_relations.empty()) {
          return {_kind, _name, AlgebraPresentation::path_algebra(*q)};
        }
        // growing prefixes, so a bad or non-minimal relation reports its own line
        std::vector<Path> z;
        for (auto const& [arrows, line] : _relations) {
          try {
            z.push_back(Path::from_names(*q, arrows));
            MonomialIdeal(*q, z);
          } catch (Error const& e) {
            rethrow(e, line);
          }
        }
        try {
          return {_kind, _name, AlgebraPresentation::monomial(*q, std::move(z))};
        } catch (Error const& e) {
          rethrow(e, _line);
        }
        (void) end;
        throw Error(ErrorKind::syntax);  // unreachable
      }

      std::vector<std::vector<Token>> _lines;
      std::size_t                     _line     = 0;
      bool                            _header   = false;
      bool                            _finished = false;
      InputDocument::Kind             _kind     = InputDocument::Kind::quiver_presentation;
      std::string                     _name;

      std::unordered_set<std::string> _vertex_names;
      std::unordered_set<std::string> _arrow_names;
      QuiverDescription               _quiver;
      std::vector<std::pair<std::vector<std::string>, std::size_t>> _relations;
      std::optional<std::size_t>      _truncate;

      std::vector<std::string> _elements;
      std::vector<OrderPair>   _pairs;
    };
  }  // namespace detail

  //! Parses one document. Throws ParseError carrying the line and column.
  inline InputDocument parse(std::string const& text) {
    return detail::Parser(text).parse();
  }

  //! Canonical text of a document; parse(serialize(d)) == d for parsed d.
  inline std::string serialize(InputDocument const& doc) {
    std::ostringstream out;
    if (auto p = doc.presentation()) {
      Quiver const& q = p->quiver();
      out << "quiver " << doc.name << '\n';
      for (auto const& v : q.vertex_names()) {
        out << "vertex " << v << '\n';
      }
      for (auto const& a : q.arrows()) {
        out << "arrow " << a.name << ' ' << q.name(a.source) << ' '
            << q.name(a.target) << '\n';
      }
      if (auto m = p->truncation()) {
        out << "relation truncate " << *m << '\n';
      } else if (auto z = p->monomial_ideal()) {
        for (auto const& g : z->generators()) {
          out << "relation monomial";
          for (auto a : g.arrows()) {
            out << ' ' << q.arrow(a).name;
          }
          out << '\n';
        }
      }
    } else {
      Poset const& s = *doc.poset();
      out << "poset " << doc.name << '\n';
      for (auto const& e : s.elements()) {
        out << "element " << e << '\n';
      }
      for (auto [upper, lower] : s.covers()) {
        out << "covers " << s.name(upper) << ' ' << s.name(lower) << '\n';
      }
    }
    out << "end\n";
    return out.str();
  }

}  // namespace hochschild

#endif  // HOCHSCHILD_DOCUMENT_HPP_
