#ifndef HOCHSCHILD_RUNNER_HPP_
#define HOCHSCHILD_RUNNER_HPP_

// Commands behind the hh1 tool. Each command turns a parsed document into a
// RunReport; execute() also parses and maps failures to exit codes:
//   0 success, 1 formula/oracle disagreement, 2 invalid input,
//   3 unsupported case (no formula applies, or a dimension guard tripped).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "document.hpp"
#include "error.hpp"
#include "exact.hpp"
#include "formulas.hpp"
#include "oracle.hpp"
#include "poset.hpp"
#include "presentation.hpp"
#include "simplicial.hpp"

namespace hochschild {

  enum class Command { formula, oracle, check, poset };

  inline char const* to_string(Command c) {
    switch (c) {
      case Command::formula: return "formula";
      case Command::oracle: return "oracle";
      case Command::check: return "check";
      case Command::poset: return "poset";
    }
    return "?";
  }

  struct RunOptions {
    Field       field = Field::rational();
    //! Largest algebra dimension for degree 2 of the bar complex; the H^1
    //! oracle itself runs up to max(max_dim, 96).
    std::size_t max_dim       = 12;
    bool        per_component = false;

    [[nodiscard]] std::size_t oracle_guard() const {
      return std::max<std::size_t>(max_dim, 96);
    }
  };

  struct RunReport {
    using Named = std::vector<std::pair<std::string, nlohmann::json>>;

    std::string               name;
    Command                   command = Command::formula;
    std::string               method;
    std::optional<std::int64_t> dim_h1;
    std::vector<std::pair<std::string, std::int64_t>> intermediates;
    std::vector<ComponentDim> per_component;
    Named                     checks;
    std::optional<bool>       agree;
    std::string               field = "q";
    double                    elapsed_ms = 0;
    int                       exit_code  = 0;
    std::string               error;
  };

  namespace detail {
    inline void guard(StructureConstantAlgebra const& a, RunOptions const& opts) {
      if (a.dim() > opts.oracle_guard()) {
        throw Error(ErrorKind::dimension_guard,
                    "algebra of dimension " + std::to_string(a.dim())
                        + " exceeds the oracle guard "
                        + std::to_string(opts.oracle_guard()));
      }
    }

    inline StructureConstantAlgebra algebra_of(InputDocument const& doc) {
      if (auto p = doc.presentation()) {
        return build_algebra(*p);
      }
      return incidence_algebra(*doc.poset());
    }

    inline AlgebraPresentation presentation_of(InputDocument const& doc) {
      if (auto p = doc.presentation()) {
        return *p;
      }
      return AlgebraPresentation::incidence(*doc.poset());
    }

    inline void take(RunReport& r, H1Report const& h) {
      r.method        = h.method;
      r.dim_h1        = h.dim_h1;
      r.intermediates = h.intermediates;
      r.per_component = h.per_component;
    }
  }  // namespace detail

  inline RunReport run_formula(InputDocument const& doc, RunOptions const& opts = {}) {
    RunReport r;
    r.name    = doc.name;
    r.command = Command::formula;
    r.field   = opts.field.name();
    detail::take(r, classify_and_compute(detail::presentation_of(doc)));
    return r;
  }

  //! H^1 by linear algebra, plus the bar-complex dimensions in degrees 0..2
  //! where the guards allow.
  inline RunReport run_oracle(InputDocument const& doc, RunOptions const& opts = {}) {
    RunReport r;
    r.name    = doc.name;
    r.command = Command::oracle;
    r.method  = "oracle";
    r.field   = opts.field.name();
    auto a    = detail::algebra_of(doc);
    detail::guard(a, opts);
    auto x = regular_bimodule(a);
    r.dim_h1 = static_cast<std::int64_t>(h1_oracle(x, opts.field));
    r.intermediates = {
        {"dim A", static_cast<std::int64_t>(a.dim())},
        {"dim Z", static_cast<std::int64_t>(center_dim(a, opts.field))},
        {"dim Der", static_cast<std::int64_t>(derivation_space_dim(x, opts.field))},
        {"dim Inn", static_cast<std::int64_t>(inner_dim(x, opts.field))},
    };
    BarOptions bar{opts.max_dim, opts.field};
    for (std::size_t n = 0; n <= 2; ++n) {
      auto key = "bar_h" + std::to_string(n);
      if (n == 2 && a.dim() > opts.max_dim) {
        r.checks.emplace_back(key, "skipped: dimension guard");
        continue;
      }
      r.checks.emplace_back(key, bar_cohomology_dim(x, n, bar));
    }
    return r;
  }

  //! Formula against the oracle over Q. With a prime field the oracle is
  //! repeated mod p and reported alongside.
  inline RunReport run_check(InputDocument const& doc, RunOptions const& opts = {}) {
    RunReport r = run_formula(doc, opts);
    r.command   = Command::check;
    auto a      = detail::algebra_of(doc);
    detail::guard(a, opts);
    auto oracle = static_cast<std::int64_t>(h1_oracle(a));
    r.checks.emplace_back("oracle", oracle);
    r.agree = oracle == *r.dim_h1;
    r.checks.emplace_back("agree", *r.agree);
    if (!opts.field.is_rational()) {
      auto modp = static_cast<std::int64_t>(h1_oracle(a, opts.field));
      r.checks.emplace_back("oracle_" + opts.field.name(), modp);
    }
    r.exit_code = *r.agree ? 0 : 1;
    return r;
  }

  //! H^1 of the incidence algebra against H^1 of the order complex.
  inline RunReport run_poset(InputDocument const& doc, RunOptions const& opts = {}) {
    Poset const* s = doc.poset();
    if (s == nullptr) {
      throw Error(ErrorKind::invalid_argument, "the poset command needs a poset document");
    }
    RunReport r;
    r.name    = doc.name;
    r.command = Command::poset;
    r.method  = "order_complex";
    r.field   = opts.field.name();
    auto cmp  = gs_compare(*s, opts.field, opts.oracle_guard());
    auto c    = order_complex(*s);
    r.dim_h1  = static_cast<std::int64_t>(cmp.dim_h1_simplicial);
    r.intermediates = {
        {"|S|", static_cast<std::int64_t>(s->size())},
        {"dim A", static_cast<std::int64_t>(s->comparable_pairs().size())},
        {"chains_0", static_cast<std::int64_t>(c.simplices(0).size())},
        {"chains_1", static_cast<std::int64_t>(c.simplices(1).size())},
        {"chains_2", static_cast<std::int64_t>(c.simplices(2).size())},
    };
    r.checks.emplace_back("incidence_oracle", cmp.dim_h1_incidence);
    r.checks.emplace_back("h0_order_complex",
                          simplicial_h_dim(c, 0, opts.field));
    r.agree = cmp.agree;
    r.checks.emplace_back("agree", cmp.agree);
    r.exit_code = cmp.agree ? 0 : 1;
    return r;
  }

  inline RunReport run(Command c, InputDocument const& doc, RunOptions const& opts = {}) {
    switch (c) {
      case Command::formula: return run_formula(doc, opts);
      case Command::oracle: return run_oracle(doc, opts);
      case Command::check: return run_check(doc, opts);
      case Command::poset: return run_poset(doc, opts);
    }
    throw Error(ErrorKind::invalid_argument, "unknown command");
  }

  inline int exit_code_for(Error const& e) {
    return e.is_input_error() ? 2 : 3;
  }

  //! Parses text and runs a command, never throwing hochschild::Error.
  inline RunReport execute(Command c, std::string const& text,
                           RunOptions const& opts = {}) {
    auto      start = std::chrono::steady_clock::now();
    RunReport r;
    try {
      auto doc = parse(text);
      r.name   = doc.name;
      r        = run(c, doc, opts);
    } catch (Error const& e) {
      r.command   = c;
      r.field     = opts.field.name();
      r.exit_code = exit_code_for(e);
      r.error     = e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
  }

  //! {"name", "method", "dim_h1", "intermediates", "checks", "field"}; on
  //! failure "dim_h1" is null and "checks" carries "error".
  inline nlohmann::ordered_json to_json(RunReport const& r, bool per_component = false) {
    nlohmann::ordered_json j;
    j["name"]   = r.name;
    j["method"] = r.method;
    j["dim_h1"] = r.dim_h1 ? nlohmann::ordered_json(*r.dim_h1) : nlohmann::ordered_json();
    j["intermediates"] = nlohmann::ordered_json::object();
    for (auto const& [k, v] : r.intermediates) {
      j["intermediates"][k] = v;
    }
    j["checks"] = nlohmann::ordered_json::object();
    for (auto const& [k, v] : r.checks) {
      j["checks"][k] = v;
    }
    if (!r.error.empty()) {
      j["checks"]["error"] = r.error;
    }
    if (per_component) {
      auto list = nlohmann::ordered_json::array();
      for (auto const& c : r.per_component) {
        list.push_back({{"vertices", c.vertices}, {"dim_h1", c.dim}});
      }
      j["checks"]["components"] = list;
    }
    j["field"] = r.field;
    return j;
  }

  inline std::string to_text(RunReport const& r, bool per_component = false) {
    std::ostringstream out;
    out << (r.name.empty() ? "<unparsed>" : r.name) << " [" << to_string(r.command)
        << ", field " << r.field << "]\n";
    if (!r.error.empty()) {
      out << "  error: " << r.error << '\n';
      return out.str();
    }
    out << "  dim HH^1 = " << *r.dim_h1 << "  (" << r.method << ")\n";
    for (auto const& [k, v] : r.intermediates) {
      out << "  " << k << " = " << v << '\n';
    }
    for (auto const& [k, v] : r.checks) {
      out << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
          << '\n';
    }
    if (per_component) {
      for (auto const& c : r.per_component) {
        out << "  component {";
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
          out << (i ? ", " : "") << c.vertices[i];
        }
        out << "}: " << c.dim << '\n';
      }
    }
    out << "  time " << r.elapsed_ms << " ms\n";
    return out.str();
  }

}  // namespace hochschild

#endif  // HOCHSCHILD_RUNNER_HPP_
