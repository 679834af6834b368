// hh1: dimension of the first Hochschild cohomology of quiver algebras.
//
//   hh1 formula <file>...   closed formula chosen from the presentation
//   hh1 oracle  <file>...   brute-force linear algebra
//   hh1 check   <file>...   formula against oracle
//   hh1 poset   <file>...   incidence algebra against the order complex

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hochschild/runner.hpp"

namespace {

  int run_files(hochschild::Command cmd, std::vector<std::string> const& files,
                hochschild::RunOptions const& opts, bool json) {
    int  worst = 0;
    auto list  = nlohmann::ordered_json::array();
    for (auto const& file : files) {
      std::ifstream in(file);
      hochschild::RunReport r;
      if (!in) {
        r.command   = cmd;
        r.field     = opts.field.name();
        r.exit_code = 2;
        r.error     = "cannot open " + file;
      } else {
        std::stringstream buf;
        buf << in.rdbuf();
        r = hochschild::execute(cmd, buf.str(), opts);
        if (!r.error.empty()) {
          r.error = file + ": " + r.error;
        }
      }
      worst = std::max(worst, r.exit_code);
      if (json) {
        list.push_back(hochschild::to_json(r, opts.per_component));
      } else {
        (r.error.empty() ? std::cout : std::cerr)
            << hochschild::to_text(r, opts.per_component);
      }
    }
    if (json) {
      std::cout << (list.size() == 1 ? list[0] : list).dump(2) << '\n';
    }
    return worst;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dimension of HH^1 for quiver algebras"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string              field = "q";
  bool                     json  = false;
  hochschild::RunOptions   opts;

  struct Sub {
    hochschild::Command cmd;
    char const*         help;
  };
  std::vector<Sub> subs = {
      {hochschild::Command::formula, "Evaluate the applicable closed formula"},
      {hochschild::Command::oracle, "Compute HH^1 by exact linear algebra"},
      {hochschild::Command::check, "Compare the formula with the oracle"},
      {hochschild::Command::poset, "Compare incidence algebra and order complex"},
  };
  std::vector<CLI::App*> handles;
  for (auto const& s : subs) {
    auto* sub = app.add_subcommand(hochschild::to_string(s.cmd), s.help);
    sub->add_option("files", files, "Input documents")->required();
    sub->add_option("--field", field, "q or fp:<prime>");
    sub->add_flag("--json", json, "Print JSON");
    sub->add_option("--max-dim", opts.max_dim,
                    "Largest dimension for the degree-2 bar complex");
    sub->add_flag("--per-component", opts.per_component,
                  "Report each connected component");
    handles.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    opts.field = hochschild::Field::parse(field);
  } catch (hochschild::Error const& e) {
    std::cerr << "hh1: " << e.what() << '\n';
    return 2;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (handles[i]->parsed()) {
      return run_files(subs[i].cmd, files, opts, json);
    }
  }
  return 2;
}
