#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "semidual/script.hpp"
#include "semidual/suites.hpp"

using namespace semidual;

namespace {

Field parse_field(const std::string& s) {
  if (s == "Q" || s == "q" || s == "0") return Field::rationals();
  if (s == "p") return Field{32003};
  size_t used = 0;
  unsigned long p = std::stoul(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad field '" + s + "'");
  return Field::prime(static_cast<uint32_t>(p));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semidualizing complexes, G-dimension and base change over quotients of polynomial rings"};
  std::string script, field = "p", json_out, suite;
  int window = -1;
  uint64_t seed = 7;
  app.add_option("script", script, "Script file (stdin when omitted or '-')");
  app.add_option("--field", field, "p (= 32003), Q, or a prime");
  app.add_option("--window", window, "Default truncation window for unbounded computations");
  app.add_option("--seed", seed, "Default fuzz seed");
  app.add_option("--json", json_out, "Write the full report to this file");
  app.add_option("--suite", suite, "Run a named example suite instead of a script");
  CLI11_PARSE(app, argc, argv);

  ScriptOptions opts;
  try {
    opts.field = parse_field(field);
  } catch (const std::exception& e) {
    std::cerr << "error: --field: " << e.what() << "\n";
    return 2;
  }
  opts.window = window;
  opts.seed = seed;
  Session s(opts);

  int code = 0;
  try {
    if (!suite.empty()) {
      if (!script.empty()) throw ScriptError("--suite and a script are exclusive", 0);
      s.execute("suite " + suite, 1);
      std::cout << s.records().back().dump() << "\n";
    } else {
      std::ifstream f;
      std::istream* in = &std::cin;
      if (!script.empty() && script != "-") {
        f.open(script);
        if (!f) {
          std::cerr << "error: cannot open " << script << "\n";
          return 2;
        }
        in = &f;
      }
      std::string line;
      int n = 0;
      while (std::getline(*in, line)) {
        size_t before = s.records().size();
        s.execute(line, ++n);
        if (s.records().size() > before) std::cout << s.records().back().dump() << std::endl;
      }
    }
    code = s.ok() ? 0 : 1;
  } catch (const ScriptError& e) {
    std::cerr << "error: " << e.format();
    if (!e.binding.empty()) std::cerr << " [" << e.binding << "]";
    std::cerr << "\n";
    code = 2;
  }
  if (!json_out.empty()) {
    std::ofstream o(json_out);
    json rep = s.report();
    if (code == 2) rep["ok"] = false;
    o << rep.dump(2) << "\n";
  }
  return code;
}
