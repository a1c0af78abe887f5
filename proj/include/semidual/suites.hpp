#pragma once

#include <string>
#include <vector>

#include "semidual/field.hpp"

namespace semidual {

struct SuiteCheck {
  std::string label;
  std::string expected, actual;
  bool pass = false;
};

struct SuiteResult {
  std::string name;
  bool experimental = false;
  std::vector<SuiteCheck> checks;
  std::vector<std::string> notes;
  bool pass() const;
};

// Names accepted by run_suite besides "all".
const std::vector<std::string>& suite_names();
// "all" runs every non-experimental suite. Throws std::invalid_argument on an unknown name.
std::vector<SuiteResult> run_suite(const std::string& name, Field f = Field{32003});

}  // namespace semidual
