#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "semidual/json_io.hpp"

namespace semidual {

struct ScriptOptions {
  Field field{32003};
  int window = -1;  // < 0: each computation picks its default
  uint64_t seed = 7;
};

// Parse errors carry a column; semantic errors name the binding involved.
struct ScriptError : std::runtime_error {
  ScriptError(const std::string& what, int line, int column = 0, std::string binding = "")
      : std::runtime_error(what), line(line), column(column), binding(std::move(binding)) {}
  int line, column;
  std::string binding;
  std::string format() const;
};

struct IdealBinding {
  QRPtr ring;
  Ideal ideal;
};
using Binding = std::variant<QRPtr, IdealBinding, FPModule, DObj, RingMap>;

// Named, immutable bindings plus the records emitted so far.
class Session {
 public:
  explicit Session(ScriptOptions opts = {}) : opts_(opts) {}
  // Runs one line (comments and blank lines are ignored). Throws ScriptError.
  void execute(const std::string& line, int lineno);
  const std::vector<json>& records() const { return records_; }
  // Every expectation and every suite or fuzz run passed.
  bool ok() const;
  json report() const;

  const Binding& lookup(const std::string& name, int line, int col) const;
  const ScriptOptions& options() const { return opts_; }
  void bind(const std::string& name, Binding b, int line, int col);
  void emit(json record) { records_.push_back(std::move(record)); }

 private:
  ScriptOptions opts_;
  std::map<std::string, Binding> bindings_;
  std::vector<json> records_;
};

// Executes every line of the stream.
void run_script(Session& s, std::istream& in);

}  // namespace semidual
