#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semidual/field.hpp"

namespace semidual {

// A generated object over the random ring: its kind, a homological shift and
// the generators it is built from.
struct ObjSpec {
  enum class Kind { Cyclic, Koszul, Free, Dualizing };
  Kind kind = Kind::Free;
  int shift = 0;
  std::vector<std::string> gens;
};

// A random instance: a monomial quotient of a polynomial ring in at most three
// variables, the objects a property refers to and an optional linear form f
// (a nonzerodivisor defining R -> R/(f)).
struct FuzzCase {
  int nvars = 1;
  std::vector<std::string> ring;
  std::vector<ObjSpec> objs;
  std::string f;
  std::string describe() const;
};

struct FuzzResult {
  std::string tag;
  int count = 0;
  uint64_t seed = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;  // generated cases outside the property's hypotheses, regenerated
  bool mutation = false;  // the property is deliberately false
  std::optional<FuzzCase> counterexample;  // shrunk
  std::string message;
  std::vector<FuzzCase> cases;  // the case behind each counted instance
  // Zero failures, or at least one counterexample for a mutation.
  bool ok() const { return mutation ? failed > 0 : failed == 0; }
};

const std::vector<std::string>& fuzz_tags();
// Throws std::invalid_argument on an unknown tag.
FuzzResult fuzz(const std::string& tag, int count, uint64_t seed, Field f = Field{32003});

}  // namespace semidual
