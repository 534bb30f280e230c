#pragma once

// Brute-force parametricity checking of candidate implementations.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paracat/freethm.hpp"
#include "paracat/term.hpp"

namespace paracat::freethm {

struct Candidate {
  enum class Kind { Term, Table };
  Kind kind = Kind::Term;
  TermRef term;
  // carrier size → printed argument d (or "*" for any) → printed result
  std::map<int, std::map<std::string, std::string>> table;
};

// JSON text {"table": {"2": {"*": "..."}}} or term syntax.
Candidate parse_candidate(const std::string& text);

struct CheckOptions {
  std::vector<int> sizes{2, 3};
  int list_bound = 3;
  int nat_bound = 3;
  std::size_t step_budget = 100000;
};

struct CheckWitness {
  int size_a = 0, size_b = 0;
  Value i2, d0, d1, lhs, rhs;
};

struct CheckReport {
  bool ok = true;
  std::size_t instantiations = 0;  // (A, B, i2) triples
  std::size_t checked = 0;         // (i2, d0, d1) chevrons
  std::optional<CheckWitness> witness;
};

// f at carrier {0..size-1} applied to d ∈ ⟦T1⟧(A,A).
Value eval_candidate(const Candidate& c, const Type& forall_type, int size, const Value& d, const CheckOptions& opts = {});

CheckReport check_candidate(const Type& forall_type, const Candidate& c, const CheckOptions& opts = {});

}  // namespace paracat::freethm
