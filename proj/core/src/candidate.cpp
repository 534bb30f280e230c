#include "paracat/candidate.hpp"

#include <json.hpp>
#include <unordered_map>

#include "paracat/error.hpp"

namespace paracat::freethm {

Candidate parse_candidate(const std::string& text) {
  Candidate c;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("candidate table: ") + e.what());
    }
    if (!j.contains("table") || !j["table"].is_object()) throw InputError("candidate table: expected {\"table\": {size: {...}}}");
    c.kind = Candidate::Kind::Table;
    for (const auto& [size, rows] : j["table"].items()) {
      if (!rows.is_object()) throw InputError("candidate table: entry for size " + size + " is not an object");
      int n = 0;
      try {
        n = std::stoi(size);
      } catch (const std::exception&) {
        throw InputError("candidate table: size '" + size + "' is not a number");
      }
      for (const auto& [arg, result] : rows.items()) {
        if (!result.is_string()) throw InputError("candidate table: results must be printed values");
        c.table[n][arg] = result.get<std::string>();
      }
    }
    return c;
  }
  c.term = parse_term(text);
  return c;
}

namespace {

class Evaluator {
 public:
  Evaluator(const Candidate& c, const Type& t, int size, const CheckOptions& opts)
      : c_(c), type_(t), size_(size), interp_(Semantics{opts.list_bound, opts.nat_bound}, carrier(size), opts.step_budget) {}

  const Value& operator()(const Value& d) {
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
    return memo_.emplace(d, compute(d)).first->second;
  }

 private:
  Value compute(const Value& d) {
    if (c_.kind == Candidate::Kind::Term) return interp_.apply_candidate(c_.term, type_, d);
    auto rows = c_.table.find(size_);
    if (rows == c_.table.end()) throw InputError("candidate table has no entry for carrier size " + std::to_string(size_));
    auto row = rows->second.find(d.str());
    if (row == rows->second.end()) row = rows->second.find("*");
    if (row == rows->second.end())
      throw InputError("candidate table at size " + std::to_string(size_) + " has no row for " + d.str());
    return parse_value(row->second);
  }

  const Candidate& c_;
  const Type& type_;
  int size_;
  Interpreter interp_;
  std::unordered_map<Value, Value, ValueHash> memo_;
};

}  // namespace

Value eval_candidate(const Candidate& c, const Type& forall_type, int size, const Value& d, const CheckOptions& opts) {
  return Evaluator(c, forall_type, size, opts)(d);
}

CheckReport check_candidate(const Type& forall_type, const Candidate& c, const CheckOptions& opts) {
  auto [t1, t2] = split_arrow(forall_type);
  const Semantics sem{opts.list_bound, opts.nat_bound};
  std::map<int, Evaluator> fs;
  for (int n : opts.sizes)
    if (n < 0) throw InputError("carrier sizes must be non-negative");
    else fs.try_emplace(n, c, forall_type, n, opts);

  CheckReport report;
  for (int na : opts.sizes)
    for (int nb : opts.sizes) {
      const auto A = carrier(na), B = carrier(nb);
      const auto d0s = sem.enumerate(*t1, A, A);
      const auto d1s = sem.enumerate(*t1, B, B);
      for (const auto& i2v : all_functions(A, B)) {
        const FnTable i2{A, i2v.items()};
        ++report.instantiations;
        std::unordered_map<Value, std::vector<const Value*>, ValueHash> fiber;
        for (const auto& d1 : d1s) fiber[sem.neg(*t1, i2, B, B, d1)].push_back(&d1);
        for (const auto& d0 : d0s) {
          auto it = fiber.find(sem.pos(*t1, i2, B, A, d0));
          if (it == fiber.end()) continue;
          const Value lhs = sem.pos(*t2, i2, B, A, fs.at(na)(d0));
          for (const Value* d1 : it->second) {
            ++report.checked;
            Value rhs = sem.neg(*t2, i2, B, B, fs.at(nb)(*d1));
            if (lhs != rhs) {
              report.ok = false;
              report.witness = CheckWitness{na, nb, i2v, d0, *d1, lhs, std::move(rhs)};
              return report;
            }
          }
        }
      }
    }
  return report;
}

}  // namespace paracat::freethm
