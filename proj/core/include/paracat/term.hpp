#pragma once

// A small call-by-value functional language for candidate implementations
// of polymorphic types.
//
//   fun x y -> e        let x = e in e        let rec f x = e in e
//   if e then e else e  match e with | p -> e | p -> e
//   () true false 0 1   (e, e)  [e, e]  e :: e
//   + - < <= == != && || not
//   inl inr fst snd succ
//
// Patterns: _ x 0 true false () [] (p, p) p :: p  inl p  inr p  succ p.
// The builtins carrier_size (), carrier_elem n and elem_index x expose the
// carrier a term is instantiated at; a parametric term never uses them.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "paracat/freethm.hpp"
#include "paracat/value.hpp"

namespace paracat::freethm {

struct Term;
using TermRef = std::shared_ptr<const Term>;

struct Pattern;
using PatternRef = std::shared_ptr<const Pattern>;

struct Pattern {
  enum class Kind { Wild, Var, Int, Bool, Unit, Nil, Cons, Pair, Inl, Inr, Succ };
  Kind kind = Kind::Wild;
  std::string name;
  long number = 0;
  PatternRef a, b;
};

struct Term {
  enum class Kind { Var, Int, Bool, Unit, Nil, Fun, App, Let, LetRec, If, Match, Pair, ListLit, Cons, BinOp };
  Kind kind = Kind::Unit;
  std::string name;                // Var, Fun param, Let/LetRec binder, BinOp operator
  long number = 0;                 // Int, Bool (0/1)
  std::vector<std::string> params;  // LetRec
  std::vector<TermRef> args;       // children
  std::vector<std::pair<PatternRef, TermRef>> arms;
  int line = 0, column = 0;
};

// Throws InputError with line:column on syntax errors.
TermRef parse_term(const std::string& text);

struct RVal;
using RValRef = std::shared_ptr<const RVal>;
struct Env;
using EnvRef = std::shared_ptr<const Env>;

// Evaluates terms against a fixed instantiation α := carrier.
class Interpreter {
 public:
  Interpreter(Semantics sem, std::vector<Value> carrier, std::size_t step_budget);

  RValRef eval(const TermRef& t);
  RValRef call(const RValRef& f, const RValRef& arg);

  // Conversions between the finite semantics ⟦T⟧(carrier, carrier) and runtime values.
  RValRef to_runtime(const Type& t, const Value& v);
  Value from_runtime(const Type& t, const RValRef& v);

  // f applied to d and read back at T2, where (T1, T2) = split_arrow(type).
  Value apply_candidate(const TermRef& term, const Type& forall_type, const Value& d);

  std::size_t steps() const { return steps_; }
  const std::vector<Value>& carrier() const { return carrier_; }

 private:
  RValRef eval(const TermRef& t, const EnvRef& env, int depth);
  RValRef call(const RValRef& f, const RValRef& arg, int depth);
  void tick(int depth);

  Semantics sem_;
  std::vector<Value> carrier_;
  std::size_t budget_;
  std::size_t steps_ = 0;
};

std::string show(const RValRef& v);

}  // namespace paracat::freethm
