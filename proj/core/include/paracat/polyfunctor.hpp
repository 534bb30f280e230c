#pragma once

// Polynomial endofunctors on finite sets:
//   T ::= Const(B) | Id | Sum(T,T) | Prod(T,T) | Power(T, E)
// Elements of T(X) are Values: Const and Id give atoms of B and X, Sum gives
// inl/inr, Prod gives pairs, Power(T,E) gives functions with keys E.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "paracat/value.hpp"

namespace paracat {

struct PolyFunctor;
using PolyRef = std::shared_ptr<const PolyFunctor>;

struct PolyFunctor {
  enum class Kind { Const, Id, Sum, Prod, Power };
  Kind kind = Kind::Id;
  std::vector<Value> constant;  // Const
  std::vector<Value> exponent;  // Power
  PolyRef left, right;          // Sum/Prod operands; Power uses left

  static PolyRef make_const(std::vector<Value> elements);
  static PolyRef make_const(const std::vector<std::string>& labels);
  static PolyRef id();
  static PolyRef sum(PolyRef a, PolyRef b);
  static PolyRef prod(PolyRef a, PolyRef b);
  static PolyRef power(PolyRef t, std::vector<Value> exponent);

  // "1+Id", "Const{0,1}*Id", "Id^{a,b}", ...; see parse_polyfunctor.
  std::string str() const;
};

// Grammar: sum := prod ('+' prod)* ; prod := pow ('*' pow)* ;
// pow := atom ('^' '{' labels '}')? ; atom := 'Id' | 'X' | '1' | digit-run n
// (the set {0..n-1}) | '{' labels '}' | '(' sum ')'. The constant 1 is {*}.
PolyRef parse_polyfunctor(const std::string& text);

// A function between finite sets of Values, as a table over its domain.
struct FnTable {
  std::vector<Value> domain;
  std::vector<Value> images;
  const Value& operator()(const Value& x) const;
};

std::vector<Value> apply_polyfunctor(const PolyFunctor& t, const std::vector<Value>& carrier);
// Action on one element of T(X) for a function given pointwise.
Value apply_polyfunctor(const PolyFunctor& t, const std::function<Value(const Value&)>& f, const Value& x);
// Action on a function table: T(f): T(dom) → T(cod).
FnTable apply_polyfunctor(const PolyFunctor& t, const FnTable& f);

// Enumerates all functions from `domain` to `codomain` (last key fastest).
// Throws ResourceError above `budget` results.
std::vector<Value> all_functions(const std::vector<Value>& domain, const std::vector<Value>& codomain,
                                 std::size_t budget = std::size_t{1} << 22);

}  // namespace paracat
