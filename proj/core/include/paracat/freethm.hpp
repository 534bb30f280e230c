#pragma once

// Single-variable System F types, their variance-split difunctor semantics,
// symbolic map⁺/map⁻ terms, free-theorem emission, and the finite semantics
// used by the brute-force candidate checker.

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "paracat/difun.hpp"
#include "paracat/value.hpp"

namespace paracat::freethm {

struct Type;
using TypeRef = std::shared_ptr<const Type>;

struct Type {
  enum class Kind { Var, Unit, Bool, Nat, List, Prod, Sum, Arrow, Forall };
  Kind kind = Kind::Unit;
  std::string var;  // Var, Forall
  TypeRef a, b;     // List/Forall use a

  static TypeRef make(Kind k, TypeRef a = nullptr, TypeRef b = nullptr, std::string var = {});
};

bool operator==(const Type& x, const Type& y);

// `forall a. T`; `->` right-associative and loosest; `+` then `*` bind
// tighter (both left-associative); `List T` tightest. Throws InputError with
// a column on syntax errors and UnsupportedError for a second type variable
// or a nested forall.
TypeRef parse_type(const std::string& text);
std::string print_type(const Type& t);

bool mentions_var(const Type& t);
bool is_covariant(const Type& t);      // no negative occurrence of the variable
bool is_contravariant(const Type& t);  // no positive occurrence

// The type with each variable occurrence printed as J (positive) or I
// (negative), e.g. "(J -> I) -> J".
std::string split_variance(const Type& t);

// Symbolic transport along i2: map⁺ moves the covariant argument, map⁻ the
// contravariant one.
struct MapTerm;
using MapRef = std::shared_ptr<const MapTerm>;
struct MapTerm {
  enum class Kind { Id, Morph, Conj, Prod, Sum, List };
  Kind kind = Kind::Id;
  MapRef a, b;  // Conj: a = post, b = pre; Prod/Sum: components; List: a
};

struct DerivedMaps {
  MapRef pos;  // map⁺ i2
  MapRef neg;  // map⁻ i2
};

DerivedMaps derive_maps(const Type& t);
std::string print_map(const MapTerm& m);
// "λx. i2 (w (x ∘ i2))" style rendering of `m` applied to `arg`.
std::string render_applied(const MapTerm& m, const Type& t, const std::string& arg);

struct FreeTheorem {
  std::string type;
  std::string domain;      // split_variance of T1
  std::string codomain;    // split_variance of T2
  std::string raw;
  std::string normalized;
  std::vector<std::string> quantifiers;
  std::string form;        // "substituted" or "conditional"
};

// Throws InputError for a type without an outer forall.
FreeTheorem emit_free_theorem(const Type& t);
// The arrow split ∀α. T1 → T2, with non-arrow bodies read as Unit → T.
std::pair<TypeRef, TypeRef> split_arrow(const Type& forall_type);

// Finite semantics. Carriers for α are lists of atoms; Nat is {0..nat_bound-1}
// and lists have length ≤ list_bound.
struct Semantics {
  int list_bound = 3;
  int nat_bound = 3;
  std::size_t budget = std::size_t{1} << 22;

  // ⟦T⟧(I,J) as Values.
  std::vector<Value> enumerate(const Type& t, const std::vector<Value>& I, const std::vector<Value>& J) const;
  // map⁺ along i2: A → B at fixed I, ⟦T⟧(I,A) → ⟦T⟧(I,B). A is i2.domain.
  Value pos(const Type& t, const FnTable& i2, const std::vector<Value>& B, const std::vector<Value>& I, const Value& v) const;
  // map⁻ along i2: A → B at fixed J, ⟦T⟧(B,J) → ⟦T⟧(A,J).
  Value neg(const Type& t, const FnTable& i2, const std::vector<Value>& B, const std::vector<Value>& J, const Value& v) const;
};

// The difunctor expression for a forall-free type, for comparison with difun.
ExprRef to_difunctor_expr(const Type& t, int list_bound, int nat_bound);

// Carrier {"0", ..., "n-1"}.
std::vector<Value> carrier(int n);

}  // namespace paracat::freethm
