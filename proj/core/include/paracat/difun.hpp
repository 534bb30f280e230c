#pragma once

// Difunctors C^op × C → Set over a finite category C.
//
// A TabulatedDifunctor stores one finite cell Δ(I,J) per pair of objects and
// the two actions as index tables:
//   neg(m, J): Δ(I1,J) → Δ(I0,J)   for m: I0 → I1
//   pos(I, m): Δ(I,J0) → Δ(I,J1)   for m: J0 → J1
// DifunctorExpr is the expression grammar; ExprEvaluator computes cells and
// actions on Values without tabulating, which is what large carriers need.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "paracat/fincat.hpp"
#include "paracat/polyfunctor.hpp"
#include "paracat/value.hpp"

namespace paracat {

class TabulatedDifunctor {
 public:
  struct Cell {
    std::vector<Value> elements;
    std::unordered_map<Value, int, ValueHash> index;
  };

  TabulatedDifunctor() = default;
  explicit TabulatedDifunctor(CategoryRef base);

  const CategoryRef& base() const { return base_; }
  const FinCategory& category() const { return *base_; }

  const Cell& cell(int I, int J) const { return cells_.at(slot(I, J)); }
  int size(int I, int J) const { return static_cast<int>(cell(I, J).elements.size()); }
  const Value& element(int I, int J, int x) const { return cell(I, J).elements.at(x); }
  std::optional<int> find(int I, int J, const Value& v) const;
  int index_of(int I, int J, const Value& v) const;  // throws InputError

  const std::vector<int>& neg(int m, int J) const { return neg_.at(static_cast<std::size_t>(m) * n_ + J); }
  const std::vector<int>& pos(int I, int m) const { return pos_.at(static_cast<std::size_t>(I) * m_ + m); }
  int map_neg(int m, int J, int x) const { return neg(m, J).at(x); }
  int map_pos(int I, int m, int x) const { return pos(I, m).at(x); }

  // Builder interface.
  void set_cell(int I, int J, std::vector<Value> elements);
  void set_neg(int m, int J, std::vector<int> table) { neg_.at(static_cast<std::size_t>(m) * n_ + J) = std::move(table); }
  void set_pos(int I, int m, std::vector<int> table) { pos_.at(static_cast<std::size_t>(I) * m_ + m) = std::move(table); }

  friend bool operator==(const TabulatedDifunctor& a, const TabulatedDifunctor& b);

 private:
  std::size_t slot(int I, int J) const { return static_cast<std::size_t>(I) * n_ + J; }

  CategoryRef base_;
  int n_ = 0;
  int m_ = 0;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> neg_;
  std::vector<std::vector<int>> pos_;
};

using DifunctorRef = std::shared_ptr<const TabulatedDifunctor>;
inline DifunctorRef share(TabulatedDifunctor d) { return std::make_shared<const TabulatedDifunctor>(std::move(d)); }

// Set-valued presheaf or covariant functor given by tables. For a presheaf,
// maps[m] sends P(cod m) to P(dom m); for a covariant functor, F(dom m) to
// F(cod m). Keys are labels.
struct SetFunctorTable {
  std::map<std::string, std::vector<std::string>> sets;
  std::map<std::string, std::map<std::string, std::string>> maps;
};

struct DifunctorExpr;
using ExprRef = std::shared_ptr<const DifunctorExpr>;

struct DifunctorExpr {
  enum class Kind { Hom, Const, Var, Prod, Sum, Arrow, DiYo, FromPresheaf, FromCovariant, AlgOf, CoalgOf, ListOf, Tabulated };
  Kind kind = Kind::Hom;
  std::vector<Value> constant;  // Const
  ExprRef left, right;          // Prod/Sum/Arrow operands; ListOf uses left
  std::string yo_into;          // DiYo(J,I): J, the source of `into`
  std::string yo_from;          // DiYo(J,I): I, the target of `from`
  SetFunctorTable table;        // FromPresheaf / FromCovariant
  PolyRef poly;                 // AlgOf / CoalgOf
  int length_bound = 0;         // ListOf
  DifunctorRef tabulated;       // Tabulated

  std::string str() const;
};

namespace expr {
ExprRef hom();
ExprRef constant(std::vector<Value> elements);
ExprRef constant(const std::vector<std::string>& labels);
ExprRef var();
ExprRef prod(ExprRef a, ExprRef b);
ExprRef sum(ExprRef a, ExprRef b);
ExprRef arrow(ExprRef a, ExprRef b);
// DiYo(J,I): diagonal at K is hom(J,K) × hom(K,I); elements (into, from).
ExprRef diyo(std::string J, std::string I);
ExprRef from_presheaf(SetFunctorTable table);
ExprRef from_covariant(SetFunctorTable table);
ExprRef alg_of(PolyRef t);
ExprRef coalg_of(PolyRef t);
ExprRef list_of(ExprRef e, int length_bound);
ExprRef tabulated(DifunctorRef d);
// T(Var) as a difunctor expression; Power(t,E) becomes Arrow(Const E, t).
ExprRef poly_of_var(const PolyFunctor& t);
}  // namespace expr

// True when the expression uses a constructor that needs set data on the base.
bool needs_fragment(const DifunctorExpr& e);

class ExprEvaluator {
 public:
  explicit ExprEvaluator(CategoryRef base, std::size_t cell_budget = std::size_t{1} << 20);

  const CategoryRef& base() const { return base_; }
  const std::vector<Value>& enumerate(const ExprRef& e, int I, int J);
  bool contains(const ExprRef& e, int I, int J, const Value& v);
  // m: I0 → I1; sends e(I1,J) to e(I0,J).
  Value act_neg(const ExprRef& e, int m, int J, const Value& v);
  // m: J0 → J1; sends e(I,J0) to e(I,J1).
  Value act_pos(const ExprRef& e, int I, int m, const Value& v);

 private:
  void check_supported(const DifunctorExpr& e) const;
  Value var_image(int m, const Value& v) const;

  CategoryRef base_;
  std::size_t budget_;
  std::map<std::tuple<const DifunctorExpr*, int, int>, std::vector<Value>> cache_;
};

// Tabulates an expression; throws UnsupportedError for fragment-only
// constructors over a non-fragment base and ResourceError above the budget.
TabulatedDifunctor eval_difunctor_expr(const ExprRef& e, CategoryRef base, std::size_t cell_budget = std::size_t{1} << 20);

ValidationReport validate_difunctor(const TabulatedDifunctor& d);

struct StructCategory {
  CategoryRef category;
  std::vector<std::pair<int, int>> objects;  // (base object, index into the diagonal cell)
  std::vector<int> base_morphism;            // per structure morphism
  std::vector<std::vector<int>> object_at;   // [base object][diagonal index] → structure object

  int object_of(int base_object, int element) const { return object_at.at(base_object).at(element); }
};

// Objects are the diagonal elements (I,g); f: (I,g) → (J,g') is a morphism
// iff pos(I,f)(g) = neg(f,J)(g'). Morphisms are listed by base morphism,
// then source element, then target element.
StructCategory struct_category(const TabulatedDifunctor& d);

struct StructureHomCheck {
  bool holds = false;
  Value lhs;  // pos(I,f)(g) in d(I,J)
  Value rhs;  // neg(f,J)(g') in d(I,J)
};

StructureHomCheck is_structure_hom(const TabulatedDifunctor& d, int f, int g, int g_prime);
StructureHomCheck is_structure_hom(const TabulatedDifunctor& d, const std::string& f, const Value& g, const Value& g_prime);
// Untabulated variant: compares act_pos(I,f,g) with act_neg(f,J,g').
StructureHomCheck is_structure_hom(ExprEvaluator& ev, const ExprRef& e, int f, const Value& g, const Value& g_prime);

// F*A for F: D → C and A over C: (F*A)(X,Y) = A(FX,FY).
TabulatedDifunctor reindex(const TabulatedDifunctor& A, const FinFunctor& F);

// Pointwise product of two tabulated difunctors over the same base.
TabulatedDifunctor product(const TabulatedDifunctor& a, const TabulatedDifunctor& b);
// Constant difunctor on a finite set.
TabulatedDifunctor constant_difunctor(CategoryRef base, const std::vector<Value>& elements);

}  // namespace paracat
