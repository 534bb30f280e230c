#pragma once

// Initial algebras, structural ends and coends over finite-set fragments,
// bisimulation and relational lifting.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "paracat/paranat.hpp"
#include "paracat/polyfunctor.hpp"

namespace paracat {

struct Algebra {
  std::vector<Value> carrier;
  FnTable structure;  // T(carrier) → carrier
};

struct Coalgebra {
  std::vector<Value> carrier;
  FnTable structure;  // carrier → T(carrier)
};

struct AdamekResult {
  bool stabilized = false;
  int step = -1;                   // k with X_k ≅ X_{k+1}
  std::vector<std::size_t> sizes;  // |X_0|, |X_1|, ...
  Algebra initial;                 // (μ_T, inn_T) when stabilized
};

// X_0 = ∅, X_{k+1} = T(X_k); the connecting maps are the label inclusions.
AdamekResult adamek_initial(const PolyFunctor& t, int bound);

bool is_algebra_hom(const PolyFunctor& t, const Algebra& a, const Algebra& b, const FnTable& h);
// Exhaustive search over all functions a.carrier → b.carrier.
std::vector<FnTable> all_algebra_homs(const PolyFunctor& t, const Algebra& a, const Algebra& b);
// f_0 = ∅, f_{k+1} = u ∘ T(f_k) along the Adámek chain. Throws
// PreconditionError if T does not stabilize within `bound`.
FnTable fold(const PolyFunctor& t, const Algebra& target, int bound = 64);
// All algebras on a carrier (every function T(X) → X).
std::vector<Algebra> all_algebras(const PolyFunctor& t, const std::vector<Value>& carrier, std::size_t budget = 1 << 16);

struct StructuralEnd {
  std::vector<int> fragment;
  CategoryRef base;
  DifunctorRef gamma, theta;
  std::vector<Paranatural> families;
  bool truncated = false;
};

// Paranaturals Γ ⇒ Θ over finset_fragment(fragment).
StructuralEnd structural_end(const ExprRef& gamma, const ExprRef& theta, const std::vector<int>& fragment,
                             std::size_t limit = 100000);

struct UustaluReport {
  std::vector<int> fragment;
  std::string mu;                 // μ_T as a set
  std::size_t families = 0;       // |AlgOf(T) ⇒ AlgOf(F)| on the fragment
  std::size_t target = 0;         // |hom(F μ, μ)|
  std::size_t image = 0;          // distinct evaluations at (μ, inn)
  bool injective = false;
  bool surjective = false;
  bool truncated = false;
};

// Throws PreconditionError if T does not stabilize or μ_T is not a carrier
// of the fragment (same element labels).
UustaluReport probe_uustalu(const PolyRef& t, const PolyRef& f, const std::vector<int>& fragment, std::size_t limit = 100000);

// A structure g on the carrier of a base object.
struct PointedStructure {
  int object = -1;
  Value structure;
};

struct CoendPoint {
  int structure = -1;  // index into the structure list
  int element = -1;    // element index in the carrier, or -1 when unpointed
};

struct CoendClasses {
  std::vector<PointedStructure> structures;
  std::vector<CoendPoint> points;
  std::vector<std::vector<int>> classes;  // point indices; classes ordered by first point
  std::vector<std::string> point_labels;  // "(X,g,x)" or "(X,g)"

  int class_of(int point) const;
  int point_index(int structure, int element) const;
};

// Union-find closure of (I,g,x) ~ (J,g',f(x)) over the structure homs f among
// the listed structures (base morphisms between their objects). Unpointed
// mode identifies (I,g) ~ (J,g') instead.
CoendClasses structural_coend(ExprEvaluator& ev, const ExprRef& gamma, const std::vector<PointedStructure>& structures,
                              bool pointed = true);
// Every diagonal structure of Γ over the base (all objects).
CoendClasses structural_coend(const ExprRef& gamma, const CategoryRef& base, bool pointed = true);

// Coarsest partition stable under x ↦ T(π)(c(x)); blocks in first-element order.
std::vector<std::vector<Value>> partition_refinement(const PolyFunctor& t, const Coalgebra& c);

// A relation between the carriers of two fragment objects, by element label.
struct Relation {
  int X = -1, Y = -1;
  std::set<std::pair<std::string, std::string>> pairs;
  bool contains(const std::string& x, const std::string& y) const { return pairs.count({x, y}) > 0; }
};

// Logical-relation lifting on the diagonal: returns nullopt if (u,v) is in
// the lifted relation, otherwise the failing clause.
std::optional<std::string> lift_failure(ExprEvaluator& ev, const ExprRef& e, const Relation& r, const Value& u, const Value& v);
// The lifted relation as an explicit table over Γ(X,X) × Γ(Y,Y) (indices).
std::vector<std::pair<int, int>> rel_lift(ExprEvaluator& ev, const ExprRef& e, const Relation& r);

struct BisimulationVerdict {
  bool holds = false;
  std::string counterexample;
};

BisimulationVerdict check_bisimulation(ExprEvaluator& ev, const ExprRef& gamma, const Relation& r, const Value& g,
                                       const Value& g_prime);

struct CoinductionVerdict {
  bool equal = false;         // the claim from the bisimulation
  bool same_class = false;    // cross-check against the coend classes
};

// Throws PreconditionError if R is not a bisimulation or x R y fails. The
// cross-check uses `classes`, which must contain both pointed structures.
CoinductionVerdict coinduction_equal(ExprEvaluator& ev, const ExprRef& gamma, const Relation& r, const Value& g,
                                     const Value& g_prime, const std::string& x, const std::string& y,
                                     const CoendClasses& classes);

}  // namespace paracat
