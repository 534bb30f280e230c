#pragma once

// Ready-made experiment data: the stream coalgebras, bounded queues and the
// wild-group difunctor. The CLI demos, tests and acceptance suite share them.

#include <string>
#include <vector>

#include "paracat/fixpoint.hpp"

namespace paracat::demos {

struct CoalgebraSystem {
  PolyRef functor;
  ExprRef gamma;     // CoalgOf(functor)
  CategoryRef base;  // one object per coalgebra carrier
  std::vector<std::string> names;
  std::vector<Coalgebra> coalgebras;  // coalgebras[k] lives on base object k

  Value structure(int k) const;  // the coalgebra as an element of Γ(X,X)
  std::vector<PointedStructure> structures() const;
  // Disjoint union with labels prefixed "<name>."; useful for partition refinement.
  Coalgebra disjoint_union() const;
};

// {p ↦ (0,p)}, {q0 ↦ (0,q1), q1 ↦ (0,q0)} and {r ↦ (1,r)} for T = {0,1} × Id,
// over the fragment with every function between the three carriers.
CoalgebraSystem streams();

// Queues over `alphabet` letters with at most `capacity` items, as coalgebras
// for T = (1 + Σ) × (Id^Σ × Id): observe the front, enqueue, dequeue.
// Enqueueing into a full queue and dequeueing an empty one are no-ops.
//   object 0 "L": plain lists, states "l_<word>"
//   object 1 "B": batched queues (front, back) with back newest-first,
//                 states "b_<front>_<back>"
// The base has the identities and abs: B → L, abs(f, b) = f ++ reverse(b).
struct QueueSystem {
  CoalgebraSystem system;
  Relation representation;  // list ~ batched, X = L, Y = B
};
QueueSystem queues(int alphabet, int capacity);

// Prod(Arrow(Prod(Var,Var),Var), Prod(Var, Arrow(Var,Var))): a binary
// operation, a unit and an inverse with no laws imposed.
ExprRef wild_group_data();
// Whether a structure satisfies associativity, unit and inverse laws.
bool is_group(const Value& g, const std::vector<Value>& carrier);

}  // namespace paracat::demos
