#pragma once

// Paranatural transformations φ: Δ ⇒ Γ between tabulated difunctors over a
// shared base. Components are index tables on diagonals:
//   components[I][x] = index of φ_I(Δ(I,I)[x]) in Γ(I,I).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paracat/difun.hpp"

namespace paracat {

struct Paranatural {
  DifunctorRef source;
  DifunctorRef target;
  std::vector<std::vector<int>> components;

  // components given as {object: {source element: target element}}; every
  // diagonal element must be mapped.
  static Paranatural from_labels(DifunctorRef source, DifunctorRef target,
                                 const std::map<std::string, std::map<std::string, std::string>>& components);
  static Paranatural identity(DifunctorRef d);

  const Value& apply(int I, const Value& x) const;
  int apply_index(int I, int x) const { return components.at(I).at(x); }

  // Canonical element form: a tuple with one function per object.
  Value to_value() const;
  std::map<std::string, std::map<std::string, std::string>> to_labels() const;

  friend bool operator==(const Paranatural& a, const Paranatural& b);
};

enum class Formulation { Elementwise, Pullback };

struct ChevronWitness {
  int i2 = -1;
  int d0 = -1, d1 = -1;  // indices in Δ(I0,I0), Δ(I1,I1)
  Value d0_value, d1_value;
  Value lhs, rhs;  // map⁺_Γ(i2)(φ d0), map⁻_Γ(i2)(φ d1)
  friend bool operator==(const ChevronWitness& a, const ChevronWitness& b) {
    return a.i2 == b.i2 && a.d0 == b.d0 && a.d1 == b.d1 && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

struct ChevronReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<ChevronWitness> violations;  // in scan order (i2, d0, d1)
  const ChevronWitness* witness() const { return violations.empty() ? nullptr : &violations.front(); }
};

// Throws InputError if the components do not form functions between the
// diagonals or the difunctors live over different bases.
ChevronReport check_paranatural(const Paranatural& phi, Formulation formulation = Formulation::Elementwise);

// ψ ∘ φ for φ: Δ ⇒ Γ and ψ: Γ ⇒ Θ.
Paranatural compose(const Paranatural& psi, const Paranatural& phi);

struct ParanaturalEnumeration {
  std::vector<Paranatural> families;
  bool truncated = false;
  std::size_t nodes = 0;  // search nodes visited
};

// All families satisfying every chevron, by backtracking with forward
// checking. Variables are (object, diagonal element) pairs ordered by object
// label then element label; values are tried in label order of Γ(I,I).
ParanaturalEnumeration enumerate_paranaturals(const DifunctorRef& source, const DifunctorRef& target,
                                              std::size_t limit = 100000);

// Struct(Δ) → Struct(Γ). Throws PreconditionError naming the first Struct(Δ)
// morphism whose image is not a Struct(Γ) morphism.
FinFunctor as_struct_functor(const Paranatural& phi, const StructCategory& source, const StructCategory& target);

// Classical naturality for set-valued functors given by tables. With
// `contravariant` the tables are presheaves (maps[m]: P(cod m) → P(dom m)).
// Returns the first failing (morphism, element) or nullopt.
struct NaturalityFailure {
  std::string morphism;
  std::string element;
};
std::optional<NaturalityFailure> check_naturality(const FinCategory& base, const SetFunctorTable& P, const SetFunctorTable& Q,
                                                  const std::map<std::string, std::map<std::string, std::string>>& components,
                                                  bool contravariant);

}  // namespace paracat
