#pragma once

// The difunctor model of dependent type theory at desk scale.
//
// Contexts are difunctors Γ over a base C. A type over Γ is a small difunctor
// over Struct(Γ), "small" meaning every cell has at most `bound` elements. A
// term of A picks τ_I(c) ∈ A((I,c),(I,c)) for every structure (I,c), subject
// to the dependent chevron condition along every structure homomorphism.
//
// Comprehension uses
//   Γ.A(I,J) = Σ (x ∈ Γ(I,J)). Tm(DiYo(J,I), A[fwd x])
// where fwd x = diyo_forward(Γ, I, J, x); x moves by Γ's actions and the
// term by precomposition with the matching splice map. The universe has
//   U(I,J) = small difunctors over Struct(DiYo(J,I)),
// each stored as a canonical code (see encode_small).

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "paracat/diyoneda.hpp"
#include "paracat/paranat.hpp"

namespace paracat {

using StructRef = std::shared_ptr<const StructCategory>;
StructRef share_structs(const TabulatedDifunctor& gamma);

struct TyOver {
  DifunctorRef context;
  StructRef structs;
  DifunctorRef type;  // over structs->category
  int bound = 0;
};

// Validates A and enforces the size bound (PreconditionError when exceeded).
TyOver make_ty(DifunctorRef gamma, StructRef structs, TabulatedDifunctor A, int bound);
// Struct(Γ) → C, (I,c) ↦ I.
FinFunctor struct_projection(const StructCategory& s, const CategoryRef& base);
// B over C seen as a type over Γ that ignores its structure arguments.
TyOver weaken(DifunctorRef gamma, StructRef structs, const TabulatedDifunctor& B, int bound);
// A[σ] for σ: Δ ⇒ Γ, reindexed along Struct(σ): Struct(Δ) → Struct(Γ).
TyOver subst_ty(const TyOver& A, const Paranatural& sigma, StructRef delta_structs);

struct Tm {
  TyOver type;
  std::vector<std::vector<int>> components;  // [I][c] → index in A((I,c),(I,c))

  const Value& apply(int I, int c) const;
  Value to_value() const;
  friend bool operator==(const Tm& a, const Tm& b) { return a.components == b.components; }
};

// t[σ]_I(d) = t_I(σ_I(d)).
Tm subst_tm(const Tm& t, const Paranatural& sigma, StructRef delta_structs);

// Witness indices refer to the base: i2 is a base morphism, d0/d1 index
// Γ(I0,I0) and Γ(I1,I1).
ChevronReport check_tm(const Tm& t);

struct TmEnumeration {
  std::vector<Tm> terms;
  bool truncated = false;
};
TmEnumeration enumerate_tms(const TyOver& A, std::size_t limit = 100000);

struct Comprehension {
  TyOver type;
  DifunctorRef extended;  // Γ.A
  StructRef structs;      // Struct(Γ.A)
  Paranatural p;          // Γ.A ⇒ Γ
  Tm q;                   // in Tm(Γ.A, A[p])
};

// Throws ResourceError when an enumeration hits `limit`.
Comprehension comprehension(const TyOver& A, std::size_t limit = 100000);

struct ComprehensionProbe {
  std::optional<std::size_t> substitutions;  // |Δ ⇒ Γ.A|
  std::optional<std::size_t> pairs;          // |Σ (σ: Δ ⇒ Γ). Tm(Δ, A[σ])|
  bool p_paranatural = false;
  bool q_is_term = false;
  bool forward_injective = false;
  bool forward_surjective = false;
  bool inverse_well_defined = false;  // (σ,t) ↦ θ lands in Γ.A and is paranatural
  bool roundtrip_substitutions = false;
  bool roundtrip_pairs = false;
  std::vector<bool> diagonal_iso;  // per object: Γ.A(I,I) ≅ Σ_c A((I,c),(I,c))
  bool bijection() const;
};

ComprehensionProbe probe_comprehension(const Comprehension& ext, const DifunctorRef& delta, std::size_t limit = 100000);

// Canonical code of a difunctor: cell sizes, then neg tables by (m,J), then
// pos tables by (I,m). Element labels are replaced by their cell index.
Value encode_small(const TabulatedDifunctor& A);
// Inverse of encode_small with elements "0".."k-1"; throws InputError on a
// malformed code.
TabulatedDifunctor decode_small(const Value& code, const CategoryRef& base);
// Every difunctor over D with cells {0..k-1}, k ≤ bound, in code order.
// ResourceError when more than `budget` candidates would be examined.
std::vector<TabulatedDifunctor> small_difunctors(const CategoryRef& D, int bound, std::size_t budget = 1000000);

struct Universe {
  CategoryRef base;
  int bound = 0;
  DifunctorRef U;
  std::vector<DifunctorRef> splices;  // DiYo(J,I) per slot I*n+J
  std::vector<StructRef> splice_structs;

  const StructRef& structs(int I, int J) const { return splice_structs.at(static_cast<std::size_t>(I) * base->object_count() + J); }
  // Membership test: `code` decodes to a valid small difunctor over Struct(DiYo(J,I)).
  bool contains(int I, int J, const Value& code) const;
};

Universe build_universe(const CategoryRef& base, int bound, std::size_t budget = 1000000);

struct RoundTrip {
  std::size_t total = 0;
  std::size_t identity = 0;
};

struct UniverseProbe {
  std::vector<std::size_t> cells;  // |U(I,J)| per slot
  std::size_t types = 0;           // sample of Ty Γ
  std::size_t terms = 0;           // sample of Tm(Γ, U)
  bool codes_paranatural = true;   // every encode(A) passed check_paranatural
  RoundTrip ty_diagonal;           // decode(encode A) = A, off-diagonal cells empty
  RoundTrip ty_off_diagonal;       // same, some off-diagonal cell inhabited
  RoundTrip tm;                    // encode(decode τ) = τ
  bool truncated = false;
};

UniverseProbe probe_universe(const DifunctorRef& gamma, int bound, std::size_t limit = 100000, std::size_t budget = 1000000);

}  // namespace paracat
