#pragma once

// The diYoneda maps between Γ(I,J) and paranaturals DiYo(J,I) ⇒ Γ, probes of
// their bijectivity, and the exponential Γ^Δ with its currying probe.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "paracat/paranat.hpp"

namespace paracat {

// Tabulated DiYo(J,I) over `base`.
DifunctorRef diyo_difunctor(const CategoryRef& base, int J, int I);

// ψ_K(into, from) = map⁻_Γ(from)(map⁺_Γ(into)(x)) for x ∈ Γ(I,J). `source`
// must be diyo_difunctor(base, J, I); the overload without it builds one.
Paranatural diyo_forward(const DifunctorRef& gamma, const DifunctorRef& source, int I, int J, const Value& x);
Paranatural diyo_forward(const DifunctorRef& gamma, int I, int J, const Value& x);

// ψ_I(id_I, id_I) for ψ: DiYo(I,I) ⇒ Γ.
Value diyo_reflect(const Paranatural& psi, int I);

struct DiYonedaCell {
  std::string I, J;
  std::size_t lhs = 0;                  // |Γ(I,J)|
  std::optional<std::size_t> rhs;       // |DiYo(J,I) ⇒ Γ|, empty when the enumeration was truncated
  std::optional<bool> injective;
  std::optional<bool> surjective;
  std::optional<bool> retraction;       // diagonal cells only
  bool forward_paranatural = true;      // every diyo_forward image passed the checker
};

struct DiYonedaProbe {
  std::vector<DiYonedaCell> cells;  // (I,J) in object order
  std::string verdict;              // "bijective", "not-bijective" or "unknown"
};

DiYonedaProbe probe_diyoneda(const DifunctorRef& gamma, std::size_t limit = 100000);

// Γ^Δ(I,J) = paranaturals DiYo(J,I) × Δ ⇒ Γ, with
//   (map⁻ i2 φ)_K((into,from),d) = φ_K((into, i2∘from), d)
//   (map⁺ j2 ψ)_K((into,from),d) = ψ_K((into∘j2, from), d).
struct Exponential {
  DifunctorRef delta, gamma;
  DifunctorRef difunctor;
  std::vector<DifunctorRef> sources;                 // DiYo(J,I) × Δ per slot I*n+J
  std::vector<std::vector<Paranatural>> elements;    // per slot, in cell order

  const Paranatural& element(int I, int J, int x) const;
  int index_of(int I, int J, const Paranatural& psi) const;
};

// Throws ResourceError naming the cell when an enumeration is truncated.
Exponential exponential(const DifunctorRef& delta, const DifunctorRef& gamma, std::size_t limit = 100000);

// ev(ψ, d) = ψ_I((id,id), d).
Value evaluate(const Exponential& e, int I, int psi, int d);
// ev as a paranatural Γ^Δ × Δ ⇒ Γ; `product_source` must be product(Γ^Δ, Δ).
Paranatural evaluation(const Exponential& e, const DifunctorRef& product_source);

struct ExponentialProbe {
  std::optional<std::size_t> lhs;  // |Θ×Δ ⇒ Γ|
  std::optional<std::size_t> rhs;  // |Θ ⇒ Γ^Δ|
  bool curry_well_defined = false;
  bool uncurry_well_defined = false;
  bool curry_then_uncurry = false;
  bool uncurry_then_curry = false;
  std::string verdict;  // "bijection", "not-bijection" or "unknown"
};

ExponentialProbe probe_exponential(const DifunctorRef& theta, const DifunctorRef& delta, const DifunctorRef& gamma,
                                   std::size_t limit = 100000);

}  // namespace paracat
