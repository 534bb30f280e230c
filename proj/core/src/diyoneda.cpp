#include "paracat/diyoneda.hpp"

#include <map>
#include <set>

#include "paracat/error.hpp"

namespace paracat {

namespace {

using Components = std::vector<std::vector<int>>;

int morphism_of(const FinCategory& C, const Value& v) { return C.morphism_index(v.label()); }

Value splice(const FinCategory& C, int into, int from) {
  return Value::pair(Value::atom(C.morphism(into)), Value::atom(C.morphism(from)));
}

}  // namespace

DifunctorRef diyo_difunctor(const CategoryRef& base, int J, int I) {
  return share(eval_difunctor_expr(expr::diyo(base->object(J), base->object(I)), base));
}

Paranatural diyo_forward(const DifunctorRef& gamma, const DifunctorRef& source, int I, int J, const Value& x) {
  const auto& G = *gamma;
  const auto& C = G.category();
  const int xi = G.index_of(I, J, x);
  Paranatural psi{source, gamma, Components(C.object_count())};
  for (int K = 0; K < C.object_count(); ++K)
    for (const auto& s : source->cell(K, K).elements) {
      const int into = morphism_of(C, s.item(0));
      const int from = morphism_of(C, s.item(1));
      psi.components[K].push_back(G.map_neg(from, K, G.map_pos(I, into, xi)));
    }
  return psi;
}

Paranatural diyo_forward(const DifunctorRef& gamma, int I, int J, const Value& x) {
  return diyo_forward(gamma, diyo_difunctor(gamma->base(), J, I), I, J, x);
}

Value diyo_reflect(const Paranatural& psi, int I) {
  const auto& C = psi.source->category();
  const int id = C.identity(I);
  return psi.apply(I, splice(C, id, id));
}

DiYonedaProbe probe_diyoneda(const DifunctorRef& gamma, std::size_t limit) {
  const auto& G = *gamma;
  const auto& C = G.category();
  const int n = C.object_count();
  DiYonedaProbe probe;
  bool unknown = false, bijective = true;
  for (int I = 0; I < n; ++I)
    for (int J = 0; J < n; ++J) {
      DiYonedaCell cell;
      cell.I = C.object(I);
      cell.J = C.object(J);
      cell.lhs = static_cast<std::size_t>(G.size(I, J));
      auto source = diyo_difunctor(gamma->base(), J, I);
      auto families = enumerate_paranaturals(source, gamma, limit);
      std::set<Components> images;
      for (const auto& x : G.cell(I, J).elements) {
        auto psi = diyo_forward(gamma, source, I, J, x);
        if (!check_paranatural(psi).ok) cell.forward_paranatural = false;
        if (I == J) {
          const bool back = diyo_reflect(psi, I) == x;
          cell.retraction = cell.retraction.value_or(true) && back;
        }
        images.insert(psi.components);
      }
      if (I == J && !cell.retraction) cell.retraction = true;
      cell.injective = images.size() == cell.lhs;
      if (families.truncated) {
        unknown = true;
      } else {
        cell.rhs = families.families.size();
        bool all = true;
        for (const auto& f : families.families) all = all && images.count(f.components) > 0;
        cell.surjective = all;
        bijective = bijective && *cell.injective && all && cell.forward_paranatural;
      }
      probe.cells.push_back(std::move(cell));
    }
  probe.verdict = unknown ? "unknown" : bijective ? "bijective" : "not-bijective";
  return probe;
}

const Paranatural& Exponential::element(int I, int J, int x) const {
  const int n = delta->category().object_count();
  return elements.at(static_cast<std::size_t>(I) * n + J).at(x);
}

int Exponential::index_of(int I, int J, const Paranatural& psi) const {
  const int n = delta->category().object_count();
  const auto& cell = elements.at(static_cast<std::size_t>(I) * n + J);
  for (std::size_t k = 0; k < cell.size(); ++k)
    if (cell[k].components == psi.components) return static_cast<int>(k);
  return -1;
}

Exponential exponential(const DifunctorRef& delta, const DifunctorRef& gamma, std::size_t limit) {
  if (!same_category(delta->base(), gamma->base())) throw InputError("exponential: difunctors over different bases");
  const auto& base = delta->base();
  const auto& C = *base;
  const int n = C.object_count();
  Exponential e{delta, gamma, nullptr, {}, {}};
  std::vector<std::map<Components, int>> lookup(static_cast<std::size_t>(n) * n);
  TabulatedDifunctor out(base);
  for (int I = 0; I < n; ++I)
    for (int J = 0; J < n; ++J) {
      auto source = share(product(*diyo_difunctor(base, J, I), *delta));
      auto families = enumerate_paranaturals(source, gamma, limit);
      if (families.truncated)
        throw ResourceError("exponential: cell (" + C.object(I) + "," + C.object(J) + ") exceeds the enumeration limit");
      std::vector<Value> values;
      auto& index = lookup[e.sources.size()];
      for (std::size_t k = 0; k < families.families.size(); ++k) {
        values.push_back(families.families[k].to_value());
        index.emplace(families.families[k].components, static_cast<int>(k));
      }
      out.set_cell(I, J, std::move(values));
      e.sources.push_back(source);
      e.elements.push_back(std::move(families.families));
    }

  auto slot = [n](int I, int J) { return static_cast<std::size_t>(I) * n + J; };
  auto find = [&](std::size_t s, const Components& c, const std::string& what) {
    auto it = lookup[s].find(c);
    if (it == lookup[s].end()) throw InputError("exponential: " + what + " leaves its cell");
    return it->second;
  };

  for (int m = 0; m < C.morphism_count(); ++m) {
    const int A = C.dom(m), B = C.cod(m);
    for (int J = 0; J < n; ++J) {
      // map⁻ m: Γ^Δ(B,J) → Γ^Δ(A,J)
      const auto& to_src = *e.sources[slot(A, J)];
      const auto& from_src = *e.sources[slot(B, J)];
      std::vector<int> table;
      for (const auto& phi : e.elements[slot(B, J)]) {
        Components c(n);
        for (int K = 0; K < n; ++K)
          for (const auto& t : to_src.cell(K, K).elements) {
            const auto& yo = t.item(0);
            const int from = C.compose(m, morphism_of(C, yo.item(1)));
            Value moved = Value::pair(Value::pair(yo.item(0), Value::atom(C.morphism(from))), t.item(1));
            c[K].push_back(phi.components[K][from_src.index_of(K, K, moved)]);
          }
        table.push_back(find(slot(A, J), c, "map- " + C.morphism(m)));
      }
      out.set_neg(m, J, std::move(table));
    }
    for (int I = 0; I < n; ++I) {
      // map⁺ m: Γ^Δ(I,A) → Γ^Δ(I,B)
      const auto& to_src = *e.sources[slot(I, B)];
      const auto& from_src = *e.sources[slot(I, A)];
      std::vector<int> table;
      for (const auto& psi : e.elements[slot(I, A)]) {
        Components c(n);
        for (int K = 0; K < n; ++K)
          for (const auto& t : to_src.cell(K, K).elements) {
            const auto& yo = t.item(0);
            const int into = C.compose(morphism_of(C, yo.item(0)), m);
            Value moved = Value::pair(Value::pair(Value::atom(C.morphism(into)), yo.item(1)), t.item(1));
            c[K].push_back(psi.components[K][from_src.index_of(K, K, moved)]);
          }
        table.push_back(find(slot(I, B), c, "map+ " + C.morphism(m)));
      }
      out.set_pos(I, m, std::move(table));
    }
  }
  e.difunctor = share(std::move(out));
  return e;
}

Value evaluate(const Exponential& e, int I, int psi, int d) {
  const auto& C = e.delta->category();
  const int n = C.object_count();
  const auto& src = *e.sources[static_cast<std::size_t>(I) * n + I];
  const int id = C.identity(I);
  const int s = src.index_of(I, I, Value::pair(splice(C, id, id), e.delta->element(I, I, d)));
  return e.gamma->element(I, I, e.element(I, I, psi).components[I][s]);
}

Paranatural evaluation(const Exponential& e, const DifunctorRef& product_source) {
  const auto& C = e.delta->category();
  Paranatural ev{product_source, e.gamma, Components(C.object_count())};
  for (int I = 0; I < C.object_count(); ++I)
    for (const auto& p : product_source->cell(I, I).elements) {
      const int psi = e.difunctor->index_of(I, I, p.item(0));
      const int d = e.delta->index_of(I, I, p.item(1));
      ev.components[I].push_back(e.gamma->index_of(I, I, evaluate(e, I, psi, d)));
    }
  return ev;
}

ExponentialProbe probe_exponential(const DifunctorRef& theta, const DifunctorRef& delta, const DifunctorRef& gamma,
                                   std::size_t limit) {
  ExponentialProbe probe;
  const auto& C = theta->category();
  const int n = C.object_count();
  auto pair_src = share(product(*theta, *delta));
  auto left = enumerate_paranaturals(pair_src, gamma, limit);
  Exponential e;
  try {
    e = exponential(delta, gamma, limit);
  } catch (const ResourceError&) {
    probe.verdict = "unknown";
    return probe;
  }
  auto right = enumerate_paranaturals(theta, e.difunctor, limit);
  if (!left.truncated) probe.lhs = left.families.size();
  if (!right.truncated) probe.rhs = right.families.size();
  if (left.truncated || right.truncated) {
    probe.verdict = "unknown";
    return probe;
  }

  // curry φ: χ_I(t)_K((into,from),d) = φ_K(fwd_Θ(t)_K(into,from), d)
  auto curry = [&](const Paranatural& phi) -> std::optional<Paranatural> {
    Paranatural chi{theta, e.difunctor, Components(n)};
    for (int I = 0; I < n; ++I) {
      const auto& src = *e.sources[static_cast<std::size_t>(I) * n + I];
      for (int t = 0; t < theta->size(I, I); ++t) {
        Paranatural psi{e.sources[static_cast<std::size_t>(I) * n + I], gamma, Components(n)};
        for (int K = 0; K < n; ++K)
          for (const auto& s : src.cell(K, K).elements) {
            const int into = morphism_of(C, s.item(0).item(0));
            const int from = morphism_of(C, s.item(0).item(1));
            const int tk = theta->map_neg(from, K, theta->map_pos(I, into, t));
            const int p = pair_src->index_of(K, K, Value::pair(theta->element(K, K, tk), s.item(1)));
            psi.components[K].push_back(phi.components[K][p]);
          }
        const int idx = e.index_of(I, I, psi);
        if (idx < 0) return std::nullopt;
        chi.components[I].push_back(idx);
      }
    }
    return chi;
  };
  // uncurry χ: φ_I(t,d) = ev(χ_I(t), d)
  auto uncurry = [&](const Paranatural& chi) {
    Paranatural phi{pair_src, gamma, Components(n)};
    for (int I = 0; I < n; ++I)
      for (const auto& p : pair_src->cell(I, I).elements) {
        const int t = theta->index_of(I, I, p.item(0));
        const int d = delta->index_of(I, I, p.item(1));
        phi.components[I].push_back(gamma->index_of(I, I, evaluate(e, I, chi.components[I][t], d)));
      }
    return phi;
  };

  std::set<Components> right_set, left_set;
  for (const auto& chi : right.families) right_set.insert(chi.components);
  for (const auto& phi : left.families) left_set.insert(phi.components);

  probe.curry_well_defined = true;
  probe.curry_then_uncurry = true;
  for (const auto& phi : left.families) {
    auto chi = curry(phi);
    if (!chi || !right_set.count(chi->components)) {
      probe.curry_well_defined = false;
      probe.curry_then_uncurry = false;
      continue;
    }
    if (uncurry(*chi).components != phi.components) probe.curry_then_uncurry = false;
  }
  probe.uncurry_well_defined = true;
  probe.uncurry_then_curry = true;
  for (const auto& chi : right.families) {
    auto phi = uncurry(chi);
    if (!left_set.count(phi.components)) {
      probe.uncurry_well_defined = false;
      probe.uncurry_then_curry = false;
      continue;
    }
    auto back = curry(phi);
    if (!back || back->components != chi.components) probe.uncurry_then_curry = false;
  }
  const bool ok = probe.lhs == probe.rhs && probe.curry_well_defined && probe.uncurry_well_defined &&
                  probe.curry_then_uncurry && probe.uncurry_then_curry;
  probe.verdict = ok ? "bijection" : "not-bijection";
  return probe;
}

}  // namespace paracat
