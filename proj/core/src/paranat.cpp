#include "paracat/paranat.hpp"

#include <algorithm>
#include <numeric>

#include "paracat/error.hpp"

namespace paracat {

namespace {

void check_shapes(const Paranatural& phi) {
  if (!phi.source || !phi.target) throw InputError("paranatural: missing source or target");
  if (!same_category(phi.source->base(), phi.target->base())) throw InputError("paranatural: source and target over different bases");
  const auto& C = phi.source->category();
  if (static_cast<int>(phi.components.size()) != C.object_count()) throw InputError("paranatural: one component per object required");
  for (int I = 0; I < C.object_count(); ++I) {
    const auto& comp = phi.components[I];
    if (static_cast<int>(comp.size()) != phi.source->size(I, I))
      throw InputError("paranatural: component at " + C.object(I) + " is not total on the source diagonal");
    for (int y : comp)
      if (y < 0 || y >= phi.target->size(I, I))
        throw InputError("paranatural: component at " + C.object(I) + " leaves the target diagonal");
  }
}

// Indices 0..n-1 sorted by the canonical label of cell elements.
std::vector<int> label_order(const TabulatedDifunctor& d, int I, int J) {
  std::vector<int> order(d.size(I, J));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> labels;
  for (const auto& v : d.cell(I, J).elements) labels.push_back(v.str());
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] < labels[b]; });
  return order;
}

}  // namespace

Paranatural Paranatural::from_labels(DifunctorRef source, DifunctorRef target,
                                     const std::map<std::string, std::map<std::string, std::string>>& components) {
  Paranatural phi{source, target, {}};
  const auto& C = source->category();
  phi.components.resize(C.object_count());
  for (const auto& [obj, _] : components) (void)C.object_index(obj);
  for (int I = 0; I < C.object_count(); ++I) {
    const int n = source->size(I, I);
    if (n == 0) continue;
    auto it = components.find(C.object(I));
    if (it == components.end()) throw InputError("paranatural: no component for object '" + C.object(I) + "'");
    phi.components[I].assign(n, -1);
    for (const auto& [x, y] : it->second) {
      const int xi = source->index_of(I, I, parse_value(x));
      phi.components[I][xi] = target->index_of(I, I, parse_value(y));
    }
    for (int x = 0; x < n; ++x)
      if (phi.components[I][x] < 0)
        throw InputError("paranatural: component at '" + C.object(I) + "' undefined at " + source->element(I, I, x).str());
  }
  return phi;
}

Paranatural Paranatural::identity(DifunctorRef d) {
  Paranatural phi{d, d, {}};
  for (int I = 0; I < d->category().object_count(); ++I) {
    phi.components.emplace_back(d->size(I, I));
    std::iota(phi.components.back().begin(), phi.components.back().end(), 0);
  }
  return phi;
}

const Value& Paranatural::apply(int I, const Value& x) const {
  return target->element(I, I, components.at(I).at(source->index_of(I, I, x)));
}

Value Paranatural::to_value() const {
  std::vector<Value> parts;
  for (std::size_t I = 0; I < components.size(); ++I) {
    const int o = static_cast<int>(I);
    std::vector<Value> images;
    for (int y : components[I]) images.push_back(target->element(o, o, y));
    parts.push_back(Value::func(source->cell(o, o).elements, std::move(images)));
  }
  return Value::tuple(std::move(parts));
}

std::map<std::string, std::map<std::string, std::string>> Paranatural::to_labels() const {
  std::map<std::string, std::map<std::string, std::string>> out;
  const auto& C = source->category();
  for (int I = 0; I < C.object_count(); ++I) {
    auto& row = out[C.object(I)];
    for (int x = 0; x < static_cast<int>(components[I].size()); ++x)
      row[source->element(I, I, x).str()] = target->element(I, I, components[I][x]).str();
  }
  return out;
}

bool operator==(const Paranatural& a, const Paranatural& b) {
  return (a.source == b.source || *a.source == *b.source) && (a.target == b.target || *a.target == *b.target) &&
         a.components == b.components;
}

ChevronReport check_paranatural(const Paranatural& phi, Formulation formulation) {
  check_shapes(phi);
  const auto& D = *phi.source;
  const auto& G = *phi.target;
  const auto& C = D.category();
  ChevronReport report;
  auto record = [&](int i2, int I0, int I1, int d0, int d1) {
    const int lhs = G.map_pos(I0, i2, phi.components[I0][d0]);
    const int rhs = G.map_neg(i2, I1, phi.components[I1][d1]);
    if (lhs == rhs) return;
    report.violations.push_back(
        {i2, d0, d1, D.element(I0, I0, d0), D.element(I1, I1, d1), G.element(I0, I1, lhs), G.element(I0, I1, rhs)});
  };

  for (int i2 = 0; i2 < C.morphism_count(); ++i2) {
    const int I0 = C.dom(i2), I1 = C.cod(i2);
    if (formulation == Formulation::Elementwise) {
      for (int d0 = 0; d0 < D.size(I0, I0); ++d0) {
        const int z = D.map_pos(I0, i2, d0);
        for (int d1 = 0; d1 < D.size(I1, I1); ++d1) {
          if (D.map_neg(i2, I1, d1) != z) continue;
          ++report.checked;
          record(i2, I0, I1, d0, d1);
        }
      }
    } else {
      // The pullback of Δ(I0,I0) → Δ(I0,I1) ← Δ(I1,I1), built fiberwise over Δ(I0,I1).
      const int nz = D.size(I0, I1);
      std::vector<std::vector<int>> left(nz), right(nz);
      for (int d0 = 0; d0 < D.size(I0, I0); ++d0) left[D.map_pos(I0, i2, d0)].push_back(d0);
      for (int d1 = 0; d1 < D.size(I1, I1); ++d1) right[D.map_neg(i2, I1, d1)].push_back(d1);
      const std::size_t first = report.violations.size();
      for (int z = 0; z < nz; ++z) {
        report.checked += left[z].size() * right[z].size();
        for (int d0 : left[z])
          for (int d1 : right[z]) record(i2, I0, I1, d0, d1);
      }
      std::sort(report.violations.begin() + static_cast<std::ptrdiff_t>(first), report.violations.end(),
                [](const ChevronWitness& a, const ChevronWitness& b) { return std::tie(a.d0, a.d1) < std::tie(b.d0, b.d1); });
    }
  }
  report.ok = report.violations.empty();
  return report;
}

Paranatural compose(const Paranatural& psi, const Paranatural& phi) {
  check_shapes(phi);
  check_shapes(psi);
  if (!(phi.target == psi.source || *phi.target == *psi.source))
    throw InputError("paranatural composition: target of the first is not the source of the second");
  Paranatural out{phi.source, psi.target, phi.components};
  for (std::size_t I = 0; I < out.components.size(); ++I)
    for (auto& y : out.components[I]) y = psi.components[I][y];
  return out;
}

ParanaturalEnumeration enumerate_paranaturals(const DifunctorRef& source, const DifunctorRef& target, std::size_t limit) {
  const auto& D = *source;
  const auto& G = *target;
  if (!same_category(D.base(), G.base())) throw InputError("enumerate: source and target over different bases");
  const auto& C = D.category();
  const int n = C.object_count();

  // Variables in object-label order, then element-label order.
  std::vector<int> objects(n);
  std::iota(objects.begin(), objects.end(), 0);
  std::stable_sort(objects.begin(), objects.end(), [&](int a, int b) { return C.object(a) < C.object(b); });
  struct Var {
    int I, d;
  };
  std::vector<Var> vars;
  std::vector<std::vector<int>> var_of(n);
  for (int I = 0; I < n; ++I) var_of[I].assign(D.size(I, I), -1);
  for (int I : objects)
    for (int d : label_order(D, I, I)) {
      var_of[I][d] = static_cast<int>(vars.size());
      vars.push_back({I, d});
    }
  std::vector<std::vector<int>> value_order(n);
  for (int I = 0; I < n; ++I) value_order[I] = label_order(G, I, I);

  // One binary constraint per chevron: pos_Γ(i2)(v_a) = neg_Γ(i2)(v_b).
  struct Constraint {
    int a, b, I0, I1, i2;
  };
  std::vector<Constraint> constraints;
  std::vector<std::vector<int>> touching(vars.size());
  std::vector<std::vector<char>> domain(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) domain[v].assign(G.size(vars[v].I, vars[v].I), 1);

  for (int i2 = 0; i2 < C.morphism_count(); ++i2) {
    const int I0 = C.dom(i2), I1 = C.cod(i2);
    for (int d0 = 0; d0 < D.size(I0, I0); ++d0) {
      const int z = D.map_pos(I0, i2, d0);
      for (int d1 = 0; d1 < D.size(I1, I1); ++d1) {
        if (D.map_neg(i2, I1, d1) != z) continue;
        const int a = var_of[I0][d0], b = var_of[I1][d1];
        if (a == b) {
          auto& dom = domain[a];
          for (int w = 0; w < static_cast<int>(dom.size()); ++w)
            if (G.map_pos(I0, i2, w) != G.map_neg(i2, I1, w)) dom[w] = 0;
          continue;
        }
        const int id = static_cast<int>(constraints.size());
        constraints.push_back({a, b, I0, I1, i2});
        touching[a].push_back(id);
        touching[b].push_back(id);
      }
    }
  }

  ParanaturalEnumeration result;
  std::vector<int> assignment(vars.size(), -1);
  std::vector<std::pair<int, int>> trail;  // (variable, removed value)
  bool stop = false;

  auto compatible = [&](const Constraint& c, int va, int vb) {
    return G.map_pos(c.I0, c.i2, va) == G.map_neg(c.i2, c.I1, vb);
  };

  auto emit = [&]() {
    if (result.families.size() >= limit) {
      result.truncated = true;
      stop = true;
      return;
    }
    Paranatural phi{source, target, std::vector<std::vector<int>>(n)};
    for (int I = 0; I < n; ++I) {
      phi.components[I].resize(D.size(I, I));
      for (int d = 0; d < D.size(I, I); ++d) phi.components[I][d] = assignment[var_of[I][d]];
    }
    result.families.push_back(std::move(phi));
  };

  auto search = [&](auto&& self, std::size_t k) -> void {
    if (stop) return;
    ++result.nodes;
    if (k == vars.size()) {
      emit();
      return;
    }
    const int I = vars[k].I;
    for (int w : value_order[I]) {
      if (stop) return;
      if (!domain[k][w]) continue;
      assignment[k] = w;
      const std::size_t mark = trail.size();
      bool wiped = false;
      for (int cid : touching[k]) {
        const auto& c = constraints[cid];
        const bool k_is_a = c.a == static_cast<int>(k);
        const int other = k_is_a ? c.b : c.a;
        if (assignment[other] >= 0) continue;
        auto& dom = domain[other];
        bool any = false;
        for (int u = 0; u < static_cast<int>(dom.size()); ++u) {
          if (!dom[u]) continue;
          if (k_is_a ? compatible(c, w, u) : compatible(c, u, w)) {
            any = true;
          } else {
            dom[u] = 0;
            trail.emplace_back(other, u);
          }
        }
        if (!any) {
          wiped = true;
          break;
        }
      }
      if (!wiped) self(self, k + 1);
      while (trail.size() > mark) {
        domain[trail.back().first][trail.back().second] = 1;
        trail.pop_back();
      }
      assignment[k] = -1;
    }
  };
  search(search, 0);
  return result;
}

FinFunctor as_struct_functor(const Paranatural& phi, const StructCategory& source, const StructCategory& target) {
  check_shapes(phi);
  const auto& C = phi.source->category();
  const auto& S = *source.category;
  const auto& T = *target.category;
  FinFunctor F{source.category, target.category, std::vector<int>(S.object_count()), std::vector<int>(S.morphism_count())};
  for (int o = 0; o < S.object_count(); ++o) {
    auto [I, g] = source.objects[o];
    F.object_map[o] = target.object_of(I, phi.components[I][g]);
  }
  for (int m = 0; m < S.morphism_count(); ++m) {
    const int a = F.object_map[S.dom(m)], b = F.object_map[S.cod(m)];
    int image = -1;
    for (int k : T.hom(a, b))
      if (target.base_morphism[k] == source.base_morphism[m]) image = k;
    if (image < 0)
      throw PreconditionError("not paranatural: Struct morphism " + S.morphism(m) + " has no image (" +
                              C.morphism(source.base_morphism[m]) + " is not a structure hom " + T.object(a) + " -> " +
                              T.object(b) + ")");
    F.morphism_map[m] = image;
  }
  return F;
}

std::optional<NaturalityFailure> check_naturality(const FinCategory& base, const SetFunctorTable& P, const SetFunctorTable& Q,
                                                  const std::map<std::string, std::map<std::string, std::string>>& components,
                                                  bool contravariant) {
  auto lookup = [](const SetFunctorTable& F, const std::string& m, const std::string& x, bool identity) -> std::string {
    auto it = F.maps.find(m);
    if (it == F.maps.end()) {
      if (identity) return x;
      throw InputError("functor table has no map for '" + m + "'");
    }
    return it->second.at(x);
  };
  for (int m = 0; m < base.morphism_count(); ++m) {
    const std::string& label = base.morphism(m);
    const bool id = base.is_identity(m);
    const std::string from = base.object(contravariant ? base.cod(m) : base.dom(m));
    const std::string to = base.object(contravariant ? base.dom(m) : base.cod(m));
    for (const auto& x : P.sets.at(from)) {
      const std::string lhs = components.at(to).at(lookup(P, label, x, id));
      const std::string rhs = lookup(Q, label, components.at(from).at(x), id);
      if (lhs != rhs) return NaturalityFailure{label, x};
    }
  }
  return std::nullopt;
}

}  // namespace paracat
