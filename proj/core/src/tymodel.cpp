#include "paracat/tymodel.hpp"

#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "paracat/error.hpp"

namespace paracat {

namespace {

DifunctorRef terminal_over(const CategoryRef& c) { return share(constant_difunctor(c, {Value::atom("*")})); }

Value splice_value(const FinCategory& C, int into, int from) {
  return Value::pair(Value::atom(C.morphism(into)), Value::atom(C.morphism(from)));
}

// DiYo(J,I) ⇒ DiYo(J',I') sending (into, from) to (into ∘ pre, post ∘ from);
// -1 stands for an identity.
Paranatural splice_map(const DifunctorRef& source, const DifunctorRef& target, int pre, int post) {
  const auto& C = source->category();
  Paranatural h{source, target, std::vector<std::vector<int>>(C.object_count())};
  for (int K = 0; K < C.object_count(); ++K)
    for (const auto& s : source->cell(K, K).elements) {
      int into = C.morphism_index(s.item(0).label());
      int from = C.morphism_index(s.item(1).label());
      if (pre >= 0) into = C.compose(into, pre);
      if (post >= 0) from = C.compose(post, from);
      h.components[K].push_back(target->index_of(K, K, splice_value(C, into, from)));
    }
  return h;
}

std::size_t slot(const FinCategory& C, int I, int J) { return static_cast<std::size_t>(I) * C.object_count() + J; }

}  // namespace

StructRef share_structs(const TabulatedDifunctor& gamma) { return std::make_shared<const StructCategory>(struct_category(gamma)); }

TyOver make_ty(DifunctorRef gamma, StructRef structs, TabulatedDifunctor A, int bound) {
  if (!same_category(A.base(), structs->category)) throw InputError("type: difunctor is not over the Struct category of its context");
  auto report = validate_difunctor(A);
  if (!report.ok()) throw InputError("type: " + report.summary());
  const auto& S = *structs->category;
  for (int X = 0; X < S.object_count(); ++X)
    for (int Y = 0; Y < S.object_count(); ++Y)
      if (A.size(X, Y) > bound)
        throw PreconditionError("type: cell (" + S.object(X) + "," + S.object(Y) + ") has " + std::to_string(A.size(X, Y)) +
                                " elements, above the size bound " + std::to_string(bound));
  return TyOver{std::move(gamma), std::move(structs), share(std::move(A)), bound};
}

FinFunctor struct_projection(const StructCategory& s, const CategoryRef& base) {
  FinFunctor F{s.category, base, {}, s.base_morphism};
  for (const auto& [I, g] : s.objects) F.object_map.push_back(I);
  return F;
}

TyOver weaken(DifunctorRef gamma, StructRef structs, const TabulatedDifunctor& B, int bound) {
  auto A = reindex(B, struct_projection(*structs, gamma->base()));
  return make_ty(std::move(gamma), std::move(structs), std::move(A), bound);
}

TyOver subst_ty(const TyOver& A, const Paranatural& sigma, StructRef delta_structs) {
  if (!(sigma.target == A.context || *sigma.target == *A.context))
    throw InputError("substitution: the paranatural's target is not the type's context");
  auto F = as_struct_functor(sigma, *delta_structs, *A.structs);
  return TyOver{sigma.source, std::move(delta_structs), share(reindex(*A.type, F)), A.bound};
}

const Value& Tm::apply(int I, int c) const {
  return type.type->element(type.structs->object_of(I, c), type.structs->object_of(I, c), components.at(I).at(c));
}

Value Tm::to_value() const {
  const auto& G = *type.context;
  std::vector<Value> parts;
  for (int I = 0; I < G.category().object_count(); ++I) {
    std::vector<Value> images;
    for (int c = 0; c < G.size(I, I); ++c) images.push_back(apply(I, c));
    parts.push_back(Value::func(G.cell(I, I).elements, std::move(images)));
  }
  return Value::tuple(std::move(parts));
}

Tm subst_tm(const Tm& t, const Paranatural& sigma, StructRef delta_structs) {
  Tm out{subst_ty(t.type, sigma, std::move(delta_structs)), {}};
  for (std::size_t I = 0; I < sigma.components.size(); ++I) {
    out.components.emplace_back();
    for (int c : sigma.components[I]) out.components.back().push_back(t.components.at(I).at(c));
  }
  return out;
}

namespace {

Paranatural as_paranatural(const Tm& t) {
  const auto& S = *t.type.structs;
  Paranatural phi{terminal_over(S.category), t.type.type, std::vector<std::vector<int>>(S.objects.size())};
  for (std::size_t X = 0; X < S.objects.size(); ++X) {
    auto [I, c] = S.objects[X];
    phi.components[X] = {t.components.at(I).at(c)};
  }
  return phi;
}

Tm from_paranatural(const TyOver& A, const Paranatural& phi) {
  const auto& G = *A.context;
  Tm t{A, std::vector<std::vector<int>>(G.category().object_count())};
  for (int I = 0; I < G.category().object_count(); ++I)
    for (int c = 0; c < G.size(I, I); ++c) t.components[I].push_back(phi.components[A.structs->object_of(I, c)][0]);
  return t;
}

}  // namespace

ChevronReport check_tm(const Tm& t) {
  const auto& S = *t.type.structs;
  auto report = check_paranatural(as_paranatural(t));
  for (auto& w : report.violations) {
    const int s = w.i2;
    w.i2 = S.base_morphism[s];
    w.d0 = S.objects[S.category->dom(s)].second;
    w.d1 = S.objects[S.category->cod(s)].second;
    w.d0_value = t.type.context->element(S.objects[S.category->dom(s)].first, S.objects[S.category->dom(s)].first, w.d0);
    w.d1_value = t.type.context->element(S.objects[S.category->cod(s)].first, S.objects[S.category->cod(s)].first, w.d1);
  }
  return report;
}

TmEnumeration enumerate_tms(const TyOver& A, std::size_t limit) {
  auto families = enumerate_paranaturals(terminal_over(A.structs->category), A.type, limit);
  TmEnumeration out;
  out.truncated = families.truncated;
  for (const auto& phi : families.families) out.terms.push_back(from_paranatural(A, phi));
  return out;
}

// ---------------------------------------------------------------- comprehension

namespace {

struct ExtElement {
  int x = -1;              // index in Γ(I,J)
  std::vector<Value> tau;  // per object of Struct(DiYo(J,I))
};

struct ExtSlot {
  DifunctorRef yo;
  StructRef structs;
  std::vector<ExtElement> elements;
  std::unordered_map<Value, int, ValueHash> index;
};

}  // namespace

Comprehension comprehension(const TyOver& A, std::size_t limit) {
  const auto& Gamma = A.context;
  const auto& G = *Gamma;
  const auto base = Gamma->base();
  const auto& C = *base;
  const int n = C.object_count();
  std::vector<ExtSlot> slots(static_cast<std::size_t>(n) * n);
  auto value_of = [&](int I, int J, const ExtElement& e) { return Value::pair(G.element(I, J, e.x), Value::tuple(e.tau)); };
  for (int I = 0; I < n; ++I)
    for (int J = 0; J < n; ++J) {
      auto& sl = slots[slot(C, I, J)];
      sl.yo = diyo_difunctor(base, J, I);
      sl.structs = share_structs(*sl.yo);
      for (int x = 0; x < G.size(I, J); ++x) {
        auto fwd = diyo_forward(Gamma, sl.yo, I, J, G.element(I, J, x));
        auto taus = enumerate_tms(subst_ty(A, fwd, sl.structs), limit);
        if (taus.truncated)
          throw ResourceError("comprehension: terms over DiYo(" + C.object(J) + "," + C.object(I) + ") exceed the limit of " +
                              std::to_string(limit));
        for (const auto& t : taus.terms) {
          ExtElement e{x, {}};
          for (const auto& [K, s] : sl.structs->objects) e.tau.push_back(t.apply(K, s));
          sl.index.emplace(value_of(I, J, e), static_cast<int>(sl.elements.size()));
          sl.elements.push_back(std::move(e));
        }
      }
    }

  TabulatedDifunctor ext(base);
  for (int I = 0; I < n; ++I)
    for (int J = 0; J < n; ++J) {
      std::vector<Value> values;
      for (const auto& e : slots[slot(C, I, J)].elements) values.push_back(value_of(I, J, e));
      ext.set_cell(I, J, std::move(values));
    }

  // Moves slot (fi,fj) to slot (ti,tj): x along Γ's action, τ along h: DiYo(to) ⇒ DiYo(from).
  auto transport = [&](int fi, int fj, int ti, int tj, const Paranatural& h, const std::function<int(int)>& act,
                       const std::string& what) {
    const auto& from = slots[slot(C, fi, fj)];
    const auto& to = slots[slot(C, ti, tj)];
    auto F = as_struct_functor(h, *to.structs, *from.structs);
    std::vector<int> table;
    for (const auto& e : from.elements) {
      ExtElement moved{act(e.x), {}};
      for (int X = 0; X < to.structs->category->object_count(); ++X) moved.tau.push_back(e.tau[F.object_map[X]]);
      auto it = to.index.find(value_of(ti, tj, moved));
      if (it == to.index.end()) throw PreconditionError("comprehension: " + what + " leaves its cell");
      table.push_back(it->second);
    }
    return table;
  };
  for (int m = 0; m < C.morphism_count(); ++m) {
    const int I0 = C.dom(m), I1 = C.cod(m);
    for (int K = 0; K < n; ++K) {
      const auto& src = slots[slot(C, I1, K)];
      const auto& tgt = slots[slot(C, I0, K)];
      ext.set_neg(m, K, transport(I1, K, I0, K, splice_map(tgt.yo, src.yo, -1, m), [&](int x) { return G.map_neg(m, K, x); },
                                  "map⁻ " + C.morphism(m)));
      const auto& psrc = slots[slot(C, K, I0)];
      const auto& ptgt = slots[slot(C, K, I1)];
      ext.set_pos(K, m, transport(K, I0, K, I1, splice_map(ptgt.yo, psrc.yo, m, -1), [&](int x) { return G.map_pos(K, m, x); },
                                  "map⁺ " + C.morphism(m)));
    }
  }

  Comprehension out;
  out.type = A;
  out.extended = share(std::move(ext));
  out.structs = share_structs(*out.extended);
  out.p = Paranatural{out.extended, Gamma, std::vector<std::vector<int>>(n)};
  std::vector<std::vector<Value>> q_values(n);
  for (int I = 0; I < n; ++I) {
    const auto& sl = slots[slot(C, I, I)];
    const int id = C.identity(I);
    const int iota = sl.structs->object_of(I, sl.yo->index_of(I, I, splice_value(C, id, id)));
    for (const auto& e : sl.elements) {
      out.p.components[I].push_back(e.x);
      q_values[I].push_back(e.tau[iota]);
    }
  }
  auto Ap = subst_ty(A, out.p, out.structs);
  out.q = Tm{Ap, std::vector<std::vector<int>>(n)};
  for (int I = 0; I < n; ++I)
    for (std::size_t x = 0; x < q_values[I].size(); ++x) {
      const int X = out.structs->object_of(I, static_cast<int>(x));
      out.q.components[I].push_back(Ap.type->index_of(X, X, q_values[I][x]));
    }
  return out;
}

bool ComprehensionProbe::bijection() const {
  return substitutions && pairs && *substitutions == *pairs && p_paranatural && q_is_term && forward_injective && forward_surjective && inverse_well_defined &&
         roundtrip_substitutions && roundtrip_pairs;
}

ComprehensionProbe probe_comprehension(const Comprehension& ext, const DifunctorRef& delta, std::size_t limit) {
  const auto& A = ext.type;
  const auto base = delta->base();
  const auto& C = *base;
  const int n = C.object_count();
  ComprehensionProbe probe;
  auto delta_structs = share_structs(*delta);
  probe.p_paranatural = check_paranatural(ext.p).ok;
  probe.q_is_term = check_tm(ext.q).ok;

  auto thetas = enumerate_paranaturals(delta, ext.extended, limit);
  auto sigmas = enumerate_paranaturals(delta, A.context, limit);
  if (thetas.truncated || sigmas.truncated) return probe;

  using Key = std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>;
  std::map<Key, std::size_t> pair_index;
  bool truncated = false;
  for (const auto& s : sigmas.families) {
    auto terms = enumerate_tms(subst_ty(A, s, delta_structs), limit);
    truncated = truncated || terms.truncated;
    for (const auto& t : terms.terms) pair_index.emplace(Key{s.components, t.components}, pair_index.size());
  }
  if (truncated) return probe;
  probe.substitutions = thetas.families.size();
  probe.pairs = pair_index.size();

  // θ ↦ (p∘θ, q[θ])
  std::set<std::size_t> hit;
  bool all_valid = true;
  std::vector<Key> forward;
  for (const auto& theta : thetas.families) {
    auto sigma = compose(ext.p, theta);
    auto t = subst_tm(ext.q, theta, delta_structs);
    Key key{sigma.components, t.components};
    forward.push_back(key);
    auto it = pair_index.find(key);
    if (it == pair_index.end()) all_valid = false;
    else hit.insert(it->second);
  }
  probe.forward_injective = all_valid && hit.size() == thetas.families.size();
  probe.forward_surjective = all_valid && hit.size() == pair_index.size();

  // (σ, t) ↦ θ_I(d) = (σ ∘ fwd(d), t[fwd(d)])
  std::vector<DifunctorRef> yo(n);
  std::vector<StructRef> yo_structs(n);
  for (int I = 0; I < n; ++I) {
    yo[I] = diyo_difunctor(base, I, I);
    yo_structs[I] = share_structs(*yo[I]);
  }
  probe.inverse_well_defined = true;
  probe.roundtrip_pairs = true;
  std::set<std::vector<std::vector<int>>> theta_set;
  for (const auto& th : thetas.families) theta_set.insert(th.components);
  std::set<std::vector<std::vector<int>>> rebuilt;
  for (const auto& [key, idx] : pair_index) {
    (void)idx;
    Paranatural sigma{delta, A.context, key.first};
    Paranatural theta{delta, ext.extended, std::vector<std::vector<int>>(n)};
    bool ok = true;
    for (int I = 0; I < n && ok; ++I)
      for (int d = 0; d < delta->size(I, I) && ok; ++d) {
        auto fwd = diyo_forward(delta, yo[I], I, I, delta->element(I, I, d));
        std::vector<Value> tau;
        for (const auto& [K, s] : yo_structs[I]->objects) {
          const int dk = fwd.components[K][s];
          const int AY = A.structs->object_of(K, sigma.components[K][dk]);
          tau.push_back(A.type->element(AY, AY, key.second[K][dk]));
        }
        const Value& x = A.context->element(I, I, sigma.components[I][d]);
        auto found = ext.extended->find(I, I, Value::pair(x, Value::tuple(tau)));
        if (!found) ok = false;
        else theta.components[I].push_back(*found);
      }
    if (!ok || !check_paranatural(theta).ok) {
      probe.inverse_well_defined = false;
      probe.roundtrip_pairs = false;
      continue;
    }
    rebuilt.insert(theta.components);
    auto back_sigma = compose(ext.p, theta);
    auto back_t = subst_tm(ext.q, theta, delta_structs);
    if (back_sigma.components != key.first || back_t.components != key.second) probe.roundtrip_pairs = false;
  }
  probe.roundtrip_substitutions = probe.inverse_well_defined && rebuilt == theta_set;

  // Γ.A(I,I) → Σ_c A((I,c),(I,c)), (γ,τ) ↦ (γ_I(ι), τ(ι))
  for (int I = 0; I < n; ++I) {
    std::set<std::pair<int, int>> image;
    std::size_t sigma_size = 0;
    for (int c = 0; c < A.context->size(I, I); ++c) {
      const int X = A.structs->object_of(I, c);
      sigma_size += static_cast<std::size_t>(A.type->size(X, X));
    }
    for (int x = 0; x < ext.extended->size(I, I); ++x) {
      const int c = ext.p.components[I][x];
      image.emplace(c, ext.q.components[I][x]);
    }
    probe.diagonal_iso.push_back(image.size() == sigma_size && image.size() == static_cast<std::size_t>(ext.extended->size(I, I)));
  }
  return probe;
}

// ---------------------------------------------------------------- universe

Value encode_small(const TabulatedDifunctor& A) {
  const auto& D = A.category();
  const int n = D.object_count();
  auto num = [](int k) { return Value::atom(std::to_string(k)); };
  auto table = [&](const std::vector<int>& t) {
    std::vector<Value> out;
    for (int x : t) out.push_back(num(x));
    return Value::list(std::move(out));
  };
  std::vector<Value> sizes, negs, poss;
  for (int I = 0; I < n; ++I)
    for (int J = 0; J < n; ++J) sizes.push_back(num(A.size(I, J)));
  for (int m = 0; m < D.morphism_count(); ++m)
    for (int J = 0; J < n; ++J) negs.push_back(table(A.neg(m, J)));
  for (int I = 0; I < n; ++I)
    for (int m = 0; m < D.morphism_count(); ++m) poss.push_back(table(A.pos(I, m)));
  return Value::tuple({Value::list(std::move(sizes)), Value::list(std::move(negs)), Value::list(std::move(poss))});
}

namespace {

std::vector<Value> canonical_cell(int k) {
  std::vector<Value> out;
  for (int i = 0; i < k; ++i) out.push_back(Value::atom(std::to_string(i)));
  return out;
}

int parse_index(const Value& v) {
  if (!v.is(Value::Kind::Atom)) throw InputError("code: expected a number, got " + v.str());
  try {
    return std::stoi(v.label());
  } catch (const std::exception&) {
    throw InputError("code: expected a number, got " + v.str());
  }
}

}  // namespace

TabulatedDifunctor decode_small(const Value& code, const CategoryRef& base) {
  const auto& D = *base;
  const int n = D.object_count(), m = D.morphism_count();
  if (!code.is(Value::Kind::Tuple) || code.size() != 3) throw InputError("code: expected (sizes, neg, pos)");
  const auto& sizes = code.item(0).items();
  const auto& negs = code.item(1).items();
  const auto& poss = code.item(2).items();
  if (sizes.size() != static_cast<std::size_t>(n) * n || negs.size() != static_cast<std::size_t>(m) * n ||
      poss.size() != static_cast<std::size_t>(n) * m)
    throw InputError("code: table counts do not match the category");
  TabulatedDifunctor A(base);
  for (int I = 0; I < n; ++I)
    for (int J = 0; J < n; ++J) A.set_cell(I, J, canonical_cell(parse_index(sizes[static_cast<std::size_t>(I) * n + J])));
  auto table = [](const Value& t, int from, int to) {
    if (!t.is(Value::Kind::List) || t.size() != static_cast<std::size_t>(from)) throw InputError("code: table has the wrong length");
    std::vector<int> out;
    for (const auto& x : t.items()) {
      const int k = parse_index(x);
      if (k < 0 || k >= to) throw InputError("code: table entry outside its cell");
      out.push_back(k);
    }
    return out;
  };
  for (int f = 0; f < m; ++f)
    for (int J = 0; J < n; ++J)
      A.set_neg(f, J, table(negs[static_cast<std::size_t>(f) * n + J], A.size(D.cod(f), J), A.size(D.dom(f), J)));
  for (int I = 0; I < n; ++I)
    for (int f = 0; f < m; ++f)
      A.set_pos(I, f, table(poss[static_cast<std::size_t>(I) * m + f], A.size(I, D.dom(f)), A.size(I, D.cod(f))));
  return A;
}

std::vector<TabulatedDifunctor> small_difunctors(const CategoryRef& Dref, int bound, std::size_t budget) {
  const auto& D = *Dref;
  const int n = D.object_count(), m = D.morphism_count();
  std::vector<TabulatedDifunctor> out;
  std::size_t examined = 0;
  std::vector<int> sizes(static_cast<std::size_t>(n) * n, 0);
  auto size = [&](int I, int J) { return sizes[static_cast<std::size_t>(I) * n + J]; };

  // Table slots: neg(f,J) then pos(I,f) for non-identity f.
  struct TableSlot {
    bool neg;
    int f, other, from, to;
  };

  auto tables_for = [&]() {
    std::vector<TableSlot> slots;
    for (int f = 0; f < m; ++f)
      if (!D.is_identity(f))
        for (int J = 0; J < n; ++J) slots.push_back({true, f, J, size(D.cod(f), J), size(D.dom(f), J)});
    for (int I = 0; I < n; ++I)
      for (int f = 0; f < m; ++f)
        if (!D.is_identity(f)) slots.push_back({false, f, I, size(I, D.dom(f)), size(I, D.cod(f))});
    return slots;
  };

  auto emit_all = [&]() {
    auto slots = tables_for();
    for (const auto& s : slots)
      if (s.from > 0 && s.to == 0) return;
    std::vector<std::vector<int>> choice(slots.size());
    for (std::size_t k = 0; k < slots.size(); ++k) choice[k].assign(slots[k].from, 0);
    for (;;) {
      if (++examined > budget)
        throw ResourceError("small difunctor enumeration exceeds the budget of " + std::to_string(budget) + " candidates");
      TabulatedDifunctor A(Dref);
      for (int I = 0; I < n; ++I)
        for (int J = 0; J < n; ++J) A.set_cell(I, J, canonical_cell(size(I, J)));
      for (int f = 0; f < m; ++f)
        if (D.is_identity(f)) {
          const int X = D.dom(f);
          for (int J = 0; J < n; ++J) {
            std::vector<int> id(size(X, J));
            for (int i = 0; i < size(X, J); ++i) id[i] = i;
            A.set_neg(f, J, id);
          }
          for (int I = 0; I < n; ++I) {
            std::vector<int> id(size(I, X));
            for (int i = 0; i < size(I, X); ++i) id[i] = i;
            A.set_pos(I, f, id);
          }
        }
      for (std::size_t k = 0; k < slots.size(); ++k) {
        if (slots[k].neg) A.set_neg(slots[k].f, slots[k].other, choice[k]);
        else A.set_pos(slots[k].other, slots[k].f, choice[k]);
      }
      if (validate_difunctor(A).ok()) out.push_back(std::move(A));
      // odometer over every table entry
      std::size_t k = slots.size();
      bool advanced = false;
      while (k > 0 && !advanced) {
        --k;
        auto& c = choice[k];
        std::size_t i = c.size();
        while (i > 0) {
          --i;
          if (++c[i] < slots[k].to) {
            advanced = true;
            break;
          }
          c[i] = 0;
        }
      }
      if (!advanced) return;
    }
  };

  // odometer over cell sizes, pruned by the existence of the action maps
  for (;;) {
    bool feasible = true;
    for (int f = 0; f < m && feasible; ++f)
      for (int Z = 0; Z < n && feasible; ++Z) {
        if (size(D.cod(f), Z) > 0 && size(D.dom(f), Z) == 0) feasible = false;
        if (size(Z, D.dom(f)) > 0 && size(Z, D.cod(f)) == 0) feasible = false;
      }
    if (feasible) emit_all();
    std::size_t i = sizes.size();
    bool advanced = false;
    while (i > 0) {
      --i;
      if (++sizes[i] <= bound) {
        advanced = true;
        break;
      }
      sizes[i] = 0;
    }
    if (!advanced) break;
  }
  return out;
}

bool Universe::contains(int I, int J, const Value& code) const {
  try {
    return validate_difunctor(decode_small(code, structs(I, J)->category)).ok() && [&] {
      auto A = decode_small(code, structs(I, J)->category);
      const auto& S = *structs(I, J)->category;
      for (int X = 0; X < S.object_count(); ++X)
        for (int Y = 0; Y < S.object_count(); ++Y)
          if (A.size(X, Y) > bound) return false;
      return true;
    }();
  } catch (const InputError&) {
    return false;
  }
}

Universe build_universe(const CategoryRef& base, int bound, std::size_t budget) {
  const auto& C = *base;
  const int n = C.object_count();
  Universe u;
  u.base = base;
  u.bound = bound;
  TabulatedDifunctor U(base);
  std::vector<std::unordered_map<Value, int, ValueHash>> index(static_cast<std::size_t>(n) * n);
  for (int I = 0; I < n; ++I)
    for (int J = 0; J < n; ++J) {
      auto yo = diyo_difunctor(base, J, I);
      u.splices.push_back(yo);
      u.splice_structs.push_back(share_structs(*yo));
      std::vector<Value> codes;
      for (const auto& A : small_difunctors(u.splice_structs.back()->category, bound, budget)) codes.push_back(encode_small(A));
      U.set_cell(I, J, std::move(codes));
    }
  auto move = [&](int from_slot, int to_slot, const Paranatural& h) {
    auto F = as_struct_functor(h, *u.splice_structs[to_slot], *u.splice_structs[from_slot]);
    std::vector<int> table;
    const int fi = from_slot / n, fj = from_slot % n, ti = to_slot / n, tj = to_slot % n;
    for (const auto& code : U.cell(fi, fj).elements)
      table.push_back(U.index_of(ti, tj, encode_small(reindex(decode_small(code, u.splice_structs[from_slot]->category), F))));
    return table;
  };
  for (int m = 0; m < C.morphism_count(); ++m) {
    const int I0 = C.dom(m), I1 = C.cod(m);
    for (int K = 0; K < n; ++K) {
      const int src = I1 * n + K, tgt = I0 * n + K;
      U.set_neg(m, K, move(src, tgt, splice_map(u.splices[tgt], u.splices[src], -1, m)));
      const int psrc = K * n + I0, ptgt = K * n + I1;
      U.set_pos(K, m, move(psrc, ptgt, splice_map(u.splices[ptgt], u.splices[psrc], m, -1)));
    }
  }
  u.U = share(std::move(U));
  return u;
}

UniverseProbe probe_universe(const DifunctorRef& gamma, int bound, std::size_t limit, std::size_t budget) {
  const auto base = gamma->base();
  const auto& C = *base;
  const int n = C.object_count();
  UniverseProbe probe;
  auto universe = build_universe(base, bound, budget);
  for (int I = 0; I < n; ++I)
    for (int J = 0; J < n; ++J) probe.cells.push_back(static_cast<std::size_t>(universe.U->size(I, J)));
  auto structs = share_structs(*gamma);
  const auto& S = *structs->category;

  // F_c: Struct(DiYo(I,I)) → Struct(Γ) along diyo_forward(c)
  std::vector<std::vector<FinFunctor>> along(n);
  std::vector<int> iota(n);
  for (int I = 0; I < n; ++I) {
    const int slot_ii = I * n + I;
    const int id = C.identity(I);
    iota[I] = universe.splice_structs[slot_ii]->object_of(I, universe.splices[slot_ii]->index_of(I, I, splice_value(C, id, id)));
    for (const auto& c : gamma->cell(I, I).elements) {
      auto fwd = diyo_forward(gamma, universe.splices[slot_ii], I, I, c);
      along[I].push_back(as_struct_functor(fwd, *universe.splice_structs[slot_ii], *structs));
    }
  }
  auto encode = [&](const TabulatedDifunctor& A) {
    Paranatural tau{gamma, universe.U, std::vector<std::vector<int>>(n)};
    for (int I = 0; I < n; ++I)
      for (const auto& F : along[I]) tau.components[I].push_back(universe.U->index_of(I, I, encode_small(reindex(A, F))));
    return tau;
  };
  auto decode = [&](const Paranatural& tau) -> std::optional<TabulatedDifunctor> {
    TabulatedDifunctor A(structs->category);
    const int N = S.object_count();
    for (int X = 0; X < N; ++X)
      for (int Y = 0; Y < N; ++Y) {
        if (X != Y) {
          A.set_cell(X, Y, {});
          continue;
        }
        auto [I, c] = structs->objects[X];
        auto code = decode_small(universe.U->element(I, I, tau.components[I][c]), universe.structs(I, I)->category);
        A.set_cell(X, X, code.cell(iota[I], iota[I]).elements);
      }
    for (int f = 0; f < S.morphism_count(); ++f)
      for (int Z = 0; Z < N; ++Z) {
        const int from = A.size(S.cod(f), Z), to = A.size(S.dom(f), Z);
        if (from > 0 && to == 0) return std::nullopt;
        std::vector<int> neg(from);
        for (int i = 0; i < from; ++i) neg[i] = to == from ? i : 0;
        A.set_neg(f, Z, neg);
        const int pfrom = A.size(Z, S.dom(f)), pto = A.size(Z, S.cod(f));
        if (pfrom > 0 && pto == 0) return std::nullopt;
        std::vector<int> pos(pfrom);
        for (int i = 0; i < pfrom; ++i) pos[i] = pto == pfrom ? i : 0;
        A.set_pos(Z, f, pos);
      }
    if (!validate_difunctor(A).ok()) return std::nullopt;
    return A;
  };

  auto types = small_difunctors(structs->category, bound, budget);
  probe.types = types.size();
  for (const auto& A : types) {
    bool diagonal = true;
    for (int X = 0; X < S.object_count(); ++X)
      for (int Y = 0; Y < S.object_count(); ++Y)
        if (X != Y && A.size(X, Y) > 0) diagonal = false;
    auto& rt = diagonal ? probe.ty_diagonal : probe.ty_off_diagonal;
    ++rt.total;
    auto tau = encode(A);
    if (!check_paranatural(tau).ok) probe.codes_paranatural = false;
    auto back = decode(tau);
    if (back && *back == A) ++rt.identity;
  }

  auto terms = enumerate_paranaturals(gamma, universe.U, limit);
  probe.truncated = terms.truncated;
  probe.terms = terms.families.size();
  for (const auto& tau : terms.families) {
    ++probe.tm.total;
    auto A = decode(tau);
    if (A && encode(*A).components == tau.components) ++probe.tm.identity;
  }
  return probe;
}

}  // namespace paracat
