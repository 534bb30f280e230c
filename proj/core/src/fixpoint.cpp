#include "paracat/fixpoint.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "paracat/error.hpp"

namespace paracat {

namespace {

FnTable table_of(const Value& func) { return {func.keys(), func.items()}; }

FnTable compose(const FnTable& g, const FnTable& f) {
  FnTable out{f.domain, {}};
  for (const auto& y : f.images) out.images.push_back(g(y));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

AdamekResult adamek_initial(const PolyFunctor& t, int bound) {
  AdamekResult r;
  std::vector<Value> stage;
  r.sizes.push_back(0);
  for (int k = 0; k < bound; ++k) {
    auto next = apply_polyfunctor(t, stage);
    std::unordered_set<Value, ValueHash> labels(next.begin(), next.end());
    for (const auto& x : stage)
      if (!labels.count(x)) throw InputError("Adamek chain: stage " + std::to_string(k) + " is not included in the next");
    if (next.size() == stage.size()) {
      r.stabilized = true;
      r.step = k;
      r.initial.carrier = stage;
      r.initial.structure = {next, next};
      return r;
    }
    r.sizes.push_back(next.size());
    stage = std::move(next);
  }
  return r;
}

bool is_algebra_hom(const PolyFunctor& t, const Algebra& a, const Algebra& b, const FnTable& h) {
  const FnTable th = apply_polyfunctor(t, h);
  for (std::size_t i = 0; i < a.structure.domain.size(); ++i) {
    const Value& y = a.structure.domain[i];
    if (h(a.structure.images[i]) != b.structure(th(y))) return false;
  }
  return true;
}

std::vector<FnTable> all_algebra_homs(const PolyFunctor& t, const Algebra& a, const Algebra& b) {
  std::vector<FnTable> out;
  for (const auto& f : all_functions(a.carrier, b.carrier)) {
    auto h = table_of(f);
    if (is_algebra_hom(t, a, b, h)) out.push_back(std::move(h));
  }
  return out;
}

FnTable fold(const PolyFunctor& t, const Algebra& target, int bound) {
  auto chain = adamek_initial(t, bound);
  if (!chain.stabilized) throw PreconditionError("fold: " + t.str() + " does not stabilize within " + std::to_string(bound) + " steps");
  FnTable f;
  for (int k = 0; k <= chain.step; ++k) f = compose(target.structure, apply_polyfunctor(t, f));
  FnTable out{chain.initial.carrier, {}};
  for (const auto& x : out.domain) out.images.push_back(f(x));
  return out;
}

std::vector<Algebra> all_algebras(const PolyFunctor& t, const std::vector<Value>& carrier, std::size_t budget) {
  const auto domain = apply_polyfunctor(t, carrier);
  std::vector<Algebra> out;
  for (const auto& u : all_functions(domain, carrier, budget)) out.push_back({carrier, table_of(u)});
  return out;
}

StructuralEnd structural_end(const ExprRef& gamma, const ExprRef& theta, const std::vector<int>& fragment, std::size_t limit) {
  StructuralEnd end;
  end.fragment = fragment;
  end.base = share(fixtures::finset_fragment(fragment));
  end.gamma = share(eval_difunctor_expr(gamma, end.base));
  end.theta = share(eval_difunctor_expr(theta, end.base));
  auto found = enumerate_paranaturals(end.gamma, end.theta, limit);
  end.families = std::move(found.families);
  end.truncated = found.truncated;
  return end;
}

UustaluReport probe_uustalu(const PolyRef& t, const PolyRef& f, const std::vector<int>& fragment, std::size_t limit) {
  auto chain = adamek_initial(*t, 64);
  if (!chain.stabilized) throw PreconditionError("uustalu: " + t->str() + " has no finite initial algebra");
  const auto& mu = chain.initial.carrier;
  std::set<std::string> mu_labels;
  for (const auto& x : mu) mu_labels.insert(x.str());

  UustaluReport report;
  report.fragment = fragment;
  report.mu = "{";
  for (std::size_t i = 0; i < mu.size(); ++i) report.mu += (i ? "," : "") + mu[i].str();
  report.mu += "}";

  auto end = structural_end(expr::alg_of(t), expr::alg_of(f), fragment, limit);
  const auto& C = *end.base;
  int M = -1;
  for (int o = 0; o < C.object_count() && M < 0; ++o) {
    std::set<std::string> labels(C.set(o).elements.begin(), C.set(o).elements.end());
    if (labels == mu_labels && labels.size() == C.set(o).elements.size()) M = o;
  }
  if (M < 0) throw PreconditionError("uustalu: mu = " + report.mu + " is not a carrier of the fragment");

  // inn_T as an element of AlgOf(T)(M,M): the key k ∈ T(M) is sent to itself, read back in μ.
  std::map<std::string, Value> mu_by_label;
  for (const auto& x : mu) mu_by_label.emplace(x.str(), x);
  ExprEvaluator ev(end.base);
  const auto keys = ev.enumerate(expr::poly_of_var(*t), M, M);
  std::vector<Value> images;
  for (const auto& k : keys) {
    Value y = apply_polyfunctor(*t, [&](const Value& a) { return mu_by_label.at(a.label()); }, k);
    images.push_back(Value::atom(y.str()));
  }
  const Value inn = Value::func(keys, std::move(images));

  std::set<Value> image;
  for (const auto& psi : end.families) image.insert(psi.apply(M, inn));
  report.families = end.families.size();
  report.truncated = end.truncated;
  report.target = static_cast<std::size_t>(end.theta->size(M, M));
  report.image = image.size();
  report.injective = !end.truncated && report.image == report.families;
  report.surjective = report.image == report.target;
  return report;
}

int CoendClasses::class_of(int point) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::find(classes[c].begin(), classes[c].end(), point) != classes[c].end()) return static_cast<int>(c);
  return -1;
}

int CoendClasses::point_index(int structure, int element) const {
  for (std::size_t p = 0; p < points.size(); ++p)
    if (points[p].structure == structure && points[p].element == element) return static_cast<int>(p);
  return -1;
}

CoendClasses structural_coend(ExprEvaluator& ev, const ExprRef& gamma, const std::vector<PointedStructure>& structures,
                              bool pointed) {
  const auto& C = *ev.base();
  if (pointed && !C.is_fragment()) throw UnsupportedError("pointed coend needs a finite-set fragment base");
  CoendClasses out;
  out.structures = structures;
  std::vector<int> first(structures.size());
  for (std::size_t s = 0; s < structures.size(); ++s) {
    first[s] = static_cast<int>(out.points.size());
    const int o = structures[s].object;
    const std::string head = "(" + C.object(o) + "," + structures[s].structure.str();
    if (pointed) {
      for (int x = 0; x < static_cast<int>(C.set(o).elements.size()); ++x) {
        out.points.push_back({static_cast<int>(s), x});
        out.point_labels.push_back(head + "," + C.set(o).elements[x] + ")");
      }
    } else {
      out.points.push_back({static_cast<int>(s), -1});
      out.point_labels.push_back(head + ")");
    }
  }
  UnionFind uf(out.points.size());
  for (std::size_t s = 0; s < structures.size(); ++s)
    for (std::size_t t = 0; t < structures.size(); ++t)
      for (int f : C.hom(structures[s].object, structures[t].object)) {
        if (!is_structure_hom(ev, gamma, f, structures[s].structure, structures[t].structure).holds) continue;
        if (!pointed) {
          uf.unite(first[s], first[t]);
          continue;
        }
        const auto& fn = C.function(f);
        for (std::size_t x = 0; x < fn.size(); ++x) uf.unite(first[s] + static_cast<int>(x), first[t] + fn[x]);
      }
  std::map<int, int> class_index;
  for (int p = 0; p < static_cast<int>(out.points.size()); ++p) {
    auto [it, fresh] = class_index.emplace(uf.find(p), static_cast<int>(out.classes.size()));
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(p);
  }
  return out;
}

CoendClasses structural_coend(const ExprRef& gamma, const CategoryRef& base, bool pointed) {
  ExprEvaluator ev(base);
  std::vector<PointedStructure> structures;
  for (int o = 0; o < base->object_count(); ++o)
    for (const auto& g : ev.enumerate(gamma, o, o)) structures.push_back({o, g});
  return structural_coend(ev, gamma, structures, pointed);
}

std::vector<std::vector<Value>> partition_refinement(const PolyFunctor& t, const Coalgebra& c) {
  const auto& X = c.carrier;
  std::unordered_map<Value, int, ValueHash> block;
  for (const auto& x : X) block[x] = 0;
  std::size_t count = X.empty() ? 0 : 1;
  for (;;) {
    auto pi = [&](const Value& x) { return Value::atom(std::to_string(block.at(x))); };
    std::map<std::pair<int, std::string>, int> ids;
    std::unordered_map<Value, int, ValueHash> next;
    for (const auto& x : X) {
      auto key = std::make_pair(block.at(x), apply_polyfunctor(t, pi, c.structure(x)).str());
      auto [it, _] = ids.emplace(key, static_cast<int>(ids.size()));
      next[x] = it->second;
    }
    block = std::move(next);
    if (ids.size() == count) break;
    count = ids.size();
  }
  std::vector<std::vector<Value>> out(count);
  std::vector<int> order(count, -1);
  int seen = 0;
  for (const auto& x : X) {
    int& slot = order[block.at(x)];
    if (slot < 0) slot = seen++;
    out[slot].push_back(x);
  }
  return out;
}

std::optional<std::string> lift_failure(ExprEvaluator& ev, const ExprRef& e, const Relation& r, const Value& u, const Value& v) {
  using K = DifunctorExpr::Kind;
  const auto& C = *ev.base();
  switch (e->kind) {
    case K::Const:
      if (u == v) return std::nullopt;
      return "Const: " + u.str() + " != " + v.str();
    case K::Var:
      if (r.contains(u.label(), v.label())) return std::nullopt;
      return "Var: " + u.str() + " not related to " + v.str();
    case K::Hom: {
      const int f = C.morphism_index(u.label()), g = C.morphism_index(v.label());
      for (const auto& [x, y] : r.pairs) {
        const std::string fx = C.set(r.X).elements[C.apply(f, C.element_index(r.X, x))];
        const std::string gy = C.set(r.Y).elements[C.apply(g, C.element_index(r.Y, y))];
        if (!r.contains(fx, gy)) return "Hom: related " + x + " ~ " + y + " map to unrelated " + fx + ", " + gy;
      }
      return std::nullopt;
    }
    case K::Prod:
      if (auto bad = lift_failure(ev, e->left, r, u.item(0), v.item(0))) return "fst: " + *bad;
      if (auto bad = lift_failure(ev, e->right, r, u.item(1), v.item(1))) return "snd: " + *bad;
      return std::nullopt;
    case K::Sum:
      if (u.kind() != v.kind()) return "Sum: " + u.str() + " and " + v.str() + " use different injections";
      if (auto bad = lift_failure(ev, u.is(Value::Kind::Inl) ? e->left : e->right, r, u.payload(), v.payload()))
        return (u.is(Value::Kind::Inl) ? "inl: " : "inr: ") + *bad;
      return std::nullopt;
    case K::ListOf:
      if (u.size() != v.size()) return "List: lengths differ (" + u.str() + ", " + v.str() + ")";
      for (std::size_t i = 0; i < u.size(); ++i)
        if (auto bad = lift_failure(ev, e->left, r, u.item(i), v.item(i))) return "item " + std::to_string(i) + ": " + *bad;
      return std::nullopt;
    case K::Arrow: {
      const auto xs = ev.enumerate(e->left, r.X, r.X);
      const auto ys = ev.enumerate(e->left, r.Y, r.Y);
      for (const auto& x : xs)
        for (const auto& y : ys) {
          if (lift_failure(ev, e->left, r, x, y)) continue;
          if (auto bad = lift_failure(ev, e->right, r, u.apply_or_throw(x), v.apply_or_throw(y)))
            return "Arrow at related inputs " + x.str() + " ~ " + y.str() + ": " + *bad;
        }
      return std::nullopt;
    }
    case K::AlgOf:
    case K::CoalgOf:
      return lift_failure(ev, e->left, r, u, v);
    default:
      throw UnsupportedError("relational lifting is not defined for " + e->str());
  }
}

std::vector<std::pair<int, int>> rel_lift(ExprEvaluator& ev, const ExprRef& e, const Relation& r) {
  const auto us = ev.enumerate(e, r.X, r.X);
  const auto vs = ev.enumerate(e, r.Y, r.Y);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < us.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (!lift_failure(ev, e, r, us[i], vs[j])) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

BisimulationVerdict check_bisimulation(ExprEvaluator& ev, const ExprRef& gamma, const Relation& r, const Value& g,
                                       const Value& g_prime) {
  auto bad = lift_failure(ev, gamma, r, g, g_prime);
  return {!bad, bad.value_or("")};
}

CoinductionVerdict coinduction_equal(ExprEvaluator& ev, const ExprRef& gamma, const Relation& r, const Value& g,
                                     const Value& g_prime, const std::string& x, const std::string& y,
                                     const CoendClasses& classes) {
  auto verdict = check_bisimulation(ev, gamma, r, g, g_prime);
  if (!verdict.holds) throw PreconditionError("not a bisimulation: " + verdict.counterexample);
  if (!r.contains(x, y)) throw PreconditionError("points " + x + " and " + y + " are not related");
  const auto& C = *ev.base();
  auto locate = [&](int object, const Value& structure, const std::string& element) {
    for (std::size_t s = 0; s < classes.structures.size(); ++s)
      if (classes.structures[s].object == object && classes.structures[s].structure == structure)
        return classes.point_index(static_cast<int>(s), C.element_index(object, element));
    return -1;
  };
  const int p = locate(r.X, g, x), q = locate(r.Y, g_prime, y);
  CoinductionVerdict out;
  out.equal = true;
  out.same_class = p >= 0 && q >= 0 && classes.class_of(p) == classes.class_of(q);
  return out;
}

}  // namespace paracat
