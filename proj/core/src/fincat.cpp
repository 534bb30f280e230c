#include "paracat/fincat.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "paracat/error.hpp"

namespace paracat {

namespace {

std::uint64_t pair_key(int g, int f) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(g)) << 32) | static_cast<std::uint32_t>(f);
}

std::string function_label(const std::vector<FinSetObj>& sets, int dom, int cod, const std::vector<int>& images) {
  std::string out = sets[dom].label + "->" + sets[cod].label + "[";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ',';
    out += sets[cod].elements[images[i]];
  }
  return out + "]";
}

}  // namespace

void FinCategory::index_structure() {
  const int n = object_count();
  object_index_.clear();
  for (int o = 0; o < n; ++o) {
    if (!object_index_.emplace(objects_[o], o).second) throw InputError("duplicate object label '" + objects_[o] + "'");
  }
  morphism_index_.clear();
  dom_.assign(morphisms_.size(), -1);
  cod_.assign(morphisms_.size(), -1);
  hom_.assign(static_cast<std::size_t>(n) * n, {});
  for (int m = 0; m < morphism_count(); ++m) {
    const auto& spec = morphisms_[m];
    if (!morphism_index_.emplace(spec.id, m).second) throw InputError("duplicate morphism label '" + spec.id + "'");
    auto d = object_index_.find(spec.dom);
    auto c = object_index_.find(spec.cod);
    if (d == object_index_.end()) throw InputError("morphism '" + spec.id + "': dangling domain '" + spec.dom + "'");
    if (c == object_index_.end()) throw InputError("morphism '" + spec.id + "': dangling codomain '" + spec.cod + "'");
    dom_[m] = d->second;
    cod_[m] = c->second;
    hom_[static_cast<std::size_t>(d->second) * n + c->second].push_back(m);
  }
}

FinCategory FinCategory::from_tables(const std::vector<std::string>& objects, const std::vector<MorphismSpec>& morphisms,
                                     const std::map<std::string, std::string>& identities,
                                     const std::vector<std::array<std::string, 3>>& compose) {
  FinCategory c;
  c.objects_ = objects;
  c.morphisms_ = morphisms;
  c.index_structure();
  c.identity_.assign(objects.size(), -1);
  for (const auto& [obj, mor] : identities) {
    auto o = c.find_object(obj);
    if (!o) throw InputError("identities: dangling object '" + obj + "'");
    auto m = c.find_morphism(mor);
    if (!m) throw InputError("identities: dangling morphism '" + mor + "' for object '" + obj + "'");
    c.identity_[*o] = *m;
  }
  for (int o = 0; o < c.object_count(); ++o)
    if (c.identity_[o] < 0) throw InputError("identities: entry for object '" + c.objects_[o] + "' missing");
  for (const auto& row : compose) {
    ComposeEntry e;
    for (int k = 0; k < 3; ++k) {
      auto m = c.find_morphism(row[k]);
      if (!m) throw InputError("compose: dangling morphism '" + row[k] + "'");
      (k == 0 ? e.g : k == 1 ? e.f : e.gf) = *m;
    }
    auto [it, inserted] = c.compose_.emplace(pair_key(e.g, e.f), e.gf);
    if (!inserted) {
      if (it->second != e.gf)
        throw InputError("compose: conflicting entries for (" + row[0] + ", " + row[1] + ")");
      continue;
    }
    c.entries_.push_back(e);
  }
  return c;
}

FinCategory FinCategory::from_functions(std::vector<FinSetObj> sets, const std::vector<FunctionSpec>& functions) {
  FinCategory c;
  for (const auto& s : sets) {
    std::set<std::string> seen(s.elements.begin(), s.elements.end());
    if (seen.size() != s.elements.size()) throw InputError("set '" + s.label + "': element labels not distinct");
    c.objects_.push_back(s.label);
  }
  std::unordered_map<std::string, int> by_label;
  for (const auto& f : functions) {
    if (f.dom < 0 || f.cod < 0 || f.dom >= static_cast<int>(sets.size()) || f.cod >= static_cast<int>(sets.size()))
      throw InputError("function with dangling domain or codomain");
    if (f.images.size() != sets[f.dom].elements.size())
      throw InputError("function on '" + sets[f.dom].label + "': image table has wrong length");
    for (int img : f.images)
      if (img < 0 || img >= static_cast<int>(sets[f.cod].elements.size()))
        throw InputError("function into '" + sets[f.cod].label + "': image out of range");
    std::string label = function_label(sets, f.dom, f.cod, f.images);
    if (by_label.count(label)) continue;
    by_label.emplace(label, static_cast<int>(c.morphisms_.size()));
    c.morphisms_.push_back({label, sets[f.dom].label, sets[f.cod].label});
    c.functions_.push_back(f.images);
  }
  c.sets_ = std::move(sets);
  c.index_structure();
  c.identity_.assign(c.objects_.size(), -1);
  for (int o = 0; o < c.object_count(); ++o) {
    std::vector<int> id(c.sets_[o].elements.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    auto it = by_label.find(function_label(c.sets_, o, o, id));
    if (it == by_label.end()) throw InputError("fragment: identity on '" + c.objects_[o] + "' missing");
    c.identity_[o] = it->second;
  }
  for (int f = 0; f < c.morphism_count(); ++f) {
    for (int g = 0; g < c.morphism_count(); ++g) {
      if (c.dom_[g] != c.cod_[f]) continue;
      std::vector<int> images(c.functions_[f].size());
      for (std::size_t i = 0; i < images.size(); ++i) images[i] = c.functions_[g][c.functions_[f][i]];
      auto it = by_label.find(function_label(c.sets_, c.dom_[f], c.cod_[g], images));
      if (it == by_label.end())
        throw InputError("fragment: selected functions not closed under composition at (" + c.morphism(g) + ", " +
                         c.morphism(f) + ")");
      c.compose_.emplace(pair_key(g, f), it->second);
      c.entries_.push_back({g, f, it->second});
    }
  }
  return c;
}

int FinCategory::compose(int g, int f) const {
  auto it = compose_.find(pair_key(g, f));
  return it == compose_.end() ? -1 : it->second;
}

std::optional<int> FinCategory::find_object(std::string_view label) const {
  auto it = object_index_.find(std::string(label));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FinCategory::find_morphism(std::string_view label) const {
  auto it = morphism_index_.find(std::string(label));
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

int FinCategory::object_index(std::string_view label) const {
  auto o = find_object(label);
  if (!o) throw InputError("unknown object '" + std::string(label) + "'");
  return *o;
}

int FinCategory::morphism_index(std::string_view label) const {
  auto m = find_morphism(label);
  if (!m) throw InputError("unknown morphism '" + std::string(label) + "'");
  return *m;
}

int FinCategory::element_index(int o, std::string_view label) const {
  const auto& els = set(o).elements;
  for (std::size_t i = 0; i < els.size(); ++i)
    if (els[i] == label) return static_cast<int>(i);
  throw InputError("set '" + objects_.at(o) + "' has no element '" + std::string(label) + "'");
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  if (a.objects_ != b.objects_ || a.morphisms_.size() != b.morphisms_.size() || a.identity_ != b.identity_) return false;
  for (std::size_t m = 0; m < a.morphisms_.size(); ++m) {
    const auto& x = a.morphisms_[m];
    const auto& y = b.morphisms_[m];
    if (x.id != y.id || x.dom != y.dom || x.cod != y.cod) return false;
  }
  if (a.compose_ != b.compose_) return false;
  if (a.sets_.size() != b.sets_.size()) return false;
  for (std::size_t o = 0; o < a.sets_.size(); ++o)
    if (a.sets_[o].label != b.sets_[o].label || a.sets_[o].elements != b.sets_[o].elements) return false;
  return a.functions_ == b.functions_;
}

bool same_category(const CategoryRef& a, const CategoryRef& b) { return a == b || (a && b && *a == *b); }

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  out << violations.size() << " violation(s); first: " << violations.front().law;
  if (!violations.front().witness.empty()) {
    out << " at (";
    for (std::size_t i = 0; i < violations.front().witness.size(); ++i) out << (i ? ", " : "") << violations.front().witness[i];
    out << ")";
  }
  if (!violations.front().message.empty()) out << ": " << violations.front().message;
  return out.str();
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport report;
  auto add = [&report](std::string law, std::vector<std::string> witness, std::string message = {}) {
    report.violations.push_back({std::move(law), std::move(witness), std::move(message)});
  };
  for (int o = 0; o < c.object_count(); ++o) {
    int id = c.identity(o);
    if (c.dom(id) != o || c.cod(id) != o) add("identity-typing", {c.object(o), c.morphism(id)});
  }
  for (const auto& e : c.compose_entries()) {
    if (c.cod(e.f) != c.dom(e.g)) {
      add("compose-domain", {c.morphism(e.g), c.morphism(e.f)}, "entry for a non-composable pair");
      continue;
    }
    if (c.dom(e.gf) != c.dom(e.f) || c.cod(e.gf) != c.cod(e.g))
      add("compose-typing", {c.morphism(e.g), c.morphism(e.f), c.morphism(e.gf)});
  }
  const int M = c.morphism_count();
  for (int f = 0; f < M; ++f) {
    for (int g : [&]() {
           std::vector<int> out;
           for (int o = 0; o < c.object_count(); ++o)
             for (int m : c.hom(c.cod(f), o)) out.push_back(m);
           return out;
         }()) {
      if (c.compose(g, f) < 0) add("compose-total", {c.morphism(g), c.morphism(f)}, "composable pair has no entry");
    }
  }
  for (int f = 0; f < M; ++f) {
    int left = c.compose(c.identity(c.cod(f)), f);
    int right = c.compose(f, c.identity(c.dom(f)));
    if (left >= 0 && left != f) add("left-identity", {c.morphism(f)});
    if (right >= 0 && right != f) add("right-identity", {c.morphism(f)});
  }
  // (h∘g)∘f = h∘(g∘f) for composable f: A→B, g: B→C, h: C→D.
  for (int f = 0; f < M; ++f) {
    const int B = c.cod(f);
    for (int C = 0; C < c.object_count(); ++C) {
      for (int g : c.hom(B, C)) {
        const int gf = c.compose(g, f);
        for (int D = 0; D < c.object_count(); ++D) {
          for (int h : c.hom(C, D)) {
            const int hg = c.compose(h, g);
            if (gf < 0 || hg < 0) continue;
            const int lhs = c.compose(hg, f);
            const int rhs = c.compose(h, gf);
            if (lhs != rhs) add("associativity", {c.morphism(f), c.morphism(g), c.morphism(h)});
          }
        }
      }
    }
  }
  return report;
}

FinFunctor FinFunctor::from_labels(CategoryRef source, CategoryRef target, const std::map<std::string, std::string>& objects,
                                   const std::map<std::string, std::string>& morphisms) {
  FinFunctor f{source, target, std::vector<int>(source->object_count(), -1), std::vector<int>(source->morphism_count(), -1)};
  for (const auto& [a, b] : objects) {
    auto s = source->find_object(a);
    auto t = target->find_object(b);
    if (!s || !t) throw InputError("functor objMap: dangling label '" + (s ? b : a) + "'");
    f.object_map[*s] = *t;
  }
  for (const auto& [a, b] : morphisms) {
    auto s = source->find_morphism(a);
    auto t = target->find_morphism(b);
    if (!s || !t) throw InputError("functor morMap: dangling label '" + (s ? b : a) + "'");
    f.morphism_map[*s] = *t;
  }
  for (int o = 0; o < source->object_count(); ++o)
    if (f.object_map[o] < 0) throw InputError("functor objMap: no image for '" + source->object(o) + "'");
  for (int m = 0; m < source->morphism_count(); ++m)
    if (f.morphism_map[m] < 0) throw InputError("functor morMap: no image for '" + source->morphism(m) + "'");
  return f;
}

FinFunctor FinFunctor::identity(CategoryRef c) {
  FinFunctor f{c, c, std::vector<int>(c->object_count()), std::vector<int>(c->morphism_count())};
  for (int o = 0; o < c->object_count(); ++o) f.object_map[o] = o;
  for (int m = 0; m < c->morphism_count(); ++m) f.morphism_map[m] = m;
  return f;
}

ValidationReport validate_functor(const FinFunctor& F) {
  ValidationReport report;
  const auto& S = *F.source;
  const auto& T = *F.target;
  if (static_cast<int>(F.object_map.size()) != S.object_count() ||
      static_cast<int>(F.morphism_map.size()) != S.morphism_count())
    throw InputError("functor tables do not cover the source category");
  for (int o : F.object_map)
    if (o < 0 || o >= T.object_count()) throw InputError("functor objMap: dangling target object");
  for (int m : F.morphism_map)
    if (m < 0 || m >= T.morphism_count()) throw InputError("functor morMap: dangling target morphism");
  for (int m = 0; m < S.morphism_count(); ++m) {
    int fm = F.morphism_map[m];
    if (T.dom(fm) != F.object_map[S.dom(m)] || T.cod(fm) != F.object_map[S.cod(m)])
      report.violations.push_back({"dom-cod", {S.morphism(m), T.morphism(fm)}, "image has the wrong endpoints"});
  }
  for (int o = 0; o < S.object_count(); ++o)
    if (F.morphism_map[S.identity(o)] != T.identity(F.object_map[o]))
      report.violations.push_back({"identity", {S.object(o)}, "identity not preserved"});
  for (const auto& e : S.compose_entries()) {
    int lhs = F.morphism_map[e.gf];
    int rhs = T.compose(F.morphism_map[e.g], F.morphism_map[e.f]);
    if (lhs != rhs)
      report.violations.push_back({"composition", {S.morphism(e.g), S.morphism(e.f)}, "composite not preserved"});
  }
  return report;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  if (!same_category(f.target, g.source)) throw InputError("functor composition: categories do not match");
  FinFunctor out{f.source, g.target, std::vector<int>(f.object_map.size()), std::vector<int>(f.morphism_map.size())};
  for (std::size_t o = 0; o < f.object_map.size(); ++o) out.object_map[o] = g.object_map[f.object_map[o]];
  for (std::size_t m = 0; m < f.morphism_map.size(); ++m) out.morphism_map[m] = g.morphism_map[f.morphism_map[m]];
  return out;
}

bool operator==(const FinFunctor& a, const FinFunctor& b) {
  return same_category(a.source, b.source) && same_category(a.target, b.target) && a.object_map == b.object_map &&
         a.morphism_map == b.morphism_map;
}

namespace fixtures {

FinCategory terminal() { return FinCategory::from_tables({"*"}, {{"id", "*", "*"}}, {{"*", "id"}}, {{"id", "id", "id"}}); }

FinCategory discrete(int n) {
  std::vector<std::string> objs;
  std::vector<MorphismSpec> mors;
  std::map<std::string, std::string> ids;
  std::vector<std::array<std::string, 3>> comp;
  for (int i = 0; i < n; ++i) {
    std::string o = std::to_string(i), id = "id" + o;
    objs.push_back(o);
    mors.push_back({id, o, o});
    ids[o] = id;
    comp.push_back({id, id, id});
  }
  return FinCategory::from_tables(objs, mors, ids, comp);
}

FinCategory arrow() {
  return FinCategory::from_tables({"0", "1"}, {{"id0", "0", "0"}, {"id1", "1", "1"}, {"u", "0", "1"}},
                                  {{"0", "id0"}, {"1", "id1"}},
                                  {{"id0", "id0", "id0"}, {"id1", "id1", "id1"}, {"u", "id0", "u"}, {"id1", "u", "u"}});
}

FinCategory walking_idempotent() { return monoid({"1", "e"}, {{0, 1}, {1, 1}}); }

FinCategory poset(int n, const std::vector<std::pair<int, int>>& relation) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) le[i][i] = true;
  for (auto [a, b] : relation) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("poset: relation pair out of range");
    le[a][b] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && le[i][j] && le[j][i]) throw InputError("poset: relation is not antisymmetric");
  auto label = [](int i, int j) { return i == j ? "id" + std::to_string(i) : std::to_string(i) + "<" + std::to_string(j); };
  std::vector<std::string> objs;
  std::vector<MorphismSpec> mors;
  std::map<std::string, std::string> ids;
  std::vector<std::array<std::string, 3>> comp;
  for (int i = 0; i < n; ++i) {
    objs.push_back(std::to_string(i));
    ids[std::to_string(i)] = label(i, i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (le[i][j]) mors.push_back({label(i, j), std::to_string(i), std::to_string(j)});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (le[i][j] && le[j][k]) comp.push_back({label(j, k), label(i, j), label(i, k)});
  return FinCategory::from_tables(objs, mors, ids, comp);
}

FinCategory chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return poset(n, rel);
}

FinCategory monoid(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(elements.size());
  if (n == 0 || static_cast<int>(table.size()) != n) throw InputError("monoid: table shape mismatch");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InputError("monoid: table shape mismatch");
    for (int x : row)
      if (x < 0 || x >= n) throw InputError("monoid: table entry out of range");
  }
  int unit = -1;
  for (int e = 0; e < n && unit < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a) ok = ok && table[e][a] == a && table[a][e] == a;
    if (ok) unit = e;
  }
  if (unit < 0) throw InputError("monoid: table has no two-sided unit");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw InputError("monoid: table is not associative at (" + elements[a] + "," + elements[b] + "," + elements[c] + ")");
  std::vector<MorphismSpec> mors;
  std::vector<std::array<std::string, 3>> comp;
  for (const auto& e : elements) mors.push_back({e, "*", "*"});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) comp.push_back({elements[a], elements[b], elements[table[a][b]]});
  return FinCategory::from_tables({"*"}, mors, {{"*", elements[unit]}}, comp);
}

FinCategory op(const FinCategory& c) {
  std::vector<std::string> objs;
  std::vector<MorphismSpec> mors;
  std::map<std::string, std::string> ids;
  std::vector<std::array<std::string, 3>> comp;
  for (int o = 0; o < c.object_count(); ++o) {
    objs.push_back(c.object(o));
    ids[c.object(o)] = c.morphism(c.identity(o));
  }
  for (int m = 0; m < c.morphism_count(); ++m) mors.push_back({c.morphism(m), c.object(c.cod(m)), c.object(c.dom(m))});
  for (const auto& e : c.compose_entries()) comp.push_back({c.morphism(e.f), c.morphism(e.g), c.morphism(e.gf)});
  return FinCategory::from_tables(objs, mors, ids, comp);
}

FinCategory product(const FinCategory& c, const FinCategory& d) {
  auto pair = [](const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; };
  std::vector<std::string> objs;
  std::vector<MorphismSpec> mors;
  std::map<std::string, std::string> ids;
  std::vector<std::array<std::string, 3>> comp;
  for (int a = 0; a < c.object_count(); ++a)
    for (int b = 0; b < d.object_count(); ++b) {
      objs.push_back(pair(c.object(a), d.object(b)));
      ids[objs.back()] = pair(c.morphism(c.identity(a)), d.morphism(d.identity(b)));
    }
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g = 0; g < d.morphism_count(); ++g)
      mors.push_back({pair(c.morphism(f), d.morphism(g)), pair(c.object(c.dom(f)), d.object(d.dom(g))),
                      pair(c.object(c.cod(f)), d.object(d.cod(g)))});
  for (const auto& e1 : c.compose_entries())
    for (const auto& e2 : d.compose_entries())
      comp.push_back({pair(c.morphism(e1.g), d.morphism(e2.g)), pair(c.morphism(e1.f), d.morphism(e2.f)),
                      pair(c.morphism(e1.gf), d.morphism(e2.gf))});
  return FinCategory::from_tables(objs, mors, ids, comp);
}

FinCategory finset_fragment(std::vector<FinSetObj> sets) {
  std::vector<FinCategory::FunctionSpec> functions;
  for (int a = 0; a < static_cast<int>(sets.size()); ++a) {
    for (int b = 0; b < static_cast<int>(sets.size()); ++b) {
      const int n = static_cast<int>(sets[a].elements.size());
      const int k = static_cast<int>(sets[b].elements.size());
      if (n > 0 && k == 0) continue;
      std::vector<int> images(n, 0);
      for (;;) {
        functions.push_back({a, b, images});
        int i = n - 1;
        while (i >= 0 && images[i] == k - 1) images[i--] = 0;
        if (i < 0) break;
        ++images[i];
      }
    }
  }
  return FinCategory::from_functions(std::move(sets), functions);
}

FinCategory finset_fragment(const std::vector<int>& sizes) {
  std::vector<FinSetObj> sets;
  std::map<int, int> seen;
  for (int n : sizes) {
    if (n < 0) throw InputError("finset_fragment: negative size");
    FinSetObj s;
    s.label = "X" + std::to_string(n);
    if (int k = seen[n]++; k > 0) s.label += "_" + std::to_string(k);
    for (int i = 0; i < n; ++i) s.elements.push_back(std::to_string(i));
    sets.push_back(std::move(s));
  }
  return finset_fragment(std::move(sets));
}

namespace {

std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw InputError("fixture: expected an integer, got '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw InputError("fixture: expected an integer, got '" + s + "'");
  }
}

}  // namespace

FinCategory build(std::string_view id) {
  std::string text;
  for (char ch : id)
    if (ch != ' ') text += ch;
  std::string name = text, args;
  if (auto p = text.find('('); p != std::string::npos) {
    if (text.back() != ')') throw InputError("fixture: unbalanced parentheses in '" + text + "'");
    name = text.substr(0, p);
    args = text.substr(p + 1, text.size() - p - 2);
  }
  if (name == "terminal") return terminal();
  if (name == "arrow") return arrow();
  if (name == "walking_idempotent") return walking_idempotent();
  if (name == "discrete") return discrete(to_int(args));
  if (name == "chain") return chain(to_int(args));
  if (name == "poset") {
    auto parts = split_top(args, ';');
    std::vector<std::pair<int, int>> rel;
    if (parts.size() > 1 && !parts[1].empty())
      for (const auto& p : split_top(parts[1], ',')) {
        auto lt = p.find('<');
        if (lt == std::string::npos) throw InputError("poset: expected a<b, got '" + p + "'");
        rel.emplace_back(to_int(p.substr(0, lt)), to_int(p.substr(lt + 1)));
      }
    return poset(to_int(parts[0]), rel);
  }
  if (name == "monoid") {
    auto parts = split_top(args, ';');
    if (parts.size() != 2) throw InputError("monoid: expected 'elements;a*b=c,...'");
    auto elements = split_top(parts[0], ',');
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> table(elements.size(), std::vector<int>(elements.size(), -1));
    for (const auto& eq : split_top(parts[1], ',')) {
      auto star = eq.find('*'), equals = eq.find('=');
      if (star == std::string::npos || equals == std::string::npos) throw InputError("monoid: bad entry '" + eq + "'");
      auto a = index.find(eq.substr(0, star)), b = index.find(eq.substr(star + 1, equals - star - 1)),
           c = index.find(eq.substr(equals + 1));
      if (a == index.end() || b == index.end() || c == index.end()) throw InputError("monoid: unknown element in '" + eq + "'");
      table[a->second][b->second] = c->second;
    }
    for (const auto& row : table)
      for (int x : row)
        if (x < 0) throw InputError("monoid: table is incomplete");
    return monoid(elements, table);
  }
  if (name == "op") return op(build(args));
  if (name == "product") {
    auto parts = split_top(args, ',');
    if (parts.size() != 2) throw InputError("product: expected two fixtures");
    return product(build(parts[0]), build(parts[1]));
  }
  if (name == "finset_fragment") {
    std::vector<int> sizes;
    if (!args.empty())
      for (const auto& s : split_top(args, ',')) sizes.push_back(to_int(s));
    return finset_fragment(sizes);
  }
  throw InputError("unknown fixture '" + name + "'");
}

}  // namespace fixtures

}  // namespace paracat
