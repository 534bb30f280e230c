#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cli/bundle.hpp"
#include "paracat/candidate.hpp"
#include "paracat/demos.hpp"
#include "paracat/diyoneda.hpp"
#include "paracat/error.hpp"
#include "paracat/fixpoint.hpp"
#include "paracat/freethm.hpp"
#include "paracat/tymodel.hpp"

#ifndef PARACAT_VERSION
#define PARACAT_VERSION "0.0.0"
#endif

namespace paracat::cli {

using nlohmann::ordered_json;

namespace {

constexpr const char* kReportSchema = "paracat.report/1";

struct Options {
  std::string bundle;
  std::string out;
  std::string format = "text";
  std::size_t limit = 100000;
  int bound = -1;
  std::string fragment;
  std::string sizes = "2,3";
  int list_bound = 3;
  int nat_bound = 3;
  std::size_t step_budget = 100000;
  int timeout_seconds = 0;

  std::string category;
  std::string source, target;
  std::string phi;
  std::string formulation = "elementwise";
  std::string type_text;
  std::string check;
  std::string gamma, theta, delta;
  std::string difunctor = "hom";
  std::string functor, with = "Id";
  std::string context = "1";
  std::string relation;
  bool unpointed = false;
};

struct Outcome {
  int exit_code = 0;
  ordered_json body = ordered_json::object();
};

std::string kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input:
      return "input";
    case ErrorKind::Unsupported:
      return "unsupported";
    case ErrorKind::Resource:
      return "resource";
    case ErrorKind::Precondition:
      return "precondition";
  }
  return "input";
}

ordered_json labels_json(const std::map<std::string, std::map<std::string, std::string>>& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, inner] : m) {
    ordered_json row = ordered_json::object();
    for (const auto& [x, y] : inner) row[x] = y;
    j[k] = row;
  }
  return j;
}

ordered_json witness_json(const FinCategory& C, const ChevronWitness& w) {
  return {{"i2", C.morphism(w.i2)}, {"d0", w.d0_value.str()}, {"d1", w.d1_value.str()}, {"lhs", w.lhs.str()}, {"rhs", w.rhs.str()}};
}

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::unique_ptr<Bundle> maybe_bundle(const Options& o) {
  if (o.bundle.empty()) return nullptr;
  return std::make_unique<Bundle>(load_bundle(o.bundle));
}

CategoryRef category_for(const Options& o, const Bundle* b, const std::vector<std::string>& refs, const std::string& fallback) {
  if (!o.category.empty()) return resolve_category(b, o.category);
  if (b)
    for (const auto& r : refs) {
      auto it = b->difunctors.find(r);
      if (it != b->difunctors.end()) return it->second->base();
    }
  return resolve_category(b, fallback);
}

std::vector<int> fragment_or(const Options& o, const Bundle* b, std::vector<int> fallback) {
  if (o.fragment.empty()) return fallback;
  if (b) {
    auto it = b->fragments.find(o.fragment);
    if (it != b->fragments.end()) return it->second;
  }
  return parse_int_list(o.fragment);
}

// ---- commands -------------------------------------------------------------

Outcome cmd_validate(const Options& o) {
  if (o.bundle.empty()) throw InputError("validate needs a bundle path");
  Bundle b = load_bundle(o.bundle);
  Outcome r;
  r.body["bundle"] = o.bundle;
  ordered_json cats = ordered_json::object();
  for (const auto& [name, c] : b.categories)
    cats[name] = {{"objects", c->object_count()}, {"morphisms", c->morphism_count()}, {"laws", validate_category(*c).summary()}};
  ordered_json difs = ordered_json::object();
  for (const auto& [name, d] : b.difunctors) {
    std::size_t elements = 0;
    for (int I = 0; I < d->category().object_count(); ++I)
      for (int J = 0; J < d->category().object_count(); ++J) elements += d->size(I, J);
    difs[name] = {{"category", b.difunctor_category[name]}, {"elements", elements}, {"laws", validate_difunctor(*d).summary()}};
  }
  r.body["categories"] = cats;
  r.body["difunctors"] = difs;
  r.body["transformations"] = b.transformations.size();
  r.body["candidates"] = b.candidates.size();
  r.body["coalgebras"] = b.coalgebras.size();
  r.body["relations"] = b.relations.size();
  r.body["verdict"] = "ok";
  return r;
}

Outcome cmd_enumerate(const Options& o) {
  auto b = maybe_bundle(o);
  if (o.source.empty() || o.target.empty()) throw InputError("enumerate needs --source and --target");
  auto base = category_for(o, b.get(), {o.source, o.target}, "terminal");
  auto src = resolve_difunctor(b.get(), o.source, base);
  auto dst = resolve_difunctor(b.get(), o.target, base);
  auto en = enumerate_paranaturals(src, dst, o.limit);
  Outcome r;
  r.body["source"] = o.source;
  r.body["target"] = o.target;
  r.body["count"] = en.families.size();
  r.body["truncated"] = en.truncated;
  r.body["search_nodes"] = en.nodes;
  ordered_json fams = ordered_json::array();
  for (const auto& f : en.families) fams.push_back(labels_json(f.to_labels()));
  r.body["families"] = fams;
  r.body["verdict"] = en.truncated ? "truncated" : "ok";
  r.exit_code = en.truncated ? 3 : 0;
  return r;
}

Outcome cmd_check_transformation(const Options& o) {
  auto b = maybe_bundle(o);
  if (!b) throw InputError("check-transformation needs --bundle");
  auto it = b->transformations.find(o.phi);
  if (it == b->transformations.end()) throw InputError("/transformations: unknown transformation '" + o.phi + "'");
  const Paranatural& phi = it->second;
  const auto& C = phi.source->category();
  Outcome r;
  r.body["phi"] = o.phi;
  auto run_one = [&](Formulation f) {
    auto rep = check_paranatural(phi, f);
    ordered_json j{{"verdict", rep.ok ? "ok" : "violation"}, {"checked", rep.checked}};
    j["witness"] = rep.witness() ? witness_json(C, *rep.witness()) : ordered_json(nullptr);
    j["violations"] = rep.violations.size();
    return std::make_pair(rep, j);
  };
  bool ok = true;
  if (o.formulation == "both") {
    auto [e, ej] = run_one(Formulation::Elementwise);
    auto [p, pj] = run_one(Formulation::Pullback);
    r.body["elementwise"] = ej;
    r.body["pullback"] = pj;
    r.body["formulations_agree"] = e.ok == p.ok && e.violations == p.violations;
    ok = e.ok && p.ok;
    r.body["verdict"] = ok ? "ok" : "violation";
  } else if (o.formulation == "elementwise" || o.formulation == "pullback") {
    auto [rep, j] = run_one(o.formulation == "pullback" ? Formulation::Pullback : Formulation::Elementwise);
    r.body["formulation"] = o.formulation;
    for (auto& [k, v] : j.items()) r.body[k] = v;
    ok = rep.ok;
  } else {
    throw InputError("--formulation must be elementwise, pullback or both");
  }
  r.exit_code = ok ? 0 : 1;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json theorem_json(const freethm::FreeTheorem& t) {
  return {{"type", t.type},     {"domain", t.domain},       {"codomain", t.codomain}, {"raw", t.raw},
          {"normalized", t.normalized}, {"form", t.form}, {"quantifiers", t.quantifiers}};
}

freethm::CheckOptions check_options(const Options& o) {
  freethm::CheckOptions c;
  c.sizes = parse_int_list(o.sizes);
  c.list_bound = o.list_bound;
  c.nat_bound = o.nat_bound;
  c.step_budget = o.step_budget;
  return c;
}

ordered_json check_json(const freethm::CheckReport& rep) {
  ordered_json j{{"verdict", rep.ok ? "ok" : "violation"}, {"instantiations", rep.instantiations}, {"checked", rep.checked}};
  if (rep.witness) {
    const auto& w = *rep.witness;
    j["witness"] = {{"A", w.size_a}, {"B", w.size_b}, {"i2", w.i2.str()}, {"d0", w.d0.str()},
                    {"d1", w.d1.str()}, {"lhs", w.lhs.str()}, {"rhs", w.rhs.str()}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Outcome cmd_free_theorem(const Options& o) {
  auto b = maybe_bundle(o);
  if (o.type_text.empty()) throw InputError("free-theorem needs a type");
  auto type = freethm::parse_type(o.type_text);
  Outcome r;
  r.body["theorem"] = theorem_json(freethm::emit_free_theorem(*type));
  if (!o.check.empty()) {
    freethm::Candidate cand;
    if (b && b->candidates.count(o.check)) {
      cand = b->candidates.at(o.check).candidate;
    } else {
      cand = freethm::parse_candidate(read_file(o.check));
    }
    auto opts = check_options(o);
    auto rep = freethm::check_candidate(*type, cand, opts);
    r.body["check"] = check_json(rep);
    r.body["check"]["sizes"] = opts.sizes;
    r.body["check"]["list_bound"] = opts.list_bound;
    r.body["check"]["nat_bound"] = opts.nat_bound;
    r.exit_code = rep.ok ? 0 : 1;
    r.body["verdict"] = rep.ok ? "ok" : "violation";
  } else {
    r.body["verdict"] = "ok";
  }
  return r;
}

// Hom over a fragment: name φ when every component sends u to u^k.
std::string power_tag(const Paranatural& phi) {
  const auto& C = phi.source->category();
  for (int k = 0; k <= 4; ++k) {
    bool all = true;
    for (int I = 0; I < C.object_count() && all; ++I) {
      const auto& cell = phi.source->cell(I, I).elements;
      for (std::size_t x = 0; x < cell.size() && all; ++x) {
        const int u = C.morphism_index(cell[x].label());
        int p = C.identity(I);
        for (int s = 0; s < k; ++s) p = C.compose(u, p);
        if (phi.target->element(I, I, phi.apply_index(I, static_cast<int>(x))).label() != C.morphism(p)) all = false;
      }
    }
    if (all) return "u^" + std::to_string(k);
  }
  return "non-power";
}

Outcome end_report(const ExprRef& g, const ExprRef& t, const std::vector<int>& fragment, std::size_t limit, bool tag_powers) {
  auto end = structural_end(g, t, fragment, limit);
  Outcome r;
  r.body["gamma"] = g->str();
  r.body["theta"] = t->str();
  r.body["fragment"] = fragment;
  r.body["count"] = end.families.size();
  r.body["truncated"] = end.truncated;
  ordered_json fams = ordered_json::array();
  for (const auto& f : end.families) {
    ordered_json j{{"components", labels_json(f.to_labels())}};
    if (tag_powers) j["tag"] = power_tag(f);
    fams.push_back(j);
  }
  r.body["families"] = fams;
  r.body["verdict"] = end.truncated ? "truncated" : "ok";
  r.exit_code = end.truncated ? 3 : 0;
  return r;
}

Outcome cmd_end(const Options& o) {
  auto b = maybe_bundle(o);
  if (o.gamma.empty() || o.theta.empty()) throw InputError("end needs --gamma and --theta");
  auto g = resolve_expr(b.get(), o.gamma), t = resolve_expr(b.get(), o.theta);
  const bool homs = g->kind == DifunctorExpr::Kind::Hom && t->kind == DifunctorExpr::Kind::Hom;
  return end_report(g, t, fragment_or(o, b.get(), {2}), o.limit, homs);
}

ordered_json classes_json(const CoendClasses& c) {
  ordered_json out = ordered_json::array();
  for (const auto& cls : c.classes) {
    ordered_json members = ordered_json::array();
    for (int p : cls) members.push_back(c.point_labels[p]);
    out.push_back(members);
  }
  return out;
}

Outcome cmd_coend(const Options& o) {
  auto b = maybe_bundle(o);
  if (o.gamma.empty()) throw InputError("coend needs --gamma");
  auto g = resolve_expr(b.get(), o.gamma);
  auto fragment = fragment_or(o, b.get(), {1, 2});
  auto base = share(fixtures::finset_fragment(fragment));
  auto classes = structural_coend(g, base, !o.unpointed);
  Outcome r;
  r.body["gamma"] = g->str();
  r.body["fragment"] = fragment;
  r.body["pointed"] = !o.unpointed;
  r.body["structures"] = classes.structures.size();
  r.body["points"] = o.unpointed ? classes.structures.size() : classes.points.size();
  r.body["class_count"] = classes.classes.size();
  r.body["classes"] = classes_json(classes);
  r.body["verdict"] = "ok";
  return r;
}

ordered_json blocks_json(const std::vector<std::vector<Value>>& blocks) {
  ordered_json out = ordered_json::array();
  for (const auto& b : blocks) {
    ordered_json members = ordered_json::array();
    for (const auto& x : b) members.push_back(x.str());
    out.push_back(members);
  }
  return out;
}

// Builds the two-coalgebra system for a bundle relation.
demos::CoalgebraSystem system_for(const Bundle& b, const NamedRelation& rel) {
  const auto& L = b.coalgebras.at(rel.left);
  const auto& R = b.coalgebras.at(rel.right);
  if (L.functor->str() != R.functor->str())
    throw InputError("relation between coalgebras for different functors (" + L.functor->str() + ", " + R.functor->str() + ")");
  demos::CoalgebraSystem s;
  s.functor = L.functor;
  s.gamma = expr::coalg_of(s.functor);
  s.names = {rel.left, rel.right};
  s.coalgebras = {L.coalgebra, R.coalgebra};
  std::vector<FinSetObj> sets;
  for (std::size_t k = 0; k < 2; ++k) {
    FinSetObj obj{k == 0 ? rel.left : (rel.right == rel.left ? rel.right + "'" : rel.right), {}};
    for (const auto& x : s.coalgebras[k].carrier) obj.elements.push_back(x.label());
    sets.push_back(obj);
  }
  double functions = 0;
  for (const auto& a : sets)
    for (const auto& c : sets) functions += std::pow(static_cast<double>(c.elements.size()), static_cast<double>(a.elements.size()));
  if (functions <= 4096) {
    s.base = share(fixtures::finset_fragment(sets));
  } else {
    std::vector<FinCategory::FunctionSpec> ids;
    for (int k = 0; k < 2; ++k) {
      std::vector<int> id(sets[k].elements.size());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
      ids.push_back({k, k, id});
    }
    s.base = share(FinCategory::from_functions(sets, ids));
  }
  return s;
}

Outcome bisim_report(const demos::CoalgebraSystem& s, const Relation& rel) {
  ExprEvaluator ev(s.base);
  Outcome r;
  auto verdict = check_bisimulation(ev, s.gamma, rel, s.structure(rel.X), s.structure(rel.Y));
  r.body["functor"] = s.functor->str();
  r.body["relation_size"] = rel.pairs.size();
  r.body["bisimulation"] = verdict.holds;
  r.body["counterexample"] = verdict.holds ? ordered_json(nullptr) : ordered_json(verdict.counterexample);
  auto classes = structural_coend(ev, s.gamma, s.structures());
  r.body["coend_classes"] = classes_json(classes);
  r.body["partition"] = blocks_json(partition_refinement(*s.functor, s.disjoint_union()));
  if (verdict.holds) {
    std::size_t equal = 0, agree = 0;
    for (const auto& [x, y] : rel.pairs) {
      auto c = coinduction_equal(ev, s.gamma, rel, s.structure(rel.X), s.structure(rel.Y), x, y, classes);
      equal += c.equal;
      agree += c.same_class;
    }
    r.body["coinduction"] = {{"pairs", rel.pairs.size()}, {"equal", equal}, {"same_class", agree}};
  }
  r.body["verdict"] = verdict.holds ? "ok" : "violation";
  r.exit_code = verdict.holds ? 0 : 1;
  return r;
}

Outcome cmd_bisim(const Options& o) {
  auto b = maybe_bundle(o);
  if (!b) throw InputError("bisim needs --bundle");
  std::string name = o.relation;
  if (name.empty()) {
    if (b->relations.size() != 1) throw InputError("bisim needs --relation (the bundle has " + std::to_string(b->relations.size()) + ")");
    name = b->relations.begin()->first;
  }
  auto it = b->relations.find(name);
  if (it == b->relations.end()) throw InputError("/relations: unknown relation '" + name + "'");
  auto s = system_for(*b, it->second);
  Relation rel;
  rel.X = 0;
  rel.Y = 1;
  for (const auto& p : it->second.pairs) {
    s.base->element_index(0, p.first);
    s.base->element_index(1, p.second);
    rel.pairs.insert(p);
  }
  auto r = bisim_report(s, rel);
  ordered_json head{{"relation", name}, {"left", it->second.left}, {"right", it->second.right}};
  head.update(r.body);
  r.body = std::move(head);
  return r;
}

Outcome cmd_probe_diyoneda(const Options& o) {
  auto b = maybe_bundle(o);
  auto base = category_for(o, b.get(), {o.difunctor}, "walking_idempotent");
  auto g = resolve_difunctor(b.get(), o.difunctor, base);
  auto probe = probe_diyoneda(g, o.limit);
  Outcome r;
  r.body["category"] = o.category.empty() ? "walking_idempotent" : o.category;
  r.body["difunctor"] = o.difunctor;
  ordered_json cells = ordered_json::array();
  bool unknown = false;
  for (const auto& c : probe.cells) {
    unknown = unknown || !c.rhs;
    cells.push_back({{"I", c.I},
                     {"J", c.J},
                     {"lhs", c.lhs},
                     {"rhs", optional_json(c.rhs)},
                     {"injective", optional_json(c.injective)},
                     {"surjective", optional_json(c.surjective)},
                     {"retraction", optional_json(c.retraction)},
                     {"forward_paranatural", c.forward_paranatural}});
  }
  r.body["cells"] = cells;
  r.body["verdict"] = probe.verdict;
  r.exit_code = unknown ? 3 : 0;
  return r;
}

Outcome cmd_probe_exponential(const Options& o) {
  auto b = maybe_bundle(o);
  const std::string th = o.theta.empty() ? "2" : o.theta, de = o.delta.empty() ? "2" : o.delta, ga = o.gamma.empty() ? "2" : o.gamma;
  auto base = category_for(o, b.get(), {th, de, ga}, "terminal");
  auto probe = probe_exponential(resolve_difunctor(b.get(), th, base), resolve_difunctor(b.get(), de, base),
                                 resolve_difunctor(b.get(), ga, base), o.limit);
  Outcome r;
  r.body["theta"] = th;
  r.body["delta"] = de;
  r.body["gamma"] = ga;
  r.body["lhs"] = optional_json(probe.lhs);
  r.body["rhs"] = optional_json(probe.rhs);
  r.body["curry_well_defined"] = probe.curry_well_defined;
  r.body["uncurry_well_defined"] = probe.uncurry_well_defined;
  r.body["curry_then_uncurry"] = probe.curry_then_uncurry;
  r.body["uncurry_then_curry"] = probe.uncurry_then_curry;
  r.body["verdict"] = probe.verdict;
  r.exit_code = probe.verdict == "unknown" ? 3 : 0;
  return r;
}

Outcome cmd_probe_uustalu(const Options& o) {
  auto b = maybe_bundle(o);
  const std::string t = o.functor.empty() ? "2" : o.functor;
  auto rep = probe_uustalu(parse_polyfunctor(t), parse_polyfunctor(o.with), fragment_or(o, b.get(), {1, 2}), o.limit);
  Outcome r;
  r.body["functor"] = t;
  r.body["with"] = o.with;
  r.body["fragment"] = rep.fragment;
  r.body["mu"] = rep.mu;
  r.body["families"] = rep.families;
  r.body["target"] = rep.target;
  r.body["image"] = rep.image;
  r.body["injective"] = rep.injective;
  r.body["surjective"] = rep.surjective;
  r.body["truncated"] = rep.truncated;
  r.body["verdict"] = rep.truncated ? "unknown" : (rep.injective && rep.surjective ? "bijective" : "not-bijective");
  r.exit_code = rep.truncated ? 3 : 0;
  return r;
}

Outcome cmd_probe_universe(const Options& o) {
  auto b = maybe_bundle(o);
  const int bound = o.bound < 0 ? 1 : o.bound;
  auto base = category_for(o, b.get(), {o.context}, "terminal");
  auto gamma = resolve_difunctor(b.get(), o.context, base);
  auto probe = probe_universe(gamma, bound, o.limit);
  const auto& C = *base;
  Outcome r;
  r.body["context"] = o.context;
  r.body["bound"] = bound;
  ordered_json cells = ordered_json::array();
  for (int I = 0; I < C.object_count(); ++I)
    for (int J = 0; J < C.object_count(); ++J)
      cells.push_back({{"I", C.object(I)}, {"J", C.object(J)}, {"size", probe.cells.at(static_cast<std::size_t>(I) * C.object_count() + J)}});
  r.body["cells"] = cells;
  r.body["sample_size"] = probe.types;
  r.body["roundtrip_ty_to_tm"] = {{"diagonal", {{"total", probe.ty_diagonal.total}, {"identity", probe.ty_diagonal.identity}}},
                                  {"off_diagonal", {{"total", probe.ty_off_diagonal.total}, {"identity", probe.ty_off_diagonal.identity}}}};
  r.body["roundtrip_tm_to_ty"] = {{"total", probe.tm.total}, {"identity", probe.tm.identity}};
  r.body["codes_paranatural"] = probe.codes_paranatural;
  r.body["truncated"] = probe.truncated;
  r.body["verdict"] = probe.truncated ? "unknown" : "reported";
  r.exit_code = probe.truncated ? 3 : 0;
  return r;
}

// ---- demos ------------------------------------------------------------------

constexpr const char* kInsertionSort = R"(
let rec insert lt x ys = match ys with
  | [] -> [x]
  | y :: rest -> if lt (x, y) then x :: y :: rest else y :: insert lt x rest
in
let rec sort lt xs = match xs with
  | [] -> []
  | x :: rest -> insert lt x (sort lt rest)
in sort
)";

Outcome demo_sorting(const Options& o) {
  const std::string type_text = "forall a. (a*a -> Bool) -> List a -> List a";
  auto type = freethm::parse_type(type_text);
  Outcome r;
  r.body["theorem"] = theorem_json(freethm::emit_free_theorem(*type));
  freethm::Candidate sort;
  sort.term = freethm::parse_term(kInsertionSort);
  auto rep = freethm::check_candidate(*type, sort, check_options(o));
  r.body["insertion_sort"] = check_json(rep);
  r.body["verdict"] = rep.ok ? "ok" : "violation";
  r.exit_code = rep.ok ? 0 : 1;
  return r;
}

Outcome demo_wildgroups(const Options& o) {
  auto b = maybe_bundle(o);
  auto fragment = fragment_or(o, b.get(), {1, 2});
  auto base = share(fixtures::finset_fragment(fragment));
  auto gamma = share(eval_difunctor_expr(demos::wild_group_data(), base));
  auto structs = share_structs(*gamma);
  const auto& C = *base;
  Outcome r;
  r.body["fragment"] = fragment;
  r.body["structures"] = structs->objects.size();
  r.body["structure_morphisms"] = structs->base_morphism.size();
  ordered_json per = ordered_json::array();
  std::size_t groups = 0;
  for (int I = 0; I < C.object_count(); ++I) {
    std::vector<Value> carrier;
    for (const auto& x : C.set(I).elements) carrier.push_back(Value::atom(x));
    std::size_t g = 0;
    for (const auto& s : gamma->cell(I, I).elements) g += demos::is_group(s, carrier);
    groups += g;
    per.push_back({{"carrier", C.object(I)}, {"structures", gamma->size(I, I)}, {"groups", g}});
  }
  r.body["per_carrier"] = per;
  r.body["groups"] = groups;
  // The term picking each structure's unit in the carrier type.
  auto carrier_ty = weaken(gamma, structs, eval_difunctor_expr(expr::var(), base), 1 << 20);
  Tm unit{carrier_ty, {}};
  for (int I = 0; I < C.object_count(); ++I) {
    std::vector<int> comp;
    for (const auto& s : gamma->cell(I, I).elements) comp.push_back(C.element_index(I, s.item(1).item(0).label()));
    unit.components.push_back(comp);
  }
  auto rep = check_tm(unit);
  r.body["unit_term"] = {{"verdict", rep.ok ? "ok" : "violation"}, {"checked", rep.checked}};
  r.body["verdict"] = rep.ok ? "ok" : "violation";
  r.exit_code = rep.ok ? 0 : 1;
  return r;
}

Outcome demo_streams(const Options&) {
  auto s = demos::streams();
  ExprEvaluator ev(s.base);
  auto classes = structural_coend(ev, s.gamma, s.structures());
  Outcome r;
  r.body["functor"] = s.functor->str();
  r.body["coend_classes"] = classes_json(classes);
  r.body["partition"] = blocks_json(partition_refinement(*s.functor, s.disjoint_union()));
  Relation zeros{0, 1, {{"p", "q0"}, {"p", "q1"}}};
  Relation mixed{0, 2, {{"p", "r"}}};
  auto z = check_bisimulation(ev, s.gamma, zeros, s.structure(0), s.structure(1));
  auto m = check_bisimulation(ev, s.gamma, mixed, s.structure(0), s.structure(2));
  ordered_json co = ordered_json::array();
  for (const auto& [x, y] : zeros.pairs) {
    auto c = coinduction_equal(ev, s.gamma, zeros, s.structure(0), s.structure(1), x, y, classes);
    co.push_back({{"x", x}, {"y", y}, {"equal", c.equal}, {"same_class", c.same_class}});
  }
  r.body["zero_streams"] = {{"relation", "{(p,q0),(p,q1)}"}, {"bisimulation", z.holds}, {"coinduction", co}};
  r.body["mixed_streams"] = {{"relation", "{(p,r)}"}, {"bisimulation", m.holds}, {"counterexample", m.counterexample}};
  const bool ok = z.holds && !m.holds && classes.classes.size() == 2;
  r.body["verdict"] = ok ? "ok" : "violation";
  r.exit_code = ok ? 0 : 1;
  return r;
}

Outcome demo_queues(const Options& o) {
  const int capacity = o.bound < 0 ? 3 : o.bound;
  auto q = demos::queues(2, capacity);
  auto r = bisim_report(q.system, q.representation);
  ordered_json head{{"alphabet", 2},
                    {"capacity", capacity},
                    {"list_states", q.system.coalgebras[0].carrier.size()},
                    {"batched_states", q.system.coalgebras[1].carrier.size()}};
  head.update(r.body);
  r.body = std::move(head);
  // Keep the report small: the classes themselves are summarized.
  const std::size_t classes = r.body["coend_classes"].size(), blocks = r.body["partition"].size();
  r.body.erase("coend_classes");
  r.body.erase("partition");
  r.body["coend_class_count"] = classes;
  r.body["partition_block_count"] = blocks;
  return r;
}

Outcome demo_nat(const Options& o) {
  const int bound = o.bound < 0 ? 10 : o.bound;
  auto t = parse_polyfunctor("1+Id");
  auto res = adamek_initial(*t, bound);
  Outcome r;
  r.body["functor"] = t->str();
  r.body["bound"] = bound;
  r.body["stabilized"] = res.stabilized;
  r.body["chain_sizes"] = res.sizes;
  r.body["verdict"] = "ok";
  return r;
}

Outcome demo_curried_nat(const Options& o) {
  auto b = maybe_bundle(o);
  return end_report(expr::hom(), expr::hom(), fragment_or(o, b.get(), {2}), o.limit, true);
}

// ---- plumbing ---------------------------------------------------------------

std::string render_text(const ordered_json& j, const std::string& indent = "") {
  std::string out;
  for (const auto& [k, v] : j.items()) {
    if (k == "schema" || k == "tool_version" || k == "elapsed_ms") continue;
    if (v.is_string()) {
      out += indent + k + ": " + v.get<std::string>() + "\n";
    } else if (v.is_object() && !v.empty() && v.size() <= 12) {
      out += indent + k + ":\n" + render_text(v, indent + "  ");
    } else {
      out += indent + k + ": " + v.dump() + "\n";
    }
  }
  return out;
}

void start_watchdog(int seconds, std::string command) {
  if (seconds <= 0) return;
  std::thread([seconds, command] {
    std::this_thread::sleep_for(std::chrono::seconds(seconds));
    std::cerr << "paracat " << command << ": timeout of " << seconds << " s exceeded\n";
    std::cout.flush();
    std::_Exit(3);
  }).detach();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"paracat: paranatural category theory over finite categories"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--bundle", o.bundle, "experiment bundle (JSON)");
    sub->add_option("--out", o.out, "also write the JSON report to this file");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--limit", o.limit, "enumeration limit");
    sub->add_option("--bound", o.bound, "size or iteration bound");
    sub->add_option("--fragment", o.fragment, "carrier sizes, e.g. 1,2,3, or a bundle fragment name");
    sub->add_option("--sizes", o.sizes, "instantiation sizes for candidate checks");
    sub->add_option("--list-bound", o.list_bound, "maximum list length");
    sub->add_option("--nat-bound", o.nat_bound, "size of the Nat segment");
    sub->add_option("--step-budget", o.step_budget, "interpreter step budget");
    sub->add_option("--timeout-seconds", o.timeout_seconds, "abort with exit 3 after this many seconds");
    sub->add_option("--category", o.category, "category: bundle name or fixture id");
  };
  std::string selected;
  std::function<Outcome(const Options&)> action;
  auto command = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<Outcome(const Options&)> fn) {
    auto* sub = parent->add_subcommand(name, help);
    common(sub);
    const std::string full = parent == &app ? name : parent->get_name() + " " + name;
    sub->callback([&, fn, full] {
      selected = full;
      action = fn;
    });
    return sub;
  };

  auto* validate = command(&app, "validate", "load and validate a bundle", cmd_validate);
  validate->add_option("bundle_path", o.bundle, "bundle path");
  auto* enumerate = command(&app, "enumerate", "enumerate paranatural transformations", cmd_enumerate);
  enumerate->add_option("--source", o.source, "source difunctor (bundle name or expression)");
  enumerate->add_option("--target", o.target, "target difunctor");
  auto* check = command(&app, "check-transformation", "check a transformation from a bundle", cmd_check_transformation);
  check->add_option("--phi", o.phi, "transformation name")->required();
  check->add_option("--formulation", o.formulation, "elementwise, pullback or both");
  auto* ft = command(&app, "free-theorem", "derive (and optionally test) a free theorem", cmd_free_theorem);
  ft->add_option("type", o.type_text, "System F type, e.g. \"forall a. a -> a\"")->required();
  ft->add_option("--check", o.check, "candidate file (term or JSON table) or bundle candidate name");
  auto* end = command(&app, "end", "structural end over a fragment", cmd_end);
  end->add_option("--gamma", o.gamma, "source expression");
  end->add_option("--theta", o.theta, "target expression");
  auto* coend = command(&app, "coend", "structural coend over a fragment", cmd_coend);
  coend->add_option("--gamma", o.gamma, "expression");
  coend->add_flag("--unpointed", o.unpointed, "identify structures instead of points");
  auto* bisim = command(&app, "bisim", "check a bisimulation between bundle coalgebras", cmd_bisim);
  bisim->add_option("--relation", o.relation, "relation name");

  auto* probe = app.add_subcommand("probe", "lemma-level experiments");
  probe->require_subcommand(1);
  auto* pd = command(probe, "diyoneda", "compare Γ(I,J) with DiYo(J,I) ⇒ Γ", cmd_probe_diyoneda);
  pd->add_option("--difunctor", o.difunctor, "difunctor (bundle name or expression)");
  auto* pe = command(probe, "exponential", "currying bijection for Θ × Δ ⇒ Γ", cmd_probe_exponential);
  pe->add_option("--theta", o.theta, "Θ");
  pe->add_option("--delta", o.delta, "Δ");
  pe->add_option("--gamma", o.gamma, "Γ");
  auto* pu = command(probe, "uustalu", "evaluation at the initial algebra", cmd_probe_uustalu);
  pu->add_option("--functor", o.functor, "polynomial functor T");
  pu->add_option("--with", o.with, "polynomial functor F");
  auto* pv = command(probe, "universe", "type/code round trips through the universe", cmd_probe_universe);
  pv->add_option("--context", o.context, "context difunctor (bundle name or expression)");

  auto* demo = app.add_subcommand("demo", "worked examples");
  demo->require_subcommand(1);
  command(demo, "sorting", "free theorem of sorting and insertion sort", demo_sorting);
  command(demo, "wildgroups", "Struct category of wild groups", demo_wildgroups);
  command(demo, "streams", "stream coalgebras, coend and bisimulation", demo_streams);
  command(demo, "queues", "list vs batched queues", demo_queues);
  command(demo, "nat", "Adamek chain of 1+Id", demo_nat);
  command(demo, "curried-nat", "endo-paranaturals of Hom", demo_curried_nat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    for (auto* s : app.get_subcommands())
      if (s->parsed()) out << s->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "paracat: " << e.what() << "\n";
    return 2;
  }

  start_watchdog(o.timeout_seconds, selected);
  const auto started = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = action(o);
  } catch (const Error& e) {
    r.exit_code = exit_code_for(e.kind());
    r.body = ordered_json{{"verdict", "error"}, {"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}};
  } catch (const nlohmann::json::exception& e) {
    r.exit_code = 2;
    r.body = ordered_json{{"verdict", "error"}, {"error", {{"kind", "input"}, {"message", e.what()}}}};
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();

  ordered_json report{{"schema", kReportSchema}, {"command", selected}, {"tool_version", PARACAT_VERSION}};
  report.update(r.body);
  report["exit_code"] = r.exit_code;
  report["elapsed_ms"] = static_cast<long long>(elapsed);

  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      err << "paracat: cannot write '" << o.out << "'\n";
      return 2;
    }
    f << report.dump(2) << "\n";
  }
  if (o.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << "command: " << selected << "\n" << render_text(r.body);
  }
  if (r.exit_code >= 2 && report.contains("error")) err << "paracat " << selected << ": " << report["error"]["message"].get<std::string>() << "\n";
  return r.exit_code;
}

}  // namespace paracat::cli
