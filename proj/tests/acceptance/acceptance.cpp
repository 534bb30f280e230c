// Acceptance suite: one PASS/FAIL line per criterion.
//
//   paracat_acceptance [--only N] [--known-red FILE]
//
// Exit status is 0 when every criterion passes. With --known-red the status
// is 0 exactly when the failing criteria are the ones listed in FILE, so a
// documented red criterion does not mask a regression elsewhere (and an
// unexpected pass is reported too).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"
#include "paracat/candidate.hpp"
#include "paracat/demos.hpp"
#include "paracat/diyoneda.hpp"
#include "paracat/error.hpp"
#include "paracat/fixpoint.hpp"
#include "paracat/freethm.hpp"
#include "paracat/term.hpp"
#include "paracat/tymodel.hpp"

using namespace paracat;
using nlohmann::json;

namespace {

const std::string kData = PARACAT_TEST_DATA;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_.empty()) first_ = what;
    ok_ = ok_ && ok;
  }
  Outcome done(const std::string& summary) const {
    return {ok_, ok_ ? summary + " (" + std::to_string(checks_) + " checks)" : "first failure: " + first_ + "; " + summary};
  }
  bool ok() const { return ok_; }

 private:
  bool ok_ = true;
  std::size_t checks_ = 0;
  std::string first_;
};

json oracle() {
  std::ifstream in(kData + "/expected/oracles.json");
  return json::parse(in);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DifunctorRef tab(const ExprRef& e, const CategoryRef& base) { return share(eval_difunctor_expr(e, base)); }

ExprRef const_set(int n) {
  std::vector<std::string> els;
  for (int i = 0; i < n; ++i) els.push_back(std::to_string(i));
  return expr::constant(els);
}

const std::vector<std::string> kFixtures = {"terminal", "discrete(2)", "arrow", "walking_idempotent", "chain(2)", "chain(3)"};

// The representable presheaf hom(-, last object) as a table.
SetFunctorTable representable(const FinCategory& C) {
  const int X = C.object_count() - 1;
  SetFunctorTable t;
  for (int I = 0; I < C.object_count(); ++I) {
    auto& s = t.sets[C.object(I)];
    for (int m : C.hom(I, X)) s.push_back(C.morphism(m));
  }
  for (int m = 0; m < C.morphism_count(); ++m) {
    auto& map = t.maps[C.morphism(m)];
    for (int h : C.hom(C.cod(m), X)) map[C.morphism(h)] = C.morphism(C.compose(h, m));
  }
  return t;
}

// Difunctors used across criteria, per fixture.
std::vector<std::pair<std::string, DifunctorRef>> difunctor_corpus(const CategoryRef& base) {
  return {{"Hom", tab(expr::hom(), base)},
          {"2", tab(const_set(2), base)},
          {"Hom*2", tab(expr::prod(expr::hom(), const_set(2)), base)},
          {"y", tab(expr::from_presheaf(representable(*base)), base)}};
}

// Every component family Δ ⇒ Γ, or nullopt when there are more than `cap`.
std::optional<std::vector<Paranatural>> all_families(const DifunctorRef& d, const DifunctorRef& g, std::size_t cap) {
  const int n = d->category().object_count();
  std::vector<std::pair<int, int>> slots;
  std::vector<int> radix;
  double total = 1;
  for (int I = 0; I < n; ++I)
    for (int x = 0; x < d->size(I, I); ++x) {
      slots.emplace_back(I, x);
      radix.push_back(g->size(I, I));
      total *= g->size(I, I);
    }
  if (total > static_cast<double>(cap)) return std::nullopt;
  std::vector<Paranatural> out;
  if (total == 0) return out;
  std::vector<int> digits(slots.size(), 0);
  for (;;) {
    Paranatural phi{d, g, std::vector<std::vector<int>>(n)};
    for (int I = 0; I < n; ++I) phi.components[I].assign(d->size(I, I), 0);
    for (std::size_t k = 0; k < slots.size(); ++k) phi.components[slots[k].first][slots[k].second] = digits[k];
    out.push_back(std::move(phi));
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == radix[k]) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------- criterion 1

// A random presheaf on a chain: sets of size 1..3, maps along generators i→i+1,
// composites by composition (the arrow category is chain(2)).
SetFunctorTable random_presheaf(const FinCategory& C, std::mt19937& rng) {
  const int n = C.object_count();
  std::uniform_int_distribution<int> size(1, 3);
  std::vector<int> sizes(n);
  SetFunctorTable t;
  for (int i = 0; i < n; ++i) {
    sizes[i] = size(rng);
    for (int k = 0; k < sizes[i]; ++k) t.sets[C.object(i)].push_back(std::string(1, static_cast<char>('a' + k)) + std::to_string(i));
  }
  // gen[i]: P(i+1) → P(i)
  std::vector<std::vector<int>> gen(n > 0 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i)
    for (int k = 0; k < sizes[i + 1]; ++k) gen[i].push_back(std::uniform_int_distribution<int>(0, sizes[i] - 1)(rng));
  for (int m = 0; m < C.morphism_count(); ++m) {
    const int a = C.dom(m), b = C.cod(m);
    auto& map = t.maps[C.morphism(m)];
    for (int k = 0; k < sizes[b]; ++k) {
      int e = k;
      for (int j = b - 1; j >= a; --j) e = gen[j][e];
      map[t.sets[C.object(b)][k]] = t.sets[C.object(a)][e];
    }
  }
  return t;
}

Outcome specialization() {
  std::mt19937 rng(1729);
  Tally t;
  std::size_t families = 0, natural = 0;
  for (const char* id : {"arrow", "chain(3)"}) {
    auto base = share(fixtures::build(id));
    for (int pair = 0; pair < 20; ++pair) {
      auto P = random_presheaf(*base, rng), Q = random_presheaf(*base, rng);
      auto dP = tab(expr::from_presheaf(P), base), dQ = tab(expr::from_presheaf(Q), base);
      auto all = all_families(dP, dQ, 1u << 20);
      t.expect(all.has_value(), std::string(id) + ": family space too large");
      if (!all) continue;
      for (const auto& phi : *all) {
        ++families;
        std::map<std::string, std::map<std::string, std::string>> comps = phi.to_labels();
        const bool classical = !check_naturality(*base, P, Q, comps, true);
        const bool para = check_paranatural(phi).ok;
        natural += classical;
        t.expect(classical == para, std::string(id) + " pair " + std::to_string(pair));
      }
    }
  }
  return t.done("40 presheaf pairs, " + std::to_string(families) + " families, " + std::to_string(natural) + " natural");
}

// ---------------------------------------------------------------- criterion 2

Outcome composition_closure() {
  Tally t;
  std::size_t composites = 0;
  for (const auto& id : kFixtures) {
    auto base = share(fixtures::build(id));
    auto hom = tab(expr::hom(), base);
    auto two = tab(const_set(2), base);
    auto hom2 = tab(expr::prod(expr::hom(), const_set(2)), base);
    auto y = tab(expr::from_presheaf(representable(*base)), base);
    for (const auto& d : {hom, two, hom2, y}) {
      auto fams = enumerate_paranaturals(d, d).families;
      const std::size_t cap = std::min<std::size_t>(fams.size(), 24);
      for (std::size_t a = 0; a < fams.size(); ++a) {
        t.expect(compose(Paranatural::identity(d), fams[a]) == fams[a], id + ": left unit");
        t.expect(compose(fams[a], Paranatural::identity(d)) == fams[a], id + ": right unit");
        for (std::size_t b = 0; b < fams.size(); ++b) {
          auto ab = compose(fams[a], fams[b]);
          ++composites;
          t.expect(check_paranatural(ab).ok, id + ": composite fails the checker");
          if (a < cap && b < cap)
            for (std::size_t c = 0; c < cap; ++c)
              t.expect(compose(ab, fams[c]) == compose(fams[a], compose(fams[b], fams[c])), id + ": associativity");
        }
      }
    }
  }
  return t.done(std::to_string(composites) + " composites checked");
}

// ---------------------------------------------------------------- criterion 3

Outcome formulation_agreement() {
  Tally t;
  std::size_t compared = 0;
  std::mt19937 rng(7);
  auto compare = [&](const Paranatural& phi, const std::string& where) {
    auto e = check_paranatural(phi, Formulation::Elementwise);
    auto p = check_paranatural(phi, Formulation::Pullback);
    ++compared;
    t.expect(e.ok == p.ok && e.violations == p.violations, where);
  };
  auto run_pair = [&](const DifunctorRef& d, const DifunctorRef& g, const std::string& where) {
    if (auto all = all_families(d, g, 4096)) {
      for (const auto& phi : *all) compare(phi, where);
      return;
    }
    // Too many to list: a seeded sample of component tables.
    const int n = d->category().object_count();
    for (int s = 0; s < 512; ++s) {
      Paranatural phi{d, g, std::vector<std::vector<int>>(n)};
      for (int I = 0; I < n; ++I)
        for (int x = 0; x < d->size(I, I); ++x)
          phi.components[I].push_back(std::uniform_int_distribution<int>(0, g->size(I, I) - 1)(rng));
      compare(phi, where);
    }
  };
  for (const auto& id : kFixtures) {
    auto base = share(fixtures::build(id));
    auto corpus = difunctor_corpus(base);
    for (const auto& [dn, d] : corpus)
      for (const auto& [gn, g] : corpus) run_pair(d, g, id + " " + dn + "=>" + gn);
  }
  for (const char* id : {"finset_fragment(1,2)", "finset_fragment(2,3)"}) {
    auto base = share(fixtures::build(id));
    std::vector<std::pair<std::string, DifunctorRef>> corpus = {
        {"Var", tab(expr::var(), base)},
        {"Var->Var", tab(expr::arrow(expr::var(), expr::var()), base)},
        {"Hom", tab(expr::hom(), base)}};
    for (const auto& [dn, d] : corpus)
      for (const auto& [gn, g] : corpus) run_pair(d, g, std::string(id) + " " + dn + "=>" + gn);
  }
  return t.done(std::to_string(compared) + " families compared");
}

// ---------------------------------------------------------------- criterion 4

Outcome diyoneda_soundness() {
  Tally t;
  std::size_t forwards = 0, cells = 0;
  for (const auto& id : kFixtures) {
    auto base = share(fixtures::build(id));
    const int n = base->object_count();
    for (const auto& [name, g] : difunctor_corpus(base)) {
      for (int I = 0; I < n; ++I)
        for (int J = 0; J < n; ++J) {
          auto source = diyo_difunctor(base, J, I);
          for (const auto& x : g->cell(I, J).elements) {
            auto psi = diyo_forward(g, source, I, J, x);
            ++forwards;
            t.expect(check_paranatural(psi).ok, id + " " + name + ": forward image not paranatural");
            if (I == J) t.expect(diyo_reflect(psi, I) == x, id + " " + name + ": reflect is not a retraction");
          }
        }
      auto probe = probe_diyoneda(g);
      cells += probe.cells.size();
      t.expect(probe.verdict != "unknown", id + " " + name + ": probe incomplete");
    }
  }
  const json o = oracle()["walking_idempotent"];
  auto probe = probe_diyoneda(tab(expr::hom(), share(fixtures::walking_idempotent())));
  const auto& cell = probe.cells.at(0);
  t.expect(cell.lhs == o["hom_cell"].get<std::size_t>() && cell.rhs == o["diyo_to_hom"].get<std::size_t>(),
           "walking idempotent counts differ from the oracle");
  return t.done(std::to_string(forwards) + " forward images, " + std::to_string(cells) + " probe cells; walking idempotent " +
                std::to_string(cell.lhs) + " vs " + (cell.rhs ? std::to_string(*cell.rhs) : "?") + " (oracle " +
                o["hom_cell"].dump() + " vs " + o["diyo_to_hom"].dump() + ")");
}

// ---------------------------------------------------------------- criterion 5

Outcome ccc_terminal() {
  Tally t;
  auto one = share(fixtures::terminal());
  std::string headline;
  const json rows = oracle()["currying_terminal_base"];
  for (const auto& row : rows) {
    const int th = row["theta"], de = row["delta"], ga = row["gamma"];
    auto p = probe_exponential(tab(const_set(th), one), tab(const_set(de), one), tab(const_set(ga), one));
    const std::string where = "sizes " + std::to_string(th) + "," + std::to_string(de) + "," + std::to_string(ga);
    t.expect(p.verdict == "bijection", where + ": " + p.verdict);
    t.expect(p.lhs == row["lhs"].get<std::size_t>() && p.rhs == row["rhs"].get<std::size_t>(), where + ": counts differ from the oracle");
    if (th == 2 && de == 2 && ga == 2)
      headline = std::to_string(p.lhs.value_or(0)) + " = " + std::to_string(p.rhs.value_or(0));
  }
  return t.done("8 constant triples bijective; 2,2,2 gives " + headline);
}

// ---------------------------------------------------------------- criterion 6

Outcome initial_algebras() {
  Tally t;
  auto two = adamek_initial(*parse_polyfunctor("2"), 10);
  t.expect(two.stabilized && two.step == 1 && two.initial.carrier.size() == 2, "Const(2) does not stabilize at step 1");
  auto id = adamek_initial(*parse_polyfunctor("Id"), 10);
  t.expect(id.stabilized && id.initial.carrier.empty(), "Id does not stabilize at the empty set");
  auto nat = adamek_initial(*parse_polyfunctor("1+Id"), 10);
  bool chain = !nat.stabilized && nat.sizes.size() == 11;
  for (std::size_t k = 0; chain && k < nat.sizes.size(); ++k) chain = nat.sizes[k] == k;
  t.expect(chain, "1+Id chain sizes are not 0..10");
  std::size_t algebras = 0;
  for (const char* text : {"2", "Id", "1+2", "2*Id", "Id^2", "Id*Id", "1+1"}) {
    auto T = parse_polyfunctor(text);
    auto mu = adamek_initial(*T, 16);
    t.expect(mu.stabilized, std::string(text) + " does not stabilize");
    if (!mu.stabilized) continue;
    for (int n = 0; n <= 3; ++n) {
      std::vector<Value> carrier;
      for (int i = 0; i < n; ++i) carrier.push_back(Value::atom("c" + std::to_string(i)));
      for (const auto& alg : all_algebras(*T, carrier)) {
        ++algebras;
        auto f = fold(*T, alg);
        auto homs = all_algebra_homs(*T, mu.initial, alg);
        t.expect(homs.size() == 1 && homs[0].images == f.images, std::string(text) + ": fold is not the unique homomorphism");
      }
    }
  }
  return t.done("chain sizes 0..10; fold unique on " + std::to_string(algebras) + " algebras");
}

// ---------------------------------------------------------------- criterion 7

std::string as_function(const std::string& label) {
  auto open = label.find('[');
  std::string body = label.substr(open + 1, label.size() - open - 2), out = "{";
  int i = 0;
  std::size_t start = 0;
  for (;;) {
    auto comma = body.find(',', start);
    out += (i ? "," : "") + std::to_string(i) + ":" + body.substr(start, comma - start);
    ++i;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out + "}";
}

Outcome curried_nat() {
  auto expected = oracle()["curried_nat"]["families"];
  auto end = structural_end(expr::hom(), expr::hom(), {2});
  std::set<std::map<std::string, std::string>> got, want;
  for (const auto& phi : end.families) {
    std::map<std::string, std::string> m;
    for (int x = 0; x < phi.source->size(0, 0); ++x)
      m[as_function(phi.source->element(0, 0, x).str())] = as_function(phi.target->element(0, 0, phi.apply_index(0, x)).str());
    got.insert(m);
  }
  for (const auto& f : expected) want.insert(f.get<std::map<std::string, std::string>>());
  const bool ok = !end.truncated && got == want;
  return {ok, std::to_string(got.size()) + " families vs " + std::to_string(want.size()) + " from the 256-candidate oracle" +
                  (ok ? "" : " (sets differ)")};
}

// ---------------------------------------------------------------- criterion 8

// Observations of a state up to `depth` steps, built from the coalgebra alone.
std::string behaviour(const PolyFunctor& T, const Coalgebra& c, const Value& x, int depth) {
  if (depth == 0) return "*";
  return apply_polyfunctor(T, [&](const Value& y) { return Value::atom(behaviour(T, c, y, depth - 1)); }, c.structure(x)).str();
}

Outcome coinduction() {
  Tally t;
  auto sys = demos::streams();
  ExprEvaluator ev(sys.base);
  auto classes = structural_coend(ev, sys.gamma, sys.structures());
  auto cls = [&](int k, int x) { return classes.class_of(classes.point_index(k, x)); };
  t.expect(cls(0, 0) == cls(1, 0) && cls(1, 0) == cls(1, 1), "all-zero streams not merged by the coend");
  t.expect(cls(2, 0) != cls(0, 0), "the 1-headed stream is merged");
  auto blocks = partition_refinement(*sys.functor, sys.disjoint_union());
  auto block_of = [&](const std::string& label) {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      for (const auto& v : blocks[b])
        if (v.str() == label) return static_cast<int>(b);
    return -1;
  };
  t.expect(block_of("P.p") == block_of("Q.q0") && block_of("Q.q0") == block_of("Q.q1"), "partition refinement splits the zeros");
  t.expect(block_of("R.r") != block_of("P.p"), "partition refinement merges r");

  // coinduction_equal against the classes for every relation that is a bisimulation
  std::size_t verdicts = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const auto& ca = sys.coalgebras[a].carrier;
      const auto& cb = sys.coalgebras[b].carrier;
      // All behaviourally-equal pairs form the largest bisimulation between a and b.
      Relation r{a, b, {}};
      for (const auto& x : ca)
        for (const auto& y : cb)
          if (behaviour(*sys.functor, sys.coalgebras[a], x, 6) == behaviour(*sys.functor, sys.coalgebras[b], y, 6))
            r.pairs.insert({x.label(), y.label()});
      if (!check_bisimulation(ev, sys.gamma, r, sys.structure(a), sys.structure(b)).holds) {
        t.expect(false, "behavioural equality is not a bisimulation");
        continue;
      }
      for (const auto& [x, y] : r.pairs) {
        auto v = coinduction_equal(ev, sys.gamma, r, sys.structure(a), sys.structure(b), x, y, classes);
        ++verdicts;
        t.expect(v.equal && v.same_class, "coinduction verdict disagrees with the classes at " + x + "," + y);
      }
    }

  // queues
  const json o = oracle()["queues"];
  std::string queue_summary;
  for (int capacity = 0; capacity <= 3; ++capacity) {
    auto q = demos::queues(2, capacity);
    const auto& qs = q.system;
    ExprEvaluator qev(qs.base);
    const std::string where = "queues capacity " + std::to_string(capacity);
    t.expect(check_bisimulation(qev, qs.gamma, q.representation, qs.structure(0), qs.structure(1)).holds,
             where + ": representation is not a bisimulation");
    auto qc = structural_coend(qev, qs.gamma, qs.structures());
    const int depth = 2 * capacity + 2;
    std::map<std::string, std::set<int>> by_behaviour;
    for (int k = 0; k < 2; ++k)
      for (std::size_t x = 0; x < qs.coalgebras[k].carrier.size(); ++x)
        by_behaviour[behaviour(*qs.functor, qs.coalgebras[k], qs.coalgebras[k].carrier[x], depth)].insert(
            qc.class_of(qc.point_index(k, static_cast<int>(x))));
    bool merged = true;
    std::set<int> used;
    for (const auto& [_, ids] : by_behaviour) {
      merged = merged && ids.size() == 1;
      used.insert(ids.begin(), ids.end());
    }
    t.expect(merged, where + ": observationally equal states left apart");
    t.expect(used.size() == by_behaviour.size(), where + ": observationally different states merged");
    if (capacity == 3) {
      t.expect(qs.coalgebras[0].carrier.size() == o["list_states"].get<std::size_t>() &&
                   qs.coalgebras[1].carrier.size() == o["batched_states"].get<std::size_t>() &&
                   by_behaviour.size() == o["observational_classes"].get<std::size_t>() &&
                   q.representation.pairs.size() == o["related_pairs"].get<std::size_t>(),
               "queue counts differ from the oracle");
      queue_summary = std::to_string(qs.coalgebras[0].carrier.size()) + "/" + std::to_string(qs.coalgebras[1].carrier.size()) +
                      " states, " + std::to_string(qc.classes.size()) + " classes";
    }
  }
  return t.done("streams: " + std::to_string(verdicts) + " coinduction verdicts; queues capacity 3: " + queue_summary);
}

// ---------------------------------------------------------------- criterion 9

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

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

Outcome free_theorems() {
  using namespace freethm;
  Tally t;
  const std::string sort_type = "forall a. (a*a -> Bool) -> List a -> List a";
  t.expect(emit_free_theorem(*parse_type(sort_type)).normalized == trim(slurp(kData + "/golden/freethm_sorting.txt")), "sorting golden");
  t.expect(emit_free_theorem(*parse_type("forall a. List a -> List a -> List a")).normalized ==
               trim(slurp(kData + "/golden/freethm_append.txt")),
           "append golden");
  t.expect(emit_free_theorem(*parse_type("forall a. a -> a")).normalized == trim(slurp(kData + "/golden/freethm_identity.txt")),
           "identity golden");

  CheckOptions opts;
  opts.sizes = {2, 3};
  opts.list_bound = 3;
  Candidate sort;
  sort.term = parse_term(kInsertionSort);
  auto good = check_candidate(*parse_type(sort_type), sort, opts);
  t.expect(good.ok, "insertion sort rejected");

  auto pick = parse_candidate("fun x -> if carrier_size () == 2 then carrier_elem 0 else x");
  auto bad1 = check_candidate(*parse_type("forall a. a -> a"), pick, opts);
  t.expect(!bad1.ok && bad1.witness.has_value(), "fixed-element candidate accepted");

  // sorts by element index, ignoring the comparison
  Candidate table;
  table.kind = Candidate::Kind::Table;
  Semantics sem{opts.list_bound, opts.nat_bound};
  for (int n : opts.sizes) {
    auto lists = sem.enumerate(*parse_type("forall a. List a")->a, carrier(n), carrier(n));
    std::vector<Value> images;
    for (const auto& l : lists) {
      auto items = l.items();
      std::sort(items.begin(), items.end(), [](const Value& a, const Value& b) { return std::stoi(a.label()) < std::stoi(b.label()); });
      images.push_back(Value::list(items));
    }
    table.table[n]["*"] = Value::func(lists, images).str();
  }
  auto bad2 = check_candidate(*parse_type(sort_type), table, opts);
  t.expect(!bad2.ok && bad2.witness.has_value(), "index-sorting table accepted");

  std::string w1 = bad1.witness ? "i2 " + bad1.witness->i2.str() : "none";
  std::string w2 = bad2.witness ? "i2 " + bad2.witness->i2.str() : "none";
  return t.done("3 goldens; insertion sort passes " + std::to_string(good.checked) + " chevrons; planted witnesses " + w1 + " and " + w2);
}

// ---------------------------------------------------------------- criterion 10

Outcome cwf_laws() {
  Tally t;
  // substitution functoriality and degeneration
  std::size_t equalities = 0;
  for (const char* id : {"terminal", "discrete(2)", "arrow", "walking_idempotent", "chain(3)"}) {
    auto base = share(fixtures::build(id));
    auto gamma = tab(expr::hom(), base);
    auto delta = tab(expr::prod(expr::hom(), const_set(2)), base);
    auto gs = share_structs(*gamma), ds = share_structs(*delta);
    std::vector<TyOver> types{weaken(gamma, gs, *tab(const_set(2), base), 2)};
    for (auto& A : small_difunctors(gs->category, 1)) types.push_back(make_ty(gamma, gs, std::move(A), 2));
    auto sigmas = enumerate_paranaturals(delta, gamma).families;
    auto taus = enumerate_paranaturals(delta, delta).families;
    if (sigmas.size() > 6) sigmas.resize(6);
    if (taus.size() > 6) taus.resize(6);
    for (const auto& A : types) {
      t.expect(*subst_ty(A, Paranatural::identity(gamma), gs).type == *A.type, std::string(id) + ": A[id] != A");
      auto terms = enumerate_tms(A).terms;
      for (const auto& tm : terms) t.expect(subst_tm(tm, Paranatural::identity(gamma), gs) == tm, std::string(id) + ": t[id] != t");
      for (const auto& s : sigmas)
        for (const auto& tau : taus) {
          t.expect(*subst_ty(subst_ty(A, s, ds), tau, ds).type == *subst_ty(A, compose(s, tau), ds).type,
                   std::string(id) + ": A[σ][τ] != A[στ]");
          for (const auto& tm : terms)
            t.expect(subst_tm(subst_tm(tm, s, ds), tau, ds) == subst_tm(tm, compose(s, tau), ds), std::string(id) + ": t[σ][τ] != t[στ]");
          equalities += 1 + terms.size();
        }
    }
    // degeneration over every component table of Γ ⇒ 2
    auto B = tab(const_set(2), base);
    auto A = weaken(gamma, gs, *B, 2);
    if (auto all = all_families(gamma, B, 4096))
      for (const auto& phi : *all) {
        Tm tm{A, phi.components};
        auto dep = check_tm(tm);
        auto plain = check_paranatural(phi);
        t.expect(dep.ok == plain.ok && dep.violations == plain.violations, std::string(id) + ": check_tm does not degenerate");
      }
  }
  const bool laws_ok = t.ok();

  // comprehension bijection
  std::size_t combos = 0, bijective = 0;
  std::string first_failure;
  std::vector<std::pair<std::string, ExprRef>> sets = {{"Hom", expr::hom()}, {"1", const_set(1)}, {"2", const_set(2)}};
  for (const char* id : {"terminal", "discrete(2)", "arrow", "walking_idempotent", "chain(3)"}) {
    auto base = share(fixtures::build(id));
    for (const auto& [gn, g] : sets)
      for (const auto& [an, a] : sets)
        for (const auto& [dn, d] : sets) {
          auto gamma = tab(g, base);
          auto ext = comprehension(weaken(gamma, share_structs(*gamma), eval_difunctor_expr(a, base), 2));
          auto p = probe_comprehension(ext, tab(d, base));
          ++combos;
          if (p.bijection()) {
            ++bijective;
          } else if (first_failure.empty()) {
            first_failure = std::string(id) + " Γ=" + gn + " A=" + an + " Δ=" + dn + " (" +
                            (p.substitutions ? std::to_string(*p.substitutions) : "?") + " substitutions vs " +
                            (p.pairs ? std::to_string(*p.pairs) : "?") + " pairs, q " + (p.q_is_term ? "is" : "is not") + " a term)";
          }
        }
  }
  t.expect(bijective == combos, "comprehension bijection fails on " + std::to_string(combos - bijective) + " of " +
                                    std::to_string(combos) + " fixtures, e.g. " + first_failure);

  // universe vs oracle
  bool universe_ok = true;
  std::size_t universe_rows = 0;
  auto one = share(fixtures::terminal());
  const json rows = oracle()["universe_terminal_base"];
  for (const auto& row : rows) {
    auto p = probe_universe(tab(const_set(row["S"]), one), row["bound"]);
    ++universe_rows;
    universe_ok = universe_ok && !p.truncated && p.cells.at(0) == row["universe_cell"].get<std::size_t>() &&
                  p.types == row["types"].get<std::size_t>() && p.ty_diagonal.total == row["diagonal_types"].get<std::size_t>() &&
                  p.ty_diagonal.identity == row["diagonal_roundtrip"].get<std::size_t>() &&
                  p.ty_off_diagonal.total == row["off_diagonal_types"].get<std::size_t>() &&
                  p.ty_off_diagonal.identity == row["off_diagonal_roundtrip"].get<std::size_t>() &&
                  p.terms == row["terms"].get<std::size_t>() && p.tm.identity == row["term_roundtrip"].get<std::size_t>();
  }
  universe_ok = universe_ok && universe_rows > 0;
  t.expect(universe_ok, "universe probe differs from the oracle");
  return t.done(std::string("substitution laws ") + (laws_ok ? "hold" : "fail") + " (" + std::to_string(equalities) +
                " equalities); comprehension bijective on " + std::to_string(bijective) + "/" + std::to_string(combos) +
                "; universe " + (universe_ok ? "matches" : "differs from") + " the oracle on " +
                std::to_string(universe_rows) + " rows");
}

// ---------------------------------------------------------------- criterion 11

struct BinaryRun {
  int code = -1;
  std::string out;
};

BinaryRun run_binary(const std::string& args) {
  BinaryRun r;
  const std::string cmd = std::string(PARACAT_BINARY) + " " + args + " --format json 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome determinism() {
  const std::string b = "--bundle " + kData + "/data/fixture_bundle.json";
  const std::vector<std::string> commands = {
      "validate " + kData + "/data/fixture_bundle.json",
      "validate " + kData + "/data/bad_assoc.json",
      "enumerate " + b + " --source P --target P",
      "enumerate --category walking_idempotent --source hom --target hom",
      "check-transformation " + b + " --phi badPresheafMap --formulation both",
      "check-transformation " + b + " --phi constE",
      "free-theorem 'forall a. (a*a -> Bool) -> List a -> List a'",
      "free-theorem " + b + " 'forall a. a -> a' --check pickFirst",
      "end --gamma hom --theta hom --fragment 2",
      "coend --gamma 'coalg({0,1}*Id)' --fragment 1,2",
      "bisim " + b + " --relation zeros",
      "bisim " + b + " --relation mixed",
      "probe diyoneda",
      "probe exponential",
      "probe uustalu",
      "probe universe --context 2 --bound 2",
      "demo sorting",
      "demo wildgroups",
      "demo streams",
      "demo queues",
      "demo nat --bound 10",
      "demo curried-nat",
  };
  const std::regex timing("\"elapsed_ms\":\\s*[0-9.]+");
  Tally t;
  for (const auto& c : commands) {
    auto a = run_binary(c), z = run_binary(c);
    t.expect(a.code >= 0 && a.code <= 3 && !a.out.empty(), "'" + c + "' did not run");
    t.expect(a.code == z.code && std::regex_replace(a.out, timing, "") == std::regex_replace(z.out, timing, ""),
             "'" + c + "' differs between runs");
  }
  return t.done(std::to_string(commands.size()) + " commands run twice");
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  std::string known_red_path;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) only = std::stoi(argv[++i]);
    else if (a == "--known-red" && i + 1 < argc) known_red_path = argv[++i];
    else {
      std::cerr << "usage: paracat_acceptance [--only N] [--known-red FILE]\n";
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"specialization equivalence", specialization},
      {"composition closure", composition_closure},
      {"chevron formulation agreement", formulation_agreement},
      {"diYoneda soundness", diyoneda_soundness},
      {"CCC at the one-object base", ccc_terminal},
      {"initial algebra suite", initial_algebras},
      {"curried naturals vs oracle", curried_nat},
      {"coinduction suite", coinduction},
      {"free theorems", free_theorems},
      {"CwF laws", cwf_laws},
      {"CLI determinism", determinism},
  };
  std::set<int> failed;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int number = static_cast<int>(k) + 1;
    if (only && number != only) continue;
    const auto started = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (!o.pass) failed.insert(number);
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << number << " " << criteria[k].first << " [" << timing << "]: " << o.detail
              << std::endl;
  }
  if (known_red_path.empty()) return failed.empty() ? 0 : 1;

  std::set<int> known;
  std::ifstream in(known_red_path);
  if (!in) {
    std::cerr << "cannot read " << known_red_path << "\n";
    return 2;
  }
  for (std::string line; std::getline(in, line);) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int n;
    if (ls >> n && (!only || n == only)) known.insert(n);
  }
  for (int n : known)
    if (!failed.count(n)) std::cout << "note: criterion " << n << " is listed as known red but passed\n";
  for (int n : failed)
    if (!known.count(n)) std::cout << "note: criterion " << n << " failed and is not listed as known red\n";
  if (!known.empty()) {
    std::cout << "known red:";
    for (int n : known) std::cout << " " << n;
    std::cout << "\n";
  }
  return failed == known ? 0 : 1;
}
