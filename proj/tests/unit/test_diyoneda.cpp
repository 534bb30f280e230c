#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "json.hpp"
#include "paracat/diyoneda.hpp"

using namespace paracat;

namespace {

DifunctorRef tab(const ExprRef& e, const CategoryRef& base) { return share(eval_difunctor_expr(e, base)); }

nlohmann::json oracle() {
  std::ifstream in(PARACAT_TEST_DATA "/expected/oracles.json");
  return nlohmann::json::parse(in);
}

std::vector<DifunctorRef> corpus() {
  std::vector<DifunctorRef> out;
  for (const char* id : {"terminal", "discrete(2)", "arrow", "walking_idempotent", "chain(3)"}) {
    auto base = share(fixtures::build(id));
    out.push_back(tab(expr::hom(), base));
    out.push_back(tab(expr::constant(std::vector<std::string>{"a", "b"}), base));
    out.push_back(tab(expr::prod(expr::hom(), expr::constant(std::vector<std::string>{"a", "b"})), base));
  }
  return out;
}

}  // namespace

TEST_CASE("forward image of id0 on the arrow category") {
  auto base = share(fixtures::arrow());
  auto hom = tab(expr::hom(), base);
  auto psi = diyo_forward(hom, 0, 0, Value::atom("id0"));
  CHECK(psi.apply(0, Value::pair(Value::atom("id0"), Value::atom("id0"))).str() == "id0");
  CHECK(psi.source->size(1, 1) == 0);
}

TEST_CASE("forward image of 1 on the walking idempotent") {
  auto base = share(fixtures::walking_idempotent());
  auto hom = tab(expr::hom(), base);
  auto psi = diyo_forward(hom, 0, 0, Value::atom("1"));
  auto at = [&](const char* a, const char* b) { return psi.apply(0, Value::pair(Value::atom(a), Value::atom(b))).str(); };
  CHECK(at("1", "1") == "1");
  CHECK(at("1", "e") == "e");
  CHECK(at("e", "1") == "e");
  CHECK(at("e", "e") == "e");
}

TEST_CASE("forward images are paranatural and reflect retracts them") {
  for (const auto& gamma : corpus()) {
    const auto& C = gamma->category();
    for (int I = 0; I < C.object_count(); ++I)
      for (int J = 0; J < C.object_count(); ++J) {
        auto source = diyo_difunctor(gamma->base(), J, I);
        for (const auto& x : gamma->cell(I, J).elements) {
          auto psi = diyo_forward(gamma, source, I, J, x);
          CHECK(check_paranatural(psi).ok);
          if (I == J) CHECK(diyo_reflect(psi, I) == x);
        }
      }
  }
}

TEST_CASE("splices are valid difunctors") {
  for (const char* id : {"arrow", "walking_idempotent", "chain(3)"}) {
    auto base = share(fixtures::build(id));
    for (int I = 0; I < base->object_count(); ++I)
      for (int J = 0; J < base->object_count(); ++J) CHECK(validate_difunctor(*diyo_difunctor(base, J, I)).ok());
  }
}

TEST_CASE("diYoneda probe on constants over the terminal category") {
  auto one = share(fixtures::terminal());
  auto probe = probe_diyoneda(tab(expr::constant(std::vector<std::string>{"a", "b"}), one));
  CHECK(probe.verdict == "bijective");
  REQUIRE(probe.cells.size() == 1);
  CHECK(probe.cells[0].lhs == 2);
  CHECK(probe.cells[0].rhs == 2u);
}

TEST_CASE("walking idempotent cell counts agree with the oracle") {
  auto o = oracle()["walking_idempotent"];
  auto base = share(fixtures::walking_idempotent());
  auto hom = tab(expr::hom(), base);
  CHECK(enumerate_paranaturals(hom, hom).families.size() == o["hom_to_hom"].get<std::size_t>());
  auto probe = probe_diyoneda(hom);
  REQUIRE(probe.cells.size() == 1);
  CHECK(probe.cells[0].lhs == o["hom_cell"].get<std::size_t>());
  CHECK(probe.cells[0].rhs == o["diyo_to_hom"].get<std::size_t>());
  CHECK(probe.cells[0].injective == true);
  CHECK(probe.cells[0].surjective == false);
  CHECK(probe.verdict == "not-bijective");
}

TEST_CASE("probe completes on every fixture") {
  for (const auto& gamma : corpus()) {
    auto probe = probe_diyoneda(gamma);
    CHECK(probe.verdict != "unknown");
    for (const auto& c : probe.cells) CHECK(c.forward_paranatural);
  }
}

TEST_CASE("exponentials over the terminal category") {
  auto one = share(fixtures::terminal());
  auto two = tab(expr::constant(std::vector<std::string>{"0", "1"}), one);
  auto e = exponential(two, two);
  CHECK(e.difunctor->size(0, 0) == 4);
  CHECK(validate_difunctor(*e.difunctor).ok());
  // ev is application: each element is determined by its values at 0 and 1.
  std::set<std::pair<std::string, std::string>> graphs;
  for (int psi = 0; psi < 4; ++psi) graphs.insert({evaluate(e, 0, psi, 0).str(), evaluate(e, 0, psi, 1).str()});
  CHECK(graphs.size() == 4);
  auto ev = evaluation(e, share(product(*e.difunctor, *two)));
  CHECK(check_paranatural(ev).ok);
}

TEST_CASE("currying over the terminal category matches the oracle") {
  auto one = share(fixtures::terminal());
  auto set = [&](int n) {
    std::vector<std::string> els;
    for (int i = 0; i < n; ++i) els.push_back(std::to_string(i));
    return tab(expr::constant(els), one);
  };
  for (const auto& row : oracle()["currying_terminal_base"]) {
    auto p = probe_exponential(set(row["theta"]), set(row["delta"]), set(row["gamma"]));
    CHECK(p.lhs == row["lhs"].get<std::size_t>());
    CHECK(p.rhs == row["rhs"].get<std::size_t>());
    CHECK(p.verdict == "bijection");
  }
}

TEST_CASE("the constant singleton is terminal") {
  for (const auto& gamma : corpus()) {
    auto unit = tab(expr::constant(std::vector<std::string>{"*"}), gamma->base());
    CHECK(enumerate_paranaturals(gamma, unit).families.size() == 1);
  }
}

TEST_CASE("exponential of Hom over the arrow category validates") {
  auto base = share(fixtures::arrow());
  auto hom = tab(expr::hom(), base);
  auto e = exponential(hom, hom);
  CHECK(validate_difunctor(*e.difunctor).ok());
  auto p = probe_exponential(hom, hom, hom);
  CHECK(p.verdict != "unknown");
  CHECK(p.lhs.has_value());
}
