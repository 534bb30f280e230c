#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "paracat/error.hpp"
#include "paracat/paranat.hpp"

using namespace paracat;

namespace {

SetFunctorTable presheaf_p() {
  SetFunctorTable t;
  t.sets = {{"0", {"x", "y"}}, {"1", {"z"}}};
  t.maps = {{"u", {{"z", "x"}}}};
  return t;
}

DifunctorRef tab(const ExprRef& e, const CategoryRef& base) { return share(eval_difunctor_expr(e, base)); }

}  // namespace

TEST_CASE("identity on Hom over the arrow category") {
  auto base = share(fixtures::arrow());
  auto hom = tab(expr::hom(), base);
  auto report = check_paranatural(Paranatural::identity(hom));
  CHECK(report.ok);
  CHECK(report.checked > 0);
}

TEST_CASE("the presheaf counterexample") {
  auto base = share(fixtures::arrow());
  auto p = tab(expr::from_presheaf(presheaf_p()), base);
  auto phi = Paranatural::from_labels(p, p, {{"0", {{"x", "y"}, {"y", "x"}}}, {"1", {{"z", "z"}}}});
  for (auto f : {Formulation::Elementwise, Formulation::Pullback}) {
    auto report = check_paranatural(phi, f);
    REQUIRE_FALSE(report.ok);
    const auto* w = report.witness();
    CHECK(base->morphism(w->i2) == "u");
    CHECK(w->d0_value.str() == "x");
    CHECK(w->d1_value.str() == "z");
    CHECK(w->lhs.str() == "y");
    CHECK(w->rhs.str() == "x");
  }
  auto sp = struct_category(*p);
  CHECK_THROWS_AS(as_struct_functor(phi, sp, sp), PreconditionError);
}

TEST_CASE("constant e on the walking idempotent") {
  auto base = share(fixtures::walking_idempotent());
  auto hom = tab(expr::hom(), base);
  auto phi = Paranatural::from_labels(hom, hom, {{"*", {{"1", "e"}, {"e", "e"}}}});
  CHECK(check_paranatural(phi).ok);
  auto s = struct_category(*hom);
  auto F = as_struct_functor(phi, s, s);
  CHECK(validate_functor(F).ok());
  CHECK(F.object_map[s.object_of(0, 0)] == s.object_of(0, 1));
  CHECK(F.object_map[s.object_of(0, 1)] == s.object_of(0, 1));
}

TEST_CASE("enumeration counts") {
  auto one = share(fixtures::terminal());
  auto ab = tab(expr::constant(std::vector<std::string>{"a", "b"}), one);
  CHECK(enumerate_paranaturals(ab, ab).families.size() == 4);

  auto wi = share(fixtures::walking_idempotent());
  auto hom = tab(expr::hom(), wi);
  CHECK(enumerate_paranaturals(hom, hom).families.size() == 4);

  auto arrow = share(fixtures::arrow());
  auto p = tab(expr::from_presheaf(presheaf_p()), arrow);
  auto families = enumerate_paranaturals(p, p).families;
  std::size_t natural = 0;
  // Every component table P ⇒ P, filtered classically.
  for (const char* a : {"x", "y"})
    for (const char* b : {"x", "y"}) {
      std::map<std::string, std::map<std::string, std::string>> c{{"0", {{"x", a}, {"y", b}}}, {"1", {{"z", "z"}}}};
      if (!check_naturality(*arrow, presheaf_p(), presheaf_p(), c, true)) ++natural;
    }
  CHECK(families.size() == natural);
  CHECK(natural == 2);
}

TEST_CASE("enumeration truncates at the limit") {
  auto one = share(fixtures::terminal());
  auto abc = tab(expr::constant(std::vector<std::string>{"a", "b", "c"}), one);
  auto e = enumerate_paranaturals(abc, abc, 5);
  CHECK(e.truncated);
  CHECK(e.families.size() == 5);
}

TEST_CASE("composition, identities and formulation agreement") {
  for (const char* id : {"terminal", "arrow", "walking_idempotent", "chain(3)", "discrete(2)"}) {
    CAPTURE(id);
    auto base = share(fixtures::build(id));
    auto hom = tab(expr::hom(), base);
    auto fams = enumerate_paranaturals(hom, hom).families;
    REQUIRE_FALSE(fams.empty());
    auto s = struct_category(*hom);
    for (const auto& phi : fams) {
      CHECK(compose(Paranatural::identity(hom), phi) == phi);
      CHECK(compose(phi, Paranatural::identity(hom)) == phi);
      CHECK(validate_functor(as_struct_functor(phi, s, s)).ok());
      for (const auto& psi : fams) {
        auto c = compose(psi, phi);
        CHECK(check_paranatural(c).ok);
        for (const auto& chi : fams) CHECK(compose(chi, compose(psi, phi)) == compose(compose(chi, psi), phi));
      }
    }
  }
}

TEST_CASE("components outside the diagonal are input errors") {
  auto base = share(fixtures::arrow());
  auto hom = tab(expr::hom(), base);
  auto phi = Paranatural::identity(hom);
  phi.components[0][0] = 7;
  CHECK_THROWS_AS(check_paranatural(phi), InputError);
}
