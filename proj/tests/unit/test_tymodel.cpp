#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "json.hpp"
#include "paracat/error.hpp"
#include "paracat/tymodel.hpp"

using namespace paracat;

namespace {

DifunctorRef tab(const ExprRef& e, const CategoryRef& base) { return share(eval_difunctor_expr(e, base)); }

DifunctorRef constant(const CategoryRef& base, int n) {
  std::vector<Value> els;
  for (int i = 0; i < n; ++i) els.push_back(Value::atom(std::to_string(i)));
  return share(constant_difunctor(base, els));
}

// A few types over Γ: weakened constants and every dependent type with cells of size ≤ 1.
std::vector<TyOver> types_over(const DifunctorRef& gamma, const StructRef& structs) {
  std::vector<TyOver> out;
  for (int n : {1, 2}) out.push_back(weaken(gamma, structs, *constant(gamma->base(), n), 2));
  for (auto& A : small_difunctors(structs->category, 1)) out.push_back(make_ty(gamma, structs, std::move(A), 2));
  return out;
}

}  // namespace

TEST_CASE("substitution is functorial") {
  for (const char* id : {"terminal", "arrow", "walking_idempotent"}) {
    CAPTURE(id);
    auto base = share(fixtures::build(id));
    auto gamma = tab(expr::hom(), base);
    auto delta = tab(expr::prod(expr::hom(), expr::constant(std::vector<std::string>{"a", "b"})), base);
    auto gs = share_structs(*gamma), ds = share_structs(*delta);
    auto sigmas = enumerate_paranaturals(delta, gamma).families;
    auto taus = enumerate_paranaturals(delta, delta).families;
    REQUIRE_FALSE(sigmas.empty());
    for (const auto& A : types_over(gamma, gs)) {
      CHECK(*subst_ty(A, Paranatural::identity(gamma), gs).type == *A.type);
      auto terms = enumerate_tms(A).terms;
      for (const auto& t : terms) CHECK(subst_tm(t, Paranatural::identity(gamma), gs) == t);
      for (const auto& s : sigmas)
        for (const auto& tau : taus) {
          CHECK(*subst_ty(subst_ty(A, s, ds), tau, ds).type == *subst_ty(A, compose(s, tau), ds).type);
          for (const auto& t : terms) CHECK(subst_tm(subst_tm(t, s, ds), tau, ds) == subst_tm(t, compose(s, tau), ds));
        }
    }
  }
}

TEST_CASE("check_tm degenerates to check_paranatural on weakened types") {
  for (const char* id : {"arrow", "walking_idempotent", "chain(3)"}) {
    CAPTURE(id);
    auto base = share(fixtures::build(id));
    auto gamma = tab(expr::hom(), base);
    auto B = constant(base, 2);
    auto A = weaken(gamma, share_structs(*gamma), *B, 2);
    // Every component table, valid or not.
    std::vector<std::pair<int, int>> slots;
    for (int I = 0; I < base->object_count(); ++I)
      for (int c = 0; c < gamma->size(I, I); ++c) slots.emplace_back(I, c);
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
      Tm t{A, std::vector<std::vector<int>>(base->object_count())};
      Paranatural phi{gamma, B, std::vector<std::vector<int>>(base->object_count())};
      for (std::size_t k = 0; k < slots.size(); ++k) {
        const int v = (mask >> k) & 1;
        t.components[slots[k].first].push_back(v);
        phi.components[slots[k].first].push_back(v);
      }
      auto dep = check_tm(t);
      auto plain = check_paranatural(phi);
      CHECK(dep.ok == plain.ok);
      if (!plain.ok) CHECK(*dep.witness() == *plain.witness());
    }
  }
}

TEST_CASE("the size bound is enforced") {
  auto base = share(fixtures::arrow());
  auto gamma = tab(expr::hom(), base);
  CHECK_THROWS_AS(weaken(gamma, share_structs(*gamma), *constant(base, 3), 2), PreconditionError);
}

TEST_CASE("comprehension by the singleton type is the context") {
  for (const char* id : {"arrow", "walking_idempotent"}) {
    auto base = share(fixtures::build(id));
    auto gamma = tab(expr::hom(), base);
    auto ext = comprehension(weaken(gamma, share_structs(*gamma), *constant(base, 1), 1));
    for (int I = 0; I < base->object_count(); ++I) {
      CHECK(ext.extended->size(I, I) == gamma->size(I, I));
      std::set<int> image(ext.p.components[I].begin(), ext.p.components[I].end());
      CHECK(image.size() == static_cast<std::size_t>(gamma->size(I, I)));
    }
    CHECK(check_paranatural(ext.p).ok);
    CHECK(check_tm(ext.q).ok);
  }
}

TEST_CASE("comprehension over the singleton context has the diagonal of A") {
  auto base = share(fixtures::arrow());
  auto gamma = constant(base, 1);
  auto hom = eval_difunctor_expr(expr::hom(), base);
  auto ext = comprehension(weaken(gamma, share_structs(*gamma), hom, 1));
  for (int I = 0; I < 2; ++I) CHECK(ext.extended->size(I, I) == hom.size(I, I));
}

TEST_CASE("comprehension probes") {
  auto probe = [](const char* id, const ExprRef& g, int a, const ExprRef& d) {
    auto base = share(fixtures::build(id));
    auto gamma = tab(g, base);
    auto ext = comprehension(weaken(gamma, share_structs(*gamma), *constant(base, a), 2));
    return probe_comprehension(ext, tab(d, base));
  };
  auto two = expr::constant(std::vector<std::string>{"0", "1"});
  SUBCASE("the bijection holds on one-object and discrete bases and for A = 1") {
    for (const char* id : {"terminal", "discrete(2)"}) {
      auto p = probe(id, expr::hom(), 2, two);
      CHECK(p.bijection());
      for (bool iso : p.diagonal_iso) CHECK(iso);
    }
    CHECK(probe("arrow", expr::hom(), 1, expr::hom()).bijection());
    CHECK(probe("arrow", two, 1, expr::hom()).bijection());
    CHECK(probe("chain(3)", expr::hom(), 1, two).bijection());
  }
  SUBCASE("an empty splice collapses the off-diagonal cell") {
    // DiYo(1,0) over the arrow category has no structures, so Γ.A(0,1) forgets A
    // and q stops being a term of A[p].
    auto p = probe("arrow", expr::hom(), 2, two);
    REQUIRE(p.substitutions.has_value());
    REQUIRE(p.pairs.has_value());
    CHECK(*p.substitutions == 16);
    CHECK(*p.pairs == 4);
    CHECK(p.p_paranatural);
    CHECK_FALSE(p.q_is_term);
    for (bool iso : p.diagonal_iso) CHECK(iso);
    CHECK_FALSE(p.bijection());
  }
  SUBCASE("the walking idempotent loses the diagonal isomorphism") {
    auto p = probe("walking_idempotent", expr::hom(), 2, two);
    REQUIRE(p.diagonal_iso.size() == 1);
    CHECK_FALSE(p.diagonal_iso[0]);
    CHECK_FALSE(p.bijection());
  }
}

TEST_CASE("small difunctor codes round-trip") {
  for (const char* id : {"terminal", "arrow", "walking_idempotent"}) {
    auto base = share(fixtures::build(id));
    for (const auto& A : small_difunctors(base, 2)) {
      CHECK(validate_difunctor(A).ok());
      CHECK(decode_small(encode_small(A), base) == A);
    }
  }
  auto base = share(fixtures::terminal());
  CHECK_THROWS_AS(decode_small(Value::atom("junk"), base), InputError);
  CHECK(small_difunctors(base, 2).size() == 3);
}

TEST_CASE("universe probe on the terminal base matches the oracle") {
  std::ifstream in(PARACAT_TEST_DATA "/expected/oracles.json");
  auto rows = nlohmann::json::parse(in)["universe_terminal_base"];
  auto base = share(fixtures::terminal());
  for (const auto& row : rows) {
    CAPTURE(row.dump());
    auto p = probe_universe(constant(base, row["S"]), row["bound"]);
    CHECK_FALSE(p.truncated);
    CHECK(p.cells.at(0) == row["universe_cell"].get<std::size_t>());
    CHECK(p.types == row["types"].get<std::size_t>());
    CHECK(p.ty_diagonal.total == row["diagonal_types"].get<std::size_t>());
    CHECK(p.ty_diagonal.identity == row["diagonal_roundtrip"].get<std::size_t>());
    CHECK(p.ty_off_diagonal.total == row["off_diagonal_types"].get<std::size_t>());
    CHECK(p.ty_off_diagonal.identity == row["off_diagonal_roundtrip"].get<std::size_t>());
    CHECK(p.terms == row["terms"].get<std::size_t>());
    CHECK(p.tm.identity == row["term_roundtrip"].get<std::size_t>());
    CHECK(p.codes_paranatural);
  }
}

TEST_CASE("universe membership") {
  auto base = share(fixtures::arrow());
  auto U = build_universe(base, 1);
  CHECK(validate_difunctor(*U.U).ok());
  for (int I = 0; I < 2; ++I)
    for (int J = 0; J < 2; ++J)
      for (const auto& code : U.U->cell(I, J).elements) CHECK(U.contains(I, J, code));
  CHECK_FALSE(U.contains(0, 0, Value::atom("junk")));
}
