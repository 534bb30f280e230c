#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "paracat/candidate.hpp"
#include "paracat/error.hpp"
#include "paracat/freethm.hpp"
#include "paracat/term.hpp"

using namespace paracat;
using namespace paracat::freethm;
using K = Type::Kind;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(PARACAT_TEST_DATA "/golden/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

constexpr const char* kSortType = "forall a. (a*a -> Bool) -> List a -> List a";

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

TypeRef random_type(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 7);
  switch (pick(rng)) {
    case 0: return Type::make(K::Var, nullptr, nullptr, "a");
    case 1: return Type::make(K::Unit);
    case 2: return Type::make(K::Bool);
    case 3: return Type::make(K::Nat);
    case 4: return Type::make(K::List, random_type(rng, depth - 1));
    case 5: return Type::make(K::Prod, random_type(rng, depth - 1), random_type(rng, depth - 1));
    case 6: return Type::make(K::Sum, random_type(rng, depth - 1), random_type(rng, depth - 1));
    default: return Type::make(K::Arrow, random_type(rng, depth - 1), random_type(rng, depth - 1));
  }
}

// The planted table candidate: sorts by element index and ignores the comparison.
Candidate index_sort_table(const std::vector<int>& sizes, int list_bound) {
  Candidate c;
  c.kind = Candidate::Kind::Table;
  auto list_a = parse_type("forall a. List a");
  Semantics sem{list_bound, 3};
  for (int n : sizes) {
    auto A = carrier(n);
    auto lists = sem.enumerate(*list_a->a, A, A);
    std::vector<Value> images;
    for (const auto& l : lists) {
      auto items = l.items();
      std::sort(items.begin(), items.end(), [](const Value& x, const Value& y) { return std::stoi(x.label()) < std::stoi(y.label()); });
      images.push_back(Value::list(items));
    }
    c.table[n]["*"] = Value::func(lists, images).str();
  }
  return c;
}

}  // namespace

TEST_CASE("type parsing") {
  auto sort = parse_type(kSortType);
  REQUIRE(sort->kind == K::Forall);
  const auto& body = *sort->a;
  REQUIRE(body.kind == K::Arrow);
  CHECK(body.a->kind == K::Arrow);
  CHECK(body.a->a->kind == K::Prod);
  CHECK(body.a->b->kind == K::Bool);
  CHECK(body.b->kind == K::Arrow);
  CHECK(body.b->a->kind == K::List);

  auto id = parse_type("forall a. a -> a");
  CHECK(id->a->kind == K::Arrow);
  CHECK(id->a->a->kind == K::Var);

  CHECK_THROWS_AS(parse_type("forall a. forall b. a"), UnsupportedError);
  CHECK_THROWS_AS(parse_type("forall a. a -> b"), UnsupportedError);
  CHECK_THROWS_AS(parse_type("forall a. (a -> "), InputError);
}

TEST_CASE("parse and print round-trip on generated types") {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 50; ++i) {
    auto t = Type::make(K::Forall, random_type(rng, 3), nullptr, "a");
    auto printed = print_type(*t);
    CAPTURE(printed);
    CHECK(*parse_type(printed) == *t);
  }
}

TEST_CASE("variance split") {
  CHECK(split_variance(*parse_type("forall a. (a -> a) -> a")->a) == "(J -> I) -> J");
  CHECK(split_variance(*parse_type("forall a. a -> Bool")->a) == "I -> Bool");
  CHECK(split_variance(*parse_type("forall a. List a -> List a")->a) == "List I -> List J");
}

TEST_CASE("derived maps") {
  auto var = parse_type("forall a. a")->a;
  auto m = derive_maps(*var);
  CHECK(print_map(*m.pos) == "i2");
  CHECK(print_map(*m.neg) == "id");
  CHECK(print_map(*derive_maps(*parse_type("forall a. List a")->a).pos) == "map i2");
  auto w = parse_type("forall a. (a -> a) -> a")->a;
  CHECK(render_applied(*derive_maps(*w).pos, *w, "w") == "λx. i2 (w (x ∘ i2))");
}

TEST_CASE("free theorems match the golden files") {
  CHECK(emit_free_theorem(*parse_type(kSortType)).normalized == golden("freethm_sorting.txt"));
  CHECK(emit_free_theorem(*parse_type("forall a. List a -> List a -> List a")).normalized == golden("freethm_append.txt"));
  CHECK(emit_free_theorem(*parse_type("forall a. a -> a")).normalized == golden("freethm_identity.txt"));
  CHECK(emit_free_theorem(*parse_type(kSortType)).form == "conditional");
  CHECK(emit_free_theorem(*parse_type("forall a. a -> a")).form == "substituted");
  CHECK_THROWS_AS(emit_free_theorem(*parse_type("forall a. a")->a), InputError);
}

TEST_CASE("insertion sort is parametric") {
  Candidate sort;
  sort.term = parse_term(kInsertionSort);
  CheckOptions opts;
  opts.sizes = {2, 3};
  auto report = check_candidate(*parse_type(kSortType), sort, opts);
  CHECK(report.ok);
  CHECK(report.checked > 0);
}

TEST_CASE("planted candidates fail with witnesses") {
  auto id_type = parse_type("forall a. a -> a");
  auto pick = parse_candidate("fun x -> if carrier_size () == 2 then carrier_elem 0 else x");
  auto report = check_candidate(*id_type, pick, {});
  REQUIRE_FALSE(report.ok);
  REQUIRE(report.witness);
  CHECK(report.witness->lhs != report.witness->rhs);

  CheckOptions opts;
  opts.sizes = {2, 3};
  auto table = index_sort_table(opts.sizes, opts.list_bound);
  auto bad = check_candidate(*parse_type(kSortType), table, opts);
  REQUIRE_FALSE(bad.ok);
  REQUIRE(bad.witness);
  // The witness i2 is not monotone in element index.
  const auto& i2 = bad.witness->i2;
  bool monotone = true;
  for (std::size_t a = 0; a + 1 < i2.size(); ++a)
    monotone = monotone && std::stoi(i2.items()[a].label()) <= std::stoi(i2.items()[a + 1].label());
  CHECK_FALSE(monotone);
}

TEST_CASE("table candidates parse from JSON") {
  auto c = parse_candidate(R"({"table": {"2": {"*": "0"}}})");
  CHECK(c.kind == Candidate::Kind::Table);
  CHECK(c.table.at(2).at("*") == "0");
  CHECK_THROWS_AS(parse_candidate(R"({"table": 3})"), InputError);
}

TEST_CASE("interpreter basics") {
  Interpreter in(Semantics{}, carrier(2), 10000);
  auto id = parse_type("forall a. a -> a");
  CHECK(in.apply_candidate(parse_term("fun x -> x"), *id, Value::atom("1")).str() == "1");
  auto mapped = in.eval(parse_term("let rec map f xs = match xs with | [] -> [] | x :: r -> f x :: map f r in "
                                   "map (fun x -> x + 1) [1, 2]"));
  CHECK(show(mapped) == "[2, 3]");
  CHECK(show(in.eval(parse_term("match inr 3 with | inl x -> 0 | inr y -> y"))) == "3");
  Interpreter tight(Semantics{}, carrier(2), 50);
  CHECK_THROWS_AS(tight.eval(parse_term("let rec f x = f x in f 0")), ResourceError);
  CHECK_THROWS_AS(parse_term("fun x ->"), InputError);
}

TEST_CASE("derived maps are functorial") {
  Semantics sem{2, 2};
  const auto A = carrier(2), B = carrier(3), C = carrier(2);
  const FnTable i1{A, {Value::atom("2"), Value::atom("0")}};
  const FnTable i2{B, {Value::atom("1"), Value::atom("1"), Value::atom("0")}};
  FnTable i21{A, {}};
  for (const auto& x : A) i21.images.push_back(i2(i1(x)));
  const FnTable idA{A, A};
  for (const char* text : {"forall a. a", "forall a. List a", "forall a. a * Bool", "forall a. a + Unit", "forall a. a -> a",
                           "forall a. (a -> Bool) -> a", "forall a. List a -> Nat"}) {
    CAPTURE(text);
    auto t = parse_type(text)->a;
    for (const auto& v : sem.enumerate(*t, A, A)) {
      CHECK(sem.pos(*t, idA, A, A, v) == v);
      CHECK(sem.neg(*t, idA, A, A, v) == v);
      CHECK(sem.pos(*t, i21, C, A, v) == sem.pos(*t, i2, C, A, sem.pos(*t, i1, B, A, v)));
    }
    for (const auto& v : sem.enumerate(*t, C, A)) CHECK(sem.neg(*t, i21, C, A, v) == sem.neg(*t, i1, B, A, sem.neg(*t, i2, C, A, v)));
  }
}

TEST_CASE("semantics agree with the difunctor evaluator") {
  auto base = share(fixtures::finset_fragment(std::vector<int>{2, 3}));
  for (const char* text : {"forall a. a -> Bool", "forall a. (a -> a) -> a", "forall a. List a -> List a"}) {
    CAPTURE(text);
    auto t = parse_type(text)->a;
    auto e = to_difunctor_expr(*t, 1, 3);
    ExprEvaluator ev(base);
    for (int I = 0; I < 2; ++I)
      for (int J = 0; J < 2; ++J) {
        // (3 -> 3) -> 3 has 3^27 elements; both sides must refuse it.
        if (I == 1 && J == 1 && t->a->kind == K::Arrow) {
          const Semantics big{1, 3};
          CHECK_THROWS_AS(big.enumerate(*t, carrier(3), carrier(3)), ResourceError);
          CHECK_THROWS_AS(ev.enumerate(e, I, J), ResourceError);
          continue;
        }
        auto sem = Semantics{1, 3}.enumerate(*t, carrier(I == 0 ? 2 : 3), carrier(J == 0 ? 2 : 3));
        auto dif = ev.enumerate(e, I, J);
        std::sort(sem.begin(), sem.end());
        std::sort(dif.begin(), dif.end());
        CHECK(sem == dif);
      }
  }
}
