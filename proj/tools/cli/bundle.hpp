#pragma once

// Experiment bundles: one JSON file holding named categories, difunctors,
// transformations, candidates, fragments, coalgebras and relations.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "paracat/candidate.hpp"
#include "paracat/difun.hpp"
#include "paracat/fixpoint.hpp"
#include "paracat/paranat.hpp"

namespace paracat::cli {

struct NamedCoalgebra {
  PolyRef functor;
  Coalgebra coalgebra;
};

struct NamedRelation {
  std::string left, right;
  std::vector<std::pair<std::string, std::string>> pairs;
};

struct NamedCandidate {
  std::string type;
  freethm::Candidate candidate;
};

struct Bundle {
  std::map<std::string, CategoryRef> categories;
  std::map<std::string, DifunctorRef> difunctors;
  std::map<std::string, ExprRef> expressions;  // difunctors given by expressions
  std::map<std::string, std::string> difunctor_category;
  std::map<std::string, Paranatural> transformations;
  std::map<std::string, NamedCandidate> candidates;
  std::map<std::string, std::vector<int>> fragments;
  std::map<std::string, NamedCoalgebra> coalgebras;
  std::map<std::string, NamedRelation> relations;
};

// Parses and validates every object. Errors are InputError messages that
// start with a JSON pointer to the offending entry.
Bundle load_bundle(const std::string& path);
Bundle load_bundle_json(const nlohmann::json& j);

// Textual difunctor expressions:
//   hom | var | 2 | {a,b} | prod(e,e) | sum(e,e) | arrow(e,e) | diyo(J,I)
//   alg(T) | coalg(T) | list(e,n)
// where T is a polynomial functor such as 1+Id or {0,1}*Id.
ExprRef parse_expr(const std::string& text);
ExprRef expr_from_json(const nlohmann::json& j, const std::string& pointer);

// A category argument: bundle name first, otherwise a fixture id.
CategoryRef resolve_category(const Bundle* bundle, const std::string& ref);
// A difunctor argument over `base`: bundle difunctor name (which must live
// over that base) or an expression.
DifunctorRef resolve_difunctor(const Bundle* bundle, const std::string& ref, const CategoryRef& base);
ExprRef resolve_expr(const Bundle* bundle, const std::string& ref);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace paracat::cli
