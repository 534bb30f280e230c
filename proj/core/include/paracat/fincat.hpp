#pragma once

// Finite categories, functors between them, and finite-set fragments, all as
// explicit tables. Objects and morphisms are addressed by dense indices; the
// labels are what gets printed and serialized.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace paracat {

struct FinSetObj {
  std::string label;
  std::vector<std::string> elements;
};

struct MorphismSpec {
  std::string id;
  std::string dom;
  std::string cod;
};

// One row of a composition table: g ∘ f = gf, by morphism index.
struct ComposeEntry {
  int g = -1;
  int f = -1;
  int gf = -1;
};

class FinCategory {
 public:
  // Builds a category from label tables. Dangling labels, duplicate labels,
  // missing identity entries and conflicting duplicate compose rows are input
  // errors; law violations are kept and reported by validate_category.
  static FinCategory from_tables(const std::vector<std::string>& objects, const std::vector<MorphismSpec>& morphisms,
                                 const std::map<std::string, std::string>& identities,
                                 const std::vector<std::array<std::string, 3>>& compose);

  // A category whose objects are finite sets and whose morphisms are the
  // given functions (images by element index, one table per morphism).
  // Composition is function composition; the set must be closed under it.
  struct FunctionSpec {
    int dom;
    int cod;
    std::vector<int> images;
  };
  static FinCategory from_functions(std::vector<FinSetObj> sets, const std::vector<FunctionSpec>& functions);

  int object_count() const { return static_cast<int>(objects_.size()); }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const std::string& object(int o) const { return objects_.at(o); }
  const std::string& morphism(int m) const { return morphisms_.at(m).id; }
  int dom(int m) const { return dom_.at(m); }
  int cod(int m) const { return cod_.at(m); }
  int identity(int o) const { return identity_.at(o); }
  bool is_identity(int m) const { return identity_[dom_[m]] == m; }

  // g ∘ f, or -1 when the table has no entry.
  int compose(int g, int f) const;
  const std::vector<int>& hom(int a, int b) const { return hom_[static_cast<std::size_t>(a) * objects_.size() + b]; }
  const std::vector<ComposeEntry>& compose_entries() const { return entries_; }

  std::optional<int> find_object(std::string_view label) const;
  std::optional<int> find_morphism(std::string_view label) const;
  int object_index(std::string_view label) const;    // throws InputError
  int morphism_index(std::string_view label) const;  // throws InputError

  // Finite-set data; present exactly for fragments.
  bool is_fragment() const { return !sets_.empty(); }
  const FinSetObj& set(int o) const { return sets_.at(o); }
  int apply(int m, int element) const { return functions_.at(m).at(element); }
  const std::vector<int>& function(int m) const { return functions_.at(m); }
  int element_index(int o, std::string_view label) const;  // throws InputError

  friend bool operator==(const FinCategory& a, const FinCategory& b);

 private:
  void index_structure();

  std::vector<std::string> objects_;
  std::vector<MorphismSpec> morphisms_;
  std::vector<int> dom_, cod_, identity_;
  std::vector<ComposeEntry> entries_;
  std::unordered_map<std::uint64_t, int> compose_;
  std::vector<std::vector<int>> hom_;
  std::unordered_map<std::string, int> object_index_, morphism_index_;
  std::vector<FinSetObj> sets_;
  std::vector<std::vector<int>> functions_;
};

using CategoryRef = std::shared_ptr<const FinCategory>;

inline CategoryRef share(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }
bool same_category(const CategoryRef& a, const CategoryRef& b);

struct Violation {
  std::string law;
  std::vector<std::string> witness;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate_category(const FinCategory& c);

struct FinFunctor {
  CategoryRef source;
  CategoryRef target;
  std::vector<int> object_map;
  std::vector<int> morphism_map;

  // From label tables; dangling labels are input errors.
  static FinFunctor from_labels(CategoryRef source, CategoryRef target, const std::map<std::string, std::string>& objects,
                                const std::map<std::string, std::string>& morphisms);
  static FinFunctor identity(CategoryRef c);
};

ValidationReport validate_functor(const FinFunctor& f);
// (g ∘ f) with f: A→B, g: B→C.
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);
bool operator==(const FinFunctor& a, const FinFunctor& b);

namespace fixtures {

FinCategory terminal();
FinCategory discrete(int n);
FinCategory arrow();
FinCategory walking_idempotent();
// Objects 0..n-1; `relation` lists generating pairs a<b; the reflexive-
// transitive closure must be antisymmetric.
FinCategory poset(int n, const std::vector<std::pair<int, int>>& relation);
FinCategory chain(int n);
// One-object category from a multiplication table: table[a][b] = a*b.
FinCategory monoid(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table);
FinCategory op(const FinCategory& c);
FinCategory product(const FinCategory& c, const FinCategory& d);
// One object per carrier with every function between carriers as morphisms.
FinCategory finset_fragment(const std::vector<int>& sizes);
FinCategory finset_fragment(std::vector<FinSetObj> sets);

// Parses fixture ids such as "arrow", "discrete(3)", "chain(3)",
// "poset(3;0<1,0<2)", "monoid(1,e;1*1=1,1*e=e,e*1=e,e*e=e)", "op(arrow)",
// "product(arrow,terminal)", "finset_fragment(1,2)".
FinCategory build(std::string_view id);

}  // namespace fixtures

}  // namespace paracat
