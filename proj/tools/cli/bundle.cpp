#include "bundle.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "paracat/error.hpp"

namespace paracat::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& message) {
  throw InputError(pointer + ": " + message);
}

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

const json& member(const json& j, const char* key, const std::string& pointer) {
  if (!j.is_object() || !j.contains(key)) fail(pointer, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key, const std::string& pointer) {
  const json& v = member(j, key, pointer);
  if (!v.is_string()) fail(pointer + "/" + key, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const std::string& pointer) {
  if (!j.is_array()) fail(pointer, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) fail(pointer, "expected an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::map<std::string, std::string> string_map(const json& j, const std::string& pointer) {
  if (!j.is_object()) fail(pointer, "expected an object of strings");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) fail(pointer + "/" + escape_pointer(k), "expected a string");
    out[k] = v.get<std::string>();
  }
  return out;
}

CategoryRef category_from_json(const json& j, const std::string& pointer) {
  if (j.is_string()) return share(fixtures::build(j.get<std::string>()));
  if (!j.is_object()) fail(pointer, "expected a fixture id or a category object");
  if (j.contains("fixture")) return share(fixtures::build(string_field(j, "fixture", pointer)));
  if (j.contains("sets")) {
    std::vector<FinSetObj> sets;
    for (const auto& [label, els] : member(j, "sets", pointer).items())
      sets.push_back({label, string_list(els, pointer + "/sets/" + escape_pointer(label))});
    auto set_index = [&](const std::string& label, const std::string& where) {
      for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i].label == label) return static_cast<int>(i);
      fail(where, "unknown set '" + label + "'");
    };
    std::vector<FinCategory::FunctionSpec> functions;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      std::vector<int> id(sets[s].elements.size());
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
      functions.push_back({static_cast<int>(s), static_cast<int>(s), id});
    }
    if (j.contains("functions")) {
      for (const auto& [name, f] : j.at("functions").items()) {
        const std::string where = pointer + "/functions/" + escape_pointer(name);
        const int dom = set_index(string_field(f, "dom", where), where + "/dom");
        const int cod = set_index(string_field(f, "cod", where), where + "/cod");
        auto table = string_map(member(f, "map", where), where + "/map");
        std::vector<int> images;
        for (const auto& x : sets[dom].elements) {
          auto it = table.find(x);
          if (it == table.end()) fail(where + "/map", "no image for '" + x + "'");
          int img = -1;
          for (std::size_t k = 0; k < sets[cod].elements.size(); ++k)
            if (sets[cod].elements[k] == it->second) img = static_cast<int>(k);
          if (img < 0) fail(where + "/map", "'" + it->second + "' is not an element of " + sets[cod].label);
          images.push_back(img);
        }
        functions.push_back({dom, cod, images});
      }
    }
    try {
      return share(FinCategory::from_functions(std::move(sets), functions));
    } catch (const InputError& e) {
      fail(pointer, e.what());
    }
  }
  const auto objects = string_list(member(j, "objects", pointer), pointer + "/objects");
  std::vector<MorphismSpec> morphisms;
  const json& ms = member(j, "morphisms", pointer);
  if (!ms.is_array()) fail(pointer + "/morphisms", "expected an array");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::string where = pointer + "/morphisms/" + std::to_string(i);
    morphisms.push_back({string_field(ms[i], "id", where), string_field(ms[i], "dom", where), string_field(ms[i], "cod", where)});
  }
  const auto identities = string_map(member(j, "identities", pointer), pointer + "/identities");
  std::vector<std::array<std::string, 3>> compose;
  const json& cs = member(j, "compose", pointer);
  if (!cs.is_array()) fail(pointer + "/compose", "expected an array of [g, f, gf] rows");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    auto row = string_list(cs[i], pointer + "/compose/" + std::to_string(i));
    if (row.size() != 3) fail(pointer + "/compose/" + std::to_string(i), "expected [g, f, gf]");
    compose.push_back({row[0], row[1], row[2]});
  }
  try {
    return share(FinCategory::from_tables(objects, morphisms, identities, compose));
  } catch (const InputError& e) {
    fail(pointer, e.what());
  }
}

SetFunctorTable set_functor_from_json(const json& j, const std::string& pointer) {
  SetFunctorTable t;
  for (const auto& [obj, els] : member(j, "sets", pointer).items())
    t.sets[obj] = string_list(els, pointer + "/sets/" + escape_pointer(obj));
  if (j.contains("maps"))
    for (const auto& [m, table] : j.at("maps").items())
      t.maps[m] = string_map(table, pointer + "/maps/" + escape_pointer(m));
  return t;
}

std::pair<std::string, std::string> split_key(const std::string& key, const std::string& pointer) {
  auto bar = key.find('|');
  if (bar == std::string::npos) fail(pointer, "key '" + key + "' is not of the form 'a|b'");
  return {key.substr(0, bar), key.substr(bar + 1)};
}

TabulatedDifunctor tabulated_from_json(const json& j, const CategoryRef& base, const std::string& pointer) {
  const auto& C = *base;
  const int n = C.object_count();
  TabulatedDifunctor d(base);
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  for (const auto& [key, els] : member(j, "values", pointer).items()) {
    const std::string where = pointer + "/values/" + escape_pointer(key);
    auto [I, J] = split_key(key, where);
    auto Ii = C.find_object(I), Ji = C.find_object(J);
    if (!Ii || !Ji) fail(where, "unknown object in '" + key + "'");
    std::vector<Value> values;
    for (const auto& s : string_list(els, where)) values.push_back(parse_value(s));
    d.set_cell(*Ii, *Ji, std::move(values));
    seen[static_cast<std::size_t>(*Ii) * n + *Ji] = true;
  }
  for (int I = 0; I < n; ++I)
    for (int J = 0; J < n; ++J)
      if (!seen[static_cast<std::size_t>(I) * n + J]) d.set_cell(I, J, {});
  auto read_table = [&](const json& tables, const std::string& key, int src_I, int src_J, int dst_I, int dst_J,
                        bool identity, const std::string& where) {
    std::vector<int> out;
    const auto& src = d.cell(src_I, src_J).elements;
    if (!tables.contains(key)) {
      if (!identity && !src.empty()) fail(where, "missing table '" + key + "'");
      for (std::size_t x = 0; x < src.size(); ++x) out.push_back(static_cast<int>(x));
      return out;
    }
    auto table = string_map(tables.at(key), where + "/" + escape_pointer(key));
    for (const auto& x : src) {
      auto it = table.find(x.str());
      if (it == table.end()) fail(where + "/" + escape_pointer(key), "no image for " + x.str());
      auto y = d.find(dst_I, dst_J, parse_value(it->second));
      if (!y) fail(where + "/" + escape_pointer(key), it->second + " is not in the target cell");
      out.push_back(*y);
    }
    return out;
  };
  const json empty = json::object();
  const json& neg = j.contains("mapNeg") ? j.at("mapNeg") : empty;
  const json& pos = j.contains("mapPos") ? j.at("mapPos") : empty;
  for (int m = 0; m < C.morphism_count(); ++m)
    for (int J = 0; J < n; ++J)
      d.set_neg(m, J, read_table(neg, C.morphism(m) + "|" + C.object(J), C.cod(m), J, C.dom(m), J, C.is_identity(m),
                                 pointer + "/mapNeg"));
  for (int I = 0; I < n; ++I)
    for (int m = 0; m < C.morphism_count(); ++m)
      d.set_pos(I, m, read_table(pos, C.object(I) + "|" + C.morphism(m), I, C.dom(m), I, C.cod(m), C.is_identity(m),
                                 pointer + "/mapPos"));
  return d;
}

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }
  ExprRef parse() {
    auto e = expr();
    if (pos_ != s_.size()) error("trailing input");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw InputError("expression parse error at " + std::to_string(pos_) + ": " + msg + " in '" + s_ + "'");
  }
  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) error(std::string("expected '") + c + "'");
  }
  std::string word() {
    std::string w;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) w += s_[pos_++];
    return w;
  }
  // Raw text up to the matching close paren or a top-level comma.
  std::string raw_argument() {
    int depth = 0;
    std::string out;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if ((c == ',' || c == ')') && depth == 0) break;
      if (c == '(' || c == '{') ++depth;
      if (c == ')' || c == '}') --depth;
      out += c;
      ++pos_;
    }
    return out;
  }
  ExprRef expr() {
    if (pos_ < s_.size() && s_[pos_] == '{') {
      std::vector<std::string> labels;
      ++pos_;
      std::string cur;
      while (pos_ < s_.size() && s_[pos_] != '}') {
        if (s_[pos_] == ',') {
          labels.push_back(cur);
          cur.clear();
        } else {
          cur += s_[pos_];
        }
        ++pos_;
      }
      expect('}');
      if (!cur.empty()) labels.push_back(cur);
      return expr::constant(labels);
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      int n = std::stoi(word());
      if (n == 1) return expr::constant(std::vector<std::string>{"*"});
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
      return expr::constant(labels);
    }
    const std::string w = word();
    if (w == "hom") return expr::hom();
    if (w == "var") return expr::var();
    if (w.empty()) error("expected an expression");
    expect('(');
    ExprRef out;
    if (w == "prod" || w == "sum" || w == "arrow") {
      auto a = expr();
      expect(',');
      auto b = expr();
      out = w == "prod" ? expr::prod(a, b) : w == "sum" ? expr::sum(a, b) : expr::arrow(a, b);
    } else if (w == "diyo") {
      auto J = raw_argument();
      expect(',');
      auto I = raw_argument();
      out = expr::diyo(J, I);
    } else if (w == "alg" || w == "coalg") {
      auto t = parse_polyfunctor(raw_argument());
      out = w == "alg" ? expr::alg_of(t) : expr::coalg_of(t);
    } else if (w == "list") {
      auto a = expr();
      expect(',');
      out = expr::list_of(a, std::stoi(word()));
    } else {
      error("unknown constructor '" + w + "'");
    }
    expect(')');
    return out;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprRef parse_expr(const std::string& text) { return ExprParser(text).parse(); }

ExprRef expr_from_json(const json& j, const std::string& pointer) {
  if (j.is_string()) {
    try {
      return parse_expr(j.get<std::string>());
    } catch (const InputError& e) {
      fail(pointer, e.what());
    }
  }
  if (j.is_object() && j.contains("presheaf")) return expr::from_presheaf(set_functor_from_json(j.at("presheaf"), pointer + "/presheaf"));
  if (j.is_object() && j.contains("covariant"))
    return expr::from_covariant(set_functor_from_json(j.at("covariant"), pointer + "/covariant"));
  fail(pointer, "expected an expression string or a {presheaf|covariant} table");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

Bundle load_bundle_json(const json& j) {
  if (!j.is_object()) fail("", "bundle must be a JSON object");
  Bundle b;
  const json empty = json::object();
  auto section = [&](const char* key) -> const json& {
    if (!j.contains(key)) return empty;
    if (!j.at(key).is_object()) fail(std::string("/") + key, "expected an object");
    return j.at(key);
  };
  for (const auto& [name, c] : section("categories").items()) {
    const std::string where = "/categories/" + escape_pointer(name);
    auto cat = category_from_json(c, where);
    auto report = validate_category(*cat);
    if (!report.ok()) fail(where, "category laws fail: " + report.summary());
    b.categories[name] = cat;
  }
  for (const auto& [name, f] : section("fragments").items()) {
    const std::string where = "/fragments/" + escape_pointer(name);
    if (!f.is_array()) fail(where, "expected an array of sizes");
    std::vector<int> sizes;
    for (const auto& s : f) {
      if (!s.is_number_integer() || s.get<int>() < 0) fail(where, "sizes must be non-negative integers");
      sizes.push_back(s.get<int>());
    }
    b.fragments[name] = sizes;
  }
  for (const auto& [name, d] : section("difunctors").items()) {
    const std::string where = "/difunctors/" + escape_pointer(name);
    const std::string cat = string_field(d, "category", where);
    auto it = b.categories.find(cat);
    CategoryRef base;
    if (it != b.categories.end()) {
      base = it->second;
    } else {
      try {
        base = share(fixtures::build(cat));
      } catch (const InputError&) {
        fail(where + "/category", "unknown category '" + cat + "'");
      }
      b.categories[cat] = base;
    }
    TabulatedDifunctor tab;
    try {
      if (d.contains("expr")) {
        auto e = expr_from_json(d.at("expr"), where + "/expr");
        b.expressions[name] = e;
        tab = eval_difunctor_expr(e, base);
      } else {
        tab = tabulated_from_json(d, base, where);
      }
    } catch (const InputError& e) {
      const std::string msg = e.what();
      if (msg.rfind("/", 0) == 0) throw;
      fail(where, msg);
    }
    auto report = validate_difunctor(tab);
    if (!report.ok()) fail(where, "difunctor laws fail: " + report.summary());
    b.difunctors[name] = share(std::move(tab));
    b.difunctor_category[name] = cat;
  }
  for (const auto& [name, t] : section("transformations").items()) {
    const std::string where = "/transformations/" + escape_pointer(name);
    const std::string src = string_field(t, "source", where), dst = string_field(t, "target", where);
    if (!b.difunctors.count(src)) fail(where + "/source", "unknown difunctor '" + src + "'");
    if (!b.difunctors.count(dst)) fail(where + "/target", "unknown difunctor '" + dst + "'");
    std::map<std::string, std::map<std::string, std::string>> comps;
    for (const auto& [obj, table] : member(t, "components", where).items())
      comps[obj] = string_map(table, where + "/components/" + escape_pointer(obj));
    try {
      b.transformations.emplace(name, Paranatural::from_labels(b.difunctors[src], b.difunctors[dst], comps));
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  for (const auto& [name, c] : section("candidates").items()) {
    const std::string where = "/candidates/" + escape_pointer(name);
    NamedCandidate nc;
    nc.type = string_field(c, "type", where);
    try {
      freethm::parse_type(nc.type);
      if (c.contains("term"))
        nc.candidate = freethm::parse_candidate(string_field(c, "term", where));
      else
        nc.candidate = freethm::parse_candidate(json{{"table", member(c, "table", where)}}.dump());
    } catch (const Error& e) {
      fail(where, e.what());
    }
    b.candidates.emplace(name, std::move(nc));
  }
  for (const auto& [name, c] : section("coalgebras").items()) {
    const std::string where = "/coalgebras/" + escape_pointer(name);
    NamedCoalgebra nc;
    try {
      nc.functor = parse_polyfunctor(string_field(c, "functor", where));
    } catch (const InputError& e) {
      fail(where + "/functor", e.what());
    }
    for (const auto& x : string_list(member(c, "carrier", where), where + "/carrier")) nc.coalgebra.carrier.push_back(Value::atom(x));
    auto structure = string_map(member(c, "structure", where), where + "/structure");
    const auto image = apply_polyfunctor(*nc.functor, nc.coalgebra.carrier);
    nc.coalgebra.structure.domain = nc.coalgebra.carrier;
    for (const auto& x : nc.coalgebra.carrier) {
      auto it = structure.find(x.label());
      if (it == structure.end()) fail(where + "/structure", "no transition for '" + x.label() + "'");
      Value v = parse_value(it->second);
      if (std::find(image.begin(), image.end(), v) == image.end())
        fail(where + "/structure/" + escape_pointer(x.label()), it->second + " is not in T(carrier)");
      nc.coalgebra.structure.images.push_back(v);
    }
    b.coalgebras.emplace(name, std::move(nc));
  }
  for (const auto& [name, r] : section("relations").items()) {
    const std::string where = "/relations/" + escape_pointer(name);
    NamedRelation nr{string_field(r, "left", where), string_field(r, "right", where), {}};
    if (!b.coalgebras.count(nr.left)) fail(where + "/left", "unknown coalgebra '" + nr.left + "'");
    if (!b.coalgebras.count(nr.right)) fail(where + "/right", "unknown coalgebra '" + nr.right + "'");
    const json& ps = member(r, "pairs", where);
    if (!ps.is_array()) fail(where + "/pairs", "expected an array of pairs");
    for (std::size_t i = 0; i < ps.size(); ++i) {
      auto p = string_list(ps[i], where + "/pairs/" + std::to_string(i));
      if (p.size() != 2) fail(where + "/pairs/" + std::to_string(i), "expected [x, y]");
      nr.pairs.emplace_back(p[0], p[1]);
    }
    b.relations.emplace(name, std::move(nr));
  }
  return b;
}

Bundle load_bundle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open bundle '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("bundle '" + path + "': " + e.what());
  }
  return load_bundle_json(j);
}

CategoryRef resolve_category(const Bundle* bundle, const std::string& ref) {
  if (bundle) {
    auto it = bundle->categories.find(ref);
    if (it != bundle->categories.end()) return it->second;
  }
  return share(fixtures::build(ref));
}

DifunctorRef resolve_difunctor(const Bundle* bundle, const std::string& ref, const CategoryRef& base) {
  if (bundle) {
    auto it = bundle->difunctors.find(ref);
    if (it != bundle->difunctors.end()) {
      if (!same_category(it->second->base(), base)) throw InputError("difunctor '" + ref + "' lives over a different category");
      return it->second;
    }
  }
  auto d = eval_difunctor_expr(parse_expr(ref), base);
  auto report = validate_difunctor(d);
  if (!report.ok()) throw InputError("difunctor '" + ref + "' fails validation: " + report.summary());
  return share(std::move(d));
}

ExprRef resolve_expr(const Bundle* bundle, const std::string& ref) {
  if (bundle) {
    auto it = bundle->expressions.find(ref);
    if (it != bundle->expressions.end()) return it->second;
  }
  return parse_expr(ref);
}

}  // namespace paracat::cli
