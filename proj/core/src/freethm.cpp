#include "paracat/freethm.hpp"

#include <cctype>
#include <functional>
#include <set>

#include "paracat/error.hpp"

namespace paracat::freethm {

using K = Type::Kind;

TypeRef Type::make(Kind k, TypeRef a, TypeRef b, std::string var) {
  auto t = std::make_shared<Type>();
  t->kind = k;
  t->a = std::move(a);
  t->b = std::move(b);
  t->var = std::move(var);
  return t;
}

bool operator==(const Type& x, const Type& y) {
  if (x.kind != y.kind || x.var != y.var) return false;
  auto same = [](const TypeRef& p, const TypeRef& q) { return (!p && !q) || (p && q && *p == *q); };
  return same(x.a, y.a) && same(x.b, y.b);
}

// ---------------------------------------------------------------- parsing

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
      out.push_back({s.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    } else if (s.compare(i, 2, "->") == 0) {
      out.push_back({"->", static_cast<int>(i) + 1});
      i += 2;
    } else if (s.compare(i, 3, "\xE2\x88\x80") == 0) {  // ∀
      out.push_back({"forall", static_cast<int>(i) + 1});
      i += 3;
    } else if (s.compare(i, 3, "\xE2\x86\x92") == 0) {  // →
      out.push_back({"->", static_cast<int>(i) + 1});
      i += 3;
    } else if (std::string("().*+").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({std::string(1, static_cast<char>(c)), static_cast<int>(i) + 1});
      ++i;
    } else {
      throw InputError("type syntax error at column " + std::to_string(i + 1) + ": unexpected '" + std::string(1, static_cast<char>(c)) + "'");
    }
  }
  out.push_back({"", static_cast<int>(s.size()) + 1});
  return out;
}

class TypeParser {
 public:
  explicit TypeParser(const std::string& text) : toks_(tokenize(text)) {}

  TypeRef parse() {
    TypeRef t;
    if (peek() == "forall") {
      next();
      const Token name = next();
      if (!is_ident(name.text)) fail(name, "expected a type variable");
      expect(".");
      bound_ = name.text;
      t = Type::make(K::Forall, arrow(), nullptr, name.text);
    } else {
      t = arrow();
    }
    if (!peek().empty()) fail(toks_[pos_], "unexpected '" + peek() + "'");
    return t;
  }

 private:
  static bool is_ident(const std::string& s) {
    return !s.empty() && (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_') && s != "forall" && s != "List" &&
           s != "Unit" && s != "Bool" && s != "Nat";
  }
  const std::string& peek() const { return toks_[pos_].text; }
  Token next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw InputError("type syntax error at column " + std::to_string(t.column) + ": " + msg);
  }
  void expect(const std::string& s) {
    if (peek() != s) fail(toks_[pos_], "expected '" + s + "'");
    ++pos_;
  }

  TypeRef arrow() {
    auto left = sum();
    if (peek() == "->") {
      next();
      return Type::make(K::Arrow, left, arrow());
    }
    return left;
  }
  TypeRef sum() {
    auto t = prod();
    while (peek() == "+") {
      next();
      t = Type::make(K::Sum, t, prod());
    }
    return t;
  }
  TypeRef prod() {
    auto t = app();
    while (peek() == "*") {
      next();
      t = Type::make(K::Prod, t, app());
    }
    return t;
  }
  TypeRef app() {
    if (peek() == "List") {
      next();
      return Type::make(K::List, app());
    }
    return atom();
  }
  TypeRef atom() {
    const Token t = next();
    if (t.text == "(") {
      auto inner = arrow();
      expect(")");
      return inner;
    }
    if (t.text == "Unit") return Type::make(K::Unit);
    if (t.text == "Bool") return Type::make(K::Bool);
    if (t.text == "Nat") return Type::make(K::Nat);
    if (t.text == "forall")
      throw UnsupportedError("unsupported type at column " + std::to_string(t.column) +
                             ": only one outermost forall (single-variable polymorphism)");
    if (is_ident(t.text)) {
      const std::string& expected = bound_.empty() ? free_ : bound_;
      if (!expected.empty() && expected != t.text)
        throw UnsupportedError("unsupported type at column " + std::to_string(t.column) + ": second type variable '" + t.text +
                               "' (single-variable polymorphism)");
      if (bound_.empty()) free_ = t.text;
      return Type::make(K::Var, nullptr, nullptr, t.text);
    }
    if (t.text.empty()) fail(t, "unexpected end of input");
    fail(t, "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string bound_, free_;
};

using VarPrinter = std::function<std::string(const Type&, bool positive)>;

std::string print(const Type& t, int ctx, bool positive, const VarPrinter& var) {
  auto paren = [](bool p, std::string s) { return p ? "(" + s + ")" : s; };
  switch (t.kind) {
    case K::Var:
      return var(t, positive);
    case K::Unit:
      return "Unit";
    case K::Bool:
      return "Bool";
    case K::Nat:
      return "Nat";
    case K::List:
      return paren(ctx > 3, "List " + print(*t.a, 4, positive, var));
    case K::Prod:
      return paren(ctx > 2, print(*t.a, 2, positive, var) + " * " + print(*t.b, 3, positive, var));
    case K::Sum:
      return paren(ctx > 1, print(*t.a, 1, positive, var) + " + " + print(*t.b, 2, positive, var));
    case K::Arrow:
      return paren(ctx > 0, print(*t.a, 1, !positive, var) + " -> " + print(*t.b, 0, positive, var));
    case K::Forall:
      return paren(ctx > 0, "forall " + t.var + ". " + print(*t.a, 0, positive, var));
  }
  return {};
}

bool occurs(const Type& t, bool positive, bool want) {
  switch (t.kind) {
    case K::Var:
      return positive == want;
    case K::Unit:
    case K::Bool:
    case K::Nat:
      return false;
    case K::List:
    case K::Forall:
      return occurs(*t.a, positive, want);
    case K::Prod:
    case K::Sum:
      return occurs(*t.a, positive, want) || occurs(*t.b, positive, want);
    case K::Arrow:
      return occurs(*t.a, !positive, want) || occurs(*t.b, positive, want);
  }
  return false;
}

}  // namespace

TypeRef parse_type(const std::string& text) { return TypeParser(text).parse(); }

std::string print_type(const Type& t) {
  return print(t, 0, true, [](const Type& v, bool) { return v.var; });
}

bool mentions_var(const Type& t) { return occurs(t, true, true) || occurs(t, true, false); }
bool is_covariant(const Type& t) { return !occurs(t, true, false); }
bool is_contravariant(const Type& t) { return !occurs(t, true, true); }

std::string split_variance(const Type& t) {
  return print(t, 0, true, [](const Type&, bool positive) { return positive ? "J" : "I"; });
}

// ---------------------------------------------------------------- maps

namespace {

MapRef make_map(MapTerm::Kind k, MapRef a = nullptr, MapRef b = nullptr) {
  auto m = std::make_shared<MapTerm>();
  m->kind = k;
  m->a = std::move(a);
  m->b = std::move(b);
  return m;
}

bool is_id(const MapRef& m) { return m->kind == MapTerm::Kind::Id; }

MapRef id_map() {
  static const MapRef id = make_map(MapTerm::Kind::Id);
  return id;
}

MapRef combine(MapTerm::Kind k, MapRef a, MapRef b = nullptr) {
  if (is_id(a) && (!b || is_id(b))) return id_map();
  return make_map(k, std::move(a), std::move(b));
}

}  // namespace

DerivedMaps derive_maps(const Type& t) {
  switch (t.kind) {
    case K::Var:
      return {make_map(MapTerm::Kind::Morph), id_map()};
    case K::Unit:
    case K::Bool:
    case K::Nat:
      return {id_map(), id_map()};
    case K::List: {
      auto m = derive_maps(*t.a);
      return {combine(MapTerm::Kind::List, m.pos), combine(MapTerm::Kind::List, m.neg)};
    }
    case K::Prod:
    case K::Sum: {
      auto l = derive_maps(*t.a), r = derive_maps(*t.b);
      const auto k = t.kind == K::Prod ? MapTerm::Kind::Prod : MapTerm::Kind::Sum;
      return {combine(k, l.pos, r.pos), combine(k, l.neg, r.neg)};
    }
    case K::Arrow: {
      auto dom = derive_maps(*t.a), cod = derive_maps(*t.b);
      return {combine(MapTerm::Kind::Conj, cod.pos, dom.neg), combine(MapTerm::Kind::Conj, cod.neg, dom.pos)};
    }
    case K::Forall:
      throw InputError("derive_maps: strip the forall first");
  }
  return {id_map(), id_map()};
}

std::string print_map(const MapTerm& m) {
  auto atomic = [](const MapTerm& x) {
    std::string s = print_map(x);
    return s.find(' ') == std::string::npos ? s : "(" + s + ")";
  };
  switch (m.kind) {
    case MapTerm::Kind::Id:
      return "id";
    case MapTerm::Kind::Morph:
      return "i2";
    case MapTerm::Kind::List:
      return "map " + atomic(*m.a);
    case MapTerm::Kind::Prod:
      return atomic(*m.a) + " × " + atomic(*m.b);
    case MapTerm::Kind::Sum:
      return atomic(*m.a) + " + " + atomic(*m.b);
    case MapTerm::Kind::Conj: {
      std::string s = "λh. ";
      if (!is_id(m.a)) s += atomic(*m.a) + " ∘ ";
      s += "h";
      if (!is_id(m.b)) s += " ∘ " + atomic(*m.b);
      return s;
    }
  }
  return {};
}

// ---------------------------------------------------------------- symbolic terms

namespace {

struct Sym;
using SymRef = std::shared_ptr<const Sym>;
struct Sym {
  enum class Kind { Name, App, Pair, Fst, Snd, Comp };
  Kind kind = Kind::Name;
  std::string name;
  SymRef f, x;      // App: f x; Pair: (f, x); Fst/Snd: f
  MapRef post, pre;  // Comp: post ∘ f ∘ pre
};

SymRef name(std::string n) {
  auto s = std::make_shared<Sym>();
  s->name = std::move(n);
  return s;
}
SymRef node(Sym::Kind k, SymRef f, SymRef x = nullptr) {
  auto s = std::make_shared<Sym>();
  s->kind = k;
  s->f = std::move(f);
  s->x = std::move(x);
  return s;
}

SymRef apply_map(const MapRef& m, const SymRef& e);

SymRef app(const SymRef& f, const SymRef& x) {
  if (f->kind == Sym::Kind::Comp) return apply_map(f->post, app(f->f, apply_map(f->pre, x)));
  return node(Sym::Kind::App, f, x);
}

SymRef map_fn(const MapRef& m) {
  std::string s = print_map(*m);
  return name(s.find(' ') == std::string::npos ? s : "(" + s + ")");
}

SymRef apply_map(const MapRef& m, const SymRef& e) {
  switch (m->kind) {
    case MapTerm::Kind::Id:
      return e;
    case MapTerm::Kind::Morph:
      return node(Sym::Kind::App, name("i2"), e);
    case MapTerm::Kind::List:
      return node(Sym::Kind::App, node(Sym::Kind::App, name("map"), map_fn(m->a)), e);
    case MapTerm::Kind::Prod:
      if (e->kind == Sym::Kind::Pair) return node(Sym::Kind::Pair, apply_map(m->a, e->f), apply_map(m->b, e->x));
      return node(Sym::Kind::Pair, apply_map(m->a, node(Sym::Kind::Fst, e)), apply_map(m->b, node(Sym::Kind::Snd, e)));
    case MapTerm::Kind::Sum:
      return node(Sym::Kind::App, map_fn(m), e);
    case MapTerm::Kind::Conj: {
      auto s = std::make_shared<Sym>();
      s->kind = Sym::Kind::Comp;
      s->f = e;
      s->post = m->a;
      s->pre = m->b;
      return s;
    }
  }
  return e;
}

std::string render(const SymRef& s);

std::string atomic(const SymRef& s) {
  const bool simple = s->kind == Sym::Kind::Name || s->kind == Sym::Kind::Pair;
  return simple ? render(s) : "(" + render(s) + ")";
}

std::string render(const SymRef& s) {
  switch (s->kind) {
    case Sym::Kind::Name:
      return s->name;
    case Sym::Kind::App: {
      std::vector<SymRef> args;
      SymRef head = s;
      while (head->kind == Sym::Kind::App) {
        args.push_back(head->x);
        head = head->f;
      }
      std::string out = atomic(head);
      for (auto it = args.rbegin(); it != args.rend(); ++it) out += " " + atomic(*it);
      return out;
    }
    case Sym::Kind::Pair:
      return "(" + render(s->f) + ", " + render(s->x) + ")";
    case Sym::Kind::Fst:
      return "fst " + atomic(s->f);
    case Sym::Kind::Snd:
      return "snd " + atomic(s->f);
    case Sym::Kind::Comp: {
      std::string out;
      if (!is_id(s->post)) out += map_fn(s->post)->name + " ∘ ";
      out += atomic(s->f);
      if (!is_id(s->pre)) out += " ∘ " + map_fn(s->pre)->name;
      return out;
    }
  }
  return {};
}

class Names {
 public:
  explicit Names(std::set<std::string> used = {}) : used_(std::move(used)) {}

  std::string fresh(const Type& t) {
    static const std::vector<std::string> plain{"x", "y", "z", "v", "w"};
    static const std::vector<std::string> lists{"xs", "ys", "zs", "vs", "ws"};
    const auto& pool = t.kind == K::List ? lists : plain;
    for (int round = 0;; ++round)
      for (const auto& base : pool) {
        std::string n = round == 0 ? base : base + std::to_string(round);
        if (used_.insert(n).second) return n;
      }
  }
  void reserve(const std::string& n) { used_.insert(n); }

 private:
  std::set<std::string> used_;
};

struct Bound {
  std::string name;
  TypeRef type;
  bool positive_is_a;  // print positive occurrences as A (else B)
};

// A fresh argument of type t; products split into pairs, Unit becomes ().
SymRef fresh_arg(const TypeRef& t, Names& names, std::vector<Bound>& bound, bool positive_is_a) {
  if (t->kind == K::Unit) return name("()");
  if (t->kind == K::Prod) {
    auto first = fresh_arg(t->a, names, bound, positive_is_a);
    return node(Sym::Kind::Pair, first, fresh_arg(t->b, names, bound, positive_is_a));
  }
  std::string n = names.fresh(*t);
  bound.push_back({n, t, positive_is_a});
  return name(n);
}

std::string print_inst(const Type& t, const std::string& pos, const std::string& neg) {
  return print(t, 0, true, [&](const Type&, bool positive) { return positive ? pos : neg; });
}

std::string quantifier(const Bound& b) {
  return b.name + " : " + (b.positive_is_a ? print_inst(*b.type, "A", "B") : print_inst(*b.type, "B", "A"));
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

// Both sides live in T(A,B); apply them to fresh arguments a(B,A) while T is an arrow.
std::vector<Bound> eta(TypeRef t, SymRef& lhs, SymRef& rhs, Names& names) {
  std::vector<Bound> bound;
  while (t->kind == K::Arrow) {
    auto x = fresh_arg(t->a, names, bound, true);
    lhs = app(lhs, x);
    rhs = app(rhs, x);
    t = t->b;
  }
  return bound;
}

std::string d_name(const Type& t) {
  if (t.kind == K::List) return "xs";
  if (t.kind == K::Arrow) return "h";
  return "x";
}

}  // namespace

std::string render_applied(const MapTerm& m, const Type& t, const std::string& arg) {
  Names names({arg});
  auto mref = std::make_shared<MapTerm>(m);
  SymRef body = apply_map(mref, name(arg));
  std::vector<std::string> binders;
  const Type* cur = &t;
  while (cur->kind == K::Arrow) {
    std::vector<Bound> bound;
    auto x = fresh_arg(cur->a, names, bound, true);
    binders.push_back(render(x));
    body = app(body, x);
    cur = cur->b.get();
  }
  if (binders.empty()) return render(body);
  return "λ" + join(binders, " ") + ". " + render(body);
}

std::pair<TypeRef, TypeRef> split_arrow(const Type& t) {
  if (t.kind != K::Forall) throw InputError("free theorem: expected a type of the form forall a. T");
  const TypeRef& body = t.a;
  if (body->kind == K::Arrow) return {body->a, body->b};
  return {Type::make(K::Unit), body};
}

FreeTheorem emit_free_theorem(const Type& t) {
  auto [t1, t2] = split_arrow(t);
  const auto m1 = derive_maps(*t1);
  const auto m2 = derive_maps(*t2);
  FreeTheorem th;
  th.type = print_type(t);
  th.domain = split_variance(*t1);
  th.codomain = split_variance(*t2);

  {
    SymRef d0 = name("d0"), d1 = name("d1");
    th.raw = "for all A, B, i2 : A -> B, d0 : " + print_inst(*t1, "A", "A") + ", d1 : " + print_inst(*t1, "B", "B") + ": if " +
             render(apply_map(m1.pos, d0)) + " = " + render(apply_map(m1.neg, d1)) + " then " +
             render(apply_map(m2.pos, app(name("f_A"), d0))) + " = " + render(apply_map(m2.neg, app(name("f_B"), d1)));
  }

  Names names({"f_A", "f_B", "i2", "map", "fst", "snd", "id"});
  std::vector<std::string> head{"A", "B", "i2 : A -> B"};
  if (is_covariant(*t1)) {
    th.form = "substituted";
    SymRef d;
    if (t1->kind == K::Unit) {
      d = name("()");
    } else {
      std::vector<Bound> bound;
      d = fresh_arg(t1, names, bound, true);
      for (const auto& b : bound) head.push_back(quantifier(b));
    }
    SymRef lhs = apply_map(m2.pos, app(name("f_A"), d));
    SymRef rhs = apply_map(m2.neg, app(name("f_B"), apply_map(m1.pos, d)));
    for (const auto& b : eta(t2, lhs, rhs, names)) head.push_back(quantifier(b));
    th.normalized = "for all " + join(head, ", ") + ": " + render(lhs) + " = " + render(rhs);
  } else {
    th.form = "conditional";
    const std::string base = d_name(*t1);
    names.reserve(base + "_A");
    names.reserve(base + "_B");
    head.push_back(base + "_A : " + print_inst(*t1, "A", "A"));
    head.push_back(base + "_B : " + print_inst(*t1, "B", "B"));
    SymRef hl = apply_map(m1.pos, name(base + "_A"));
    SymRef hr = apply_map(m1.neg, name(base + "_B"));
    auto hyp_vars = eta(t1, hl, hr, names);
    SymRef cl = apply_map(m2.pos, app(name("f_A"), name(base + "_A")));
    SymRef cr = apply_map(m2.neg, app(name("f_B"), name(base + "_B")));
    auto concl_vars = eta(t2, cl, cr, names);
    auto for_all = [](const std::vector<Bound>& vars) {
      if (vars.empty()) return std::string();
      std::vector<std::string> q;
      for (const auto& b : vars) q.push_back(quantifier(b));
      return " for all " + join(q, ", ");
    };
    th.normalized = "for all " + join(head, ", ") + ": if " + render(hl) + " = " + render(hr) + for_all(hyp_vars) + " then " +
                    render(cl) + " = " + render(cr) + for_all(concl_vars);
  }
  th.quantifiers = head;
  return th;
}

// ---------------------------------------------------------------- finite semantics

std::vector<Value> carrier(int n) {
  std::vector<Value> out;
  for (int i = 0; i < n; ++i) out.push_back(Value::atom(std::to_string(i)));
  return out;
}

std::vector<Value> Semantics::enumerate(const Type& t, const std::vector<Value>& I, const std::vector<Value>& J) const {
  switch (t.kind) {
    case K::Var:
      return J;
    case K::Unit:
      return {Value::atom("*")};
    case K::Bool:
      return {Value::atom("false"), Value::atom("true")};
    case K::Nat:
      return carrier(nat_bound);
    case K::List: {
      const auto items = enumerate(*t.a, I, J);
      std::vector<Value> out{Value::list({})};
      std::vector<std::vector<Value>> layer{{}};
      for (int len = 1; len <= list_bound; ++len) {
        std::vector<std::vector<Value>> next;
        for (const auto& prefix : layer)
          for (const auto& x : items) {
            auto l = prefix;
            l.push_back(x);
            out.push_back(Value::list(l));
            next.push_back(std::move(l));
          }
        if (out.size() > budget) throw ResourceError("list cell of " + print_type(t) + " exceeds the budget");
        layer = std::move(next);
      }
      return out;
    }
    case K::Prod: {
      std::vector<Value> out;
      for (const auto& x : enumerate(*t.a, I, J))
        for (const auto& y : enumerate(*t.b, I, J)) out.push_back(Value::pair(x, y));
      return out;
    }
    case K::Sum: {
      std::vector<Value> out;
      for (const auto& x : enumerate(*t.a, I, J)) out.push_back(Value::inl(x));
      for (const auto& y : enumerate(*t.b, I, J)) out.push_back(Value::inr(y));
      return out;
    }
    case K::Arrow:
      return all_functions(enumerate(*t.a, J, I), enumerate(*t.b, I, J), budget);
    case K::Forall:
      throw InputError("semantics: strip the forall first");
  }
  return {};
}

Value Semantics::pos(const Type& t, const FnTable& i2, const std::vector<Value>& B, const std::vector<Value>& I, const Value& v) const {
  switch (t.kind) {
    case K::Var:
      return i2(v);
    case K::Unit:
    case K::Bool:
    case K::Nat:
      return v;
    case K::List: {
      std::vector<Value> items;
      for (const auto& x : v.items()) items.push_back(pos(*t.a, i2, B, I, x));
      return Value::list(std::move(items));
    }
    case K::Prod:
      return Value::pair(pos(*t.a, i2, B, I, v.item(0)), pos(*t.b, i2, B, I, v.item(1)));
    case K::Sum:
      return v.is(Value::Kind::Inl) ? Value::inl(pos(*t.a, i2, B, I, v.payload())) : Value::inr(pos(*t.b, i2, B, I, v.payload()));
    case K::Arrow: {
      auto keys = enumerate(*t.a, B, I);
      std::vector<Value> images;
      for (const auto& y : keys) images.push_back(pos(*t.b, i2, B, I, v.apply_or_throw(neg(*t.a, i2, B, I, y))));
      return Value::func(std::move(keys), std::move(images));
    }
    case K::Forall:
      break;
  }
  throw InputError("semantics: strip the forall first");
}

Value Semantics::neg(const Type& t, const FnTable& i2, const std::vector<Value>& B, const std::vector<Value>& J, const Value& v) const {
  switch (t.kind) {
    case K::Var:
    case K::Unit:
    case K::Bool:
    case K::Nat:
      return v;
    case K::List: {
      std::vector<Value> items;
      for (const auto& x : v.items()) items.push_back(neg(*t.a, i2, B, J, x));
      return Value::list(std::move(items));
    }
    case K::Prod:
      return Value::pair(neg(*t.a, i2, B, J, v.item(0)), neg(*t.b, i2, B, J, v.item(1)));
    case K::Sum:
      return v.is(Value::Kind::Inl) ? Value::inl(neg(*t.a, i2, B, J, v.payload())) : Value::inr(neg(*t.b, i2, B, J, v.payload()));
    case K::Arrow: {
      auto keys = enumerate(*t.a, J, i2.domain);
      std::vector<Value> images;
      for (const auto& y : keys) images.push_back(neg(*t.b, i2, B, J, v.apply_or_throw(pos(*t.a, i2, B, J, y))));
      return Value::func(std::move(keys), std::move(images));
    }
    case K::Forall:
      break;
  }
  throw InputError("semantics: strip the forall first");
}

ExprRef to_difunctor_expr(const Type& t, int list_bound, int nat_bound) {
  switch (t.kind) {
    case K::Var:
      return expr::var();
    case K::Unit:
      return expr::constant(std::vector<std::string>{"*"});
    case K::Bool:
      return expr::constant(std::vector<std::string>{"false", "true"});
    case K::Nat:
      return expr::constant(carrier(nat_bound));
    case K::List:
      return expr::list_of(to_difunctor_expr(*t.a, list_bound, nat_bound), list_bound);
    case K::Prod:
      return expr::prod(to_difunctor_expr(*t.a, list_bound, nat_bound), to_difunctor_expr(*t.b, list_bound, nat_bound));
    case K::Sum:
      return expr::sum(to_difunctor_expr(*t.a, list_bound, nat_bound), to_difunctor_expr(*t.b, list_bound, nat_bound));
    case K::Arrow:
      return expr::arrow(to_difunctor_expr(*t.a, list_bound, nat_bound), to_difunctor_expr(*t.b, list_bound, nat_bound));
    case K::Forall:
      break;
  }
  throw InputError("to_difunctor_expr: strip the forall first");
}

}  // namespace paracat::freethm
