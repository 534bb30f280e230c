#include "paracat/term.hpp"

#include <cctype>
#include <set>

#include "paracat/error.hpp"

namespace paracat::freethm {

// ---------------------------------------------------------------- lexer

namespace {

struct Tok {
  enum class Kind { Ident, Int, Sym, End };
  Kind kind;
  std::string text;
  int line, column;
};

const std::set<std::string> kKeywords{"fun", "let", "rec", "in", "if", "then", "else", "match", "with", "true", "false"};

std::vector<Tok> lex(const std::string& s) {
  std::vector<Tok> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  static const std::vector<std::string> symbols{"->", "::", "<=", "==", "!=", "&&", "||", "(", ")", "[", "]",
                                                ",",  "|",  "=",  "<",  "+",  "-",  "_"};
  while (i < s.size()) {
    const unsigned char c = s[i];
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (s.compare(i, 2, "(*") == 0) {
      const int l = line, cl = col;
      advance(2);
      while (i < s.size() && s.compare(i, 2, "*)") != 0) advance(1);
      if (i >= s.size()) throw InputError("term syntax error at " + std::to_string(l) + ":" + std::to_string(cl) + ": unterminated comment");
      advance(2);
    } else if (std::isalpha(c) || (c == '_' && i + 1 < s.size() && (std::isalnum(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '_'))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\'')) ++j;
      out.push_back({Tok::Kind::Ident, s.substr(i, j - i), line, col});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Kind::Int, s.substr(i, j - i), line, col});
      advance(j - i);
    } else {
      bool matched = false;
      for (const auto& sym : symbols)
        if (s.compare(i, sym.size(), sym) == 0) {
          out.push_back({Tok::Kind::Sym, sym, line, col});
          advance(sym.size());
          matched = true;
          break;
        }
      if (!matched)
        throw InputError("term syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": unexpected '" +
                         std::string(1, static_cast<char>(c)) + "'");
    }
  }
  out.push_back({Tok::Kind::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  TermRef parse() {
    auto t = expr();
    if (cur().kind != Tok::Kind::End) fail("unexpected '" + cur().text + "'");
    return t;
  }

 private:
  const Tok& cur() const { return toks_[pos_]; }
  bool at(const std::string& s) const { return cur().kind != Tok::Kind::End && cur().kind != Tok::Kind::Int && cur().text == s; }
  bool eat(const std::string& s) {
    if (!at(s)) return false;
    ++pos_;
    return true;
  }
  void expect(const std::string& s) {
    if (!eat(s)) fail("expected '" + s + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("term syntax error at " + std::to_string(cur().line) + ":" + std::to_string(cur().column) + ": " + msg);
  }
  bool at_ident() const { return cur().kind == Tok::Kind::Ident && !kKeywords.count(cur().text); }
  std::string ident() {
    if (!at_ident()) fail("expected an identifier");
    return toks_[pos_++].text;
  }

  std::shared_ptr<Term> node(Term::Kind k) const {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->line = cur().line;
    t->column = cur().column;
    return t;
  }

  TermRef lambda(const std::vector<std::string>& params, std::size_t from, TermRef body) const {
    for (std::size_t i = params.size(); i > from; --i) {
      auto f = std::make_shared<Term>();
      f->kind = Term::Kind::Fun;
      f->name = params[i - 1];
      f->line = body->line;
      f->column = body->column;
      f->args = {body};
      body = f;
    }
    return body;
  }

  TermRef expr() {
    if (at("fun")) {
      ++pos_;
      std::vector<std::string> params;
      while (at_ident() || at("_")) params.push_back(at("_") ? (++pos_, "_") : ident());
      if (params.empty()) fail("expected a parameter");
      expect("->");
      return lambda(params, 0, expr());
    }
    if (at("let")) {
      auto t = node(Term::Kind::Let);
      ++pos_;
      const bool rec = eat("rec");
      t->name = ident();
      std::vector<std::string> params;
      while (at_ident() || at("_")) params.push_back(at("_") ? (++pos_, "_") : ident());
      if (rec && params.empty()) fail("let rec needs at least one parameter");
      expect("=");
      TermRef bound = expr();
      expect("in");
      TermRef body = expr();
      if (rec) {
        t->kind = Term::Kind::LetRec;
        t->params = {params[0]};
        t->args = {lambda(params, 1, bound), body};
      } else {
        t->args = {lambda(params, 0, bound), body};
      }
      return t;
    }
    if (at("if")) {
      auto t = node(Term::Kind::If);
      ++pos_;
      auto c = expr();
      expect("then");
      auto a = expr();
      expect("else");
      t->args = {c, a, expr()};
      return t;
    }
    if (at("match")) {
      auto t = node(Term::Kind::Match);
      ++pos_;
      t->args = {expr()};
      expect("with");
      eat("|");
      do {
        auto p = pattern();
        expect("->");
        t->arms.emplace_back(p, expr());
      } while (eat("|"));
      return t;
    }
    return binary(0);
  }

  // precedence: 0 ||, 1 &&, 2 comparisons, 3 ::, 4 + -
  TermRef binary(int level) {
    if (level == 5) return application();
    if (level == 3) {
      auto head = binary(4);
      if (at("::")) {
        auto t = node(Term::Kind::Cons);
        ++pos_;
        t->args = {head, binary(3)};
        return t;
      }
      return head;
    }
    static const std::vector<std::vector<std::string>> ops{{"||"}, {"&&"}, {"==", "!=", "<", "<="}, {}, {"+", "-"}};
    auto left = binary(level + 1);
    for (;;) {
      std::string op;
      for (const auto& o : ops[level])
        if (at(o)) op = o;
      if (op.empty()) return left;
      auto t = node(Term::Kind::BinOp);
      ++pos_;
      t->name = op;
      t->args = {left, binary(level + 1)};
      left = t;
      if (level == 2) return left;
    }
  }

  bool starts_atom() const {
    if (cur().kind == Tok::Kind::Int) return true;
    return at_ident() || at("true") || at("false") || at("(") || at("[");
  }

  TermRef application() {
    auto f = atom();
    while (starts_atom()) {
      auto t = node(Term::Kind::App);
      t->args = {f, atom()};
      f = t;
    }
    return f;
  }

  TermRef atom() {
    if (cur().kind == Tok::Kind::Int) {
      auto t = node(Term::Kind::Int);
      t->number = std::stol(toks_[pos_++].text);
      return t;
    }
    if (at("true") || at("false")) {
      auto t = node(Term::Kind::Bool);
      t->number = at("true") ? 1 : 0;
      ++pos_;
      return t;
    }
    if (at_ident()) {
      auto t = node(Term::Kind::Var);
      t->name = ident();
      return t;
    }
    if (at("(")) {
      auto t = node(Term::Kind::Unit);
      ++pos_;
      if (eat(")")) return t;
      auto inner = expr();
      if (eat(",")) {
        t->kind = Term::Kind::Pair;
        t->args = {inner, expr()};
        expect(")");
        return t;
      }
      expect(")");
      return inner;
    }
    if (at("[")) {
      auto t = node(Term::Kind::ListLit);
      ++pos_;
      if (!eat("]")) {
        do t->args.push_back(expr());
        while (eat(","));
        expect("]");
      }
      return t;
    }
    fail(cur().kind == Tok::Kind::End ? "unexpected end of input" : "unexpected '" + cur().text + "'");
  }

  std::shared_ptr<Pattern> pnode(Pattern::Kind k) const {
    auto p = std::make_shared<Pattern>();
    p->kind = k;
    return p;
  }

  PatternRef pattern() {
    auto head = apattern();
    if (eat("::")) {
      auto p = pnode(Pattern::Kind::Cons);
      p->a = head;
      p->b = pattern();
      return p;
    }
    return head;
  }

  PatternRef apattern() {
    if (eat("_")) return pnode(Pattern::Kind::Wild);
    if (cur().kind == Tok::Kind::Int) {
      auto p = pnode(Pattern::Kind::Int);
      p->number = std::stol(toks_[pos_++].text);
      return p;
    }
    if (at("true") || at("false")) {
      auto p = pnode(Pattern::Kind::Bool);
      p->number = at("true") ? 1 : 0;
      ++pos_;
      return p;
    }
    if (at("inl") || at("inr") || at("succ")) {
      const std::string c = toks_[pos_++].text;
      auto p = pnode(c == "inl" ? Pattern::Kind::Inl : c == "inr" ? Pattern::Kind::Inr : Pattern::Kind::Succ);
      p->a = apattern();
      return p;
    }
    if (at_ident()) {
      auto p = pnode(Pattern::Kind::Var);
      p->name = ident();
      return p;
    }
    if (eat("[")) {
      expect("]");
      return pnode(Pattern::Kind::Nil);
    }
    if (eat("(")) {
      if (eat(")")) return pnode(Pattern::Kind::Unit);
      auto first = pattern();
      if (eat(",")) {
        auto p = pnode(Pattern::Kind::Pair);
        p->a = first;
        p->b = pattern();
        expect(")");
        return p;
      }
      expect(")");
      return first;
    }
    fail("expected a pattern");
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

TermRef parse_term(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------- runtime values

struct RVal {
  enum class Kind { Unit, Bool, Int, Elem, Pair, Inl, Inr, List, Closure, Rec, Builtin, Table };
  Kind kind = Kind::Unit;
  long n = 0;                  // Bool, Int, Elem index, Builtin arity
  Value value;                 // Elem, Table
  std::vector<RValRef> items;  // Pair, Inl/Inr, List, Builtin collected args
  std::string name;            // Closure/Rec parameter, Rec self name, Builtin name
  std::string self;
  TermRef body;
  EnvRef env;
  TypeRef dom, cod;  // Table
};

struct Env {
  std::string name;
  RValRef value;
  EnvRef next;
};

namespace {

RValRef mk(RVal::Kind k) {
  auto v = std::make_shared<RVal>();
  v->kind = k;
  return v;
}
RValRef mk_int(RVal::Kind k, long n) {
  auto v = std::make_shared<RVal>();
  v->kind = k;
  v->n = n;
  return v;
}
RValRef mk_items(RVal::Kind k, std::vector<RValRef> items) {
  auto v = std::make_shared<RVal>();
  v->kind = k;
  v->items = std::move(items);
  return v;
}

EnvRef extend(const EnvRef& env, const std::string& name, RValRef v) {
  if (name == "_") return env;
  return std::make_shared<const Env>(Env{name, std::move(v), env});
}

[[noreturn]] void mismatch(const std::string& what, const RValRef& v) {
  throw InputError("type mismatch: expected " + what + ", got " + show(v));
}

bool equal(const RValRef& a, const RValRef& b) {
  if (a->kind != b->kind) mismatch("values of the same type", b);
  switch (a->kind) {
    case RVal::Kind::Unit:
      return true;
    case RVal::Kind::Bool:
    case RVal::Kind::Int:
    case RVal::Kind::Elem:
      return a->n == b->n;
    case RVal::Kind::Pair:
    case RVal::Kind::Inl:
    case RVal::Kind::Inr:
    case RVal::Kind::List:
      if (a->items.size() != b->items.size()) return false;
      for (std::size_t i = 0; i < a->items.size(); ++i)
        if (!equal(a->items[i], b->items[i])) return false;
      return true;
    default:
      throw InputError("type mismatch: functions cannot be compared");
  }
}

const std::vector<std::pair<std::string, int>> kBuiltins{{"inl", 1},  {"inr", 1},          {"fst", 1},          {"snd", 1},
                                                         {"succ", 1}, {"not", 1},          {"carrier_size", 1}, {"carrier_elem", 1},
                                                         {"elem_index", 1}};

}  // namespace

std::string show(const RValRef& v) {
  switch (v->kind) {
    case RVal::Kind::Unit:
      return "()";
    case RVal::Kind::Bool:
      return v->n ? "true" : "false";
    case RVal::Kind::Int:
      return std::to_string(v->n);
    case RVal::Kind::Elem:
      return "<" + v->value.str() + ">";
    case RVal::Kind::Pair:
      return "(" + show(v->items[0]) + ", " + show(v->items[1]) + ")";
    case RVal::Kind::Inl:
      return "inl " + show(v->items[0]);
    case RVal::Kind::Inr:
      return "inr " + show(v->items[0]);
    case RVal::Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < v->items.size(); ++i) out += (i ? ", " : "") + show(v->items[i]);
      return out + "]";
    }
    case RVal::Kind::Closure:
    case RVal::Kind::Rec:
      return "<fun>";
    case RVal::Kind::Builtin:
      return "<" + v->name + ">";
    case RVal::Kind::Table:
      return v->value.str();
  }
  return "?";
}

// ---------------------------------------------------------------- interpreter

Interpreter::Interpreter(Semantics sem, std::vector<Value> carrier, std::size_t step_budget)
    : sem_(sem), carrier_(std::move(carrier)), budget_(step_budget) {}

void Interpreter::tick(int depth) {
  if (++steps_ > budget_) throw ResourceError("step budget of " + std::to_string(budget_) + " exceeded");
  if (depth > 20000) throw ResourceError("evaluation nested deeper than 20000 frames");
}

RValRef Interpreter::eval(const TermRef& t) { return eval(t, nullptr, 0); }
RValRef Interpreter::call(const RValRef& f, const RValRef& arg) { return call(f, arg, 0); }

namespace {

bool match(const Pattern& p, const RValRef& v, EnvRef& env) {
  using PK = Pattern::Kind;
  using VK = RVal::Kind;
  switch (p.kind) {
    case PK::Wild:
      return true;
    case PK::Var:
      env = extend(env, p.name, v);
      return true;
    case PK::Int:
      if (v->kind != VK::Int) mismatch("Nat", v);
      return v->n == p.number;
    case PK::Succ:
      if (v->kind != VK::Int) mismatch("Nat", v);
      return v->n > 0 && match(*p.a, mk_int(VK::Int, v->n - 1), env);
    case PK::Bool:
      if (v->kind != VK::Bool) mismatch("Bool", v);
      return v->n == p.number;
    case PK::Unit:
      if (v->kind != VK::Unit) mismatch("Unit", v);
      return true;
    case PK::Nil:
      if (v->kind != VK::List) mismatch("a list", v);
      return v->items.empty();
    case PK::Cons: {
      if (v->kind != VK::List) mismatch("a list", v);
      if (v->items.empty()) return false;
      if (!match(*p.a, v->items[0], env)) return false;
      return match(*p.b, mk_items(VK::List, std::vector<RValRef>(v->items.begin() + 1, v->items.end())), env);
    }
    case PK::Pair:
      if (v->kind != VK::Pair) mismatch("a pair", v);
      return match(*p.a, v->items[0], env) && match(*p.b, v->items[1], env);
    case PK::Inl:
    case PK::Inr:
      if (v->kind != VK::Inl && v->kind != VK::Inr) mismatch("a sum", v);
      return (v->kind == VK::Inl) == (p.kind == PK::Inl) && match(*p.a, v->items[0], env);
  }
  return false;
}

}  // namespace

RValRef Interpreter::eval(const TermRef& t, const EnvRef& env, int depth) {
  using TK = Term::Kind;
  using VK = RVal::Kind;
  tick(depth);
  switch (t->kind) {
    case TK::Var: {
      for (const Env* e = env.get(); e; e = e->next.get())
        if (e->name == t->name) return e->value;
      for (const auto& [name, arity] : kBuiltins)
        if (name == t->name) {
          auto b = std::make_shared<RVal>();
          b->kind = VK::Builtin;
          b->name = name;
          b->n = arity;
          return b;
        }
      throw InputError("unbound variable '" + t->name + "' at " + std::to_string(t->line) + ":" + std::to_string(t->column));
    }
    case TK::Int:
      return mk_int(VK::Int, t->number);
    case TK::Bool:
      return mk_int(VK::Bool, t->number);
    case TK::Unit:
      return mk(VK::Unit);
    case TK::Nil:
      return mk(VK::List);
    case TK::Fun: {
      auto c = std::make_shared<RVal>();
      c->kind = VK::Closure;
      c->name = t->name;
      c->body = t->args[0];
      c->env = env;
      return c;
    }
    case TK::App: {
      auto f = eval(t->args[0], env, depth + 1);
      return call(f, eval(t->args[1], env, depth + 1), depth + 1);
    }
    case TK::Let:
      return eval(t->args[1], extend(env, t->name, eval(t->args[0], env, depth + 1)), depth + 1);
    case TK::LetRec: {
      auto r = std::make_shared<RVal>();
      r->kind = VK::Rec;
      r->self = t->name;
      r->name = t->params[0];
      r->body = t->args[0];
      r->env = env;
      return eval(t->args[1], extend(env, t->name, r), depth + 1);
    }
    case TK::If: {
      auto c = eval(t->args[0], env, depth + 1);
      if (c->kind != VK::Bool) mismatch("Bool", c);
      return eval(t->args[c->n ? 1 : 2], env, depth + 1);
    }
    case TK::Match: {
      auto v = eval(t->args[0], env, depth + 1);
      for (const auto& [pat, body] : t->arms) {
        EnvRef extended = env;
        if (match(*pat, v, extended)) return eval(body, extended, depth + 1);
      }
      throw InputError("match failure on " + show(v) + " at " + std::to_string(t->line) + ":" + std::to_string(t->column));
    }
    case TK::Pair: {
      auto a = eval(t->args[0], env, depth + 1);
      return mk_items(VK::Pair, {a, eval(t->args[1], env, depth + 1)});
    }
    case TK::ListLit: {
      std::vector<RValRef> items;
      for (const auto& a : t->args) items.push_back(eval(a, env, depth + 1));
      return mk_items(VK::List, std::move(items));
    }
    case TK::Cons: {
      auto head = eval(t->args[0], env, depth + 1);
      auto tail = eval(t->args[1], env, depth + 1);
      if (tail->kind != VK::List) mismatch("a list", tail);
      std::vector<RValRef> items{head};
      items.insert(items.end(), tail->items.begin(), tail->items.end());
      return mk_items(VK::List, std::move(items));
    }
    case TK::BinOp: {
      const std::string& op = t->name;
      auto a = eval(t->args[0], env, depth + 1);
      if (op == "&&" || op == "||") {
        if (a->kind != VK::Bool) mismatch("Bool", a);
        if ((op == "&&") != (a->n != 0)) return a;
        auto b = eval(t->args[1], env, depth + 1);
        if (b->kind != VK::Bool) mismatch("Bool", b);
        return b;
      }
      auto b = eval(t->args[1], env, depth + 1);
      if (op == "==") return mk_int(VK::Bool, equal(a, b));
      if (op == "!=") return mk_int(VK::Bool, !equal(a, b));
      if (a->kind != VK::Int) mismatch("Nat", a);
      if (b->kind != VK::Int) mismatch("Nat", b);
      if (op == "+") return mk_int(VK::Int, a->n + b->n);
      if (op == "-") return mk_int(VK::Int, a->n > b->n ? a->n - b->n : 0);
      if (op == "<") return mk_int(VK::Bool, a->n < b->n);
      return mk_int(VK::Bool, a->n <= b->n);
    }
  }
  throw InputError("unknown term");
}

RValRef Interpreter::call(const RValRef& f, const RValRef& arg, int depth) {
  using VK = RVal::Kind;
  tick(depth);
  switch (f->kind) {
    case VK::Closure:
      return eval(f->body, extend(f->env, f->name, arg), depth + 1);
    case VK::Rec:
      return eval(f->body, extend(extend(f->env, f->self, f), f->name, arg), depth + 1);
    case VK::Table: {
      auto image = f->value.apply(from_runtime(*f->dom, arg));
      if (!image) throw InputError("argument " + show(arg) + " outside the table's domain");
      return to_runtime(*f->cod, *image);
    }
    case VK::Builtin: {
      const std::string& b = f->name;
      if (b == "inl") return mk_items(VK::Inl, {arg});
      if (b == "inr") return mk_items(VK::Inr, {arg});
      if (b == "fst" || b == "snd") {
        if (arg->kind != VK::Pair) mismatch("a pair", arg);
        return arg->items[b == "fst" ? 0 : 1];
      }
      if (b == "succ") {
        if (arg->kind != VK::Int) mismatch("Nat", arg);
        return mk_int(VK::Int, arg->n + 1);
      }
      if (b == "not") {
        if (arg->kind != VK::Bool) mismatch("Bool", arg);
        return mk_int(VK::Bool, !arg->n);
      }
      if (b == "carrier_size") return mk_int(VK::Int, static_cast<long>(carrier_.size()));
      if (b == "carrier_elem") {
        if (arg->kind != VK::Int) mismatch("Nat", arg);
        if (arg->n < 0 || arg->n >= static_cast<long>(carrier_.size()))
          throw InputError("carrier_elem " + std::to_string(arg->n) + " outside a carrier of size " + std::to_string(carrier_.size()));
        auto e = std::make_shared<RVal>();
        e->kind = VK::Elem;
        e->n = arg->n;
        e->value = carrier_[arg->n];
        return e;
      }
      if (b == "elem_index") {
        if (arg->kind != VK::Elem) mismatch("a carrier element", arg);
        return mk_int(VK::Int, arg->n);
      }
      break;
    }
    default:
      break;
  }
  mismatch("a function", f);
}

RValRef Interpreter::to_runtime(const Type& t, const Value& v) {
  using VK = RVal::Kind;
  switch (t.kind) {
    case Type::Kind::Var:
      for (std::size_t i = 0; i < carrier_.size(); ++i)
        if (carrier_[i] == v) {
          auto e = std::make_shared<RVal>();
          e->kind = VK::Elem;
          e->n = static_cast<long>(i);
          e->value = v;
          return e;
        }
      throw InputError(v.str() + " is not a carrier element");
    case Type::Kind::Unit:
      return mk(VK::Unit);
    case Type::Kind::Bool:
      return mk_int(VK::Bool, v.label() == "true");
    case Type::Kind::Nat:
      return mk_int(VK::Int, std::stol(v.label()));
    case Type::Kind::List: {
      std::vector<RValRef> items;
      for (const auto& x : v.items()) items.push_back(to_runtime(*t.a, x));
      return mk_items(VK::List, std::move(items));
    }
    case Type::Kind::Prod:
      return mk_items(VK::Pair, {to_runtime(*t.a, v.item(0)), to_runtime(*t.b, v.item(1))});
    case Type::Kind::Sum:
      if (v.is(Value::Kind::Inl)) return mk_items(VK::Inl, {to_runtime(*t.a, v.payload())});
      return mk_items(VK::Inr, {to_runtime(*t.b, v.payload())});
    case Type::Kind::Arrow: {
      auto f = std::make_shared<RVal>();
      f->kind = VK::Table;
      f->value = v;
      f->dom = t.a;
      f->cod = t.b;
      return f;
    }
    case Type::Kind::Forall:
      break;
  }
  throw InputError("to_runtime: nested forall");
}

Value Interpreter::from_runtime(const Type& t, const RValRef& v) {
  using VK = RVal::Kind;
  auto expect = [&](VK k) {
    if (v->kind != k) mismatch(print_type(t), v);
  };
  switch (t.kind) {
    case Type::Kind::Var:
      expect(VK::Elem);
      return v->value;
    case Type::Kind::Unit:
      expect(VK::Unit);
      return Value::atom("*");
    case Type::Kind::Bool:
      expect(VK::Bool);
      return Value::atom(v->n ? "true" : "false");
    case Type::Kind::Nat:
      expect(VK::Int);
      return Value::atom(std::to_string(v->n));
    case Type::Kind::List: {
      expect(VK::List);
      std::vector<Value> items;
      for (const auto& x : v->items) items.push_back(from_runtime(*t.a, x));
      return Value::list(std::move(items));
    }
    case Type::Kind::Prod:
      expect(VK::Pair);
      return Value::pair(from_runtime(*t.a, v->items[0]), from_runtime(*t.b, v->items[1]));
    case Type::Kind::Sum:
      if (v->kind == VK::Inl) return Value::inl(from_runtime(*t.a, v->items[0]));
      expect(VK::Inr);
      return Value::inr(from_runtime(*t.b, v->items[0]));
    case Type::Kind::Arrow: {
      if (v->kind == VK::Table && *v->dom == *t.a && *v->cod == *t.b) return v->value;
      auto keys = sem_.enumerate(*t.a, carrier_, carrier_);
      std::vector<Value> images;
      images.reserve(keys.size());
      for (const auto& k : keys) images.push_back(from_runtime(*t.b, call(v, to_runtime(*t.a, k), 0)));
      return Value::func(std::move(keys), std::move(images));
    }
    case Type::Kind::Forall:
      break;
  }
  throw InputError("from_runtime: nested forall");
}

Value Interpreter::apply_candidate(const TermRef& term, const Type& forall_type, const Value& d) {
  steps_ = 0;
  auto [t1, t2] = split_arrow(forall_type);
  auto f = eval(term);
  if (forall_type.a->kind != Type::Kind::Arrow) return from_runtime(*t2, f);
  return from_runtime(*t2, call(f, to_runtime(*t1, d)));
}

}  // namespace paracat::freethm
