#include "paracat/polyfunctor.hpp"

#include <cctype>
#include <unordered_map>

#include "paracat/error.hpp"

namespace paracat {

PolyRef PolyFunctor::make_const(std::vector<Value> elements) {
  auto t = std::make_shared<PolyFunctor>();
  t->kind = Kind::Const;
  t->constant = std::move(elements);
  return t;
}

PolyRef PolyFunctor::make_const(const std::vector<std::string>& labels) {
  std::vector<Value> els;
  for (const auto& l : labels) els.push_back(Value::atom(l));
  return make_const(std::move(els));
}

PolyRef PolyFunctor::id() {
  auto t = std::make_shared<PolyFunctor>();
  t->kind = Kind::Id;
  return t;
}

PolyRef PolyFunctor::sum(PolyRef a, PolyRef b) {
  auto t = std::make_shared<PolyFunctor>();
  t->kind = Kind::Sum;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

PolyRef PolyFunctor::prod(PolyRef a, PolyRef b) {
  auto t = std::make_shared<PolyFunctor>();
  t->kind = Kind::Prod;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

PolyRef PolyFunctor::power(PolyRef base, std::vector<Value> exponent) {
  auto t = std::make_shared<PolyFunctor>();
  t->kind = Kind::Power;
  t->left = std::move(base);
  t->exponent = std::move(exponent);
  return t;
}

namespace {

std::string set_str(const std::vector<Value>& els) {
  if (els.size() == 1 && els[0] == Value::atom("*")) return "1";
  std::string out = "{";
  for (std::size_t i = 0; i < els.size(); ++i) out += (i ? "," : "") + els[i].str();
  return out + "}";
}

}  // namespace

std::string PolyFunctor::str() const {
  switch (kind) {
    case Kind::Const:
      return set_str(constant);
    case Kind::Id:
      return "Id";
    case Kind::Sum:
      return left->str() + "+" + (right->kind == Kind::Sum ? "(" + right->str() + ")" : right->str());
    case Kind::Prod: {
      auto wrap = [](const PolyRef& p, bool right_side) {
        const bool paren = p->kind == Kind::Sum || (right_side && p->kind == Kind::Prod);
        return paren ? "(" + p->str() + ")" : p->str();
      };
      return wrap(left, false) + "*" + wrap(right, true);
    }
    case Kind::Power: {
      std::string b = left->kind == Kind::Sum || left->kind == Kind::Prod ? "(" + left->str() + ")" : left->str();
      return b + "^" + set_str(exponent);
    }
  }
  return {};
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(const std::string& s) {
    for (char c : s)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  PolyRef parse() {
    PolyRef t = sum();
    if (pos_ != s_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polyfunctor parse error at " + std::to_string(pos_) + ": " + msg + " in '" + s_ + "'");
  }
  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyRef sum() {
    PolyRef t = prod();
    while (eat('+')) t = PolyFunctor::sum(t, prod());
    return t;
  }
  PolyRef prod() {
    PolyRef t = pow();
    while (eat('*')) t = PolyFunctor::prod(t, pow());
    return t;
  }
  PolyRef pow() {
    PolyRef t = atom();
    if (eat('^')) t = PolyFunctor::power(t, labels());
    return t;
  }
  std::vector<Value> labels() {
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return numbered(number());
    if (!eat('{')) fail("expected '{'");
    std::vector<Value> out;
    std::string cur;
    while (pos_ < s_.size() && s_[pos_] != '}') {
      if (s_[pos_] == ',') {
        out.push_back(Value::atom(cur));
        cur.clear();
      } else {
        cur += s_[pos_];
      }
      ++pos_;
    }
    if (!eat('}')) fail("expected '}'");
    if (!cur.empty()) out.push_back(Value::atom(cur));
    return out;
  }
  int number() {
    int n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) n = n * 10 + (s_[pos_++] - '0');
    return n;
  }
  static std::vector<Value> numbered(int n) {
    std::vector<Value> out;
    for (int i = 0; i < n; ++i) out.push_back(Value::atom(std::to_string(i)));
    return out;
  }
  PolyRef atom() {
    if (eat('(')) {
      PolyRef t = sum();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (s_.compare(pos_, 2, "Id") == 0) {
      pos_ += 2;
      return PolyFunctor::id();
    }
    if (eat('X')) return PolyFunctor::id();
    if (pos_ < s_.size() && s_[pos_] == '{') return PolyFunctor::make_const(labels());
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      int n = number();
      if (n == 1) return PolyFunctor::make_const(std::vector<Value>{Value::atom("*")});
      return PolyFunctor::make_const(numbered(n));
    }
    fail("expected a functor");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyRef parse_polyfunctor(const std::string& text) { return PolyParser(text).parse(); }

const Value& FnTable::operator()(const Value& x) const {
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == x) return images[i];
  throw InputError("function table: " + x.str() + " outside the domain");
}

std::vector<Value> all_functions(const std::vector<Value>& domain, const std::vector<Value>& codomain, std::size_t budget) {
  const std::size_t n = domain.size(), k = codomain.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (k == 0) return {};
    if (count > budget / k) throw ResourceError("function space too large to enumerate (" + std::to_string(k) + "^" +
                                                std::to_string(n) + " elements)");
    count *= k;
  }
  std::vector<Value> out;
  out.reserve(count);
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    std::vector<Value> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = codomain[idx[i]];
    out.push_back(Value::func(domain, std::move(images)));
    std::size_t i = n;
    while (i > 0 && idx[i - 1] == k - 1) idx[--i] = 0;
    if (i == 0) break;
    ++idx[i - 1];
  }
  return out;
}

std::vector<Value> apply_polyfunctor(const PolyFunctor& t, const std::vector<Value>& carrier) {
  using K = PolyFunctor::Kind;
  switch (t.kind) {
    case K::Const:
      return t.constant;
    case K::Id:
      return carrier;
    case K::Sum: {
      std::vector<Value> out;
      for (auto& v : apply_polyfunctor(*t.left, carrier)) out.push_back(Value::inl(v));
      for (auto& v : apply_polyfunctor(*t.right, carrier)) out.push_back(Value::inr(v));
      return out;
    }
    case K::Prod: {
      auto a = apply_polyfunctor(*t.left, carrier);
      auto b = apply_polyfunctor(*t.right, carrier);
      std::vector<Value> out;
      for (auto& x : a)
        for (auto& y : b) out.push_back(Value::pair(x, y));
      return out;
    }
    case K::Power:
      return all_functions(t.exponent, apply_polyfunctor(*t.left, carrier));
  }
  return {};
}

Value apply_polyfunctor(const PolyFunctor& t, const std::function<Value(const Value&)>& f, const Value& x) {
  using K = PolyFunctor::Kind;
  switch (t.kind) {
    case K::Const:
      return x;
    case K::Id:
      return f(x);
    case K::Sum:
      if (x.is(Value::Kind::Inl)) return Value::inl(apply_polyfunctor(*t.left, f, x.payload()));
      if (x.is(Value::Kind::Inr)) return Value::inr(apply_polyfunctor(*t.right, f, x.payload()));
      throw InputError("polyfunctor: " + x.str() + " is not a sum element");
    case K::Prod:
      if (!x.is(Value::Kind::Tuple) || x.size() != 2) throw InputError("polyfunctor: " + x.str() + " is not a pair");
      return Value::pair(apply_polyfunctor(*t.left, f, x.item(0)), apply_polyfunctor(*t.right, f, x.item(1)));
    case K::Power: {
      if (!x.is(Value::Kind::Func) || x.keys() != t.exponent)
        throw InputError("polyfunctor: exponent-set mismatch for " + x.str());
      std::vector<Value> images;
      for (const auto& v : x.items()) images.push_back(apply_polyfunctor(*t.left, f, v));
      return Value::func(x.keys(), std::move(images));
    }
  }
  return x;
}

FnTable apply_polyfunctor(const PolyFunctor& t, const FnTable& f) {
  std::unordered_map<Value, std::size_t, ValueHash> index;
  for (std::size_t i = 0; i < f.domain.size(); ++i) index.emplace(f.domain[i], i);
  auto pointwise = [&](const Value& x) -> Value {
    auto it = index.find(x);
    if (it == index.end()) throw InputError("polyfunctor: " + x.str() + " outside the function's domain");
    return f.images[it->second];
  };
  FnTable out;
  out.domain = apply_polyfunctor(t, f.domain);
  for (const auto& x : out.domain) out.images.push_back(apply_polyfunctor(t, pointwise, x));
  return out;
}

}  // namespace paracat
