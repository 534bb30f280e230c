#include "paracat/value.hpp"

#include <algorithm>
#include <functional>

#include "paracat/error.hpp"

namespace paracat {

Value Value::atom(std::string label) {
  Value v;
  v.kind_ = Kind::Atom;
  v.atom_ = std::move(label);
  return v;
}

Value Value::tuple(std::vector<Value> items) {
  Value v;
  v.kind_ = Kind::Tuple;
  v.items_ = std::move(items);
  return v;
}

Value Value::pair(Value a, Value b) { return tuple({std::move(a), std::move(b)}); }

Value Value::inl(Value p) {
  Value v;
  v.kind_ = Kind::Inl;
  v.items_.push_back(std::move(p));
  return v;
}

Value Value::inr(Value p) {
  Value v;
  v.kind_ = Kind::Inr;
  v.items_.push_back(std::move(p));
  return v;
}

Value Value::list(std::vector<Value> items) {
  Value v;
  v.kind_ = Kind::List;
  v.items_ = std::move(items);
  return v;
}

Value Value::func(std::vector<Value> keys, std::vector<Value> images) {
  if (keys.size() != images.size()) throw InputError("function value: key/image length mismatch");
  Value v;
  v.kind_ = Kind::Func;
  v.keys_ = std::move(keys);
  v.items_ = std::move(images);
  return v;
}

std::optional<Value> Value::apply(const Value& arg) const {
  if (kind_ != Kind::Func) return std::nullopt;
  for (std::size_t i = 0; i < keys_.size(); ++i)
    if (keys_[i] == arg) return items_[i];
  return std::nullopt;
}

const Value& Value::apply_or_throw(const Value& arg) const {
  if (kind_ != Kind::Func) throw InputError("apply: " + str() + " is not a function");
  for (std::size_t i = 0; i < keys_.size(); ++i)
    if (keys_[i] == arg) return items_[i];
  throw InputError("apply: " + arg.str() + " outside the domain of " + str());
}

void Value::print(std::string& out) const {
  switch (kind_) {
    case Kind::Atom:
      out += atom_;
      return;
    case Kind::Tuple:
      out += '(';
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ',';
        items_[i].print(out);
      }
      out += ')';
      return;
    case Kind::Inl:
    case Kind::Inr:
      out += kind_ == Kind::Inl ? "inl(" : "inr(";
      items_[0].print(out);
      out += ')';
      return;
    case Kind::List:
      out += '[';
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ',';
        items_[i].print(out);
      }
      out += ']';
      return;
    case Kind::Func:
      out += '{';
      for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out += ',';
        keys_[i].print(out);
        out += ':';
        items_[i].print(out);
      }
      out += '}';
      return;
  }
}

std::string Value::str() const {
  std::string out;
  print(out);
  return out;
}

std::size_t Value::hash() const {
  std::size_t h = std::hash<int>{}(static_cast<int>(kind_)) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  if (kind_ == Kind::Atom) mix(std::hash<std::string>{}(atom_));
  for (const auto& k : keys_) mix(k.hash());
  for (const auto& i : items_) mix(i.hash());
  return h;
}

bool operator==(const Value& a, const Value& b) {
  return a.kind_ == b.kind_ && a.atom_ == b.atom_ && a.items_ == b.items_ && a.keys_ == b.keys_;
}

bool operator<(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.atom_ != b.atom_) return a.atom_ < b.atom_;
  if (a.keys_ != b.keys_)
    return std::lexicographical_compare(a.keys_.begin(), a.keys_.end(), b.keys_.begin(), b.keys_.end());
  return std::lexicographical_compare(a.items_.begin(), a.items_.end(), b.items_.begin(), b.items_.end());
}

namespace {

class ValueParser {
 public:
  explicit ValueParser(std::string_view s) : s_(s) {}

  Value parse_all() {
    Value v = parse();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  static bool structural(char c) {
    return c == '(' || c == ')' || c == ',' || c == ':' || c == '{' || c == '}' || c == '[' || c == ']';
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("value parse error at " + std::to_string(pos_) + ": " + msg + " in '" + std::string(s_) + "'");
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  Value parse() {
    if (peek('(')) {
      ++pos_;
      std::vector<Value> items;
      if (!peek(')')) {
        items.push_back(parse());
        while (peek(',')) {
          ++pos_;
          items.push_back(parse());
        }
      }
      expect(')');
      return Value::tuple(std::move(items));
    }
    if (peek('[')) {
      ++pos_;
      std::vector<Value> items;
      if (!peek(']')) {
        items.push_back(parse());
        while (peek(',')) {
          ++pos_;
          items.push_back(parse());
        }
      }
      expect(']');
      return Value::list(std::move(items));
    }
    if (peek('{')) {
      ++pos_;
      std::vector<Value> keys, images;
      if (!peek('}')) {
        for (;;) {
          keys.push_back(parse());
          expect(':');
          images.push_back(parse());
          if (!peek(',')) break;
          ++pos_;
        }
      }
      expect('}');
      return Value::func(std::move(keys), std::move(images));
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && !structural(s_[pos_])) ++pos_;
    std::string word(s_.substr(start, pos_ - start));
    if ((word == "inl" || word == "inr") && peek('(')) {
      ++pos_;
      Value inner = parse();
      expect(')');
      return word == "inl" ? Value::inl(std::move(inner)) : Value::inr(std::move(inner));
    }
    if (word.empty()) fail("empty atom");
    return Value::atom(std::move(word));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Value parse_value(std::string_view text) { return ValueParser(text).parse_all(); }

}  // namespace paracat
