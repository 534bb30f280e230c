#pragma once

// Structured element values shared by every module. Elements of difunctor
// cells, polynomial functor images and System F instantiations are all
// Values; their canonical printing is the element label used in tables and
// serialized bundles.
//
//   atom      a            tuple  (a,b)       inl   inl(a)   inr  inr(a)
//   list      [a,b]        func   {k0:v0,k1:v1}  (keys in domain order)

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paracat {

class Value {
 public:
  enum class Kind { Atom, Tuple, Inl, Inr, List, Func };

  Value() = default;

  static Value atom(std::string label);
  static Value tuple(std::vector<Value> items);
  static Value pair(Value a, Value b);
  static Value inl(Value v);
  static Value inr(Value v);
  static Value list(std::vector<Value> items);
  // keys and images must have equal length; keys are the full domain in order
  static Value func(std::vector<Value> keys, std::vector<Value> images);

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }
  const std::string& label() const { return atom_; }
  const std::vector<Value>& items() const { return items_; }
  const Value& item(std::size_t i) const { return items_.at(i); }
  const std::vector<Value>& keys() const { return keys_; }
  std::size_t size() const { return items_.size(); }

  // Inl/Inr payload.
  const Value& payload() const { return items_.at(0); }

  // Func application; nullopt if the argument is not a key.
  std::optional<Value> apply(const Value& arg) const;
  const Value& apply_or_throw(const Value& arg) const;

  std::string str() const;
  std::size_t hash() const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
  friend bool operator<(const Value& a, const Value& b);

 private:
  void print(std::string& out) const;

  Kind kind_ = Kind::Atom;
  std::string atom_;
  std::vector<Value> items_;  // tuple items, list items, sum payload, func images
  std::vector<Value> keys_;   // func keys
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

// Parses the canonical printing back into a Value. Atoms are maximal runs of
// characters outside "(),:{}[]". `inl(`/`inr(` prefixes are sum injections.
Value parse_value(std::string_view text);

}  // namespace paracat
