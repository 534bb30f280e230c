#include "paracat/demos.hpp"

#include <algorithm>

#include "paracat/error.hpp"

namespace paracat::demos {

Value CoalgebraSystem::structure(int k) const {
  const auto& c = coalgebras.at(k);
  return Value::func(c.structure.domain, c.structure.images);
}

std::vector<PointedStructure> CoalgebraSystem::structures() const {
  std::vector<PointedStructure> out;
  for (int k = 0; k < static_cast<int>(coalgebras.size()); ++k) out.push_back({k, structure(k)});
  return out;
}

Coalgebra CoalgebraSystem::disjoint_union() const {
  Coalgebra u;
  for (std::size_t k = 0; k < coalgebras.size(); ++k) {
    const std::string prefix = names[k] + ".";
    auto rename = [&](const Value& x) { return Value::atom(prefix + x.label()); };
    for (std::size_t i = 0; i < coalgebras[k].carrier.size(); ++i) {
      u.carrier.push_back(rename(coalgebras[k].carrier[i]));
      u.structure.domain.push_back(u.carrier.back());
      u.structure.images.push_back(apply_polyfunctor(*functor, rename, coalgebras[k].structure.images[i]));
    }
  }
  return u;
}

namespace {

Coalgebra make_coalgebra(const std::vector<std::string>& carrier, const std::vector<Value>& images) {
  Coalgebra c;
  for (const auto& x : carrier) c.carrier.push_back(Value::atom(x));
  c.structure = {c.carrier, images};
  return c;
}

Value stream_step(const std::string& head, const std::string& tail) { return Value::pair(Value::atom(head), Value::atom(tail)); }

}  // namespace

CoalgebraSystem streams() {
  CoalgebraSystem s;
  s.functor = parse_polyfunctor("{0,1}*Id");
  s.gamma = expr::coalg_of(s.functor);
  s.names = {"P", "Q", "R"};
  s.coalgebras = {make_coalgebra({"p"}, {stream_step("0", "p")}),
                  make_coalgebra({"q0", "q1"}, {stream_step("0", "q1"), stream_step("0", "q0")}),
                  make_coalgebra({"r"}, {stream_step("1", "r")})};
  std::vector<FinSetObj> sets;
  for (std::size_t k = 0; k < s.names.size(); ++k) {
    FinSetObj o{s.names[k], {}};
    for (const auto& x : s.coalgebras[k].carrier) o.elements.push_back(x.label());
    sets.push_back(o);
  }
  s.base = share(fixtures::finset_fragment(sets));
  return s;
}

namespace {

struct Batched {
  std::string front, back;  // back newest-first
};

std::string reversed(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

Batched normalize(Batched q) {
  if (q.front.empty()) {
    q.front = reversed(q.back);
    q.back.clear();
  }
  return q;
}

}  // namespace

QueueSystem queues(int alphabet, int capacity) {
  if (alphabet < 1 || alphabet > 26 || capacity < 0) throw InputError("queues: alphabet must be 1..26 and capacity ≥ 0");
  std::vector<std::string> letters;
  for (int i = 0; i < alphabet; ++i) letters.emplace_back(1, static_cast<char>('a' + i));
  std::vector<std::string> words{""};
  for (std::size_t i = 0; i < words.size(); ++i)
    if (static_cast<int>(words[i].size()) < capacity)
      for (const auto& c : letters) words.push_back(words[i] + c);
  std::vector<Batched> batched;
  for (const auto& f : words)
    for (const auto& b : words)
      if (static_cast<int>(f.size() + b.size()) <= capacity) batched.push_back({f, b});
  if (words.size() * batched.size() > 1000000) throw ResourceError("queue state space too large");

  auto list_label = [](const std::string& w) { return "l_" + w; };
  auto batch_label = [](const Batched& q) { return "b_" + q.front + "_" + q.back; };
  std::string alphabet_set = "{";
  for (int i = 0; i < alphabet; ++i) alphabet_set += (i ? "," : "") + letters[i];
  alphabet_set += "}";

  QueueSystem out;
  auto& s = out.system;
  s.functor = parse_polyfunctor("(1+" + alphabet_set + ")*(Id^" + alphabet_set + "*Id)");
  s.gamma = expr::coalg_of(s.functor);
  s.names = {"L", "B"};
  std::vector<Value> letter_values;
  for (const auto& c : letters) letter_values.push_back(Value::atom(c));
  auto observation = [&](const std::string& front) {
    return front.empty() ? Value::inl(Value::atom("*")) : Value::inr(Value::atom(std::string(1, front[0])));
  };

  std::vector<std::string> list_states;
  std::vector<Value> list_images;
  for (const auto& w : words) {
    list_states.push_back(list_label(w));
    std::vector<Value> enq;
    for (const auto& c : letters)
      enq.push_back(Value::atom(list_label(static_cast<int>(w.size()) < capacity ? w + c : w)));
    Value deq = Value::atom(list_label(w.empty() ? w : w.substr(1)));
    list_images.push_back(Value::pair(observation(w), Value::pair(Value::func(letter_values, enq), deq)));
  }
  std::vector<std::string> batch_states;
  std::vector<Value> batch_images;
  for (const auto& q : batched) {
    batch_states.push_back(batch_label(q));
    std::vector<Value> enq;
    for (const auto& c : letters) {
      Batched n = q;
      if (static_cast<int>(q.front.size() + q.back.size()) < capacity) n.back = c + n.back;
      enq.push_back(Value::atom(batch_label(n)));
    }
    Batched d = normalize(q);
    if (!d.front.empty()) d.front.erase(0, 1);
    batch_images.push_back(
        Value::pair(observation(normalize(q).front), Value::pair(Value::func(letter_values, enq), Value::atom(batch_label(d)))));
  }
  s.coalgebras = {make_coalgebra(list_states, list_images), make_coalgebra(batch_states, batch_images)};

  std::vector<FinSetObj> sets{{"L", list_states}, {"B", batch_states}};
  std::vector<FinCategory::FunctionSpec> functions;
  for (int o = 0; o < 2; ++o) {
    std::vector<int> id(sets[o].elements.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    functions.push_back({o, o, id});
  }
  std::vector<int> abs;
  out.representation.X = 0;
  out.representation.Y = 1;
  for (const auto& q : batched) {
    const std::string w = q.front + reversed(q.back);
    abs.push_back(static_cast<int>(std::find(words.begin(), words.end(), w) - words.begin()));
    out.representation.pairs.emplace(list_label(w), batch_label(q));
  }
  functions.push_back({1, 0, abs});
  s.base = share(FinCategory::from_functions(sets, functions));
  return out;
}

ExprRef wild_group_data() {
  using namespace expr;
  return prod(arrow(prod(var(), var()), var()), prod(var(), arrow(var(), var())));
}

bool is_group(const Value& g, const std::vector<Value>& carrier) {
  const Value& mul = g.item(0);
  const Value& unit = g.item(1).item(0);
  const Value& inv = g.item(1).item(1);
  auto m = [&](const Value& x, const Value& y) { return mul.apply_or_throw(Value::pair(x, y)); };
  for (const auto& x : carrier) {
    if (m(unit, x) != x || m(x, unit) != x) return false;
    if (m(x, inv.apply_or_throw(x)) != unit || m(inv.apply_or_throw(x), x) != unit) return false;
    for (const auto& y : carrier)
      for (const auto& z : carrier)
        if (m(m(x, y), z) != m(x, m(y, z))) return false;
  }
  return true;
}

}  // namespace paracat::demos
