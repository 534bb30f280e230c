// Standalone brute-force oracles. This program does not link the library; it
// recomputes the reference numbers from first principles and prints them as
// JSON. tests/expected/oracles.json is its frozen output.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::ordered_json;

namespace {

// Endofunctions of {0,1} encoded as (f(0), f(1)).
using Endo = std::array<int, 2>;

Endo compose(const Endo& g, const Endo& f) { return {g[f[0]], g[f[1]]}; }

std::string name(const Endo& f) { return "{0:" + std::to_string(f[0]) + ",1:" + std::to_string(f[1]) + "}"; }

std::vector<Endo> all_endos() { return {{0, 0}, {0, 1}, {1, 0}, {1, 1}}; }

// Curried naturals: families phi on hom(X,X) with |X| = 2 such that for every
// i2 and d0, d1 with i2∘d0 = d1∘i2, also i2∘phi(d0) = phi(d1)∘i2.
ordered_json curried_nat() {
  const auto E = all_endos();
  ordered_json families = ordered_json::array();
  int candidates = 0;
  for (int code = 0; code < 256; ++code) {
    ++candidates;
    std::array<Endo, 4> phi;
    for (int k = 0; k < 4; ++k) phi[k] = E[(code >> (2 * (3 - k))) & 3];
    bool ok = true;
    for (int a = 0; a < 4 && ok; ++a)
      for (int b = 0; b < 4 && ok; ++b)
        for (int c = 0; c < 4 && ok; ++c) {
          const Endo& i2 = E[a];
          if (compose(i2, E[b]) != compose(E[c], i2)) continue;
          if (compose(i2, phi[b]) != compose(phi[c], i2)) ok = false;
        }
    if (!ok) continue;
    ordered_json fam = ordered_json::object();
    for (int k = 0; k < 4; ++k) fam[name(E[k])] = name(phi[k]);
    families.push_back(fam);
  }
  return {{"candidates", candidates}, {"families", families}};
}

// Walking idempotent: monoid {1, e} with e∘e = e.
int wi_mul(int a, int b) { return (a == 1 || b == 1) ? 1 : 0; }  // 0 = identity "1", 1 = "e"

ordered_json walking_idempotent() {
  // Hom ⇒ Hom: phi: {1,e} → {1,e}; chevron for each i2, d0, d1 with
  // i2∘d0 = d1∘i2 requires i2∘phi(d0) = phi(d1)∘i2.
  int hom_families = 0;
  for (int code = 0; code < 4; ++code) {
    int phi[2] = {(code >> 1) & 1, code & 1};
    bool ok = true;
    for (int i2 = 0; i2 < 2; ++i2)
      for (int d0 = 0; d0 < 2; ++d0)
        for (int d1 = 0; d1 < 2; ++d1)
          if (wi_mul(i2, d0) == wi_mul(d1, i2) && wi_mul(i2, phi[d0]) != wi_mul(phi[d1], i2)) ok = false;
    hom_families += ok;
  }
  // DiYo(*,*) ⇒ Hom: diagonal elements (into, from) ∈ {1,e}²; map⁺ i2 (into,
  // from) = (i2∘into, from), map⁻ i2 (into, from) = (into, from∘i2).
  int diyo_families = 0;
  for (int code = 0; code < 16; ++code) {
    auto phi = [&](int into, int from) { return (code >> (into * 2 + from)) & 1; };
    bool ok = true;
    for (int i2 = 0; i2 < 2; ++i2)
      for (int a0 = 0; a0 < 2; ++a0)
        for (int b0 = 0; b0 < 2; ++b0)
          for (int a1 = 0; a1 < 2; ++a1)
            for (int b1 = 0; b1 < 2; ++b1) {
              const bool domain = wi_mul(i2, a0) == a1 && b0 == wi_mul(b1, i2);
              if (domain && wi_mul(i2, phi(a0, b0)) != wi_mul(phi(a1, b1), i2)) ok = false;
            }
    diyo_families += ok;
  }
  return {{"hom_to_hom", hom_families}, {"hom_cell", 2}, {"diyo_to_hom", diyo_families}, {"diyo_candidates", 16}};
}

// Universe on the one-object base with Γ = Const(S): a type over Struct Γ
// (discrete on S) is a choice of cell size ≤ b for each of the |S|² cells.
ordered_json universe() {
  ordered_json rows = ordered_json::array();
  for (int s = 1; s <= 2; ++s)
    for (int b = 1; b <= 2; ++b) {
      long types = 0, diagonal = 0;
      const int cells = s * s;
      std::vector<int> size(cells, 0);
      for (;;) {
        ++types;
        bool diag_only = true;
        for (int i = 0; i < s; ++i)
          for (int j = 0; j < s; ++j)
            if (i != j && size[i * s + j] != 0) diag_only = false;
        diagonal += diag_only;
        int k = cells - 1;
        while (k >= 0 && size[k] == b) size[k--] = 0;
        if (k < 0) break;
        ++size[k];
      }
      long terms = 1;
      for (int i = 0; i < s; ++i) terms *= (b + 1);
      rows.push_back({{"S", s},
                      {"bound", b},
                      {"universe_cell", b + 1},
                      {"types", types},
                      {"diagonal_types", diagonal},
                      {"diagonal_roundtrip", diagonal},
                      {"off_diagonal_types", types - diagonal},
                      {"off_diagonal_roundtrip", 0},
                      {"terms", terms},
                      {"term_roundtrip", terms}});
    }
  return rows;
}

// Queues over alphabet {a,b} with capacity 3. Observations: front element of
// the queue (or empty). Two states are equivalent when every sequence of
// enqueue/dequeue operations (up to depth 7) produces the same observations.
using Word = std::string;

struct ListQ {
  Word items;
};
struct BatchQ {
  Word front, back;  // back stored newest first
};

std::vector<Word> words_upto(int n) {
  std::vector<Word> out{""};
  for (std::size_t i = 0; i < out.size(); ++i)
    if (static_cast<int>(out[i].size()) < n)
      for (char c : {'a', 'b'}) out.push_back(out[i] + c);
  return out;
}

std::string observe_list(Word q, const std::vector<int>& ops) {
  std::string trace;
  for (int op : ops) {
    if (op < 2) {
      if (q.size() < 3) q.push_back(op ? 'b' : 'a');
    } else if (!q.empty()) {
      q.erase(q.begin());
    }
    trace += q.empty() ? '_' : q.front();
  }
  return trace;
}

std::string observe_batch(BatchQ q, const std::vector<int>& ops) {
  std::string trace;
  auto norm = [](BatchQ& s) {
    if (s.front.empty()) {
      s.front = Word(s.back.rbegin(), s.back.rend());
      s.back.clear();
    }
  };
  for (int op : ops) {
    if (op < 2) {
      if (q.front.size() + q.back.size() < 3) q.back.insert(q.back.begin(), op ? 'b' : 'a');
    } else {
      norm(q);
      if (!q.front.empty()) q.front.erase(q.front.begin());
    }
    BatchQ view = q;
    norm(view);
    trace += view.front.empty() ? '_' : view.front.front();
  }
  return trace;
}

ordered_json queues() {
  const auto lists = words_upto(3);
  std::vector<BatchQ> batches;
  for (const auto& f : lists)
    for (const auto& b : lists)
      if (f.size() + b.size() <= 3) batches.push_back({f, b});
  std::vector<std::vector<int>> seqs{{}};
  for (int depth = 0; depth < 7; ++depth) {
    std::vector<std::vector<int>> next;
    for (auto& s : seqs)
      for (int op = 0; op < 3; ++op) {
        auto t = s;
        t.push_back(op);
        next.push_back(t);
      }
    seqs.insert(seqs.end(), next.begin(), next.end());
    seqs = std::vector<std::vector<int>>(seqs.end() - static_cast<long>(next.size()), seqs.end());
  }
  auto signature = [&](const std::function<std::string(const std::vector<int>&)>& obs) {
    std::string sig;
    for (const auto& s : seqs) sig += obs(s) + "|";
    return sig;
  };
  std::map<std::string, int> classes;
  std::vector<int> list_class, batch_class;
  for (const auto& l : lists) {
    auto sig = signature([&](const std::vector<int>& s) { return observe_list(l, s); });
    list_class.push_back(classes.emplace(sig, static_cast<int>(classes.size())).first->second);
  }
  for (const auto& q : batches) {
    auto sig = signature([&](const std::vector<int>& s) { return observe_batch(q, s); });
    batch_class.push_back(classes.emplace(sig, static_cast<int>(classes.size())).first->second);
  }
  int related = 0, related_equivalent = 0;
  for (std::size_t i = 0; i < lists.size(); ++i)
    for (std::size_t j = 0; j < batches.size(); ++j) {
      Word abstract = batches[j].front + Word(batches[j].back.rbegin(), batches[j].back.rend());
      if (abstract != lists[i]) continue;
      ++related;
      related_equivalent += list_class[i] == batch_class[j];
    }
  return {{"list_states", lists.size()},
          {"batched_states", batches.size()},
          {"observational_classes", classes.size()},
          {"related_pairs", related},
          {"related_pairs_equivalent", related_equivalent}};
}

// Currying over the one-object base: paranaturals between constants are
// plain functions, so |Θ×Δ ⇒ Γ| = |Γ|^(|Θ||Δ|) and |Θ ⇒ Γ^Δ| = (|Γ|^|Δ|)^|Θ|.
ordered_json currying() {
  auto power = [](long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  ordered_json rows = ordered_json::array();
  for (int t = 1; t <= 2; ++t)
    for (int d = 1; d <= 2; ++d)
      for (int g = 1; g <= 2; ++g)
        rows.push_back({{"theta", t}, {"delta", d}, {"gamma", g}, {"lhs", power(g, t * d)}, {"rhs", power(power(g, d), t)}});
  return rows;
}

}  // namespace

int main() {
  ordered_json out;
  out["curried_nat"] = curried_nat();
  out["walking_idempotent"] = walking_idempotent();
  out["universe_terminal_base"] = universe();
  out["queues"] = queues();
  out["currying_terminal_base"] = currying();
  std::cout << out.dump(2) << "\n";
}
