#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ringlab/finite_rng.hpp"

namespace test_oracles {

using ringlab::Elem;
using ringlab::FiniteRng;
using ringlab::RngPtr;

// Re-checks every axiom instance over all triples by direct table scans and
// returns the names of the violated axioms.
inline std::set<std::string> violated_axioms(int n,
                                             const std::vector<Elem>& add,
                                             const std::vector<Elem>& mul) {
  auto at = [n](const std::vector<Elem>& t, Elem a, Elem b) {
    return t[a * n + b];
  };
  std::set<std::string> out;
  for (Elem a = 0; a < n; ++a) {
    if (at(add, 0, a) != a) out.insert("add-identity");
    bool inv = false;
    for (Elem b = 0; b < n; ++b) inv = inv || at(add, a, b) == 0;
    if (!inv) out.insert("add-inverses");
    if (at(mul, 0, a) != 0 || at(mul, a, 0) != 0)
      out.insert("zero-annihilation");
    for (Elem b = 0; b < n; ++b) {
      if (at(add, a, b) != at(add, b, a)) out.insert("add-commutativity");
      for (Elem c = 0; c < n; ++c) {
        if (at(add, at(add, a, b), c) != at(add, a, at(add, b, c)))
          out.insert("add-associativity");
        if (at(mul, at(mul, a, b), c) != at(mul, a, at(mul, b, c)))
          out.insert("mul-associativity");
        if (at(mul, a, at(add, b, c)) != at(add, at(mul, a, b), at(mul, a, c)))
          out.insert("left-distributivity");
        if (at(mul, at(add, a, b), c) != at(add, at(mul, a, c), at(mul, b, c)))
          out.insert("right-distributivity");
      }
    }
  }
  return out;
}

// Backtracking ring-isomorphism search on additive generators. Intended for
// order <= 64. Returns one isomorphism table A -> B if any exists.
inline std::optional<std::vector<Elem>> find_ring_isomorphism(
    const FiniteRng& a, const FiniteRng& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.unital() != b.unital()) return std::nullopt;
  int n = a.order();

  // greedy additive generators of a
  std::vector<Elem> gens;
  {
    std::vector<char> span(n, 0);
    span[0] = 1;
    std::vector<Elem> list = {0};
    for (Elem x = 0; x < n; ++x) {
      if (span[x]) continue;
      gens.push_back(x);
      std::vector<Elem> stack = {x};
      span[x] = 1;
      list.push_back(x);
      while (!stack.empty()) {
        Elem v = stack.back();
        stack.pop_back();
        for (size_t i = 0; i < list.size(); ++i) {
          Elem s = a.add(v, list[i]);
          if (!span[s]) {
            span[s] = 1;
            list.push_back(s);
            stack.push_back(s);
          }
        }
      }
    }
  }

  std::vector<Elem> img(n, -1);
  std::vector<char> used(n, 0);
  std::vector<Elem> assigned;
  img[0] = 0;
  used[0] = 1;
  assigned.push_back(0);

  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == gens.size()) {
      // additive closure reached everything; check bijection + products
      for (Elem x = 0; x < n; ++x)
        if (img[x] < 0) return false;
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (img[a.mul(x, y)] != b.mul(img[x], img[y])) return false;
      if (a.unital() && img[*a.unit()] != *b.unit()) return false;
      return true;
    }
    for (Elem t = 0; t < n; ++t) {
      if (used[t]) continue;
      size_t mark = assigned.size();
      bool ok = true;
      std::vector<std::pair<Elem, Elem>> queue = {{gens[k], t}};
      while (ok && !queue.empty()) {
        auto [x, v] = queue.back();
        queue.pop_back();
        if (img[x] != -1) {
          if (img[x] != v) ok = false;
          continue;
        }
        if (used[v]) {
          ok = false;  // not injective
          continue;
        }
        img[x] = v;
        used[v] = 1;
        assigned.push_back(x);
        for (size_t i = 0; i < assigned.size(); ++i) {
          Elem y = assigned[i];
          queue.push_back({a.add(x, y), b.add(v, img[y])});
        }
      }
      if (ok && rec(k + 1)) return true;
      while (assigned.size() > mark) {
        used[img[assigned.back()]] = 0;
        img[assigned.back()] = -1;
        assigned.pop_back();
      }
    }
    return false;
  };
  if (rec(0)) return img;
  return std::nullopt;
}

}  // namespace test_oracles
