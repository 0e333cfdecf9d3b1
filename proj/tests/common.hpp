#pragma once

#include <set>
#include <string>
#include <vector>

#include "skewgentle/dsl.hpp"
#include "skewgentle/gentle.hpp"
#include "skewgentle/quiver.hpp"

namespace sgtest {

// A_4 chain with I = {ab}.
inline const char* kChain = "vertices 1 2 3 4; arrow a: 1->2; arrow b: 2->3; arrow c: 3->4; rel a*b;";
inline std::string chain_with_special(const std::string& sp) { return std::string(kChain) + " special " + sp + ";"; }

inline skewgentle::QuiverSpec spec(const std::string& text) { return skewgentle::parse_quiver(text); }

inline skewgentle::SkewGentleTriple example_triple() {
  return skewgentle::require_skew_gentle(spec(chain_with_special("1 2")));
}

// Oriented n-cycle 1 -> 2 -> ... -> n -> 1 with every composition in I.
inline std::string nakayama_cycle(int n) {
  std::string s = "vertices";
  for (int v = 1; v <= n; ++v) s += " " + std::to_string(v);
  s += ";";
  for (int v = 1; v <= n; ++v)
    s += " arrow x" + std::to_string(v) + ": " + std::to_string(v) + "->" + std::to_string(v % n + 1) + ";";
  for (int v = 1; v <= n; ++v) s += " rel x" + std::to_string(v) + "*x" + std::to_string(v % n + 1) + ";";
  return s;
}

// Counts paths avoiding every forbidden length-2 subword; monomial algebras only.
inline int monomial_path_count(const skewgentle::QuiverSpec& q, int max_len = 40) {
  std::set<std::pair<int, int>> zero;
  for (const auto& r : q.relations()) zero.insert({r.terms[0].arrows[0], r.terms[0].arrows[1]});
  int count = q.vertex_count();
  std::vector<int> frontier;
  for (int a = 0; a < q.arrow_count(); ++a) frontier.push_back(a);
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    count += static_cast<int>(frontier.size());
    std::vector<int> next;
    for (int a : frontier)
      for (int b : q.out_arrows(q.arrows()[a].target))
        if (!zero.count({a, b})) next.push_back(b);
    frontier.swap(next);
  }
  return count;
}

}  // namespace sgtest
