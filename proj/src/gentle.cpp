#include "skewgentle/gentle.hpp"

#include <algorithm>
#include <functional>

#include "skewgentle/engine.hpp"

namespace skewgentle {

std::set<std::pair<int, int>> monomial_pairs(const QuiverSpec& spec) {
  std::set<std::pair<int, int>> out;
  for (const auto& r : spec.relations()) {
    if (!r.monomial() || r.length() != 2)
      throw SpecError("gentle checks need monomial relations of length 2");
    out.emplace(r.terms.front().arrows[0], r.terms.front().arrows[1]);
  }
  return out;
}

GentleVerdict check_gentle(const QuiverSpec& spec, int degree_cap) {
  const auto rel = monomial_pairs(spec);
  GentleVerdict v;
  auto names = [&](const std::vector<int>& arrows) {
    std::vector<std::string> out;
    for (int a : arrows) out.push_back(spec.arrow_name(a));
    return out;
  };

  for (int x = 0; x < spec.vertex_count(); ++x) {
    const auto out = spec.out_arrows(x), in = spec.in_arrows(x);
    if (out.size() > 2)
      v.violations.push_back({1, {spec.vertex_name(x)}, names(out),
                              "vertex " + spec.vertex_name(x) + " starts " + std::to_string(out.size()) + " arrows"});
    if (in.size() > 2)
      v.violations.push_back({1, {spec.vertex_name(x)}, names(in),
                              "vertex " + spec.vertex_name(x) + " ends " + std::to_string(in.size()) + " arrows"});
  }

  for (int a = 0; a < spec.arrow_count(); ++a) {
    const Arrow& arr = spec.arrows()[static_cast<std::size_t>(a)];
    std::vector<int> after_free, after_rel, before_free, before_rel;
    for (int b : spec.out_arrows(arr.target)) (rel.count({a, b}) ? after_rel : after_free).push_back(b);
    for (int c : spec.in_arrows(arr.source)) (rel.count({c, a}) ? before_rel : before_free).push_back(c);
    auto report = [&](int axiom, const std::vector<int>& group, const char* what) {
      if (group.size() < 2) return;
      std::vector<int> w{a};
      w.insert(w.end(), group.begin(), group.end());
      v.violations.push_back({axiom, {}, names(w), "arrow " + arr.name + " has " + std::to_string(group.size()) + " " + what});
    };
    report(2, after_free, "continuations outside I");
    report(2, before_free, "predecessors outside I");
    report(3, after_rel, "continuations in I");
    report(3, before_rel, "predecessors in I");
  }

  if (v.violations.empty()) {
    try {
      (void)realize<Rational>(spec, degree_cap);
    } catch (const CapExceeded& e) {
      v.violations.push_back({4, {}, {}, std::string("algebra is not finite dimensional: ") + e.what()});
    }
  }
  v.is_gentle = v.violations.empty();
  return v;
}

std::string special_loop_name(const QuiverSpec& spec, int vertex) {
  std::string name = "delta_" + spec.vertex_name(vertex);
  while (spec.find_arrow(name)) name += "_";
  return name;
}

SkewGentleCheck check_skew_gentle(const QuiverSpec& spec, int degree_cap) {
  (void)monomial_pairs(spec);
  QuiverSpec aug = spec.underlying_quiver();
  std::vector<std::string> loops;
  for (int v : spec.special()) loops.push_back(special_loop_name(spec, v));
  for (std::size_t k = 0; k < loops.size(); ++k) aug.add_arrow(loops[k], spec.special()[k], spec.special()[k]);
  for (const auto& r : spec.relations()) aug.add_relation(r);
  for (const auto& name : loops) aug.add_relation(monomial_relation(aug, name, name));
  for (int v : spec.special()) aug.mark_special(v);

  SkewGentleCheck out;
  out.verdict = check_gentle(aug, degree_cap);
  if (out.verdict.is_gentle) {
    SkewGentleTriple t;
    t.base = spec;
    t.special_vertices = spec.special();
    std::sort(t.special_vertices.begin(), t.special_vertices.end());
    for (int v = 0; v < spec.vertex_count(); ++v)
      if (!spec.is_special(v)) t.ordinary_vertices.push_back(v);
    t.augmented = std::move(aug);
    out.triple = std::move(t);
    return out;
  }

  for (auto& viol : out.verdict.violations) {
    for (std::size_t k = 0; k < loops.size(); ++k) {
      const int v = spec.special()[k];
      const bool touches_loop = std::find(viol.arrows.begin(), viol.arrows.end(), loops[k]) != viol.arrows.end();
      const bool at_vertex = std::find(viol.vertices.begin(), viol.vertices.end(), spec.vertex_name(v)) != viol.vertices.end();
      if (!touches_loop && !at_vertex) continue;
      const std::string& name = spec.vertex_name(v);
      if (std::find(out.offending_special.begin(), out.offending_special.end(), name) == out.offending_special.end())
        out.offending_special.push_back(name);
      viol.message += "; " + loops[k] + " is not a special loop";
      if (std::find(viol.vertices.begin(), viol.vertices.end(), name) == viol.vertices.end()) viol.vertices.push_back(name);
    }
  }
  return out;
}

SkewGentleTriple require_skew_gentle(const QuiverSpec& spec) {
  SkewGentleCheck c = check_skew_gentle(spec);
  if (c.valid()) return std::move(*c.triple);
  std::string msg = "not a skew-gentle triple:";
  for (const auto& v : c.verdict.violations) msg += " [axiom " + std::to_string(v.axiom) + "] " + v.message + ";";
  throw SpecError(msg);
}

std::pair<std::vector<Relation>, std::vector<Relation>> split_relations(const SkewGentleTriple& triple) {
  std::pair<std::vector<Relation>, std::vector<Relation>> out;
  for (const auto& r : triple.base.relations()) {
    const int middle = triple.base.arrows()[static_cast<std::size_t>(r.terms.front().arrows[0])].target;
    (triple.is_special(middle) ? out.second : out.first).push_back(r);
  }
  return out;
}

std::vector<std::vector<int>> find_full_relation_cycles(const QuiverSpec& spec) {
  const auto rel = monomial_pairs(spec);
  std::vector<std::vector<int>> next(static_cast<std::size_t>(spec.arrow_count()));
  for (const auto& [a, b] : rel) next[static_cast<std::size_t>(a)].push_back(b);

  // Simple cycles in the relation graph, each found once from its smallest arrow.
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  std::vector<char> on_stack(static_cast<std::size_t>(spec.arrow_count()), 0);
  std::function<void(int, int)> dfs = [&](int start, int a) {
    for (int b : next[static_cast<std::size_t>(a)]) {
      if (b == start) {
        out.push_back(stack);
        continue;
      }
      if (b < start || on_stack[static_cast<std::size_t>(b)]) continue;
      on_stack[static_cast<std::size_t>(b)] = 1;
      stack.push_back(b);
      dfs(start, b);
      stack.pop_back();
      on_stack[static_cast<std::size_t>(b)] = 0;
    }
  };
  for (int s = 0; s < spec.arrow_count(); ++s) {
    stack = {s};
    on_stack[static_cast<std::size_t>(s)] = 1;
    dfs(s, s);
    on_stack[static_cast<std::size_t>(s)] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json to_json(const GentleVerdict& v) {
  nlohmann::json viol = nlohmann::json::array();
  for (const auto& x : v.violations)
    viol.push_back({{"axiom", x.axiom},
                    {"witness", {{"vertices", x.vertices}, {"arrows", x.arrows}}},
                    {"message", x.message}});
  return {{"is_gentle", v.is_gentle}, {"violations", viol}};
}

nlohmann::json to_json(const SkewGentleCheck& c) {
  nlohmann::json j = to_json(c.verdict);
  j["is_skew_gentle"] = c.valid();
  j["offending_special"] = c.offending_special;
  return j;
}

}  // namespace skewgentle
