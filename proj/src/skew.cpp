#include "skewgentle/skew.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

namespace skewgentle {
namespace {

char letter(VertexKind k) {
  switch (k) {
    case VertexKind::plus: return 'p';
    case VertexKind::minus: return 'm';
    default: return 'o';
  }
}

VertexKind flip(VertexKind k) {
  if (k == VertexKind::plus) return VertexKind::minus;
  if (k == VertexKind::minus) return VertexKind::plus;
  return k;
}

std::vector<VertexKind> signs(const QuiverSpec& q, int v) {
  if (q.is_special(v)) return {VertexKind::plus, VertexKind::minus};
  return {VertexKind::ordinary};
}

std::string vertex_label(const QuiverSpec& q, int v, VertexKind k) {
  if (k == VertexKind::ordinary) return q.vertex_name(v);
  return q.vertex_name(v) + "__" + letter(k);
}

std::string arrow_label(const QuiverSpec& q, int a, VertexKind s, VertexKind t) {
  if (s == VertexKind::ordinary && t == VertexKind::ordinary) return q.arrow_name(a);
  return q.arrow_name(a) + "__" + letter(s) + "_" + letter(t);
}

void index_split(SplitQuiver& sq) {
  sq.vertex_lift.clear();
  sq.arrow_lift.clear();
  sq.minus_vertices.clear();
  sq.plus_vertices.clear();
  for (int v = 0; v < sq.spec.vertex_count(); ++v) {
    const VertexKind k = sq.vertex_kind[static_cast<std::size_t>(v)];
    sq.vertex_lift[{sq.vertex_origin[static_cast<std::size_t>(v)], static_cast<int>(k)}] = v;
    if (k == VertexKind::minus) sq.minus_vertices.push_back(v);
    if (k == VertexKind::plus) sq.plus_vertices.push_back(v);
  }
  for (int a = 0; a < sq.spec.arrow_count(); ++a)
    sq.arrow_lift[{sq.arrow_origin[static_cast<std::size_t>(a)], static_cast<int>(sq.arrow_source_sign[static_cast<std::size_t>(a)]),
                   static_cast<int>(sq.arrow_target_sign[static_cast<std::size_t>(a)])}] = a;
}

}  // namespace

const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::plus: return "plus";
    case VertexKind::minus: return "minus";
    default: return "ordinary";
  }
}

int SplitQuiver::lift_vertex(int q_vertex, VertexKind sign) const {
  auto it = vertex_lift.find({q_vertex, static_cast<int>(sign)});
  if (it != vertex_lift.end()) return it->second;
  it = vertex_lift.find({q_vertex, static_cast<int>(VertexKind::ordinary)});
  return it == vertex_lift.end() ? -1 : it->second;
}

int SplitQuiver::lift_arrow(int q_arrow, VertexKind source_sign, VertexKind target_sign) const {
  auto it = arrow_lift.find({q_arrow, static_cast<int>(source_sign), static_cast<int>(target_sign)});
  return it == arrow_lift.end() ? -1 : it->second;
}

SplitQuiver split_triple(const SkewGentleTriple& triple) {
  const QuiverSpec& q = triple.base;
  SplitQuiver sq;
  for (int v = 0; v < q.vertex_count(); ++v)
    for (VertexKind k : signs(q, v)) {
      sq.spec.add_vertex(vertex_label(q, v, k));
      sq.vertex_kind.push_back(k);
      sq.vertex_origin.push_back(v);
    }
  index_split(sq);
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrows()[static_cast<std::size_t>(a)];
    for (VertexKind s : signs(q, arr.source))
      for (VertexKind t : signs(q, arr.target)) {
        sq.spec.add_arrow(arrow_label(q, a, s, t), sq.lift_vertex(arr.source, s), sq.lift_vertex(arr.target, t));
        sq.arrow_origin.push_back(a);
        sq.arrow_source_sign.push_back(s);
        sq.arrow_target_sign.push_back(t);
      }
  }
  index_split(sq);

  for (const auto& r : q.relations()) {
    const int alpha = r.terms.front().arrows[0], beta = r.terms.front().arrows[1];
    const int j = q.arrows()[static_cast<std::size_t>(alpha)].source;
    const int i = q.arrows()[static_cast<std::size_t>(alpha)].target;
    const int k = q.arrows()[static_cast<std::size_t>(beta)].target;
    for (VertexKind s : signs(q, j))
      for (VertexKind t : signs(q, k)) {
        Relation rel;
        if (!q.is_special(i)) {
          rel.terms.push_back({Rational(1), {sq.lift_arrow(alpha, s, VertexKind::ordinary), sq.lift_arrow(beta, VertexKind::ordinary, t)}});
        } else {
          for (VertexKind m : {VertexKind::plus, VertexKind::minus})
            rel.terms.push_back({Rational(1), {sq.lift_arrow(alpha, s, m), sq.lift_arrow(beta, m, t)}});
        }
        sq.spec.add_relation(std::move(rel));
      }
  }
  return sq;
}

SplitQuiver swap_signs(const SplitQuiver& sq) {
  SplitQuiver out;
  auto swap_suffix = [](std::string name, std::size_t letters_from) {
    for (std::size_t i = letters_from; i < name.size(); ++i) {
      if (name[i] == 'p') name[i] = 'm';
      else if (name[i] == 'm') name[i] = 'p';
    }
    return name;
  };
  for (int v = 0; v < sq.spec.vertex_count(); ++v) {
    const VertexKind k = sq.vertex_kind[static_cast<std::size_t>(v)];
    std::string name = sq.spec.vertex_name(v);
    if (k != VertexKind::ordinary) name = swap_suffix(name, name.size() - 1);
    out.spec.add_vertex(name);
    out.vertex_kind.push_back(flip(k));
    out.vertex_origin.push_back(sq.vertex_origin[static_cast<std::size_t>(v)]);
  }
  for (int a = 0; a < sq.spec.arrow_count(); ++a) {
    const Arrow& arr = sq.spec.arrows()[static_cast<std::size_t>(a)];
    const VertexKind s = sq.arrow_source_sign[static_cast<std::size_t>(a)];
    const VertexKind t = sq.arrow_target_sign[static_cast<std::size_t>(a)];
    std::string name = arr.name;
    if (s != VertexKind::ordinary || t != VertexKind::ordinary) name = swap_suffix(name, name.size() - 3);
    out.spec.add_arrow(name, arr.source, arr.target);
    out.arrow_origin.push_back(sq.arrow_origin[static_cast<std::size_t>(a)]);
    out.arrow_source_sign.push_back(flip(s));
    out.arrow_target_sign.push_back(flip(t));
  }
  for (const auto& r : sq.spec.relations()) out.spec.add_relation(r);
  index_split(out);
  return out;
}

GammaPair build_gamma(const SkewGentleTriple& triple) {
  const QuiverSpec& q = triple.base;
  GammaPair g;
  std::vector<std::array<int, 2>> lift(static_cast<std::size_t>(q.vertex_count()));
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (q.is_special(v)) {
      const int x = g.spec.add_vertex(q.vertex_name(v));
      lift[static_cast<std::size_t>(v)] = {x, x};
      g.vertex_action.push_back(x);
    } else {
      const int p = g.spec.add_vertex(q.vertex_name(v) + "__p");
      const int m = g.spec.add_vertex(q.vertex_name(v) + "__m");
      lift[static_cast<std::size_t>(v)] = {p, m};
      g.vertex_action.push_back(m);
      g.vertex_action.push_back(p);
    }
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arr = q.arrows()[static_cast<std::size_t>(a)];
    for (int sign = 0; sign < 2; ++sign)
      g.spec.add_arrow(arr.name + (sign == 0 ? "__p" : "__m"), lift[static_cast<std::size_t>(arr.source)][static_cast<std::size_t>(sign)],
                       lift[static_cast<std::size_t>(arr.target)][static_cast<std::size_t>(sign)]);
    g.arrow_action.push_back(2 * a + 1);
    g.arrow_action.push_back(2 * a);
  }
  for (const auto& r : q.relations()) {
    const int alpha = r.terms.front().arrows[0], beta = r.terms.front().arrows[1];
    const bool special_middle = q.is_special(q.arrows()[static_cast<std::size_t>(alpha)].target);
    for (int sign = 0; sign < 2; ++sign) {
      const int other = special_middle ? 1 - sign : sign;
      g.spec.add_relation(Relation{{RelationTerm{Rational(1), {2 * alpha + sign, 2 * beta + other}}}});
    }
  }
  return g;
}

nlohmann::json ProbeReport::to_json() const {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& x : failures) f.push_back({{"probe", x.probe}, {"witness", x.witness}});
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [p, q, s] : sign_pairs) pairs.push_back({{"path", p}, {"twin", q}, {"interior", s}});
  return {{"passed", passed}, {"checked", checked}, {"failures", f}, {"sign_pairs", pairs}};
}

template <class S>
ProbeReport structure_probes(const SplitQuiver& sq, const PresentedAlgebra<S>& a) {
  const QuiverSpec& q = sq.spec;
  ProbeReport rep;
  for (const char* name : {"a", "b", "c", "d2", "d3", "e", "f"}) rep.checked[name] = 0;
  auto kind = [&](int v) { return sq.vertex_kind[static_cast<std::size_t>(v)]; };
  auto fail = [&](const std::string& probe, const std::string& witness) {
    rep.passed = false;
    rep.failures.push_back({probe, witness});
  };
  auto nf = [&](const Path& p) { return a.normal_form(p); };
  const int max_len = a.certificate_degree();

  // Paths of length >= 1 from `start` whose interior vertices satisfy `inner`
  // and whose end satisfies `end`; emitted once the end is reached.
  auto enumerate = [&](int start, const std::function<bool(int)>& inner, const std::function<bool(int)>& end,
                       const std::function<void(const Path&)>& emit) {
    std::function<void(Path&)> walk = [&](Path& p) {
      if (static_cast<int>(p.length()) >= max_len) return;
      for (int x : q.out_arrows(p.target)) {
        const int t = q.arrows()[static_cast<std::size_t>(x)].target;
        Path next{p.source, t, p.arrows};
        next.arrows.push_back(x);
        if (end(t)) emit(next);
        if (inner(t)) walk(next);
      }
    };
    Path p{start, start, {}};
    walk(p);
  };

  // (a), (b)
  for (int v : sq.minus_vertices) {
    std::set<int> minus_out, minus_in, other_out, other_in;
    for (int x : q.out_arrows(v)) {
      const int t = q.arrows()[static_cast<std::size_t>(x)].target;
      (kind(t) == VertexKind::minus ? minus_out : other_out).insert(t);
    }
    for (int x : q.in_arrows(v)) {
      const int s = q.arrows()[static_cast<std::size_t>(x)].source;
      (kind(s) == VertexKind::minus ? minus_in : other_in).insert(s);
    }
    rep.checked["a"] += 2;
    rep.checked["b"] += 2;
    if (minus_out.size() > 1) fail("a", q.vertex_name(v) + " has " + std::to_string(minus_out.size()) + " minus successors");
    if (minus_in.size() > 1) fail("a", q.vertex_name(v) + " has " + std::to_string(minus_in.size()) + " minus predecessors");
    if (other_out.size() > 1) fail("b", q.vertex_name(v) + " has " + std::to_string(other_out.size()) + " non-minus successors");
    if (other_in.size() > 1) fail("b", q.vertex_name(v) + " has " + std::to_string(other_in.size()) + " non-minus predecessors");
  }

  // (c)
  for (int i = 0; i < a.dimension(); ++i) {
    const Path& p = a.basis()[static_cast<std::size_t>(i)];
    if (p.trivial() || p.source != p.target || kind(p.source) != VertexKind::minus) continue;
    fail("c", path_to_string(q, p));
  }
  rep.checked["c"] = static_cast<int>(sq.minus_vertices.size());

  // (d2) and (e): twin through the opposite interior sign.
  auto twin_check = [&](const std::string& probe, const Path& p, VertexKind twin_sign) {
    if (p.length() < 2) return;
    Path twin{p.source, p.target, {}};
    VertexKind prev = sq.arrow_source_sign[static_cast<std::size_t>(p.arrows.front())];
    for (std::size_t k = 0; k < p.length(); ++k) {
      const int x = p.arrows[k];
      const VertexKind next = k + 1 == p.length() ? sq.arrow_target_sign[static_cast<std::size_t>(x)] : twin_sign;
      const int y = sq.lift_arrow(sq.arrow_origin[static_cast<std::size_t>(x)], prev, next);
      if (y < 0) {
        fail(probe, path_to_string(q, p) + " has no sign twin");
        return;
      }
      twin.arrows.push_back(y);
      prev = next;
    }
    const int interior = static_cast<int>(p.length()) - 1;
    const S sign = interior % 2 == 0 ? S(1) : S(-1);
    Element<S> lhs = nf(p);
    const Element<S> rhs = nf(twin);
    add_scaled(lhs, rhs, -sign);
    ++rep.checked[probe];
    if (!lhs.is_zero()) {
      fail(probe, path_to_string(q, p) + " != (-1)^" + std::to_string(interior) + " " + path_to_string(q, twin));
      return;
    }
    if (!rhs.is_zero()) rep.sign_pairs.emplace_back(path_to_string(q, p), path_to_string(q, twin), interior);
  };
  for (int v : sq.minus_vertices)
    enumerate(
        v, [&](int t) { return kind(t) == VertexKind::plus; }, [&](int t) { return kind(t) == VertexKind::minus; },
        [&](const Path& p) { twin_check("d2", p, VertexKind::minus); });
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (kind(v) == VertexKind::minus) continue;
    enumerate(
        v, [&](int t) { return kind(t) == VertexKind::minus; }, [&](int t) { return kind(t) != VertexKind::minus; },
        [&](const Path& p) { twin_check("e", p, VertexKind::plus); });
  }

  // (d3)
  for (int v : sq.minus_vertices) {
    std::map<int, std::vector<Path>> survivors;
    enumerate(
        v, [&](int t) { return kind(t) == VertexKind::ordinary; }, [&](int t) { return kind(t) == VertexKind::minus; },
        [&](const Path& p) {
          if (p.length() >= 2 && !nf(p).is_zero()) survivors[p.target].push_back(p);
        });
    for (const auto& [t, paths] : survivors) {
      ++rep.checked["d3"];
      if (paths.size() > 1)
        fail("d3", path_to_string(q, paths[0]) + " and " + path_to_string(q, paths[1]) + " both survive");
    }
  }

  // (f)
  std::vector<Path> pieces;
  for (int v : sq.minus_vertices)
    enumerate(
        v, [&](int t) { return kind(t) != VertexKind::minus; }, [&](int t) { return kind(t) == VertexKind::minus; },
        [&](const Path& p) {
          if (!nf(p).is_zero()) pieces.push_back(p);
        });
  for (const Path& p1 : pieces)
    for (const Path& p2 : pieces) {
      if (p1.target != p2.source) continue;
      ++rep.checked["f"];
      if (nf(*path_compose(q, p1, p2)).is_zero())
        fail("f", path_to_string(q, p1) + " * " + path_to_string(q, p2) + " vanishes");
    }
  return rep;
}

nlohmann::json to_json(const SplitQuiver& sq) {
  nlohmann::json kinds = nlohmann::json::object();
  for (int v = 0; v < sq.spec.vertex_count(); ++v) kinds[sq.spec.vertex_name(v)] = kind_name(sq.vertex_kind[static_cast<std::size_t>(v)]);
  std::vector<std::string> minus;
  for (int v : sq.minus_vertices) minus.push_back(sq.spec.vertex_name(v));
  return {{"vertices", sq.spec.vertex_count()},
          {"arrows", sq.spec.arrow_count()},
          {"relations", sq.spec.relations().size()},
          {"vertex_kind", kinds},
          {"minus_vertices", minus}};
}

nlohmann::json to_json(const GammaPair& g) {
  nlohmann::json va = nlohmann::json::object(), aa = nlohmann::json::object();
  for (int v = 0; v < g.spec.vertex_count(); ++v)
    va[g.spec.vertex_name(v)] = g.spec.vertex_name(g.vertex_action[static_cast<std::size_t>(v)]);
  for (int a = 0; a < g.spec.arrow_count(); ++a)
    aa[g.spec.arrow_name(a)] = g.spec.arrow_name(g.arrow_action[static_cast<std::size_t>(a)]);
  return {{"vertices", g.spec.vertex_count()}, {"arrows", g.spec.arrow_count()}, {"vertex_action", va}, {"arrow_action", aa}};
}

#define SKEWGENTLE_INSTANTIATE_SKEW(S) \
  template ProbeReport structure_probes<S>(const SplitQuiver&, const PresentedAlgebra<S>&);
SKEWGENTLE_INSTANTIATE_SKEW(Rational)
SKEWGENTLE_INSTANTIATE_SKEW(F2)
SKEWGENTLE_INSTANTIATE_SKEW(F3)
SKEWGENTLE_INSTANTIATE_SKEW(F5)
SKEWGENTLE_INSTANTIATE_SKEW(F7)

}  // namespace skewgentle
