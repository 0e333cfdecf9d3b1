#include "skewgentle/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace skewgentle {

template <class S>
Module<S> syzygy(const Module<S>& m) {
  return kernel_of_cover(projective_cover(m, true)).module;
}

namespace {

template <class S>
std::vector<int> joined(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Largest i <= top with dims[i] != 0 (i >= 1 counts only), or -1.
int last_nonzero(const std::vector<int>& dims) {
  for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i)
    if (dims[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

}  // namespace

template <class S>
std::vector<int> tor_over_C(const PeirceData<S>& pd, int n_max) {
  if (pd.degenerate()) return std::vector<int>(static_cast<std::size_t>(n_max + 1), 0);
  return tor_dims(corner_module(pd, pd.M, false), corner_module(pd, pd.N, true), n_max);
}

template <class S>
StratifyingVerdict stratifying_check(const PeirceData<S>& pd, int n_max) {
  StratifyingVerdict out;
  out.tor_dims.assign(static_cast<std::size_t>(n_max), 0);
  if (pd.degenerate()) return out;
  const auto& fa = *pd.algebra->algebra();
  const Index dim = fa.dimension();
  const std::vector<int> ae = joined<S>(pd.M, pd.C);
  const std::vector<int> ea = joined<S>(pd.N, pd.C);
  std::vector<int> c_rad;
  for (int c : pd.C)
    if (fa.basis(c).degree > 0) c_rad.push_back(c);

  // Explicit Ae (x)_C eA per block e_p(-)e_q.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> blocks;
  for (int x : ae)
    for (int y : ea)
      if (fa.basis(x).target == fa.basis(y).source) blocks[{fa.basis(x).source, fa.basis(y).target}].emplace_back(x, y);
  for (const auto& [key, pairs] : blocks) {
    std::map<std::pair<int, int>, Index> col;
    for (const auto& pr : pairs) col.emplace(pr, static_cast<Index>(col.size()));
    std::vector<Vector<S>> rels;
    // x c (x) z - x (x) c z
    for (int x : ae) {
      if (fa.basis(x).source != key.first) continue;
      for (int c : c_rad) {
        if (fa.basis(c).source != fa.basis(x).target) continue;
        for (int z : ea) {
          if (fa.basis(z).source != fa.basis(c).target || fa.basis(z).target != key.second) continue;
          Vector<S> r = Vector<S>::Zero(static_cast<Index>(pairs.size()));
          for (const auto& [k, v] : fa.product(x, c).terms) r(col.at({k, z})) += v;
          for (const auto& [k, v] : fa.product(c, z).terms) r(col.at({x, k})) -= v;
          rels.push_back(std::move(r));
        }
      }
    }
    Matrix<S> rel(static_cast<Index>(pairs.size()), static_cast<Index>(rels.size()));
    for (std::size_t k = 0; k < rels.size(); ++k) rel.col(static_cast<Index>(k)) = rels[k];
    Matrix<S> mult = Matrix<S>::Zero(dim, static_cast<Index>(pairs.size()));
    for (std::size_t k = 0; k < pairs.size(); ++k)
      for (const auto& [i, v] : fa.product(pairs[k].first, pairs[k].second).terms) mult(i, static_cast<Index>(k)) = v;
    const int tensor = static_cast<int>(pairs.size()) - static_cast<int>(rank<S>(rel));
    const int image = static_cast<int>(rank<S>(mult));
    out.tensor_dim += tensor;
    out.ideal_dim += image;
    if (tensor != image) out.degree0 = false;
  }

  const Module<S> ae_c = corner_module(pd, ae, false);
  const Module<S> ea_c = corner_module(pd, ea, true);
  const std::vector<int> tor = tor_dims(ae_c, ea_c, n_max);
  out.tor0_agrees = tor[0] == out.tensor_dim;
  for (int n = 1; n <= n_max; ++n) {
    out.tor_dims[static_cast<std::size_t>(n - 1)] = tor[static_cast<std::size_t>(n)];
    if (tor[static_cast<std::size_t>(n)] != 0) out.higher = false;
  }
  return out;
}

template <class S>
Module<S> ideal_bimodule(const PeirceData<S>& pd, const AlgebraPtr<S>& env) {
  const auto& fa = *pd.algebra->algebra();
  const int n = fa.vertex_count();
  const Index dim = fa.dimension();
  const int da = fa.dimension();
  const std::vector<int> ae = joined<S>(pd.M, pd.C);
  const std::vector<int> ea = joined<S>(pd.N, pd.C);
  std::vector<std::vector<Element<S>>> spanning(static_cast<std::size_t>(n * n));
  for (int x : ae)
    for (int y : ea) {
      if (fa.basis(x).target != fa.basis(y).source) continue;
      Element<S> p = fa.product(x, y);
      if (!p.is_zero())
        spanning[static_cast<std::size_t>(fa.basis(x).source * n + fa.basis(y).target)].push_back(std::move(p));
    }
  std::vector<Subspace<S>> parts;
  std::vector<int> dims;
  for (const auto& elems : spanning) {
    Matrix<S> m = Matrix<S>::Zero(dim, static_cast<Index>(elems.size()));
    for (std::size_t k = 0; k < elems.size(); ++k) m.col(static_cast<Index>(k)) = to_dense(elems[k], dim);
    parts.push_back(Subspace<S>::span(m));
    dims.push_back(static_cast<int>(parts.back().dim()));
  }
  std::vector<Matrix<S>> actions;
  for (const auto& g : env->generators()) {
    const auto& src = parts[static_cast<std::size_t>(g.source)];
    const auto& dst = parts[static_cast<std::size_t>(g.target)];
    Matrix<S> mat = Matrix<S>::Zero(dst.dim(), src.dim());
    for (Index k = 0; k < src.dim(); ++k) {
      const Element<S> x = from_dense<S>(Vector<S>(src.basis().col(k)));
      Element<S> image;
      for (const auto& [t, c] : g.element.terms) {
        // x . (a (x) b) = a x b
        const Element<S> ax = fa.multiply(Element<S>::basis(t / da), x);
        add_scaled(image, fa.multiply(ax, Element<S>::basis(t % da)), c);
      }
      const Vector<S> v = to_dense(image, dim);
      if (!dst.contains(v)) throw std::logic_error("ideal_bimodule: AeA is not closed under the bimodule action");
      if (dst.dim() > 0) mat.col(k) = dst.coordinates(v);
    }
    actions.push_back(std::move(mat));
  }
  return Module<S>(env, std::move(dims), std::move(actions));
}

template <class S>
std::optional<int> bimodule_pd_bound(const PeirceData<S>& pd, int cap, int max_dim) {
  if (pd.dim_A() > max_dim)
    throw SizeGuardExceeded("dim A = " + std::to_string(pd.dim_A()) + " exceeds the enveloping-algebra guard " +
                            std::to_string(max_dim));
  if (pd.degenerate()) return 0;
  const AlgebraPtr<S> env = enveloping<S>(pd.algebra->algebra());
  return resolve(ideal_bimodule(pd, env), cap).projective_dimension();
}

namespace {

template <class S>
std::optional<int> id_by_ext(const AlgebraPtr<S>& a, int cap) {
  if (a->vertex_count() == 0) return 0;
  std::vector<Module<S>> simples;
  for (int v = 0; v < a->vertex_count(); ++v) simples.push_back(simple_module(a, v));
  const auto ext = ext_dims(direct_sum(simples), regular_module(a), cap + 1);
  const int top = last_nonzero(ext);
  if (top == cap + 1) return std::nullopt;
  return std::max(top, 0);
}

}  // namespace

template <class S>
InjectiveDimensions injective_dimension_of_regular(const AlgebraPtr<S>& a, int cap) {
  InjectiveDimensions out;
  const AlgebraPtr<S> op = opposite(a);
  out.id_left = resolve(dual_regular_module(a), cap).projective_dimension();
  out.id_right = resolve(dual_regular_module(op), cap).projective_dimension();
  out.id_right_ext = id_by_ext(a, cap);
  out.id_left_ext = id_by_ext(op, cap);
  return out;
}

template <class S>
GorensteinVerdict gorenstein_check(const AlgebraPtr<S>& a, int cap) {
  return GorensteinVerdict{injective_dimension_of_regular(a, cap)};
}

bool selfinjective_by_combinatorics(const SkewGentleTriple& triple) {
  const QuiverSpec& q = triple.base;
  const int n = q.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = count;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      std::vector<int> nb;
      for (int x : q.out_arrows(v)) nb.push_back(q.arrows()[static_cast<std::size_t>(x)].target);
      for (int x : q.in_arrows(v)) nb.push_back(q.arrows()[static_cast<std::size_t>(x)].source);
      for (int w : nb)
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  const auto cycles = find_full_relation_cycles(q);
  for (int c = 0; c < count; ++c) {
    std::vector<int> verts, arrows;
    bool special = false;
    for (int v = 0; v < n; ++v)
      if (comp[static_cast<std::size_t>(v)] == c) {
        verts.push_back(v);
        special = special || q.is_special(v);
      }
    for (int x = 0; x < q.arrow_count(); ++x)
      if (comp[static_cast<std::size_t>(q.arrows()[static_cast<std::size_t>(x)].source)] == c) arrows.push_back(x);
    if (arrows.empty() && verts.size() == 1) continue;  // k, or k x k for a lone special vertex
    if (special) return false;
    // one oriented cycle through every arrow of the component, all compositions in I
    bool full = false;
    for (const auto& cyc : cycles) {
      std::vector<int> sorted = cyc;
      std::sort(sorted.begin(), sorted.end());
      if (sorted == arrows && arrows.size() == verts.size()) full = true;
    }
    if (!full) return false;
  }
  return true;
}

template <class S>
SelfinjectiveVerdict selfinjective_check(const AlgebraPtr<S>& a, const SkewGentleTriple* triple) {
  SelfinjectiveVerdict out;
  out.direct = true;
  for (int v = 0; v < a->vertex_count(); ++v) {
    const Module<S> i = injective_module(a, v);
    const ProjectiveCover<S> pc = projective_cover(i, true);
    if (pc.cover.dimension() == i.dimension() && pc.tops.size() == 1) {
      out.nakayama.push_back(pc.tops.front());
    } else {
      out.nakayama.push_back(-1);
      out.direct = false;
    }
  }
  // every P_v must occur: the tops form a permutation
  std::set<int> tops(out.nakayama.begin(), out.nakayama.end());
  if (out.direct && static_cast<int>(tops.size()) != a->vertex_count()) out.direct = false;
  if (triple) out.combinatorial = selfinjective_by_combinatorics(*triple);
  return out;
}

template <class S>
FindimReport findim_report(const AlgebraPtr<S>& a, const GorensteinVerdict& g, int cap) {
  if (!g.gorenstein()) throw std::invalid_argument("findim_report needs a Gorenstein algebra");
  FindimReport out;
  out.witness = g.dims.id_left;
  int max_degree = 0;
  for (const auto& b : a->basis()) max_degree = std::max(max_degree, b.degree);
  std::vector<Module<S>> probes;
  for (int v = 0; v < a->vertex_count(); ++v) {
    probes.push_back(simple_module(a, v));
    for (int j = 2; j <= max_degree; ++j) probes.push_back(truncated_projective(a, v, j));
  }
  for (const auto& m : probes) {
    ++out.probed;
    const auto pd = resolve(m, cap).projective_dimension();
    if (!pd) continue;
    ++out.finite;
    out.empirical_max = std::max(out.empirical_max, *pd);
  }
  out.bound_holds = out.empirical_max <= *out.witness;
  return out;
}

template <class S>
ExtSpotCheck ext_vanishing_spot_check(const AlgebraPtr<S>& a, const Module<S>& m, int k_max) {
  ExtSpotCheck out;
  out.projective = is_projective(m);
  const auto ext = ext_dims(m, direct_sum<S>({m, regular_module(a)}), k_max);
  bool vanish = true;
  for (int i = 1; i <= k_max; ++i) {
    out.ext_dims.push_back(ext[static_cast<std::size_t>(i)]);
    if (ext[static_cast<std::size_t>(i)] != 0) vanish = false;
  }
  out.flagged = vanish && !out.projective;
  return out;
}

namespace {
nlohmann::json opt(const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(">cap"); }
}  // namespace

nlohmann::json to_json(const StratifyingVerdict& v) {
  return {{"stratifying", v.stratifying()}, {"degree0", v.degree0},   {"higher", v.higher}, {"tor0_agrees", v.tor0_agrees},
          {"tensor_dim", v.tensor_dim},     {"ideal_dim", v.ideal_dim}, {"tor_dims", v.tor_dims}};
}

nlohmann::json to_json(const InjectiveDimensions& d) {
  return {{"id_left", opt(d.id_left)},
          {"id_right", opt(d.id_right)},
          {"id_left_ext", opt(d.id_left_ext)},
          {"id_right_ext", opt(d.id_right_ext)},
          {"routes_agree", d.routes_agree()}};
}

nlohmann::json to_json(const SelfinjectiveVerdict& v) {
  nlohmann::json j = {{"selfinjective", v.direct}, {"nakayama", v.nakayama}, {"agree", v.agree()}};
  if (v.combinatorial) j["combinatorial"] = *v.combinatorial;
  return j;
}

nlohmann::json to_json(const FindimReport& r) {
  return {{"findim_witness", opt(r.witness)}, {"empirical_max", r.empirical_max}, {"probed", r.probed},
          {"finite", r.finite},               {"bound_holds", r.bound_holds}};
}

nlohmann::json to_json(const ExtSpotCheck& r) {
  return {{"ext_dims", r.ext_dims}, {"projective", r.projective}, {"flagged", r.flagged}};
}

#define SKEWGENTLE_HOMOLOGY_INST(S) SKEWGENTLE_HOMOLOGY_DECL(, S)
SKEWGENTLE_HOMOLOGY_INST(Rational)
SKEWGENTLE_HOMOLOGY_INST(F2)
SKEWGENTLE_HOMOLOGY_INST(F3)
SKEWGENTLE_HOMOLOGY_INST(F5)
SKEWGENTLE_HOMOLOGY_INST(F7)

}  // namespace skewgentle
