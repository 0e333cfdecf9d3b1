#include "skewgentle/module.hpp"

#include <map>
#include <stdexcept>

namespace skewgentle {

template <class S>
Module<S>::Module(AlgebraPtr<S> algebra, std::vector<int> dims, std::vector<Matrix<S>> actions)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), actions_(std::move(actions)) {
  if (static_cast<int>(dims_.size()) != algebra_->vertex_count()) throw std::logic_error("module: vertex count mismatch");
  if (actions_.size() != algebra_->generators().size()) throw std::logic_error("module: generator count mismatch");
  for (std::size_t g = 0; g < actions_.size(); ++g) {
    const auto& gen = algebra_->generators()[g];
    if (actions_[g].rows() != dim(gen.target) || actions_[g].cols() != dim(gen.source))
      throw std::logic_error("module: action shape mismatch");
  }
}

template <class S>
int Module<S>::dimension() const {
  int d = 0;
  for (int x : dims_) d += x;
  return d;
}

template <class S>
Matrix<S> Module<S>::action(int b) const {
  const auto& be = algebra_->basis(b);
  Matrix<S> m = Matrix<S>::Identity(dim(be.source), dim(be.source));
  for (int g : be.word) m = (actions_[static_cast<std::size_t>(g)] * m).eval();
  return m;
}

template <class S>
Vector<S> Module<S>::apply(int b, const Vector<S>& v) const {
  Vector<S> w = v;
  for (int g : algebra_->basis(b).word) w = (actions_[static_cast<std::size_t>(g)] * w).eval();
  return w;
}

template <class S>
std::optional<std::string> validate(const Module<S>& m) {
  const auto& a = *m.algebra();
  for (std::size_t gi = 0; gi < a.generators().size(); ++gi) {
    const auto& g = a.generators()[gi];
    for (int b = 0; b < a.dimension(); ++b) {
      if (a.basis(b).source != g.target) continue;
      const Element<S> p = a.multiply(g.element, Element<S>::basis(b));
      Matrix<S> lhs = Matrix<S>::Zero(m.dim(a.basis(b).target), m.dim(g.source));
      for (const auto& [k, c] : p.terms) lhs += c * m.action(k);
      const Matrix<S> rhs = m.action(b) * m.generator_action(static_cast<int>(gi));
      if (lhs != rhs)
        return "generator " + std::to_string(gi) + " times basis " + std::to_string(b) + " acts inconsistently";
    }
  }
  return std::nullopt;
}

namespace {

template <class S>
std::vector<int> positions(const FiniteAlgebra<S>& a, const std::vector<int>& indices) {
  std::vector<int> pos(static_cast<std::size_t>(a.dimension()), -1);
  for (std::size_t k = 0; k < indices.size(); ++k) pos[static_cast<std::size_t>(indices[k])] = static_cast<int>(k);
  return pos;
}

// e_v A restricted to the basis elements accepted by `keep`.
template <class S, class Keep>
Module<S> projective_part(const AlgebraPtr<S>& a, int v, Keep keep) {
  const int n = a->vertex_count();
  std::vector<std::vector<int>> basis(static_cast<std::size_t>(n));
  std::vector<int> pos(static_cast<std::size_t>(a->dimension()), -1);
  std::vector<int> dims;
  for (int w = 0; w < n; ++w) {
    for (int b : a->between(v, w))
      if (keep(b)) {
        pos[static_cast<std::size_t>(b)] = static_cast<int>(basis[static_cast<std::size_t>(w)].size());
        basis[static_cast<std::size_t>(w)].push_back(b);
      }
    dims.push_back(static_cast<int>(basis[static_cast<std::size_t>(w)].size()));
  }
  std::vector<Matrix<S>> actions;
  for (const auto& g : a->generators()) {
    Matrix<S> mat = Matrix<S>::Zero(dims[static_cast<std::size_t>(g.target)], dims[static_cast<std::size_t>(g.source)]);
    const auto& src = basis[static_cast<std::size_t>(g.source)];
    for (std::size_t col = 0; col < src.size(); ++col) {
      const Element<S> p = a->multiply(Element<S>::basis(src[col]), g.element);
      for (const auto& [k, c] : p.terms) {
        const int row = pos[static_cast<std::size_t>(k)];
        if (row >= 0) mat(row, static_cast<Index>(col)) = c;
      }
    }
    actions.push_back(std::move(mat));
  }
  return Module<S>(a, std::move(dims), std::move(actions));
}

}  // namespace

template <class S>
Module<S> projective_module(const AlgebraPtr<S>& a, int v) {
  return projective_part<S>(a, v, [](int) { return true; });
}

template <class S>
Module<S> truncated_projective(const AlgebraPtr<S>& a, int v, int j) {
  return projective_part<S>(a, v, [&](int b) { return a->basis(b).degree < j; });
}

template <class S>
Module<S> injective_module(const AlgebraPtr<S>& a, int v) {
  const int n = a->vertex_count();
  std::vector<int> dims;
  for (int w = 0; w < n; ++w) dims.push_back(static_cast<int>(a->between(w, v).size()));
  std::vector<Matrix<S>> actions;
  for (const auto& g : a->generators()) {
    const auto& rows = a->between(g.target, v);
    const auto& cols = a->between(g.source, v);
    const auto pos = positions(*a, cols);
    Matrix<S> mat = Matrix<S>::Zero(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Element<S> p = a->multiply(g.element, Element<S>::basis(rows[r]));
      for (const auto& [k, c] : p.terms) mat(static_cast<Index>(r), pos[static_cast<std::size_t>(k)]) = c;
    }
    actions.push_back(std::move(mat));
  }
  return Module<S>(a, std::move(dims), std::move(actions));
}

template <class S>
Module<S> simple_module(const AlgebraPtr<S>& a, int v) {
  std::vector<int> dims(static_cast<std::size_t>(a->vertex_count()), 0);
  dims[static_cast<std::size_t>(v)] = 1;
  std::vector<Matrix<S>> actions;
  for (const auto& g : a->generators())
    actions.push_back(Matrix<S>::Zero(dims[static_cast<std::size_t>(g.target)], dims[static_cast<std::size_t>(g.source)]));
  return Module<S>(a, std::move(dims), std::move(actions));
}

template <class S>
Module<S> zero_module(const AlgebraPtr<S>& a) {
  std::vector<Matrix<S>> actions(a->generators().size(), Matrix<S>(0, 0));
  return Module<S>(a, std::vector<int>(static_cast<std::size_t>(a->vertex_count()), 0), std::move(actions));
}

template <class S>
Module<S> direct_sum(const std::vector<Module<S>>& parts) {
  if (parts.empty()) throw std::logic_error("direct_sum of nothing");
  const auto& a = parts.front().algebra();
  std::vector<int> dims(static_cast<std::size_t>(a->vertex_count()), 0);
  for (const auto& p : parts)
    for (int v = 0; v < a->vertex_count(); ++v) dims[static_cast<std::size_t>(v)] += p.dim(v);
  std::vector<Matrix<S>> actions;
  for (std::size_t gi = 0; gi < a->generators().size(); ++gi) {
    const auto& g = a->generators()[gi];
    Matrix<S> mat = Matrix<S>::Zero(dims[static_cast<std::size_t>(g.target)], dims[static_cast<std::size_t>(g.source)]);
    Index r = 0, c = 0;
    for (const auto& p : parts) {
      const auto& block = p.generator_action(static_cast<int>(gi));
      if (block.size() > 0) mat.block(r, c, block.rows(), block.cols()) = block;
      r += p.dim(g.target);
      c += p.dim(g.source);
    }
    actions.push_back(std::move(mat));
  }
  return Module<S>(a, std::move(dims), std::move(actions));
}

template <class S>
Module<S> regular_module(const AlgebraPtr<S>& a) {
  std::vector<Module<S>> parts;
  for (int v = 0; v < a->vertex_count(); ++v) parts.push_back(projective_module(a, v));
  return parts.empty() ? zero_module(a) : direct_sum(parts);
}

template <class S>
Module<S> dual_regular_module(const AlgebraPtr<S>& a) {
  std::vector<Module<S>> parts;
  for (int v = 0; v < a->vertex_count(); ++v) parts.push_back(injective_module(a, v));
  return parts.empty() ? zero_module(a) : direct_sum(parts);
}

template <class S>
std::vector<ProjectiveSlot> projective_layout(const FiniteAlgebra<S>& a, const std::vector<int>& tops, int u) {
  std::vector<ProjectiveSlot> out;
  for (std::size_t k = 0; k < tops.size(); ++k)
    for (int b : a.between(tops[k], u)) out.push_back({static_cast<int>(k), b});
  return out;
}

template <class S>
ProjectiveCover<S> projective_cover(const Module<S>& m, bool minimal) {
  const auto& a = m.algebra();
  ProjectiveCover<S> pc;
  for (int w = 0; w < m.vertex_count(); ++w) {
    const Index d = m.dim(w);
    if (d == 0) continue;
    std::vector<Index> top;
    if (minimal) {
      Index cols = 0;
      for (std::size_t g = 0; g < a->generators().size(); ++g)
        if (a->generators()[g].target == w) cols += m.generator_action(static_cast<int>(g)).cols();
      Matrix<S> spanning(d, cols);
      Index c = 0;
      for (std::size_t g = 0; g < a->generators().size(); ++g) {
        if (a->generators()[g].target != w) continue;
        const auto& mat = m.generator_action(static_cast<int>(g));
        if (mat.cols() > 0) spanning.middleCols(c, mat.cols()) = mat;
        c += mat.cols();
      }
      top = complement_coordinates<S>(spanning, d);
    } else {
      for (Index i = 0; i < d; ++i) top.push_back(i);
    }
    for (Index i : top) {
      pc.tops.push_back(w);
      Vector<S> e = Vector<S>::Zero(d);
      e(i) = S(1);
      pc.generators.push_back(std::move(e));
    }
  }
  std::map<int, Module<S>> cache;
  std::vector<Module<S>> parts;
  for (int w : pc.tops) {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, projective_module(a, w)).first;
    parts.push_back(it->second);
  }
  pc.cover = parts.empty() ? zero_module(a) : direct_sum(parts);
  for (int u = 0; u < m.vertex_count(); ++u) {
    const auto layout = projective_layout(*a, pc.tops, u);
    Matrix<S> map(m.dim(u), static_cast<Index>(layout.size()));
    for (std::size_t col = 0; col < layout.size(); ++col)
      map.col(static_cast<Index>(col)) = m.apply(layout[col].basis, pc.generators[static_cast<std::size_t>(layout[col].summand)]);
    pc.map.push_back(std::move(map));
  }
  return pc;
}

template <class S>
Syzygy<S> kernel_of_cover(const ProjectiveCover<S>& pc) {
  const auto& a = pc.cover.algebra();
  Syzygy<S> out;
  std::vector<Kernel<S>> kernels;
  std::vector<int> dims;
  for (int u = 0; u < pc.cover.vertex_count(); ++u) {
    kernels.push_back(kernel<S>(pc.map[static_cast<std::size_t>(u)]));
    dims.push_back(static_cast<int>(kernels.back().dim()));
    out.inclusion.push_back(kernels.back().basis);
  }
  std::vector<Matrix<S>> actions;
  for (std::size_t gi = 0; gi < a->generators().size(); ++gi) {
    const auto& g = a->generators()[gi];
    const Kernel<S>& ks = kernels[static_cast<std::size_t>(g.source)];
    const Kernel<S>& kt = kernels[static_cast<std::size_t>(g.target)];
    Matrix<S> mat(kt.dim(), ks.dim());
    if (ks.dim() > 0 && kt.dim() > 0) {
      const Matrix<S> image = pc.cover.generator_action(static_cast<int>(gi)) * ks.basis;
      for (std::size_t r = 0; r < kt.free_columns.size(); ++r) mat.row(static_cast<Index>(r)) = image.row(kt.free_columns[r]);
    }
    actions.push_back(std::move(mat));
  }
  out.module = Module<S>(a, std::move(dims), std::move(actions));
  return out;
}

template <class S>
std::optional<int> ResolutionTrace<S>::projective_dimension() const {
  if (!bounded) return std::nullopt;
  return static_cast<int>(terms.size()) - 1;
}

template <class S>
int ResolutionTrace<S>::term_dimension(int n) const {
  if (n < 0 || n >= static_cast<int>(terms.size())) return 0;
  int d = 0;
  for (int w : terms[static_cast<std::size_t>(n)])
    for (int u = 0; u < algebra->vertex_count(); ++u) d += static_cast<int>(algebra->between(w, u).size());
  return d;
}

template <class S>
ResolutionTrace<S> resolve(const Module<S>& m, int cap, bool minimal) {
  ResolutionTrace<S> trace;
  trace.algebra = m.algebra();
  trace.minimal = minimal;
  trace.syzygy_dims.push_back(m.dimension());
  Module<S> current = m;
  std::vector<Matrix<S>> previous;
  for (int n = 0;; ++n) {
    ProjectiveCover<S> pc = projective_cover(current, minimal);
    std::vector<Vector<S>> diff;
    if (n > 0)
      for (std::size_t k = 0; k < pc.tops.size(); ++k)
        diff.push_back(previous[static_cast<std::size_t>(pc.tops[k])] * pc.generators[k]);
    trace.terms.push_back(pc.tops);
    trace.differentials.push_back(std::move(diff));
    Syzygy<S> syz = kernel_of_cover(pc);
    trace.syzygy_dims.push_back(syz.module.dimension());
    if (syz.module.is_zero()) {
      trace.bounded = true;
      break;
    }
    if (n >= cap) break;
    previous = std::move(syz.inclusion);
    current = std::move(syz.module);
  }
  return trace;
}

namespace {

template <class S>
int hom_rank(const Matrix<S>& m) {
  return static_cast<int>(rank<S>(m));
}

}  // namespace

template <class S>
std::vector<int> ext_dims(const ResolutionTrace<S>& res, const Module<S>& y, int n_max) {
  const int available = static_cast<int>(res.terms.size());
  if (!res.bounded && available < n_max + 2) throw std::logic_error("ext_dims: resolution too short");
  const auto& a = *res.algebra;
  auto offsets = [&](int i) {
    std::vector<Index> off{0};
    if (i < available)
      for (int w : res.terms[static_cast<std::size_t>(i)]) off.push_back(off.back() + y.dim(w));
    return off;
  };
  std::map<int, Matrix<S>> cache;
  auto act = [&](int b) -> const Matrix<S>& {
    auto it = cache.find(b);
    if (it == cache.end()) it = cache.emplace(b, y.action(b)).first;
    return it->second;
  };
  // delta^i : Hom(P_{i-1}, Y) -> Hom(P_i, Y)
  auto delta_rank = [&](int i) {
    if (i <= 0 || i >= available) return 0;
    const auto rows = offsets(i), cols = offsets(i - 1);
    if (rows.back() == 0 || cols.back() == 0) return 0;
    Matrix<S> d = Matrix<S>::Zero(rows.back(), cols.back());
    const auto& tops = res.terms[static_cast<std::size_t>(i)];
    const auto& prev = res.terms[static_cast<std::size_t>(i - 1)];
    for (std::size_t k = 0; k < tops.size(); ++k) {
      const auto layout = projective_layout(a, prev, tops[k]);
      const Vector<S>& v = res.differentials[static_cast<std::size_t>(i)][k];
      for (std::size_t s = 0; s < layout.size(); ++s) {
        if (is_zero(v(static_cast<Index>(s)))) continue;
        const int j = layout[s].summand;
        const Matrix<S>& m = act(layout[s].basis);
        if (m.size() == 0) continue;
        d.block(rows[k], cols[static_cast<std::size_t>(j)], m.rows(), m.cols()) += v(static_cast<Index>(s)) * m;
      }
    }
    return hom_rank<S>(d);
  };
  std::vector<int> out;
  std::vector<int> ranks;
  for (int i = 0; i <= n_max + 1; ++i) ranks.push_back(delta_rank(i));
  for (int i = 0; i <= n_max; ++i)
    out.push_back(static_cast<int>(offsets(i).back()) - ranks[static_cast<std::size_t>(i)] - ranks[static_cast<std::size_t>(i + 1)]);
  return out;
}

template <class S>
std::vector<int> ext_dims(const Module<S>& m, const Module<S>& y, int n_max, bool minimal) {
  return ext_dims(resolve(m, n_max + 1, minimal), y, n_max);
}

template <class S>
std::vector<int> tor_dims(const ResolutionTrace<S>& res, const Module<S>& n_op, int n_max) {
  const int available = static_cast<int>(res.terms.size());
  if (!res.bounded && available < n_max + 2) throw std::logic_error("tor_dims: resolution too short");
  const auto& a = *res.algebra;
  auto offsets = [&](int i) {
    std::vector<Index> off{0};
    if (i < available)
      for (int w : res.terms[static_cast<std::size_t>(i)]) off.push_back(off.back() + n_op.dim(w));
    return off;
  };
  std::map<int, Matrix<S>> cache;
  auto act = [&](int b) -> const Matrix<S>& {
    auto it = cache.find(b);
    if (it == cache.end()) it = cache.emplace(b, n_op.action(b)).first;
    return it->second;
  };
  // boundary_i : P_i (x) N -> P_{i-1} (x) N
  auto boundary_rank = [&](int i) {
    if (i <= 0 || i >= available) return 0;
    const auto cols = offsets(i), rows = offsets(i - 1);
    if (rows.back() == 0 || cols.back() == 0) return 0;
    Matrix<S> d = Matrix<S>::Zero(rows.back(), cols.back());
    const auto& tops = res.terms[static_cast<std::size_t>(i)];
    const auto& prev = res.terms[static_cast<std::size_t>(i - 1)];
    for (std::size_t k = 0; k < tops.size(); ++k) {
      const auto layout = projective_layout(a, prev, tops[k]);
      const Vector<S>& v = res.differentials[static_cast<std::size_t>(i)][k];
      for (std::size_t s = 0; s < layout.size(); ++s) {
        if (is_zero(v(static_cast<Index>(s)))) continue;
        const int j = layout[s].summand;
        const Matrix<S>& m = act(layout[s].basis);
        if (m.size() == 0) continue;
        d.block(rows[static_cast<std::size_t>(j)], cols[k], m.rows(), m.cols()) += v(static_cast<Index>(s)) * m;
      }
    }
    return hom_rank<S>(d);
  };
  std::vector<int> ranks;
  for (int i = 0; i <= n_max + 1; ++i) ranks.push_back(boundary_rank(i));
  std::vector<int> out;
  for (int i = 0; i <= n_max; ++i)
    out.push_back(static_cast<int>(offsets(i).back()) - ranks[static_cast<std::size_t>(i)] - ranks[static_cast<std::size_t>(i + 1)]);
  return out;
}

template <class S>
std::vector<int> tor_dims(const Module<S>& m, const Module<S>& n_op, int n_max, bool minimal) {
  return tor_dims(resolve(m, n_max + 1, minimal), n_op, n_max);
}

template <class S>
bool is_projective(const Module<S>& m) {
  return projective_cover(m, true).cover.dimension() == m.dimension();
}

template <class S>
std::vector<int> top_vertices(const Module<S>& m) {
  return projective_cover(m, true).tops;
}

#define SKEWGENTLE_MODULE_INST(S) SKEWGENTLE_MODULE_DECL(, S)
SKEWGENTLE_MODULE_INST(Rational)
SKEWGENTLE_MODULE_INST(F2)
SKEWGENTLE_MODULE_INST(F3)
SKEWGENTLE_MODULE_INST(F5)
SKEWGENTLE_MODULE_INST(F7)

}  // namespace skewgentle
