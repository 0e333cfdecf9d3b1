#include "skewgentle/morita.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "skewgentle/gentle.hpp"

namespace skewgentle {
namespace {

template <class S>
Subspace<S> coordinate_span(const std::vector<int>& indices, Index ambient) {
  Matrix<S> m = Matrix<S>::Zero(ambient, static_cast<Index>(indices.size()));
  for (std::size_t k = 0; k < indices.size(); ++k) m(indices[k], static_cast<Index>(k)) = S(1);
  return Subspace<S>::span(m);
}

template <class S>
Subspace<S> span_of(const std::vector<Element<S>>& elems, Index ambient) {
  Matrix<S> m = Matrix<S>::Zero(ambient, static_cast<Index>(elems.size()));
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& [i, c] : elems[k].terms) m(i, static_cast<Index>(k)) = c;
  return Subspace<S>::span(m);
}

template <class S>
Element<S> path_image(const PresentedAlgebra<S>& a, const Path& p, const std::vector<int>& vertex_images,
                      const std::vector<Element<S>>& arrow_images) {
  if (p.arrows.empty()) return Element<S>::basis(a.idempotent(vertex_images[static_cast<std::size_t>(p.source)]));
  Element<S> x = arrow_images[static_cast<std::size_t>(p.arrows.front())];
  for (std::size_t k = 1; k < p.arrows.size(); ++k)
    x = a.multiply(x, arrow_images[static_cast<std::size_t>(p.arrows[k])]);
  return x;
}

}  // namespace

template <class S>
PeirceData<S> peirce(const PresentedAlgebra<S>& alg, const SplitQuiver& sq) {
  PeirceData<S> pd;
  pd.algebra = std::make_shared<const PresentedAlgebra<S>>(alg);
  pd.split = sq;
  for (int v = 0; v < sq.spec.vertex_count(); ++v) (sq.is_minus(v) ? pd.e_vertices : pd.other_vertices).push_back(v);
  for (int i = 0; i < alg.dimension(); ++i) {
    const Path& p = alg.basis()[static_cast<std::size_t>(i)];
    const bool s = sq.is_minus(p.source), t = sq.is_minus(p.target);
    (s ? (t ? pd.C : pd.N) : (t ? pd.M : pd.B)).push_back(i);
  }
  const auto& fa = *alg.algebra();
  std::vector<Element<S>> products;
  for (int m : pd.M)
    for (int n : pd.N) {
      if (fa.basis(m).target != fa.basis(n).source) continue;
      Element<S> x = fa.product(m, n);
      if (!x.is_zero()) products.push_back(std::move(x));
    }
  pd.f_image = span_of(products, alg.dimension());
  pd.c_corner = corner(alg.algebra(), pd.e_vertices);
  pd.c_op = opposite(pd.c_corner.algebra);
  return pd;
}

template <class S>
Module<S> corner_module(const PeirceData<S>& pd, const std::vector<int>& indices, bool left) {
  const auto& a = *pd.algebra->algebra();
  const AlgebraPtr<S>& c = left ? pd.c_op : pd.c_corner.algebra;
  std::vector<int> local_vertex(static_cast<std::size_t>(a.vertex_count()), -1);
  for (std::size_t k = 0; k < pd.e_vertices.size(); ++k) local_vertex[static_cast<std::size_t>(pd.e_vertices[k])] = static_cast<int>(k);
  std::vector<int> dims(pd.e_vertices.size(), 0);
  std::vector<int> where(static_cast<std::size_t>(a.dimension()), -1);
  for (int x : indices) {
    const int v = local_vertex[static_cast<std::size_t>(left ? a.basis(x).source : a.basis(x).target)];
    if (v < 0) throw std::logic_error("corner_module: element not attached to the corner");
    where[static_cast<std::size_t>(x)] = dims[static_cast<std::size_t>(v)]++;
  }
  std::vector<std::vector<int>> at(dims.size());
  for (int x : indices) at[static_cast<std::size_t>(local_vertex[static_cast<std::size_t>(left ? a.basis(x).source : a.basis(x).target)])].push_back(x);

  std::vector<Matrix<S>> actions;
  for (const auto& g : c->generators()) {
    const int k = g.element.terms.front().first;  // corner basis element
    const int amb = pd.c_corner.ambient_index[static_cast<std::size_t>(k)];
    Matrix<S> mat = Matrix<S>::Zero(dims[static_cast<std::size_t>(g.target)], dims[static_cast<std::size_t>(g.source)]);
    const auto& src = at[static_cast<std::size_t>(g.source)];
    for (std::size_t col = 0; col < src.size(); ++col) {
      const Element<S> p = left ? a.product(amb, src[col]) : a.product(src[col], amb);
      for (const auto& [i, v] : p.terms) {
        const int row = where[static_cast<std::size_t>(i)];
        if (row < 0) throw std::logic_error("corner_module: span not closed under the corner action");
        mat(row, static_cast<Index>(col)) = v;
      }
    }
    actions.push_back(std::move(mat));
  }
  return Module<S>(c, std::move(dims), std::move(actions));
}

template <class S>
IsoCheck<S> verify_presentation(const PresentedAlgebra<S>& p, const PresentedAlgebra<S>& a,
                                const std::vector<int>& vertex_images, const std::vector<Element<S>>& arrow_images,
                                const Subspace<S>& target, const Subspace<S>& j) {
  IsoCheck<S> out;
  const Index n = a.dimension();
  out.source_dim = p.dimension();
  out.target_dim = static_cast<int>(target.dim() - j.dim());
  const auto& q = p.quiver();
  const auto& fa = *a.algebra();

  for (int x = 0; x < q.arrow_count(); ++x) {
    const int s = vertex_images[static_cast<std::size_t>(q.arrows()[static_cast<std::size_t>(x)].source)];
    const int t = vertex_images[static_cast<std::size_t>(q.arrows()[static_cast<std::size_t>(x)].target)];
    for (const auto& [i, c] : arrow_images[static_cast<std::size_t>(x)].terms)
      if (fa.basis(i).source != s || fa.basis(i).target != t) {
        out.witness = "image of " + q.arrow_name(x) + " is not between the images of its endpoints";
        return out;
      }
  }
  for (const auto& r : q.relations()) {
    Element<S> sum;
    for (const auto& term : r.terms)
      add_scaled(sum, path_image(a, q.relation_path(term), vertex_images, arrow_images),
                 field_traits<S>::from_rational(term.coefficient));
    if (!j.contains(to_dense(sum, n))) {
      out.witness = "relation " + path_to_string(q, q.relation_path(r.terms.front())) + " does not map to zero";
      return out;
    }
  }

  std::vector<Element<S>> images;
  Matrix<S> all(n, j.dim() + p.dimension());
  if (j.dim() > 0) all.leftCols(j.dim()) = j.basis();
  for (int i = 0; i < p.dimension(); ++i) {
    images.push_back(path_image(a, p.basis()[static_cast<std::size_t>(i)], vertex_images, arrow_images));
    const Vector<S> v = to_dense(images.back(), n);
    if (!target.contains(v)) {
      out.witness = "image of " + p.basis_label(i) + " leaves the target";
      return out;
    }
    all.col(j.dim() + i) = v;
  }
  if (rank<S>(all) != j.dim() + p.dimension()) {
    out.witness = "images of the basis are dependent modulo the ideal";
    return out;
  }
  if (target.dim() != j.dim() + p.dimension()) {
    out.witness = "dimension mismatch: " + std::to_string(p.dimension()) + " vs " + std::to_string(out.target_dim);
    return out;
  }
  if (p.dimension() <= 120) {
    for (int x = 0; x < p.dimension(); ++x)
      for (int y = 0; y < p.dimension(); ++y) {
        if (p.basis()[static_cast<std::size_t>(x)].target != p.basis()[static_cast<std::size_t>(y)].source) continue;
        Element<S> lhs;
        for (const auto& [k, c] : p.product(x, y).terms) add_scaled(lhs, images[static_cast<std::size_t>(k)], c);
        const Element<S> rhs = a.multiply(images[static_cast<std::size_t>(x)], images[static_cast<std::size_t>(y)]);
        add_scaled(lhs, rhs, S(-1));
        if (!j.contains(to_dense(lhs, n))) {
          out.witness = "product " + p.basis_label(x) + " * " + p.basis_label(y) + " is not preserved";
          return out;
        }
      }
  }
  out.ok = true;
  return out;
}

template <class S>
CornerPresentation<S> present_C(const PeirceData<S>& pd) {
  CornerPresentation<S> out;
  const auto& a = *pd.algebra;
  const auto& sq = pd.split;
  const QuiverSpec& qa = sq.spec;
  std::vector<int> local(static_cast<std::size_t>(qa.vertex_count()), -1);
  for (int v : pd.e_vertices) {
    local[static_cast<std::size_t>(v)] = out.quiver.add_vertex(qa.vertex_name(v));
    out.vertex_images.push_back(v);
  }
  auto add = [&](const Path& p, const std::string& name) {
    out.quiver.add_arrow(name, local[static_cast<std::size_t>(p.source)], local[static_cast<std::size_t>(p.target)]);
    out.arrow_images.push_back(a.normal_form(p));
  };
  for (int x = 0; x < qa.arrow_count(); ++x) {
    const Arrow& arr = qa.arrows()[static_cast<std::size_t>(x)];
    if (sq.is_minus(arr.source) && sq.is_minus(arr.target)) add(Path{arr.source, arr.target, {x}}, arr.name);
  }
  // Surviving paths with ordinary interior between minus vertices.
  const int max_len = a.certificate_degree();
  for (int v : pd.e_vertices) {
    std::function<void(const Path&)> walk = [&](const Path& p) {
      if (static_cast<int>(p.arrows.size()) >= max_len) return;
      for (int x : qa.out_arrows(p.target)) {
        const int t = qa.arrows()[static_cast<std::size_t>(x)].target;
        Path next{p.source, t, p.arrows};
        next.arrows.push_back(x);
        const VertexKind k = sq.vertex_kind[static_cast<std::size_t>(t)];
        if (k == VertexKind::minus && next.arrows.size() >= 2 && !a.normal_form(next).is_zero()) {
          std::string name = "w";
          for (int y : next.arrows) name += "__" + qa.arrow_name(y);
          add(next, name);
        }
        if (k == VertexKind::ordinary) walk(next);
      }
    };
    walk(Path{v, v, {}});
  }

  // Components and their shape.
  const int n = out.quiver.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.components.size());
    out.components.push_back({});
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.components.back().push_back(v);
      std::vector<int> nb;
      for (int x : out.quiver.out_arrows(v)) nb.push_back(out.quiver.arrows()[static_cast<std::size_t>(x)].target);
      for (int x : out.quiver.in_arrows(v)) nb.push_back(out.quiver.arrows()[static_cast<std::size_t>(x)].source);
      for (int w : nb)
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
    }
    std::sort(out.components.back().begin(), out.components.back().end());
  }
  for (const auto& c : out.components) {
    int arrows = 0;
    bool linear = true;
    std::set<std::pair<int, int>> seen;
    for (int v : c) {
      const auto outs = out.quiver.out_arrows(v), ins = out.quiver.in_arrows(v);
      arrows += static_cast<int>(outs.size());
      if (outs.size() > 1 || ins.size() > 1) linear = false;
      for (int x : outs) {
        const int t = out.quiver.arrows()[static_cast<std::size_t>(x)].target;
        if (t == v || !seen.insert({v, t}).second) linear = false;
      }
    }
    // connected with n - 1 arrows and degrees <= 1 rules out cycles
    if (arrows != static_cast<int>(c.size()) - 1) linear = false;
    if (!linear) {
      out.classified = false;
      out.classification_witness = "component at " + out.quiver.vertex_name(c.front()) + " is not a linearly oriented A_n";
      out.factors.push_back("?");
    } else {
      out.factors.push_back(c.size() == 1 ? "k" : "A_" + std::to_string(c.size()));
    }
  }

  const Index dim = a.dimension();
  try {
    const PresentedAlgebra<S> pc = realize<S>(out.quiver);
    out.iso = verify_presentation(pc, a, out.vertex_images, out.arrow_images, coordinate_span<S>(pd.C, dim), Subspace<S>(dim));
  } catch (const CapExceeded& e) {
    out.iso.ok = false;
    out.iso.witness = std::string("path algebra of Q^C is infinite: ") + e.what();
  }
  return out;
}

template <class S>
CornerPresentation<S> present_B(const PeirceData<S>& pd, const SkewGentleTriple& triple) {
  CornerPresentation<S> out;
  const auto& a = *pd.algebra;
  const auto& sq = pd.split;
  const QuiverSpec& qa = sq.spec;
  std::vector<int> local(static_cast<std::size_t>(qa.vertex_count()), -1);
  for (int v : pd.other_vertices) {
    local[static_cast<std::size_t>(v)] = out.quiver.add_vertex(qa.vertex_name(v));
    out.vertex_images.push_back(v);
  }
  std::vector<int> arrow_local(static_cast<std::size_t>(qa.arrow_count()), -1);
  std::vector<int> arrow_origin;
  for (int x = 0; x < qa.arrow_count(); ++x) {
    const Arrow& arr = qa.arrows()[static_cast<std::size_t>(x)];
    if (sq.is_minus(arr.source) || sq.is_minus(arr.target)) continue;
    arrow_local[static_cast<std::size_t>(x)] =
        out.quiver.add_arrow(arr.name, local[static_cast<std::size_t>(arr.source)], local[static_cast<std::size_t>(arr.target)]);
    out.arrow_images.push_back(a.normal_form(Path{arr.source, arr.target, {x}}));
    arrow_origin.push_back(sq.arrow_origin[static_cast<std::size_t>(x)]);
  }
  for (const auto& r : qa.relations()) {
    if (!r.monomial()) continue;
    const auto& w = r.terms.front().arrows;
    if (std::any_of(w.begin(), w.end(), [&](int x) { return arrow_local[static_cast<std::size_t>(x)] < 0; })) continue;
    Relation lifted;
    lifted.terms.push_back({Rational(1), {}});
    for (int x : w) lifted.terms.front().arrows.push_back(arrow_local[static_cast<std::size_t>(x)]);
    out.quiver.add_relation(std::move(lifted));
  }

  const Index dim = a.dimension();
  try {
    const PresentedAlgebra<S> pb = realize<S>(out.quiver);
    out.iso = verify_presentation(pb, a, out.vertex_images, out.arrow_images, coordinate_span<S>(pd.B, dim), Subspace<S>(dim));
  } catch (const CapExceeded& e) {
    out.iso.witness = std::string("A(Q^B, I^B) is infinite: ") + e.what();
  }

  const auto ior = split_relations(triple).first;
  const QuiverSpec q_ior = triple.base.with_relations(ior);
  out.gentle_or = check_gentle(q_ior).is_gentle;

  // (Q^B, I^B) against (Q, I^or) through the origin maps.
  bool match = out.quiver.vertex_count() == triple.base.vertex_count() && out.quiver.arrow_count() == triple.base.arrow_count();
  std::vector<int> vorigin;
  for (int v : pd.other_vertices) vorigin.push_back(sq.vertex_origin[static_cast<std::size_t>(v)]);
  if (match) {
    std::vector<int> sorted = vorigin;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> iota(sorted.size());
    std::iota(iota.begin(), iota.end(), 0);
    match = sorted == iota;
    std::set<int> arrows(arrow_origin.begin(), arrow_origin.end());
    match = match && static_cast<int>(arrows.size()) == triple.base.arrow_count();
    for (int x = 0; match && x < out.quiver.arrow_count(); ++x) {
      const Arrow& arr = out.quiver.arrows()[static_cast<std::size_t>(x)];
      const Arrow& orig = triple.base.arrows()[static_cast<std::size_t>(arrow_origin[static_cast<std::size_t>(x)])];
      match = vorigin[static_cast<std::size_t>(arr.source)] == orig.source && vorigin[static_cast<std::size_t>(arr.target)] == orig.target;
    }
    std::set<std::pair<int, int>> lhs, rhs;
    for (const auto& r : out.quiver.relations())
      lhs.emplace(arrow_origin[static_cast<std::size_t>(r.terms.front().arrows[0])],
                  arrow_origin[static_cast<std::size_t>(r.terms.front().arrows[1])]);
    for (const auto& r : ior) rhs.emplace(r.terms.front().arrows[0], r.terms.front().arrows[1]);
    match = match && lhs == rhs;
  }
  out.matches_q_ior = match;
  return out;
}

template <class S>
BimoduleDecomposition decompose_bimodules(const PeirceData<S>& pd, const CornerPresentation<S>& c) {
  BimoduleDecomposition out;
  const auto& a = *pd.algebra;
  const auto& fa = *a.algebra();
  const QuiverSpec& qa = pd.split.spec;
  const Index dim = a.dimension();
  std::vector<int> factor(static_cast<std::size_t>(qa.vertex_count()), -1);
  for (std::size_t p = 0; p < c.components.size(); ++p)
    for (int v : c.components[p]) factor[static_cast<std::size_t>(c.vertex_images[static_cast<std::size_t>(v)])] = static_cast<int>(p);

  auto part = [&](const std::vector<int>& arrows, const std::vector<int>& left, const std::vector<int>& right) {
    std::vector<Element<S>> elems;
    for (int x : arrows) {
      const Arrow& arr = qa.arrows()[static_cast<std::size_t>(x)];
      const Element<S> ax = a.normal_form(Path{arr.source, arr.target, {x}});
      for (int l : left) {
        if (fa.basis(l).target != arr.source) continue;
        const Element<S> lx = a.multiply(Element<S>::basis(l), ax);
        if (lx.is_zero()) continue;
        for (int r : right) {
          if (fa.basis(r).source != arr.target) continue;
          Element<S> y = a.multiply(lx, Element<S>::basis(r));
          if (!y.is_zero()) elems.push_back(std::move(y));
        }
      }
    }
    return elems;
  };

  std::vector<Element<S>> all_m, all_n;
  for (std::size_t p = 0; p < c.components.size(); ++p) {
    std::vector<int> m_arrows, n_arrows;
    std::vector<std::string> m_names, n_names;
    for (int x = 0; x < qa.arrow_count(); ++x) {
      const Arrow& arr = qa.arrows()[static_cast<std::size_t>(x)];
      if (!pd.split.is_minus(arr.source) && factor[static_cast<std::size_t>(arr.target)] == static_cast<int>(p)) {
        m_arrows.push_back(x);
        m_names.push_back(arr.name);
      }
      if (factor[static_cast<std::size_t>(arr.source)] == static_cast<int>(p) && !pd.split.is_minus(arr.target)) {
        n_arrows.push_back(x);
        n_names.push_back(arr.name);
      }
    }
    const auto pm = part(m_arrows, pd.B, pd.C);
    const auto pn = part(n_arrows, pd.C, pd.B);
    out.m_arrows.push_back(m_names);
    out.n_arrows.push_back(n_names);
    out.m_dims.push_back(static_cast<int>(span_of(pm, dim).dim()));
    out.n_dims.push_back(static_cast<int>(span_of(pn, dim).dim()));
    all_m.insert(all_m.end(), pm.begin(), pm.end());
    all_n.insert(all_n.end(), pn.begin(), pn.end());
  }
  const int sum_m = std::accumulate(out.m_dims.begin(), out.m_dims.end(), 0);
  const int sum_n = std::accumulate(out.n_dims.begin(), out.n_dims.end(), 0);
  out.m_direct = sum_m == static_cast<int>(span_of(all_m, dim).dim()) && sum_m == static_cast<int>(pd.M.size());
  out.n_direct = sum_n == static_cast<int>(span_of(all_n, dim).dim()) && sum_n == static_cast<int>(pd.N.size());
  return out;
}

template <class S>
ProjectivityVerdict check_one_sided_projectivity(const PeirceData<S>& pd) {
  ProjectivityVerdict out;
  const Module<S> m = corner_module(pd, pd.M, false);
  const Module<S> n = corner_module(pd, pd.N, true);
  out.m_dim = m.dimension();
  out.n_dim = n.dimension();
  out.m_cover_dim = projective_cover(m).cover.dimension();
  out.n_cover_dim = projective_cover(n).cover.dimension();
  out.m_projective = out.m_dim == out.m_cover_dim;
  out.n_projective = out.n_dim == out.n_cover_dim;
  return out;
}

template <class S>
QuotientIso<S> quotient_iso_check(const PeirceData<S>& pd, const SkewGentleTriple& triple) {
  QuotientIso<S> out;
  const auto& a = *pd.algebra;
  const auto& fa = *a.algebra();
  const auto& sq = pd.split;
  const Index dim = a.dimension();
  std::vector<int> mnc = pd.M;
  mnc.insert(mnc.end(), pd.N.begin(), pd.N.end());
  mnc.insert(mnc.end(), pd.C.begin(), pd.C.end());
  const Subspace<S> j = coordinate_span<S>(mnc, dim).sum(pd.f_image);
  out.quotient_dim = static_cast<int>(dim - j.dim());

  const QuiverSpec& q = triple.base;
  auto sign = [&](int v) { return q.is_special(v) ? VertexKind::plus : VertexKind::ordinary; };
  std::vector<int> vimg;
  for (int v = 0; v < q.vertex_count(); ++v) vimg.push_back(sq.lift_vertex(v, sign(v)));
  std::vector<Element<S>> aimg;
  for (int x = 0; x < q.arrow_count(); ++x) {
    const Arrow& arr = q.arrows()[static_cast<std::size_t>(x)];
    const int lifted = sq.lift_arrow(x, sign(arr.source), sign(arr.target));
    const Arrow& la = sq.spec.arrows()[static_cast<std::size_t>(lifted)];
    aimg.push_back(a.normal_form(Path{la.source, la.target, {lifted}}));
  }
  const PresentedAlgebra<S> base = realize<S>(q);
  out.base_dim = base.dimension();
  out.iso = verify_presentation(base, a, vimg, aimg, Subspace<S>::span(Matrix<S>::Identity(dim, dim)), j);

  // B-ideal generated by the all-plus lifts of I^Sp.
  std::vector<Element<S>> gens;
  for (const auto& r : split_relations(triple).second) {
    const int alpha = r.terms.front().arrows[0], beta = r.terms.front().arrows[1];
    const int x = sq.lift_arrow(alpha, sign(q.arrows()[static_cast<std::size_t>(alpha)].source), VertexKind::plus);
    const int y = sq.lift_arrow(beta, VertexKind::plus, sign(q.arrows()[static_cast<std::size_t>(beta)].target));
    const Arrow& ax = sq.spec.arrows()[static_cast<std::size_t>(x)];
    const Arrow& ay = sq.spec.arrows()[static_cast<std::size_t>(y)];
    gens.push_back(a.normal_form(Path{ax.source, ay.target, {x, y}}));
  }
  std::vector<Element<S>> ideal;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const auto& first = gens[g].terms;
    if (first.empty()) continue;
    const int s = fa.basis(first.front().first).source, t = fa.basis(first.front().first).target;
    for (int l : pd.B) {
      if (fa.basis(l).target != s) continue;
      const Element<S> lg = a.multiply(Element<S>::basis(l), gens[g]);
      for (int r : pd.B) {
        if (fa.basis(r).source != t) continue;
        Element<S> y = a.multiply(lg, Element<S>::basis(r));
        if (!y.is_zero()) ideal.push_back(std::move(y));
      }
    }
  }
  out.f_image_matches = span_of(ideal, dim) == pd.f_image;
  return out;
}

template <class S>
ContextChecks morita_context_checks(const PeirceData<S>& pd, long long max_checks) {
  ContextChecks out;
  const auto& fa = *pd.algebra->algebra();
  auto prod = [&](int i, int j) { return fa.product(i, j); };
  auto budget = [&]() {
    if (out.checked >= max_checks) {
      out.exhaustive = false;
      return false;
    }
    ++out.checked;
    return true;
  };
  // (m n) m' = m (n m')
  [&] {
    for (int m : pd.M)
      for (int n : pd.N) {
        if (fa.basis(m).target != fa.basis(n).source) continue;
        const Element<S> mn = prod(m, n);
        for (int m2 : pd.M) {
          if (fa.basis(n).target != fa.basis(m2).source) continue;
          if (!budget()) return;
          if (!(fa.multiply(mn, Element<S>::basis(m2)) == fa.multiply(Element<S>::basis(m), prod(n, m2))))
            out.compatibility = false;
        }
      }
  }();
  [&] {
    for (int n : pd.N)
      for (int m : pd.M) {
        if (fa.basis(n).target != fa.basis(m).source) continue;
        const Element<S> nm = prod(n, m);
        for (const auto& [k, c] : nm.terms)
          if (fa.basis(k).degree == 0) out.g_in_radical = false;
        for (int n2 : pd.N) {
          if (fa.basis(m).target != fa.basis(n2).source) continue;
          if (!budget()) return;
          if (!(fa.multiply(Element<S>::basis(n), prod(m, n2)) == fa.multiply(nm, Element<S>::basis(n2))))
            out.compatibility = false;
        }
      }
  }();
  {
    const Index dim = fa.dimension();
    std::vector<Element<S>> f;
    for (Index k = 0; k < pd.f_image.dim(); ++k) f.push_back(from_dense<S>(Vector<S>(pd.f_image.basis().col(k))));
    Subspace<S> power = pd.f_image;
    for (Index step = 0; power.dim() > 0; ++step) {
      if (step > dim) {
        out.f_nilpotent = false;
        break;
      }
      std::vector<Element<S>> next;
      for (Index k = 0; k < power.dim(); ++k) {
        const Element<S> x = from_dense<S>(Vector<S>(power.basis().col(k)));
        for (const auto& y : f) {
          Element<S> z = fa.multiply(x, y);
          if (!z.is_zero()) next.push_back(std::move(z));
        }
      }
      power = span_of(next, dim);
    }
  }
  return out;
}

template <class S>
nlohmann::json morita_report(const PeirceData<S>& pd, const CornerPresentation<S>& b, const CornerPresentation<S>& c,
                             const ProjectivityVerdict& proj, const QuotientIso<S>& q) {
  nlohmann::json j;
  j["dims"] = {{"A", pd.dim_A()},
               {"B", pd.B.size()},
               {"M", pd.M.size()},
               {"N", pd.N.size()},
               {"C", pd.C.size()},
               {"f_image", pd.f_image.dim()}};
  j["C_factors"] = c.factors;
  j["verdicts"] = {{"B_iso", b.iso.ok},
                   {"C_iso", c.iso.ok && c.classified},
                   {"M_proj", proj.m_projective},
                   {"N_proj", proj.n_projective},
                   {"quotient_iso", q.iso.ok && q.f_image_matches}};
  j["quotient"] = {{"dim", q.quotient_dim}, {"base_dim", q.base_dim}};
  nlohmann::json w = nlohmann::json::object();
  if (!b.iso.ok) w["B_iso"] = b.iso.witness;
  if (!c.iso.ok) w["C_iso"] = c.iso.witness;
  if (!c.classified) w["C_factors"] = c.classification_witness;
  if (!q.iso.ok) w["quotient_iso"] = q.iso.witness;
  if (!w.empty()) j["witnesses"] = w;
  return j;
}

#define SKEWGENTLE_MORITA_INST(S) SKEWGENTLE_MORITA_DECL(, S)
SKEWGENTLE_MORITA_INST(Rational)
SKEWGENTLE_MORITA_INST(F2)
SKEWGENTLE_MORITA_INST(F3)
SKEWGENTLE_MORITA_INST(F5)
SKEWGENTLE_MORITA_INST(F7)

}  // namespace skewgentle
