#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewgentle/field.hpp"
#include "skewgentle/linalg.hpp"

namespace skewgentle {

/// Sparse vector over an algebra basis: sorted indices, no zero coefficients.
template <class S>
struct Element {
  std::vector<std::pair<int, S>> terms;

  bool is_zero() const { return terms.empty(); }
  S coefficient(int i) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), i,
                               [](const auto& t, int k) { return t.first < k; });
    return (it != terms.end() && it->first == i) ? it->second : S(0);
  }
  static Element basis(int i) { return Element{{{i, S(1)}}}; }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t k = 0; k < a.terms.size(); ++k)
      if (a.terms[k].first != b.terms[k].first || a.terms[k].second != b.terms[k].second) return false;
    return true;
  }
};

/// into += c * x
template <class S>
void add_scaled(Element<S>& into, const Element<S>& x, const S& c) {
  if (is_zero(c) || x.terms.empty()) return;
  std::vector<std::pair<int, S>> out;
  out.reserve(into.terms.size() + x.terms.size());
  auto a = into.terms.begin(), ae = into.terms.end();
  auto b = x.terms.begin(), be = x.terms.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      S v = a->second + c * b->second;
      if (!is_zero(v)) out.emplace_back(a->first, v);
      ++a;
      ++b;
    }
  }
  into.terms = std::move(out);
}

template <class S>
Element<S> scaled(const Element<S>& x, const S& c) {
  Element<S> out;
  add_scaled(out, x, c);
  return out;
}

template <class S>
Element<S> from_dense(const Vector<S>& v) {
  Element<S> out;
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) out.terms.emplace_back(static_cast<int>(i), v(i));
  return out;
}

template <class S>
Vector<S> to_dense(const Element<S>& x, Index dim) {
  Vector<S> v = Vector<S>::Zero(dim);
  for (const auto& [i, c] : x.terms) v(i) = c;
  return v;
}

/// Basis element x = e_source x e_target. `word` lists generator indices whose
/// product (left to right) is exactly x; empty for an idempotent.
struct BasisElement {
  int source = 0;
  int target = 0;
  int degree = 0;
  std::vector<int> word;
};

template <class S>
struct Generator {
  int source = 0;
  int target = 0;
  Element<S> element;
};

/// Finite dimensional basic algebra with a complete set of primitive orthogonal
/// idempotents e_v, each a basis element, and generators spanning the radical
/// modulo its square. Basis elements are homogeneous for the vertex grading.
template <class S>
class FiniteAlgebra {
 public:
  using Product = std::function<Element<S>(int, int)>;

  FiniteAlgebra(int vertex_count, std::vector<BasisElement> basis, std::vector<int> idempotents,
                std::vector<Generator<S>> generators, Product product, std::vector<std::string> vertex_labels = {})
      : vertex_count_(vertex_count),
        basis_(std::move(basis)),
        idempotents_(std::move(idempotents)),
        generators_(std::move(generators)),
        product_(std::move(product)),
        labels_(std::move(vertex_labels)) {
    if (static_cast<int>(idempotents_.size()) != vertex_count_) throw std::logic_error("idempotent count mismatch");
    if (labels_.empty())
      for (int v = 0; v < vertex_count_; ++v) labels_.push_back(std::to_string(v));
    between_.assign(static_cast<std::size_t>(vertex_count_) * static_cast<std::size_t>(vertex_count_), {});
    for (int i = 0; i < dimension(); ++i) {
      const auto& b = basis_[static_cast<std::size_t>(i)];
      between_[slot(b.source, b.target)].push_back(i);
    }
  }

  int vertex_count() const { return vertex_count_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const BasisElement& basis(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int idempotent(int v) const { return idempotents_[static_cast<std::size_t>(v)]; }
  const std::vector<Generator<S>>& generators() const { return generators_; }
  const std::string& vertex_label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const Product& product_fn() const { return product_; }

  /// Basis indices of e_v A e_w.
  const std::vector<int>& between(int v, int w) const { return between_[slot(v, w)]; }

  Element<S> product(int i, int j) const {
    if (basis(i).target != basis(j).source) return {};
    return product_(i, j);
  }

  Element<S> multiply(const Element<S>& x, const Element<S>& y) const {
    Element<S> out;
    for (const auto& [i, a] : x.terms)
      for (const auto& [j, b] : y.terms) add_scaled(out, product(i, j), a * b);
    return out;
  }

  Element<S> one() const {
    Element<S> out;
    for (int v = 0; v < vertex_count_; ++v) add_scaled(out, Element<S>::basis(idempotent(v)), S(1));
    return out;
  }

 private:
  std::size_t slot(int v, int w) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(vertex_count_) + static_cast<std::size_t>(w);
  }

  int vertex_count_;
  std::vector<BasisElement> basis_;
  std::vector<int> idempotents_;
  std::vector<Generator<S>> generators_;
  Product product_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> between_;
};

template <class S>
using AlgebraPtr = std::shared_ptr<const FiniteAlgebra<S>>;

/// A^op on the same basis: arrows reversed, product swapped.
template <class S>
AlgebraPtr<S> opposite(const AlgebraPtr<S>& a) {
  std::vector<BasisElement> basis;
  basis.reserve(a->basis().size());
  for (const auto& b : a->basis()) {
    BasisElement o = b;
    std::swap(o.source, o.target);
    std::reverse(o.word.begin(), o.word.end());
    basis.push_back(std::move(o));
  }
  std::vector<int> idem;
  for (int v = 0; v < a->vertex_count(); ++v) idem.push_back(a->idempotent(v));
  std::vector<Generator<S>> gens;
  for (const auto& g : a->generators()) gens.push_back(Generator<S>{g.target, g.source, g.element});
  auto product = [a](int i, int j) { return a->product(j, i); };
  return std::make_shared<FiniteAlgebra<S>>(a->vertex_count(), std::move(basis), std::move(idem), std::move(gens),
                                            product, a->vertex_labels());
}

/// Corner algebra fAf for f the sum of e_v over `vertices`, with the
/// inclusion of its basis into the ambient basis.
template <class S>
struct Corner {
  AlgebraPtr<S> algebra;
  std::vector<int> vertices;      // corner vertex -> ambient vertex
  std::vector<int> ambient_index; // corner basis -> ambient basis
  std::vector<int> local_index;   // ambient basis -> corner basis or -1

  Element<S> to_ambient(const Element<S>& x) const {
    Element<S> out;
    for (const auto& [i, c] : x.terms) out.terms.emplace_back(ambient_index[static_cast<std::size_t>(i)], c);
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    return out;
  }
};

template <class S>
Corner<S> corner(const AlgebraPtr<S>& a, std::vector<int> vertices) {
  Corner<S> c;
  c.vertices = std::move(vertices);
  std::vector<int> local_vertex(static_cast<std::size_t>(a->vertex_count()), -1);
  for (std::size_t k = 0; k < c.vertices.size(); ++k) local_vertex[static_cast<std::size_t>(c.vertices[k])] = static_cast<int>(k);
  c.local_index.assign(static_cast<std::size_t>(a->dimension()), -1);
  std::vector<BasisElement> basis;
  for (int i = 0; i < a->dimension(); ++i) {
    const auto& b = a->basis(i);
    const int s = local_vertex[static_cast<std::size_t>(b.source)];
    const int t = local_vertex[static_cast<std::size_t>(b.target)];
    if (s < 0 || t < 0) continue;
    c.local_index[static_cast<std::size_t>(i)] = static_cast<int>(basis.size());
    c.ambient_index.push_back(i);
    basis.push_back(BasisElement{s, t, b.degree, {}});
  }
  std::vector<Generator<S>> gens;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].degree == 0) continue;
    basis[k].word = {static_cast<int>(gens.size())};
    gens.push_back(Generator<S>{basis[k].source, basis[k].target, Element<S>::basis(static_cast<int>(k))});
  }
  std::vector<int> idem;
  std::vector<std::string> labels;
  for (int v : c.vertices) {
    idem.push_back(c.local_index[static_cast<std::size_t>(a->idempotent(v))]);
    labels.push_back(a->vertex_label(v));
  }
  auto ambient = c.ambient_index;
  auto local = c.local_index;
  auto product = [a, ambient, local](int i, int j) {
    Element<S> p = a->product(ambient[static_cast<std::size_t>(i)], ambient[static_cast<std::size_t>(j)]);
    Element<S> out;
    for (const auto& [k, v] : p.terms) {
      const int l = local[static_cast<std::size_t>(k)];
      if (l < 0) throw std::logic_error("corner product leaves the corner");
      out.terms.emplace_back(l, v);
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  };
  c.algebra = std::make_shared<FiniteAlgebra<S>>(static_cast<int>(c.vertices.size()), std::move(basis), std::move(idem),
                                                 std::move(gens), product, std::move(labels));
  return c;
}

/// X (x) Y over the ground field. Basis (i, j) has index i * dim Y + j and
/// vertex (v, w) has index v * |Y_0| + w.
template <class S>
AlgebraPtr<S> tensor(const AlgebraPtr<S>& x, const AlgebraPtr<S>& y) {
  const int nx = x->vertex_count(), ny = y->vertex_count();
  const int dx = x->dimension(), dy = y->dimension();
  auto vtx = [ny](int v, int w) { return v * ny + w; };

  std::vector<Generator<S>> gens;
  std::vector<int> gen_left(x->generators().size() * static_cast<std::size_t>(ny));
  std::vector<int> gen_right(static_cast<std::size_t>(nx) * y->generators().size());
  auto pair_element = [dy](const Element<S>& a, const Element<S>& b) {
    Element<S> out;
    for (const auto& [i, p] : a.terms)
      for (const auto& [j, q] : b.terms) out.terms.emplace_back(i * dy + j, p * q);
    std::sort(out.terms.begin(), out.terms.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
    return out;
  };
  for (std::size_t g = 0; g < x->generators().size(); ++g)
    for (int m = 0; m < ny; ++m) {
      const auto& gx = x->generators()[g];
      gen_left[g * static_cast<std::size_t>(ny) + static_cast<std::size_t>(m)] = static_cast<int>(gens.size());
      gens.push_back(Generator<S>{vtx(gx.source, m), vtx(gx.target, m),
                                  pair_element(gx.element, Element<S>::basis(y->idempotent(m)))});
    }
  for (int m = 0; m < nx; ++m)
    for (std::size_t h = 0; h < y->generators().size(); ++h) {
      const auto& gy = y->generators()[h];
      gen_right[static_cast<std::size_t>(m) * y->generators().size() + h] = static_cast<int>(gens.size());
      gens.push_back(Generator<S>{vtx(m, gy.source), vtx(m, gy.target),
                                  pair_element(Element<S>::basis(x->idempotent(m)), gy.element)});
    }

  std::vector<BasisElement> basis;
  basis.reserve(static_cast<std::size_t>(dx) * static_cast<std::size_t>(dy));
  for (int i = 0; i < dx; ++i)
    for (int j = 0; j < dy; ++j) {
      const auto& a = x->basis(i);
      const auto& b = y->basis(j);
      BasisElement e{vtx(a.source, b.source), vtx(a.target, b.target), a.degree + b.degree, {}};
      for (int g : a.word) e.word.push_back(gen_left[static_cast<std::size_t>(g) * static_cast<std::size_t>(ny) + static_cast<std::size_t>(b.source)]);
      for (int h : b.word) e.word.push_back(gen_right[static_cast<std::size_t>(a.target) * y->generators().size() + static_cast<std::size_t>(h)]);
      basis.push_back(std::move(e));
    }
  std::vector<int> idem;
  std::vector<std::string> labels;
  for (int v = 0; v < nx; ++v)
    for (int w = 0; w < ny; ++w) {
      idem.push_back(x->idempotent(v) * dy + y->idempotent(w));
      labels.push_back(x->vertex_label(v) + "|" + y->vertex_label(w));
    }
  auto product = [x, y, dy](int p, int q) {
    Element<S> a = x->product(p / dy, q / dy);
    if (a.is_zero()) return Element<S>{};
    Element<S> b = y->product(p % dy, q % dy);
    Element<S> out;
    for (const auto& [i, u] : a.terms)
      for (const auto& [j, v] : b.terms) out.terms.emplace_back(i * dy + j, u * v);
    return out;  // already sorted: i ascending, then j ascending
  };
  return std::make_shared<FiniteAlgebra<S>>(nx * ny, std::move(basis), std::move(idem), std::move(gens), product,
                                            std::move(labels));
}

/// A^op (x) A; a right module over it is an A-bimodule via x.(a (x) c) = a x c.
template <class S>
AlgebraPtr<S> enveloping(const AlgebraPtr<S>& a) {
  return tensor<S>(opposite<S>(a), a);
}

/// First basis triple (i, j, k) with (ij)k != i(jk), or nullopt.
template <class S>
std::optional<std::array<int, 3>> associativity_witness(const FiniteAlgebra<S>& a) {
  const int n = a.dimension();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (a.basis(i).target != a.basis(j).source) continue;
      const Element<S> ij = a.product(i, j);
      for (int k = 0; k < n; ++k) {
        if (a.basis(j).target != a.basis(k).source) continue;
        const Element<S> left = a.multiply(ij, Element<S>::basis(k));
        const Element<S> right = a.multiply(Element<S>::basis(i), a.product(j, k));
        if (!(left == right)) return std::array<int, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

/// Span of rad^j for j = 0, 1, ... until zero, where rad is generated by the
/// generators. Each layer is a subspace of the basis coordinate space.
template <class S>
std::vector<Subspace<S>> radical_layers(const FiniteAlgebra<S>& a) {
  const Index n = a.dimension();
  std::vector<Subspace<S>> out;
  out.push_back(Subspace<S>::span(Matrix<S>::Identity(n, n)));
  // rad = span of g * b over generators g and basis elements b.
  Matrix<S> span1(n, static_cast<Index>(a.generators().size()) * n);
  Index col = 0;
  for (const auto& g : a.generators())
    for (int b = 0; b < n; ++b) span1.col(col++) = to_dense(a.multiply(g.element, Element<S>::basis(b)), n);
  const Subspace<S> rad = Subspace<S>::span(span1);
  std::vector<Element<S>> rad_basis;
  for (Index k = 0; k < rad.dim(); ++k) rad_basis.push_back(from_dense<S>(Vector<S>(rad.basis().col(k))));
  Subspace<S> current = rad;
  while (current.dim() > 0) {
    out.push_back(current);
    Matrix<S> next(n, current.dim() * static_cast<Index>(rad_basis.size()));
    Index c = 0;
    for (Index k = 0; k < current.dim(); ++k) {
      const Element<S> x = from_dense<S>(Vector<S>(current.basis().col(k)));
      for (const auto& r : rad_basis) next.col(c++) = to_dense(a.multiply(x, r), n);
    }
    current = Subspace<S>::span(next);
    if (current.dim() >= out.back().dim() && current.dim() > 0) throw std::logic_error("radical is not nilpotent");
  }
  return out;
}

}  // namespace skewgentle
