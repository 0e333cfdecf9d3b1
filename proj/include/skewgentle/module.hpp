#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewgentle/finite_algebra.hpp"
#include "skewgentle/linalg.hpp"

namespace skewgentle {

/// Finite dimensional right module, i.e. a representation: a vector space per
/// vertex and one matrix per algebra generator g: s -> t of size dim(t) x dim(s).
/// A basis element with word g1 ... gk acts by M_gk ... M_g1.
template <class S>
class Module {
 public:
  Module() = default;
  Module(AlgebraPtr<S> algebra, std::vector<int> dims, std::vector<Matrix<S>> actions);

  const AlgebraPtr<S>& algebra() const { return algebra_; }
  int vertex_count() const { return static_cast<int>(dims_.size()); }
  int dim(int v) const { return dims_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& dims() const { return dims_; }
  int dimension() const;
  bool is_zero() const { return dimension() == 0; }
  const Matrix<S>& generator_action(int g) const { return actions_[static_cast<std::size_t>(g)]; }
  const std::vector<Matrix<S>>& generator_actions() const { return actions_; }

  /// Matrix of the basis element b: dim(target) x dim(source).
  Matrix<S> action(int b) const;
  /// v . b for v in the component at source(b).
  Vector<S> apply(int b, const Vector<S>& v) const;

 private:
  AlgebraPtr<S> algebra_;
  std::vector<int> dims_;
  std::vector<Matrix<S>> actions_;
};

/// Checks shapes and action(g b) = action(b) action(g) for every generator g
/// and basis element b; returns a description of the first failure.
template <class S>
std::optional<std::string> validate(const Module<S>& m);

/// P_v = e_v A with basis between(v, w) at vertex w.
template <class S>
Module<S> projective_module(const AlgebraPtr<S>& a, int v);
/// I_v = D(A e_v): at vertex w the dual basis of between(w, v).
template <class S>
Module<S> injective_module(const AlgebraPtr<S>& a, int v);
template <class S>
Module<S> simple_module(const AlgebraPtr<S>& a, int v);
/// P_v / P_v rad^j for a length-graded algebra: basis words of degree < j.
template <class S>
Module<S> truncated_projective(const AlgebraPtr<S>& a, int v, int j);
template <class S>
Module<S> zero_module(const AlgebraPtr<S>& a);
template <class S>
Module<S> direct_sum(const std::vector<Module<S>>& parts);
template <class S>
Module<S> regular_module(const AlgebraPtr<S>& a);
/// D(A) as a right module: the direct sum of all I_v.
template <class S>
Module<S> dual_regular_module(const AlgebraPtr<S>& a);

/// Coordinates at vertex u of a direct sum of P_{w_k}: the pairs
/// (k, b) for b in between(w_k, u), in that order.
struct ProjectiveSlot {
  int summand;
  int basis;
};
template <class S>
std::vector<ProjectiveSlot> projective_layout(const FiniteAlgebra<S>& a, const std::vector<int>& tops, int u);

template <class S>
struct ProjectiveCover {
  std::vector<int> tops;                 // vertex of each generator
  std::vector<Vector<S>> generators;     // generator k in M_{tops[k]}
  Module<S> cover;                       // direct sum of P_{tops[k]}
  std::vector<Matrix<S>> map;            // per vertex u: dim M_u x dim cover_u
};

/// Minimal cover from a complement of the radical at each vertex, or the
/// cover on all basis vectors when `minimal` is false.
template <class S>
ProjectiveCover<S> projective_cover(const Module<S>& m, bool minimal = true);

template <class S>
struct Syzygy {
  Module<S> module;
  std::vector<Matrix<S>> inclusion;  // per vertex: cover_u x module_u
};

template <class S>
Syzygy<S> kernel_of_cover(const ProjectiveCover<S>& pc);

/// Projective resolution P_n -> ... -> P_0 -> M.
template <class S>
struct ResolutionTrace {
  AlgebraPtr<S> algebra;
  bool minimal = true;
  bool bounded = false;                               // reached a zero syzygy
  std::vector<std::vector<int>> terms;                // generator vertices of P_n
  std::vector<std::vector<Vector<S>>> differentials;  // [n][k]: d_n(gen k) in P_{n-1}; n >= 1
  std::vector<int> syzygy_dims;                       // dim of Omega^n M

  /// pd when bounded, otherwise nullopt (pd exceeds the cap).
  std::optional<int> projective_dimension() const;
  int term_dimension(int n) const;
};

/// Resolves until the syzygy vanishes or n reaches `cap` (then bounded is
/// false when Omega^{cap+1} M is nonzero).
template <class S>
ResolutionTrace<S> resolve(const Module<S>& m, int cap, bool minimal = true);

/// dim Ext^i(M, Y) for i = 0..n_max.
template <class S>
std::vector<int> ext_dims(const ResolutionTrace<S>& res, const Module<S>& y, int n_max);
template <class S>
std::vector<int> ext_dims(const Module<S>& m, const Module<S>& y, int n_max, bool minimal = true);

/// dim Tor_i(M, N) for i = 0..n_max; N is a left module given as a right
/// module over opposite(A), sharing basis indices with A.
template <class S>
std::vector<int> tor_dims(const ResolutionTrace<S>& res, const Module<S>& n_op, int n_max);
template <class S>
std::vector<int> tor_dims(const Module<S>& m, const Module<S>& n_op, int n_max, bool minimal = true);

template <class S>
bool is_projective(const Module<S>& m);

/// Vertices of the top of M with multiplicity.
template <class S>
std::vector<int> top_vertices(const Module<S>& m);

#define SKEWGENTLE_MODULE_DECL(X, S)                                                                  \
  X template class Module<S>;                                                                         \
  X template std::optional<std::string> validate<S>(const Module<S>&);                                \
  X template Module<S> projective_module<S>(const AlgebraPtr<S>&, int);                               \
  X template Module<S> injective_module<S>(const AlgebraPtr<S>&, int);                                \
  X template Module<S> simple_module<S>(const AlgebraPtr<S>&, int);                                   \
  X template Module<S> truncated_projective<S>(const AlgebraPtr<S>&, int, int);                       \
  X template Module<S> zero_module<S>(const AlgebraPtr<S>&);                                          \
  X template Module<S> direct_sum<S>(const std::vector<Module<S>>&);                                  \
  X template Module<S> regular_module<S>(const AlgebraPtr<S>&);                                       \
  X template Module<S> dual_regular_module<S>(const AlgebraPtr<S>&);                                  \
  X template std::vector<ProjectiveSlot> projective_layout<S>(const FiniteAlgebra<S>&, const std::vector<int>&, int); \
  X template ProjectiveCover<S> projective_cover<S>(const Module<S>&, bool);                          \
  X template Syzygy<S> kernel_of_cover<S>(const ProjectiveCover<S>&);                                 \
  X template struct ResolutionTrace<S>;                                                               \
  X template ResolutionTrace<S> resolve<S>(const Module<S>&, int, bool);                              \
  X template std::vector<int> ext_dims<S>(const ResolutionTrace<S>&, const Module<S>&, int);          \
  X template std::vector<int> ext_dims<S>(const Module<S>&, const Module<S>&, int, bool);             \
  X template std::vector<int> tor_dims<S>(const ResolutionTrace<S>&, const Module<S>&, int);          \
  X template std::vector<int> tor_dims<S>(const Module<S>&, const Module<S>&, int, bool);             \
  X template bool is_projective<S>(const Module<S>&);                                                 \
  X template std::vector<int> top_vertices<S>(const Module<S>&);

SKEWGENTLE_MODULE_DECL(extern, Rational)
SKEWGENTLE_MODULE_DECL(extern, F2)
SKEWGENTLE_MODULE_DECL(extern, F3)
SKEWGENTLE_MODULE_DECL(extern, F5)
SKEWGENTLE_MODULE_DECL(extern, F7)

}  // namespace skewgentle
