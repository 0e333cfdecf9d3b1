#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewgentle/engine.hpp"
#include "skewgentle/module.hpp"
#include "skewgentle/skew.hpp"

namespace skewgentle {

/// A = [[B, M], [N, C]] for e the sum of the minus idempotents:
/// B = (1-e)A(1-e), M = (1-e)Ae, N = eA(1-e), C = eAe.
template <class S>
struct PeirceData {
  std::shared_ptr<const PresentedAlgebra<S>> algebra;
  SplitQuiver split;
  std::vector<int> e_vertices;      // minus vertices of Q^A
  std::vector<int> other_vertices;  // ordinary and plus vertices
  std::vector<int> B, M, N, C;      // basis indices of A
  Subspace<S> f_image;              // span of all products m n, inside B
  Corner<S> c_corner;               // C as an algebra
  AlgebraPtr<S> c_op;

  bool degenerate() const { return e_vertices.empty(); }
  int dim_A() const { return algebra->dimension(); }
};

/// Routes each basis word by the kinds of its endpoints. Sp may be empty; the
/// result is then degenerate with B = A.
template <class S>
PeirceData<S> peirce(const PresentedAlgebra<S>& alg, const SplitQuiver& sq);

/// Right C-module spanned by the given basis elements of A (closed under
/// right multiplication by C); `left` builds the left C-module as a right
/// module over C^op instead.
template <class S>
Module<S> corner_module(const PeirceData<S>& pd, const std::vector<int>& indices, bool left);

template <class S>
struct IsoCheck {
  bool ok = false;
  std::string witness;
  int source_dim = 0;
  int target_dim = 0;
};

/// Checks that generator images define an isomorphism from the presented
/// algebra P onto (span of `target`) / J inside A, for an ideal J of A
/// contained in that span: relations land in J, products match on basis
/// pairs, and the images of the basis of P form a basis modulo J.
template <class S>
IsoCheck<S> verify_presentation(const PresentedAlgebra<S>& p, const PresentedAlgebra<S>& a,
                                const std::vector<int>& vertex_images, const std::vector<Element<S>>& arrow_images,
                                const Subspace<S>& target, const Subspace<S>& j);

template <class S>
struct CornerPresentation {
  QuiverSpec quiver;
  std::vector<int> vertex_images;            // quiver vertex -> vertex of Q^A
  std::vector<Element<S>> arrow_images;      // quiver arrow -> element of A
  IsoCheck<S> iso;
  std::vector<std::string> factors;          // C only: "k" or "A_n" per component
  std::vector<std::vector<int>> components;  // C only: quiver vertices per factor
  bool classified = true;
  std::string classification_witness;
  // B only
  std::optional<bool> gentle_or;             // (Q, I^or) is gentle
  std::optional<bool> matches_q_ior;         // (Q^B, I^B) equals (Q, I^or) under the origin map
};

template <class S>
CornerPresentation<S> present_C(const PeirceData<S>& pd);
template <class S>
CornerPresentation<S> present_B(const PeirceData<S>& pd, const SkewGentleTriple& triple);

struct BimoduleDecomposition {
  std::vector<std::vector<std::string>> m_arrows;  // Q^M_{1p}
  std::vector<std::vector<std::string>> n_arrows;  // Q^N_{1q}
  std::vector<int> m_dims, n_dims;
  bool m_direct = true;
  bool n_direct = true;
};

template <class S>
BimoduleDecomposition decompose_bimodules(const PeirceData<S>& pd, const CornerPresentation<S>& c);

struct ProjectivityVerdict {
  bool m_projective = true;
  bool n_projective = true;
  int m_dim = 0, m_cover_dim = 0;
  int n_dim = 0, n_cover_dim = 0;
};

template <class S>
ProjectivityVerdict check_one_sided_projectivity(const PeirceData<S>& pd);

template <class S>
struct QuotientIso {
  IsoCheck<S> iso;
  int quotient_dim = 0;       // dim A / A e A
  int base_dim = 0;           // dim A(Q, I)
  bool f_image_matches = false;  // f(M (x) N) is generated by the lifted I^Sp relations
};

template <class S>
QuotientIso<S> quotient_iso_check(const PeirceData<S>& pd, const SkewGentleTriple& triple);

struct ContextChecks {
  bool compatibility = true;  // f(m n) m' = m g(n m') and n f(m n') = g(n m) n'
  bool g_in_radical = true;
  bool f_nilpotent = true;
  long long checked = 0;
  bool exhaustive = true;     // false if the triple count guard was hit
};

template <class S>
ContextChecks morita_context_checks(const PeirceData<S>& pd, long long max_checks = 200000);

template <class S>
nlohmann::json morita_report(const PeirceData<S>& pd, const CornerPresentation<S>& b, const CornerPresentation<S>& c,
                             const ProjectivityVerdict& proj, const QuotientIso<S>& q);

#define SKEWGENTLE_MORITA_DECL(X, S)                                                                              \
  X template PeirceData<S> peirce<S>(const PresentedAlgebra<S>&, const SplitQuiver&);                              \
  X template Module<S> corner_module<S>(const PeirceData<S>&, const std::vector<int>&, bool);                      \
  X template IsoCheck<S> verify_presentation<S>(const PresentedAlgebra<S>&, const PresentedAlgebra<S>&,            \
                                                const std::vector<int>&, const std::vector<Element<S>>&,           \
                                                const Subspace<S>&, const Subspace<S>&);                           \
  X template CornerPresentation<S> present_C<S>(const PeirceData<S>&);                                             \
  X template CornerPresentation<S> present_B<S>(const PeirceData<S>&, const SkewGentleTriple&);                    \
  X template BimoduleDecomposition decompose_bimodules<S>(const PeirceData<S>&, const CornerPresentation<S>&);     \
  X template ProjectivityVerdict check_one_sided_projectivity<S>(const PeirceData<S>&);                            \
  X template QuotientIso<S> quotient_iso_check<S>(const PeirceData<S>&, const SkewGentleTriple&);                  \
  X template ContextChecks morita_context_checks<S>(const PeirceData<S>&, long long);                              \
  X template nlohmann::json morita_report<S>(const PeirceData<S>&, const CornerPresentation<S>&,                   \
                                             const CornerPresentation<S>&, const ProjectivityVerdict&,              \
                                             const QuotientIso<S>&);

SKEWGENTLE_MORITA_DECL(extern, Rational)
SKEWGENTLE_MORITA_DECL(extern, F2)
SKEWGENTLE_MORITA_DECL(extern, F3)
SKEWGENTLE_MORITA_DECL(extern, F5)
SKEWGENTLE_MORITA_DECL(extern, F7)

}  // namespace skewgentle
