#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewgentle/gentle.hpp"
#include "skewgentle/module.hpp"
#include "skewgentle/morita.hpp"

namespace skewgentle {

class SizeGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Omega M: kernel of the minimal projective cover.
template <class S>
Module<S> syzygy(const Module<S>& m);

/// dim Tor^C_n(M, N) for n = 0..n_max.
template <class S>
std::vector<int> tor_over_C(const PeirceData<S>& pd, int n_max = 4);

struct StratifyingVerdict {
  bool degree0 = true;            // Ae (x)_C eA -> AeA is bijective
  bool higher = true;             // Tor^C_n(Ae, eA) = 0 for 1 <= n <= n_max
  bool tor0_agrees = true;        // explicit tensor dimension equals Tor_0
  int tensor_dim = 0;
  int ideal_dim = 0;
  std::vector<int> tor_dims;      // n = 1..n_max
  bool stratifying() const { return degree0 && higher; }
};

template <class S>
StratifyingVerdict stratifying_check(const PeirceData<S>& pd, int n_max = 4);

/// AeA as a right module over A^op (x) A, i.e. as an A-bimodule.
template <class S>
Module<S> ideal_bimodule(const PeirceData<S>& pd, const AlgebraPtr<S>& enveloping_algebra);

/// pd of AeA over the enveloping algebra; nullopt when it exceeds `cap`.
/// Throws SizeGuardExceeded when dim A > max_dim.
template <class S>
std::optional<int> bimodule_pd_bound(const PeirceData<S>& pd, int cap = 4, int max_dim = 30);

struct InjectiveDimensions {
  // nullopt: larger than the cap
  std::optional<int> id_left;        // id of A as a left module = pd_A D(A)
  std::optional<int> id_right;       // id of A as a right module = pd_{A^op} D(A)
  std::optional<int> id_left_ext;    // largest i with Ext^i_{A^op}(S, A) != 0
  std::optional<int> id_right_ext;   // largest i with Ext^i_A(S, A) != 0
  bool routes_agree() const { return id_left == id_left_ext && id_right == id_right_ext; }
};

template <class S>
InjectiveDimensions injective_dimension_of_regular(const AlgebraPtr<S>& a, int cap = 20);

struct GorensteinVerdict {
  InjectiveDimensions dims;
  bool gorenstein() const { return dims.id_left.has_value() && dims.id_right.has_value(); }
};

template <class S>
GorensteinVerdict gorenstein_check(const AlgebraPtr<S>& a, int cap = 20);

struct SelfinjectiveVerdict {
  bool direct = false;                 // every I_v is projective
  std::optional<bool> combinatorial;   // from the triple, when given
  std::vector<int> nakayama;           // top vertex of I_v, or -1 when I_v is not projective
  bool agree() const { return !combinatorial || *combinatorial == direct; }
};

/// Selfinjectivity of a skew-gentle triple read off (Q, I, Sp), per
/// connected component: Sp-free and either a lone vertex or one oriented
/// cycle whose consecutive compositions all lie in I; a lone special
/// vertex (giving k x k) also counts.
bool selfinjective_by_combinatorics(const SkewGentleTriple& triple);

template <class S>
SelfinjectiveVerdict selfinjective_check(const AlgebraPtr<S>& a, const SkewGentleTriple* triple = nullptr);

struct FindimReport {
  std::optional<int> witness;   // id_A(A)
  int empirical_max = 0;        // max finite pd among the probed modules
  int probed = 0;
  int finite = 0;
  bool bound_holds = true;
};

/// Requires a Gorenstein algebra (throws std::invalid_argument otherwise).
template <class S>
FindimReport findim_report(const AlgebraPtr<S>& a, const GorensteinVerdict& g, int cap = 20);

struct ExtSpotCheck {
  std::vector<int> ext_dims;  // i = 1..k_max of Ext^i(M, M + A)
  bool projective = false;
  bool flagged = false;       // all vanish though M is not projective
};

template <class S>
ExtSpotCheck ext_vanishing_spot_check(const AlgebraPtr<S>& a, const Module<S>& m, int k_max = 8);

nlohmann::json to_json(const StratifyingVerdict& v);
nlohmann::json to_json(const InjectiveDimensions& d);
nlohmann::json to_json(const SelfinjectiveVerdict& v);
nlohmann::json to_json(const FindimReport& r);
nlohmann::json to_json(const ExtSpotCheck& r);

#define SKEWGENTLE_HOMOLOGY_DECL(X, S)                                                                   \
  X template Module<S> syzygy<S>(const Module<S>&);                                                      \
  X template std::vector<int> tor_over_C<S>(const PeirceData<S>&, int);                                   \
  X template StratifyingVerdict stratifying_check<S>(const PeirceData<S>&, int);                          \
  X template Module<S> ideal_bimodule<S>(const PeirceData<S>&, const AlgebraPtr<S>&);                     \
  X template std::optional<int> bimodule_pd_bound<S>(const PeirceData<S>&, int, int);                     \
  X template InjectiveDimensions injective_dimension_of_regular<S>(const AlgebraPtr<S>&, int);            \
  X template GorensteinVerdict gorenstein_check<S>(const AlgebraPtr<S>&, int);                            \
  X template SelfinjectiveVerdict selfinjective_check<S>(const AlgebraPtr<S>&, const SkewGentleTriple*);  \
  X template FindimReport findim_report<S>(const AlgebraPtr<S>&, const GorensteinVerdict&, int);          \
  X template ExtSpotCheck ext_vanishing_spot_check<S>(const AlgebraPtr<S>&, const Module<S>&, int);

SKEWGENTLE_HOMOLOGY_DECL(extern, Rational)
SKEWGENTLE_HOMOLOGY_DECL(extern, F2)
SKEWGENTLE_HOMOLOGY_DECL(extern, F3)
SKEWGENTLE_HOMOLOGY_DECL(extern, F5)
SKEWGENTLE_HOMOLOGY_DECL(extern, F7)

}  // namespace skewgentle
