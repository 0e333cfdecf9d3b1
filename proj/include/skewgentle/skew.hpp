#pragma once

#include <map>
#include <tuple>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewgentle/engine.hpp"
#include "skewgentle/gentle.hpp"

namespace skewgentle {

enum class VertexKind { ordinary, plus, minus };

const char* kind_name(VertexKind k);

/// Quiver with relations (Q^A, I^A) of a skew-gentle algebra.
///
/// ASCII names: a special vertex i becomes `i__p` (the first listed copy) and
/// `i__m`. A split arrow of a is `a__<s>_<t>` where s, t are `p`, `m`, or `o`
/// (endpoint not split); an arrow between ordinary vertices keeps its name.
struct SplitQuiver {
  QuiverSpec spec;
  std::vector<VertexKind> vertex_kind;
  std::vector<int> vertex_origin;  // Q^A vertex -> Q vertex
  std::vector<int> arrow_origin;   // Q^A arrow -> Q arrow
  std::vector<VertexKind> arrow_source_sign;
  std::vector<VertexKind> arrow_target_sign;
  std::vector<int> minus_vertices;  // Q_0^{Sp-}
  std::vector<int> plus_vertices;   // Q_0^{Sp+}

  bool is_minus(int v) const { return vertex_kind[static_cast<std::size_t>(v)] == VertexKind::minus; }
  /// Q^A vertex of (Q vertex, sign); sign is ignored for ordinary vertices.
  int lift_vertex(int q_vertex, VertexKind sign) const;
  /// Q^A arrow over a Q arrow with the given endpoint signs, or -1.
  int lift_arrow(int q_arrow, VertexKind source_sign, VertexKind target_sign) const;

  std::map<std::pair<int, int>, int> vertex_lift;  // (Q vertex, kind) -> Q^A vertex
  std::map<std::tuple<int, int, int>, int> arrow_lift;
};

SplitQuiver split_triple(const SkewGentleTriple& triple);

/// Same algebra with the roles of i+ and i- exchanged at every special vertex.
SplitQuiver swap_signs(const SplitQuiver& sq);

/// Gentle pair (Q^Gamma, I^Gamma) with its involution g. Ordinary v becomes
/// `v__p`, `v__m`; a special vertex keeps its name; arrow a becomes `a__p`, `a__m`.
struct GammaPair {
  QuiverSpec spec;
  std::vector<int> vertex_action;
  std::vector<int> arrow_action;
};

GammaPair build_gamma(const SkewGentleTriple& triple);

struct ProbeFailure {
  std::string probe;
  std::string witness;
};

struct ProbeReport {
  bool passed = true;
  std::map<std::string, int> checked;  // probe -> number of instances examined
  std::vector<ProbeFailure> failures;
  /// Sign twins (d2)/(e) that are nonzero in A: (path, twin, interior vertex count).
  std::vector<std::tuple<std::string, std::string, int>> sign_pairs;

  nlohmann::json to_json() const;
};

/// Structural properties of (Q^A, I^A) around the minus vertices, decided
/// with normal forms in A:
///  (a) each minus vertex has at most one minus successor and predecessor;
///  (b) each minus vertex has at most one non-minus neighbour on each side;
///  (c) no nonzero cycle at a minus vertex;
///  (d2) a path i- -> k1+ -> ... -> ks+ -> j- equals (-1)^s times its twin
///       through k1- ... ks-;
///  (e) dually with minus interior and non-minus ends;
///  (d3) at most one nonzero path with ordinary interior between two minus vertices;
///  (f) nonzero minus-to-minus paths with non-minus interior compose to nonzero paths.
template <class S>
ProbeReport structure_probes(const SplitQuiver& sq, const PresentedAlgebra<S>& a);

nlohmann::json to_json(const SplitQuiver& sq);
nlohmann::json to_json(const GammaPair& g);

#define SKEWGENTLE_EXTERN_SKEW(S) \
  extern template ProbeReport structure_probes<S>(const SplitQuiver&, const PresentedAlgebra<S>&);
SKEWGENTLE_EXTERN_SKEW(Rational)
SKEWGENTLE_EXTERN_SKEW(F2)
SKEWGENTLE_EXTERN_SKEW(F3)
SKEWGENTLE_EXTERN_SKEW(F5)
SKEWGENTLE_EXTERN_SKEW(F7)

}  // namespace skewgentle
