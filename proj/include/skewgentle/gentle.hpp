#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skewgentle/quiver.hpp"

namespace skewgentle {

struct Violation {
  int axiom = 0;  // 1..4
  std::vector<std::string> vertices;
  std::vector<std::string> arrows;
  std::string message;
};

struct GentleVerdict {
  bool is_gentle = true;
  std::vector<Violation> violations;
};

/// The four gentle-pair axioms: (1) in/out degree at most 2, (2) at most one
/// non-relation continuation on each side, (3) at most one relation
/// continuation on each side, (4) finite dimension, certified by the rewriting
/// engine over Q with the given degree cap. Axiom 4 is only evaluated when
/// 1-3 hold. Throws SpecError unless every relation is a length-2 monomial.
GentleVerdict check_gentle(const QuiverSpec& spec, int degree_cap = 64);

/// Validated skew-gentle triple.
struct SkewGentleTriple {
  QuiverSpec base;  // (Q, I) with special marks
  std::vector<int> special_vertices;
  std::vector<int> ordinary_vertices;
  QuiverSpec augmented;  // Q' with a loop delta_i per special vertex and delta_i^2 in I

  bool is_special(int v) const { return base.is_special(v); }
};

struct SkewGentleCheck {
  GentleVerdict verdict;  // verdict for the augmented pair
  std::optional<SkewGentleTriple> triple;
  std::vector<std::string> offending_special;

  bool valid() const { return triple.has_value(); }
};

/// Name of the loop attached at a special vertex.
std::string special_loop_name(const QuiverSpec& spec, int vertex);

/// Attaches one loop per special vertex with square zero and checks gentleness.
SkewGentleCheck check_skew_gentle(const QuiverSpec& spec, int degree_cap = 64);

/// Throws SpecError with the violations when the triple is invalid.
SkewGentleTriple require_skew_gentle(const QuiverSpec& spec);

/// I split by middle vertex: (I^or, I^Sp).
std::pair<std::vector<Relation>, std::vector<Relation>> split_relations(const SkewGentleTriple& triple);

/// Oriented cycles a_0 ... a_n with every cyclically consecutive composition
/// in I. Each cycle is rotated to start at its smallest arrow index; the list
/// is sorted.
std::vector<std::vector<int>> find_full_relation_cycles(const QuiverSpec& spec);

/// Length-2 monomial relations as arrow pairs.
std::set<std::pair<int, int>> monomial_pairs(const QuiverSpec& spec);

nlohmann::json to_json(const GentleVerdict& v);
nlohmann::json to_json(const SkewGentleCheck& c);

}  // namespace skewgentle
