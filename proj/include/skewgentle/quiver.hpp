#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skewgentle/field.hpp"

namespace skewgentle {

/// Raised when a quiver declaration violates a structural invariant.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Arrow sequence composed left to right: `a*b` means a first, then b.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Degree-lexicographic order: length first, then arrow indices, then source.
bool deglex_less(const Path& a, const Path& b);

struct RelationTerm {
  Rational coefficient{1};
  std::vector<int> arrows;

  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

/// Linear combination of parallel paths of a common length.
struct Relation {
  std::vector<RelationTerm> terms;

  bool monomial() const { return terms.size() == 1; }
  std::size_t length() const { return terms.empty() ? 0 : terms.front().arrows.size(); }

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Finite quiver with relations and a set of special vertices.
/// Declaration order is preserved; it seeds the monomial order of the engine.
class QuiverSpec {
 public:
  int add_vertex(std::string name);
  int add_arrow(std::string name, std::string_view source, std::string_view target);
  int add_arrow(std::string name, int source, int target);
  /// Validates composability, common endpoints and length homogeneity.
  void add_relation(Relation rel);
  void mark_special(std::string_view vertex);
  void mark_special(int vertex);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<Relation>& relations() const { return relations_; }
  /// Special vertex indices in declaration order.
  const std::vector<int>& special() const { return special_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  std::optional<int> find_vertex(std::string_view name) const;
  std::optional<int> find_arrow(std::string_view name) const;
  int vertex(std::string_view name) const;
  int arrow(std::string_view name) const;
  const std::string& vertex_name(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const std::string& arrow_name(int a) const { return arrows_.at(static_cast<std::size_t>(a)).name; }
  bool is_special(int v) const;

  std::vector<int> out_arrows(int v) const;
  std::vector<int> in_arrows(int v) const;

  /// Path from a sequence of arrow names; throws SpecError when not composable.
  Path path(const std::vector<std::string>& arrow_names) const;
  Path trivial_path(int v) const { return Path{v, v, {}}; }
  Path relation_path(const RelationTerm& term) const;

  /// Copy without relations or special marks.
  QuiverSpec underlying_quiver() const;
  /// Same quiver and special marks with a different relation list.
  QuiverSpec with_relations(const std::vector<Relation>& rels) const;

  friend bool operator==(const QuiverSpec& a, const QuiverSpec& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_ && a.relations_ == b.relations_ &&
           a.special_ == b.special_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<Relation> relations_;
  std::vector<int> special_;
  std::map<std::string, int, std::less<>> vertex_index_;
  std::map<std::string, int, std::less<>> arrow_index_;
};

/// Monomial relation a*b from arrow names.
Relation monomial_relation(const QuiverSpec& q, std::string_view first, std::string_view second);

/// Product of paths: concatenation when the target of p is the source of q, nullopt (zero) otherwise.
std::optional<Path> path_compose(const QuiverSpec& q, const Path& p, const Path& r);

/// Arrow names of a path joined by '*', or "e_<vertex>" for a trivial path.
std::string path_to_string(const QuiverSpec& q, const Path& p);

}  // namespace skewgentle
