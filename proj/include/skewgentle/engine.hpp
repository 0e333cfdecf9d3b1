#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewgentle/finite_algebra.hpp"
#include "skewgentle/quiver.hpp"

namespace skewgentle {

/// No finite-dimensionality certificate was found below the degree cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Word = std::vector<int>;

/// tip == sum of c * w over `tail`; every tail word is deglex-smaller than tip.
template <class S>
struct RewriteRule {
  Word tip;
  std::vector<std::pair<Word, S>> tail;
};

template <class S>
class PresentedAlgebra;

/// Throws CapExceeded when some degree <= degree_cap still has normal words,
/// SpecError for relations that are not length-homogeneous.
template <class S>
PresentedAlgebra<S> realize(const QuiverSpec& spec, int degree_cap = 64);

/// kQ/<R> for length-homogeneous R, realized through a reduced noncommutative
/// Groebner basis under deglex with arrow order = declaration order.
template <class S>
class PresentedAlgebra {
 public:
  const QuiverSpec& quiver() const { return quiver_; }
  FieldSpec field() const { return field_spec_of<S>(); }
  const std::vector<RewriteRule<S>>& rules() const { return rules_; }
  /// Smallest degree with no normal words.
  int certificate_degree() const { return certificate_; }

  int dimension() const { return static_cast<int>(basis_.size()); }
  /// Normal words ordered by degree, then trivial paths by vertex, then deglex.
  const std::vector<Path>& basis() const { return basis_; }
  const std::vector<int>& graded_dimensions() const { return graded_; }
  std::optional<int> index_of(const Path& p) const;
  int idempotent(int v) const { return idempotents_[static_cast<std::size_t>(v)]; }

  /// Normal form of a path of the quiver.
  Element<S> normal_form(const Path& p) const;
  /// Normal form of sum c_k * path_k.
  Element<S> normal_form(const std::vector<std::pair<Path, S>>& combination) const;
  Element<S> product(int i, int j) const;
  Element<S> multiply(const Element<S>& x, const Element<S>& y) const;

  /// Finite algebra view: generators are the arrows.
  AlgebraPtr<S> algebra() const { return algebra_; }

  std::string basis_label(int i) const { return path_to_string(quiver_, basis_[static_cast<std::size_t>(i)]); }
  std::string format(const Element<S>& x) const;

  nlohmann::json to_json() const;

  template <class T>
  friend PresentedAlgebra<T> realize(const QuiverSpec& spec, int degree_cap);

 private:
  Element<S> reduce(std::map<Word, S, std::greater<>> poly) const;
  bool find_tip(const Word& w, std::size_t& start, const RewriteRule<S>*& rule) const;

  QuiverSpec quiver_;
  std::vector<RewriteRule<S>> rules_;
  std::map<Word, std::size_t> tip_index_;
  std::vector<std::size_t> tip_lengths_;
  int certificate_ = 0;
  std::vector<Path> basis_;
  std::vector<int> graded_;
  std::vector<int> idempotents_;
  std::map<std::pair<int, Word>, int> index_;
  std::shared_ptr<const std::vector<std::vector<Element<S>>>> table_;
  AlgebraPtr<S> algebra_;
};

/// Dimension by brute force: all paths per degree modulo the span of u*r*v,
/// with no rewriting involved. Throws CapExceeded past length_cap.
template <class S>
int oracle_dimension(const QuiverSpec& spec, int length_cap = 24);

/// Per-degree dimensions from the same brute force.
template <class S>
std::vector<int> oracle_graded_dimensions(const QuiverSpec& spec, int length_cap = 24);

/// Dimensions of rad^0, rad^1, ... down to zero.
template <class S>
std::vector<int> radical_filtration_dims(const PresentedAlgebra<S>& a);

#define SKEWGENTLE_EXTERN_ENGINE(S)                                                     \
  extern template class PresentedAlgebra<S>;                                            \
  extern template PresentedAlgebra<S> realize<S>(const QuiverSpec&, int);               \
  extern template int oracle_dimension<S>(const QuiverSpec&, int);                      \
  extern template std::vector<int> oracle_graded_dimensions<S>(const QuiverSpec&, int); \
  extern template std::vector<int> radical_filtration_dims<S>(const PresentedAlgebra<S>&);

SKEWGENTLE_EXTERN_ENGINE(Rational)
SKEWGENTLE_EXTERN_ENGINE(F2)
SKEWGENTLE_EXTERN_ENGINE(F3)
SKEWGENTLE_EXTERN_ENGINE(F5)
SKEWGENTLE_EXTERN_ENGINE(F7)

}  // namespace skewgentle
