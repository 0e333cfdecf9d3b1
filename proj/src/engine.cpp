#include "skewgentle/engine.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace skewgentle {
namespace {

template <class S>
using Poly = std::map<Word, S, std::greater<>>;

template <class S>
void poly_add(Poly<S>& p, const Word& w, const S& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = p.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) p.erase(it);
  }
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

template <class S>
Poly<S> relation_poly(const Relation& r) {
  Poly<S> p;
  for (const auto& t : r.terms) poly_add(p, t.arrows, field_traits<S>::from_rational(t.coefficient));
  return p;
}

// Echelon form kept sparse; rows are normalized at their smallest index.
template <class S>
class SparseEchelon {
 public:
  bool insert(Element<S> row) {
    while (!row.is_zero()) {
      const int p = row.terms.front().first;
      auto it = pivots_.find(p);
      if (it == pivots_.end()) {
        const S inv = inverse(row.terms.front().second);
        pivots_.emplace(p, scaled(row, inv));
        return true;
      }
      add_scaled(row, it->second, -row.terms.front().second);
    }
    return false;
  }
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  std::map<int, Element<S>> pivots_;
};

}  // namespace

template <class S>
bool PresentedAlgebra<S>::find_tip(const Word& w, std::size_t& start, const RewriteRule<S>*& rule) const {
  for (std::size_t s = 0; s < w.size(); ++s)
    for (std::size_t len : tip_lengths_) {
      if (s + len > w.size()) break;
      auto it = tip_index_.find(slice(w, s, s + len));
      if (it != tip_index_.end()) {
        start = s;
        rule = &rules_[it->second];
        return true;
      }
    }
  return false;
}

template <class S>
Element<S> PresentedAlgebra<S>::reduce(Poly<S> poly) const {
  Element<S> out;
  while (!poly.empty()) {
    auto top = poly.begin();
    Word w = top->first;
    S c = top->second;
    poly.erase(top);
    std::size_t start = 0;
    const RewriteRule<S>* rule = nullptr;
    if (find_tip(w, start, rule)) {
      const Word u = slice(w, 0, start);
      const Word v = slice(w, start + rule->tip.size(), w.size());
      for (const auto& [tw, tc] : rule->tail) poly_add(poly, concat(concat(u, tw), v), c * tc);
      continue;
    }
    const int src = quiver_.arrows()[static_cast<std::size_t>(w.front())].source;
    auto it = index_.find({src, w});
    if (it == index_.end()) throw std::logic_error("normal word outside the basis");
    add_scaled(out, Element<S>::basis(it->second), c);
  }
  return out;
}

template <class S>
std::optional<int> PresentedAlgebra<S>::index_of(const Path& p) const {
  auto it = index_.find({p.source, p.arrows});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

template <class S>
Element<S> PresentedAlgebra<S>::normal_form(const Path& p) const {
  if (p.trivial()) return Element<S>::basis(idempotent(p.source));
  Poly<S> poly;
  poly.emplace(p.arrows, S(1));
  return reduce(std::move(poly));
}

template <class S>
Element<S> PresentedAlgebra<S>::normal_form(const std::vector<std::pair<Path, S>>& combination) const {
  Element<S> out;
  for (const auto& [p, c] : combination) add_scaled(out, normal_form(p), c);
  return out;
}

template <class S>
Element<S> PresentedAlgebra<S>::product(int i, int j) const {
  return algebra_->product(i, j);
}

template <class S>
Element<S> PresentedAlgebra<S>::multiply(const Element<S>& x, const Element<S>& y) const {
  return algebra_->multiply(x, y);
}

template <class S>
std::string PresentedAlgebra<S>::format(const Element<S>& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : x.terms) {
    std::string coef = field_traits<S>::to_string(c);
    bool neg = !coef.empty() && coef[0] == '-';
    if (neg) coef.erase(0, 1);
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    if (coef != "1") os << coef << "*";
    os << basis_label(i);
    first = false;
  }
  return os.str();
}

template <class S>
nlohmann::json PresentedAlgebra<S>::to_json() const {
  using nlohmann::json;
  json j;
  j["field"] = field().name();
  j["dimension"] = dimension();
  j["certificate_degree"] = certificate_;
  j["graded_dimensions"] = graded_;
  json basis = json::array();
  for (int i = 0; i < dimension(); ++i) {
    const Path& p = basis_[static_cast<std::size_t>(i)];
    json words = json::array();
    for (int a : p.arrows) words.push_back(quiver_.arrow_name(a));
    basis.push_back({{"index", i},
                     {"source", quiver_.vertex_name(p.source)},
                     {"target", quiver_.vertex_name(p.target)},
                     {"word", words}});
  }
  j["basis"] = basis;
  json sc = json::array();
  for (int a = 0; a < dimension(); ++a)
    for (int b = 0; b < dimension(); ++b) {
      const Element<S>& e = (*table_)[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (e.is_zero()) continue;
      json terms = json::array();
      for (const auto& [k, c] : e.terms) terms.push_back({{"index", k}, {"coefficient", field_traits<S>::to_string(c)}});
      sc.push_back({{"left", a}, {"right", b}, {"result", terms}});
    }
  j["structure_constants"] = sc;
  return j;
}

template <class S>
PresentedAlgebra<S> realize(const QuiverSpec& spec, int degree_cap) {
  if (degree_cap < 2) throw std::invalid_argument("degree_cap must be at least 2");
  PresentedAlgebra<S> A;
  A.quiver_ = spec;

  std::map<std::size_t, std::vector<Poly<S>>> by_degree;
  for (const auto& r : spec.relations()) {
    auto p = relation_poly<S>(r);
    if (!p.empty()) by_degree[r.length()].push_back(std::move(p));
  }

  auto reduce_poly = [&](Poly<S> poly) {
    Poly<S> out;
    while (!poly.empty()) {
      auto top = poly.begin();
      Word w = top->first;
      S c = top->second;
      poly.erase(top);
      std::size_t start = 0;
      const RewriteRule<S>* rule = nullptr;
      if (A.find_tip(w, start, rule)) {
        const Word u = slice(w, 0, start);
        const Word v = slice(w, start + rule->tip.size(), w.size());
        for (const auto& [tw, tc] : rule->tail) poly_add(poly, concat(concat(u, tw), v), c * tc);
      } else {
        poly_add(out, w, c);
      }
    }
    return out;
  };

  // Normal words per degree, keyed by (source, word).
  std::vector<std::vector<Path>> normal(1);
  for (int v = 0; v < spec.vertex_count(); ++v) normal[0].push_back(spec.trivial_path(v));

  for (int d = 1;; ++d) {
    std::vector<Poly<S>> candidates;
    if (auto it = by_degree.find(static_cast<std::size_t>(d)); it != by_degree.end())
      for (const auto& p : it->second) candidates.push_back(p);
    for (const auto& r1 : A.rules_)
      for (const auto& r2 : A.rules_) {
        const std::size_t l1 = r1.tip.size(), l2 = r2.tip.size();
        for (std::size_t k = 1; k < std::min(l1, l2); ++k) {
          if (l1 + l2 - k != static_cast<std::size_t>(d)) continue;
          if (!std::equal(r1.tip.end() - static_cast<std::ptrdiff_t>(k), r1.tip.end(), r2.tip.begin())) continue;
          const Word right_rest = slice(r2.tip, k, l2);
          const Word left_rest = slice(r1.tip, 0, l1 - k);
          Poly<S> s;
          for (const auto& [w, c] : r1.tail) poly_add(s, concat(w, right_rest), c);
          for (const auto& [w, c] : r2.tail) poly_add(s, concat(left_rest, w), -c);
          candidates.push_back(std::move(s));
        }
      }

    std::vector<Poly<S>> reduced;
    for (auto& c : candidates) {
      auto r = reduce_poly(std::move(c));
      if (!r.empty()) reduced.push_back(std::move(r));
    }
    if (!reduced.empty()) {
      std::set<Word, std::greater<>> words;
      for (const auto& p : reduced)
        for (const auto& [w, c] : p) words.insert(w);
      std::vector<Word> cols(words.begin(), words.end());
      std::map<Word, Index> col_of;
      for (std::size_t k = 0; k < cols.size(); ++k) col_of[cols[k]] = static_cast<Index>(k);
      Matrix<S> m = Matrix<S>::Zero(static_cast<Index>(reduced.size()), static_cast<Index>(cols.size()));
      for (std::size_t r = 0; r < reduced.size(); ++r)
        for (const auto& [w, c] : reduced[r]) m(static_cast<Index>(r), col_of[w]) = c;
      RowEchelon<S> ech = row_echelon<S>(std::move(m));
      for (Index r = 0; r < ech.rank(); ++r) {
        const Index p = ech.pivots[static_cast<std::size_t>(r)];
        RewriteRule<S> rule;
        rule.tip = cols[static_cast<std::size_t>(p)];
        for (Index c = p + 1; c < static_cast<Index>(cols.size()); ++c)
          if (!is_zero(ech.reduced(r, c))) rule.tail.emplace_back(cols[static_cast<std::size_t>(c)], -ech.reduced(r, c));
        A.tip_index_.emplace(rule.tip, A.rules_.size());
        A.rules_.push_back(std::move(rule));
      }
      std::set<std::size_t> lengths;
      for (const auto& r : A.rules_) lengths.insert(r.tip.size());
      A.tip_lengths_.assign(lengths.begin(), lengths.end());
    }

    std::vector<Path> level;
    for (const Path& p : normal.back())
      for (int a : spec.out_arrows(p.target)) {
        Path q{p.source, spec.arrows()[static_cast<std::size_t>(a)].target, p.arrows};
        q.arrows.push_back(a);
        bool reducible = false;
        for (std::size_t len : A.tip_lengths_) {
          if (len > q.arrows.size()) break;
          if (A.tip_index_.count(slice(q.arrows, q.arrows.size() - len, q.arrows.size()))) {
            reducible = true;
            break;
          }
        }
        if (!reducible) level.push_back(std::move(q));
      }
    if (level.empty()) {
      A.certificate_ = d;
      break;
    }
    if (d >= degree_cap)
      throw CapExceeded("no finite-dimensionality certificate up to degree " + std::to_string(degree_cap) + " (" +
                        std::to_string(level.size()) + " normal words at degree " + std::to_string(d) + ")");
    std::sort(level.begin(), level.end(), deglex_less);
    normal.push_back(std::move(level));
  }

  for (const auto& lvl : normal) {
    A.graded_.push_back(static_cast<int>(lvl.size()));
    for (const auto& p : lvl) {
      A.index_.emplace(std::make_pair(p.source, p.arrows), static_cast<int>(A.basis_.size()));
      A.basis_.push_back(p);
    }
  }
  for (int v = 0; v < spec.vertex_count(); ++v) A.idempotents_.push_back(A.index_.at({v, Word{}}));

  const int n = A.dimension();
  auto table = std::make_shared<std::vector<std::vector<Element<S>>>>(static_cast<std::size_t>(n),
                                                                       std::vector<Element<S>>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Path& p = A.basis_[static_cast<std::size_t>(i)];
      const Path& q = A.basis_[static_cast<std::size_t>(j)];
      if (p.target != q.source) continue;
      auto& slot = (*table)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (p.trivial()) slot = Element<S>::basis(j);
      else if (q.trivial()) slot = Element<S>::basis(i);
      else if (static_cast<int>(p.length() + q.length()) < A.certificate_) slot = A.normal_form(*path_compose(spec, p, q));
    }
  A.table_ = table;

  std::vector<BasisElement> basis;
  for (const Path& p : A.basis_)
    basis.push_back(BasisElement{p.source, p.target, static_cast<int>(p.length()), p.arrows});
  std::vector<Generator<S>> gens;
  for (int a = 0; a < spec.arrow_count(); ++a) {
    const Arrow& arr = spec.arrows()[static_cast<std::size_t>(a)];
    gens.push_back(Generator<S>{arr.source, arr.target, A.normal_form(Path{arr.source, arr.target, {a}})});
  }
  auto product = [table](int i, int j) { return (*table)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  A.algebra_ = std::make_shared<FiniteAlgebra<S>>(spec.vertex_count(), std::move(basis), A.idempotents_, std::move(gens),
                                                  product, spec.vertices());
  return A;
}

template <class S>
std::vector<int> oracle_graded_dimensions(const QuiverSpec& spec, int length_cap) {
  std::vector<int> dims{spec.vertex_count()};
  // paths[d] = all paths of length d (d >= 1), as arrow words.
  std::vector<std::vector<Word>> paths(1);
  for (int v = 0; v < spec.vertex_count(); ++v) paths[0].push_back({});
  auto source_of = [&](const Word& w, int fallback) {
    return w.empty() ? fallback : spec.arrows()[static_cast<std::size_t>(w.front())].source;
  };
  auto target_of = [&](const Word& w, int fallback) {
    return w.empty() ? fallback : spec.arrows()[static_cast<std::size_t>(w.back())].target;
  };
  for (int d = 1;; ++d) {
    std::vector<Word> level;
    if (d == 1) {
      for (int a = 0; a < spec.arrow_count(); ++a) level.push_back({a});
    } else {
      for (const Word& w : paths.back())
        for (int a : spec.out_arrows(target_of(w, 0))) level.push_back(concat(w, {a}));
    }
    std::map<Word, int> index;
    for (std::size_t k = 0; k < level.size(); ++k) index.emplace(level[k], static_cast<int>(k));

    SparseEchelon<S> ideal;
    for (const auto& r : spec.relations()) {
      const int L = static_cast<int>(r.length());
      if (L > d) continue;
      const Path rp = spec.relation_path(r.terms.front());
      for (int a = 0; a <= d - L; ++a) {
        const int b = d - L - a;
        std::vector<Word> lefts, rights;
        if (a == 0) lefts.push_back({});
        else
          for (const Word& u : paths[static_cast<std::size_t>(a)])
            if (target_of(u, 0) == rp.source) lefts.push_back(u);
        if (b == 0) rights.push_back({});
        else
          for (const Word& v : paths[static_cast<std::size_t>(b)])
            if (source_of(v, 0) == rp.target) rights.push_back(v);
        for (const Word& u : lefts)
          for (const Word& v : rights) {
            Element<S> row;
            for (const auto& t : r.terms)
              add_scaled(row, Element<S>::basis(index.at(concat(concat(u, t.arrows), v))),
                         field_traits<S>::from_rational(t.coefficient));
            ideal.insert(std::move(row));
          }
      }
    }
    const int dim = static_cast<int>(level.size()) - ideal.rank();
    if (dim == 0) return dims;
    if (d >= length_cap)
      throw CapExceeded("oracle: " + std::to_string(dim) + " independent paths remain at length " + std::to_string(d));
    dims.push_back(dim);
    paths.push_back(std::move(level));
  }
}

template <class S>
int oracle_dimension(const QuiverSpec& spec, int length_cap) {
  int total = 0;
  for (int d : oracle_graded_dimensions<S>(spec, length_cap)) total += d;
  return total;
}

template <class S>
std::vector<int> radical_filtration_dims(const PresentedAlgebra<S>& a) {
  std::vector<int> out;
  for (const auto& layer : radical_layers(*a.algebra())) out.push_back(static_cast<int>(layer.dim()));
  out.push_back(0);
  return out;
}

#define SKEWGENTLE_INSTANTIATE_ENGINE(S)                                         \
  template class PresentedAlgebra<S>;                                            \
  template PresentedAlgebra<S> realize<S>(const QuiverSpec&, int);               \
  template int oracle_dimension<S>(const QuiverSpec&, int);                      \
  template std::vector<int> oracle_graded_dimensions<S>(const QuiverSpec&, int); \
  template std::vector<int> radical_filtration_dims<S>(const PresentedAlgebra<S>&);

SKEWGENTLE_INSTANTIATE_ENGINE(Rational)
SKEWGENTLE_INSTANTIATE_ENGINE(F2)
SKEWGENTLE_INSTANTIATE_ENGINE(F3)
SKEWGENTLE_INSTANTIATE_ENGINE(F5)
SKEWGENTLE_INSTANTIATE_ENGINE(F7)

}  // namespace skewgentle
