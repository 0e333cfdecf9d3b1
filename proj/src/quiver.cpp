#include "skewgentle/quiver.hpp"

#include <algorithm>

namespace skewgentle {

bool deglex_less(const Path& a, const Path& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows != b.arrows) return a.arrows < b.arrows;
  return a.source < b.source;
}

int QuiverSpec::add_vertex(std::string name) {
  if (name.empty()) throw SpecError("empty vertex name");
  if (vertex_index_.count(name)) throw SpecError("duplicate vertex '" + name + "'");
  const int idx = vertex_count();
  vertex_index_.emplace(name, idx);
  vertices_.push_back(std::move(name));
  return idx;
}

int QuiverSpec::add_arrow(std::string name, std::string_view source, std::string_view target) {
  auto s = find_vertex(source);
  if (!s) throw SpecError("arrow '" + name + "' has undeclared source vertex '" + std::string(source) + "'");
  auto t = find_vertex(target);
  if (!t) throw SpecError("arrow '" + name + "' has undeclared target vertex '" + std::string(target) + "'");
  return add_arrow(std::move(name), *s, *t);
}

int QuiverSpec::add_arrow(std::string name, int source, int target) {
  if (name.empty()) throw SpecError("empty arrow name");
  if (arrow_index_.count(name)) throw SpecError("duplicate arrow '" + name + "'");
  if (source < 0 || source >= vertex_count() || target < 0 || target >= vertex_count())
    throw SpecError("arrow '" + name + "' has a dangling endpoint");
  const int idx = arrow_count();
  arrow_index_.emplace(name, idx);
  arrows_.push_back(Arrow{std::move(name), source, target});
  return idx;
}

Path QuiverSpec::relation_path(const RelationTerm& term) const {
  if (term.arrows.empty()) throw SpecError("relation term with empty path");
  for (int a : term.arrows)
    if (a < 0 || a >= arrow_count()) throw SpecError("relation references an undeclared arrow");
  Path p{arrows_[static_cast<std::size_t>(term.arrows.front())].source,
         arrows_[static_cast<std::size_t>(term.arrows.back())].target, term.arrows};
  for (std::size_t i = 0; i + 1 < term.arrows.size(); ++i) {
    const Arrow& x = arrows_[static_cast<std::size_t>(term.arrows[i])];
    const Arrow& y = arrows_[static_cast<std::size_t>(term.arrows[i + 1])];
    if (x.target != y.source)
      throw SpecError("non-composable relation path: target(" + x.name + ")=" + vertex_name(x.target) +
                      " but source(" + y.name + ")=" + vertex_name(y.source));
  }
  return p;
}

void QuiverSpec::add_relation(Relation rel) {
  if (rel.terms.empty()) throw SpecError("empty relation");
  std::optional<Path> first;
  for (const auto& term : rel.terms) {
    if (term.coefficient.is_zero()) throw SpecError("relation term with zero coefficient");
    Path p = relation_path(term);
    if (!first) {
      first = p;
      continue;
    }
    if (p.source != first->source || p.target != first->target)
      throw SpecError("relation terms do not share source and target");
    if (p.length() != first->length()) throw SpecError("mixed-length relation");
  }
  relations_.push_back(std::move(rel));
}

void QuiverSpec::mark_special(std::string_view vertex) {
  auto v = find_vertex(vertex);
  if (!v) throw SpecError("special mark on undeclared vertex '" + std::string(vertex) + "'");
  mark_special(*v);
}

void QuiverSpec::mark_special(int vertex) {
  if (vertex < 0 || vertex >= vertex_count()) throw SpecError("special mark on undeclared vertex");
  if (is_special(vertex)) throw SpecError("vertex '" + vertex_name(vertex) + "' marked special twice");
  special_.push_back(vertex);
}

std::optional<int> QuiverSpec::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> QuiverSpec::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

int QuiverSpec::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw SpecError("unknown vertex '" + std::string(name) + "'");
  return *v;
}

int QuiverSpec::arrow(std::string_view name) const {
  auto a = find_arrow(name);
  if (!a) throw SpecError("unknown arrow '" + std::string(name) + "'");
  return *a;
}

bool QuiverSpec::is_special(int v) const {
  return std::find(special_.begin(), special_.end(), v) != special_.end();
}

std::vector<int> QuiverSpec::out_arrows(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[static_cast<std::size_t>(a)].source == v) out.push_back(a);
  return out;
}

std::vector<int> QuiverSpec::in_arrows(int v) const {
  std::vector<int> out;
  for (int a = 0; a < arrow_count(); ++a)
    if (arrows_[static_cast<std::size_t>(a)].target == v) out.push_back(a);
  return out;
}

Path QuiverSpec::path(const std::vector<std::string>& arrow_names) const {
  if (arrow_names.empty()) throw SpecError("empty arrow sequence; use trivial_path");
  RelationTerm t;
  for (const auto& n : arrow_names) t.arrows.push_back(arrow(n));
  return relation_path(t);
}

QuiverSpec QuiverSpec::underlying_quiver() const {
  QuiverSpec q;
  for (const auto& v : vertices_) q.add_vertex(v);
  for (const auto& a : arrows_) q.add_arrow(a.name, a.source, a.target);
  return q;
}

QuiverSpec QuiverSpec::with_relations(const std::vector<Relation>& rels) const {
  QuiverSpec q = underlying_quiver();
  for (const auto& r : rels) q.add_relation(r);
  for (int v : special_) q.mark_special(v);
  return q;
}

Relation monomial_relation(const QuiverSpec& q, std::string_view first, std::string_view second) {
  return Relation{{RelationTerm{Rational(1), {q.arrow(first), q.arrow(second)}}}};
}

std::optional<Path> path_compose(const QuiverSpec& q, const Path& p, const Path& r) {
  (void)q;
  if (p.target != r.source) return std::nullopt;
  Path out{p.source, r.target, p.arrows};
  out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
  return out;
}

std::string path_to_string(const QuiverSpec& q, const Path& p) {
  if (p.trivial()) return "e_" + q.vertex_name(p.source);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrow_name(p.arrows[i]);
  }
  return s;
}

}  // namespace skewgentle
