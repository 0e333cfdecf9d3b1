#include "skewgentle/dsl.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace skewgentle {
namespace {

enum class Tok { ident, semicolon, colon, arrow, star, slash, plus, minus, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cl = col;
    if (ident_char(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      out.push_back({Tok::ident, std::string(text.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::arrow, "->", l, cl});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case ';': kind = Tok::semicolon; break;
      case ':': kind = Tok::colon; break;
      case '*': kind = Tok::star; break;
      case '/': kind = Tok::slash; break;
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      default:
        throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  QuiverSpec run() {
    if (peek().kind == Tok::end) throw ParseError(peek().line, peek().column, "empty document");
    while (peek().kind != Tok::end) statement();
    return std::move(spec_);
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.column, msg); }

  const Token& expect(Tok kind, const char* what) {
    const Token& t = peek();
    if (t.kind != kind) fail(t, std::string("expected ") + what + (t.kind == Tok::end ? " before end of input" : ", found '" + t.text + "'"));
    return take();
  }

  template <class F>
  void semantic(const Token& at, F&& f) {
    try {
      f();
    } catch (const SpecError& e) {
      fail(at, e.what());
    }
  }

  void statement() {
    const Token& kw = expect(Tok::ident, "statement keyword");
    if (kw.text == "vertices") {
      if (peek().kind != Tok::ident) fail(peek(), "expected vertex name");
      while (peek().kind == Tok::ident) {
        const Token& t = take();
        semantic(t, [&] { spec_.add_vertex(t.text); });
      }
    } else if (kw.text == "arrow") {
      const Token& name = expect(Tok::ident, "arrow name");
      if (all_digits(name.text)) fail(name, "arrow name '" + name.text + "' must not be purely numeric");
      expect(Tok::colon, "':'");
      const Token& src = expect(Tok::ident, "source vertex");
      expect(Tok::arrow, "'->'");
      const Token& tgt = expect(Tok::ident, "target vertex");
      semantic(name, [&] { spec_.add_arrow(name.text, src.text, tgt.text); });
    } else if (kw.text == "rel") {
      relation(kw);
    } else if (kw.text == "special") {
      if (peek().kind != Tok::ident) fail(peek(), "expected vertex name");
      while (peek().kind == Tok::ident) {
        const Token& t = take();
        semantic(t, [&] { spec_.mark_special(t.text); });
      }
    } else {
      fail(kw, "unknown statement '" + kw.text + "'");
    }
    expect(Tok::semicolon, "';'");
  }

  void relation(const Token& kw) {
    Relation rel;
    bool negative = false;
    if (peek().kind == Tok::minus) {
      take();
      negative = true;
    }
    for (;;) {
      RelationTerm term;
      term.coefficient = Rational(negative ? -1 : 1);
      if (peek().kind == Tok::ident && all_digits(peek().text)) {
        const Token& num = take();
        std::string lit = num.text;
        if (peek().kind == Tok::slash) {
          take();
          const Token& den = expect(Tok::ident, "denominator");
          if (!all_digits(den.text)) fail(den, "denominator must be an integer");
          lit += "/" + den.text;
        }
        Rational c;
        try {
          c = Rational::parse(lit);
        } catch (const std::exception& e) {
          fail(num, e.what());
        }
        if (c.is_zero()) fail(num, "zero coefficient");
        term.coefficient *= c;
        expect(Tok::star, "'*' after coefficient");
      }
      for (;;) {
        const Token& name = expect(Tok::ident, "arrow name");
        auto a = spec_.find_arrow(name.text);
        if (!a) fail(name, "unknown arrow '" + name.text + "'");
        term.arrows.push_back(*a);
        if (peek().kind != Tok::star) break;
        take();
      }
      rel.terms.push_back(std::move(term));
      if (peek().kind == Tok::plus) {
        take();
        negative = false;
      } else if (peek().kind == Tok::minus) {
        take();
        negative = true;
      } else {
        break;
      }
    }
    semantic(kw, [&] { spec_.add_relation(std::move(rel)); });
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  QuiverSpec spec_;
};

std::string term_body(const QuiverSpec& spec, const RelationTerm& term, bool show_unit) {
  std::string s;
  const Rational mag = term.coefficient.sign() < 0 ? -term.coefficient : term.coefficient;
  if (show_unit || !mag.is_one()) s += mag.to_string() + "*";
  for (std::size_t i = 0; i < term.arrows.size(); ++i) {
    if (i) s += '*';
    s += spec.arrow_name(term.arrows[i]);
  }
  return s;
}

}  // namespace

QuiverSpec parse_quiver(std::string_view text) { return Parser(tokenize(text)).run(); }

std::string serialize_quiver(const QuiverSpec& spec) {
  std::ostringstream os;
  os << "vertices";
  for (const auto& v : spec.vertices()) os << ' ' << v;
  os << ";\n";
  for (const auto& a : spec.arrows())
    os << "arrow " << a.name << ": " << spec.vertex_name(a.source) << "->" << spec.vertex_name(a.target) << ";\n";
  for (const auto& rel : spec.relations()) {
    os << "rel ";
    for (std::size_t i = 0; i < rel.terms.size(); ++i) {
      const auto& term = rel.terms[i];
      const bool neg = term.coefficient.sign() < 0;
      if (i == 0) {
        if (neg) os << '-';
      } else {
        os << (neg ? " - " : " + ");
      }
      os << term_body(spec, term, false);
    }
    os << ";\n";
  }
  if (!spec.special().empty()) {
    os << "special";
    for (int v : spec.special()) os << ' ' << spec.vertex_name(v);
    os << ";\n";
  }
  return os.str();
}

QuiverSpec read_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quiver(buf.str());
}

}  // namespace skewgentle
