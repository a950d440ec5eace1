#include "mppa/presentation.hpp"

#include "mppa/error.hpp"
#include "mppa/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace mppa {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return s != "id" && s != "inv";
}

std::vector<std::string> split_star(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '*') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Algebra::Algebra(Presentation p, RewriteOptions opts) : pres_(std::move(p)), opts_(opts) {
  std::set<std::string> names;
  for (const auto& v : pres_.vertices)
    if (!names.insert("vertex:" + v).second) throw ValidationError("duplicate id: vertex '" + v + "'");
  std::set<std::string> symbols;
  for (const auto& g : pres_.generators) {
    if (!valid_identifier(g.name)) throw ValidationError("invalid generator name '" + g.name + "'");
    if (!symbols.insert(g.name).second) throw ValidationError("duplicate id: generator '" + g.name + "'");
    int s = vertex_index(g.src), t = vertex_index(g.tgt);
    if (s < 0 || t < 0) throw ValidationError("dangling endpoint: generator '" + g.name + "'");
    gen_src_.push_back(s);
    gen_tgt_.push_back(t);
  }
  for (const auto& m : pres_.macros) {
    if (!valid_identifier(m.name)) throw ValidationError("invalid macro name '" + m.name + "'");
    if (!symbols.insert(m.name).second) throw ValidationError("duplicate id: macro '" + m.name + "'");
  }

  rules_by_first_.assign(pres_.generators.size(), {});
  for (const auto& rs : pres_.rules) {
    std::vector<int> letters;
    for (const auto& nm : split_star(rs.lhs)) {
      int g = generator_index(nm);
      if (g < 0) throw ValidationError("rule '" + rs.lhs + "' uses unknown generator '" + nm + "'");
      letters.push_back(g);
    }
    Rule r;
    r.lhs = make_word(letters);
    r.rhs_expr = parse_expr(rs.rhs);
    r.rhs = eval_impl(*r.rhs_expr, false);
    r.text = rs.lhs + " -> " + rs.rhs;
    for (const auto& [w, c] : r.rhs.terms) {
      if (w.src != r.lhs.src || w.tgt != r.lhs.tgt)
        throw ValidationError("rule '" + r.text + "' does not preserve endpoints");
      if (degree(w) != degree(r.lhs)) throw ValidationError("rule '" + r.text + "' does not preserve degree");
    }
    rules_.push_back(std::move(r));
  }
  for (int i = 0; i < static_cast<int>(rules_.size()); ++i)
    rules_by_first_[rules_[i].lhs.letters.front()].push_back(i);
  for (auto& list : rules_by_first_)
    std::stable_sort(list.begin(), list.end(),
                     [&](int a, int b) { return rules_[a].lhs.size() < rules_[b].lhs.size(); });

  for (int g = 0; g < num_generators(); ++g) {
    const auto& gen = pres_.generators[g];
    recipe_exprs_.push_back(gen.recipe == RecipeKind::Free ? nullptr : parse_expr(gen.recipe_expr));
  }
  for (int g = 0; g < num_generators(); ++g) {
    if (pres_.generators[g].recipe != RecipeKind::InverseOf) continue;
    Element a = eval(*recipe_exprs_[g]);
    Element b = nf(gen(g));
    inverse_table_.emplace_back(a, b);
    inverse_table_.emplace_back(b, a);
  }
  for (int m = 0; m < num_macros(); ++m) {
    macro_exprs_.push_back(parse_expr(pres_.macros[m].expr));
    macro_values_.push_back(eval(*macro_exprs_.back()));
  }
  for (const auto& inv : pres_.invertibles) {
    Element a = parse(inv.expr), b = parse(inv.inverse);
    inverse_table_.emplace_back(a, b);
    inverse_table_.emplace_back(b, a);
  }

  certified_ = true;
  for (const auto& cp : critical_pairs(opts_.certify_depth))
    if (!cp.joinable) certified_ = false;
}

AlgebraPtr make_algebra(Presentation p, RewriteOptions opts) {
  return std::make_shared<const Algebra>(std::move(p), opts);
}

int Algebra::vertex_index(const std::string& v) const {
  auto it = std::find(pres_.vertices.begin(), pres_.vertices.end(), v);
  return it == pres_.vertices.end() ? -1 : static_cast<int>(it - pres_.vertices.begin());
}

int Algebra::generator_index(const std::string& g) const {
  for (int i = 0; i < num_generators(); ++i)
    if (pres_.generators[i].name == g) return i;
  return -1;
}

int Algebra::macro_index(const std::string& m) const {
  for (int i = 0; i < static_cast<int>(pres_.macros.size()); ++i)
    if (pres_.macros[i].name == m) return i;
  return -1;
}

int Algebra::degree(const Word& w) const {
  int d = 0;
  for (int g : w.letters) d += pres_.generators[g].degree;
  return d;
}

std::optional<Word> Algebra::concat(const Word& a, const Word& b) const {
  if (a.src != b.tgt) return std::nullopt;
  Word w{a.tgt, b.src, a.letters};
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return w;
}

Word Algebra::make_word(const std::vector<int>& letters) const {
  if (letters.empty()) throw Error("make_word needs at least one letter");
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    if (gen_src_[letters[i]] != gen_tgt_[letters[i + 1]])
      throw ValidationError("letters '" + pres_.generators[letters[i]].name + "' and '" +
                            pres_.generators[letters[i + 1]].name + "' are not composable");
  return Word{gen_tgt_[letters.front()], gen_src_[letters.back()], letters};
}

Element Algebra::idempotent(int v) const { return Element(idempotent_word(v)); }

Element Algebra::one() const {
  Element e;
  for (int v = 0; v < num_vertices(); ++v) e.add(idempotent_word(v), 1);
  return e;
}

Element Algebra::scalar(const Rational& c) const { return c * one(); }

Element Algebra::gen(int g) const { return Element(Word{gen_tgt_[g], gen_src_[g], {g}}); }

Element Algebra::gen(const std::string& name) const {
  int g = generator_index(name);
  if (g < 0) throw Error("unknown generator '" + name + "'");
  return gen(g);
}

Element Algebra::mul_free(const Element& a, const Element& b) const {
  Element r;
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms)
      if (auto w = concat(wa, wb)) r.add(*w, ca * cb);
  return r;
}

Element Algebra::mul(const Element& a, const Element& b) const { return nf(mul_free(a, b)); }

Element Algebra::block(const Element& a, int tgt, int src) const {
  Element r;
  for (const auto& [w, c] : a.terms)
    if (w.tgt == tgt && w.src == src) r.add(w, c);
  return r;
}

std::optional<Element> Algebra::inverse(const Element& a) const {
  if (a.is_zero()) return std::nullopt;
  bool scalar_like = true;
  const Rational c0 = a.terms.begin()->second;
  for (const auto& [w, c] : a.terms)
    if (!w.is_idempotent() || c != c0) scalar_like = false;
  if (scalar_like) return Rational(1 / (c0 * c0)) * a;
  for (const auto& [x, xinv] : inverse_table_) {
    const auto& [w0, cx] = *x.terms.begin();
    auto it = a.terms.find(w0);
    if (it == a.terms.end()) continue;
    Rational c = it->second / cx;
    if (a == c * x) return Rational(1 / c) * xinv;
  }
  return std::nullopt;
}

Element Algebra::eval(const Expr& e) const { return eval_impl(e, true); }

Element Algebra::eval_impl(const Expr& e, bool normalize) const {
  switch (e.kind) {
    case Expr::Kind::Scalar:
      return scalar(e.scalar);
    case Expr::Kind::Idempotent:
      return idempotent(e.index);
    case Expr::Kind::Generator:
      return normalize ? nf(gen(e.index)) : gen(e.index);
    case Expr::Kind::Macro:
      if (!normalize || e.index >= static_cast<int>(macro_values_.size()))
        throw Error("macro '" + pres_.macros.at(e.index).name + "' is not available here");
      return macro_values_[e.index];
    case Expr::Kind::Sum: {
      Element r;
      for (std::size_t i = 0; i < e.args.size(); ++i) r += e.coeffs[i] * eval_impl(*e.args[i], normalize);
      return r;
    }
    case Expr::Kind::Product: {
      Element r = eval_impl(*e.args.front(), normalize);
      for (std::size_t i = 1; i < e.args.size(); ++i) {
        Element f = eval_impl(*e.args[i], normalize);
        r = normalize ? mul(r, f) : mul_free(r, f);
      }
      return r;
    }
    case Expr::Kind::Inverse: {
      if (!normalize) throw Error("inv() is not available in rule right-hand sides");
      Element a = eval_impl(*e.args.front(), true);
      auto inv = inverse(a);
      if (!inv) throw Error("no registered inverse for '" + print(a) + "'");
      return *inv;
    }
    case Expr::Kind::Apply: {
      const Morphism& m = *e.morphism;
      if (&m.target() != this) throw Error("morphism '" + m.name() + "' does not land in " + name());
      return m.apply(m.source().eval(*e.args.front()));
    }
  }
  throw Error("unreachable expression kind");
}

std::string Algebra::print_word(const Word& w) const {
  if (w.is_idempotent()) return "id(" + pres_.vertices[w.tgt] + ")";
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += "*";
    s += pres_.generators[w.letters[i]].name;
  }
  return s;
}

std::string Algebra::print(const Element& a) const {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : a.terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += to_string(mag) + "*";
    s += print_word(w);
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------- parser

namespace {

struct Token {
  enum Kind { Ident, Number, Sym, End } kind;
  std::string text;
};

class Parser {
 public:
  Parser(const Algebra& alg, const std::string& src) : alg_(alg), src_(src) { tokenize(); }

  ExprPtr run() {
    ExprPtr e = parse_sum();
    if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cannot parse '" + src_ + "': " + msg);
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < src_.size()) {
      char c = src_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_' || src_[j] == '\''))
          ++j;
        toks_.push_back({Token::Ident, src_.substr(i, j - i)});
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        toks_.push_back({Token::Number, src_.substr(i, j - i)});
        i = j;
      } else if (std::string("+-*/()^").find(c) != std::string::npos) {
        toks_.push_back({Token::Sym, std::string(1, c)});
        ++i;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
    }
    toks_.push_back({Token::End, "end of input"});
  }

  const Token& peek() const { return toks_[pos_]; }
  bool accept(const std::string& sym) {
    if (peek().kind == Token::Sym && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(const std::string& sym) {
    if (!accept(sym)) fail("expected '" + sym + "' before '" + peek().text + "'");
  }

  ExprPtr parse_sum() {
    std::vector<std::pair<Rational, ExprPtr>> terms;
    Rational sign = 1;
    if (accept("-"))
      sign = -1;
    else
      accept("+");
    terms.emplace_back(sign, parse_product());
    while (true) {
      if (accept("+"))
        terms.emplace_back(1, parse_product());
      else if (accept("-"))
        terms.emplace_back(-1, parse_product());
      else
        break;
    }
    if (terms.size() == 1 && terms[0].first == 1) return terms[0].second;
    return expr::sum(std::move(terms));
  }

  ExprPtr parse_product() {
    std::vector<ExprPtr> f{parse_power()};
    while (accept("*")) f.push_back(parse_power());
    return expr::product(std::move(f));
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (!accept("^")) return base;
    bool negative = accept("-");
    if (peek().kind != Token::Number) fail("expected an integer exponent");
    long n = std::stol(toks_[pos_++].text);
    if (n == 0) return expr::scalar(1);
    ExprPtr b = negative ? invert(base) : base;
    return expr::product(std::vector<ExprPtr>(static_cast<std::size_t>(n), b));
  }

  static ExprPtr invert(const ExprPtr& a) {
    if (a->kind == Expr::Kind::Product) {
      std::vector<ExprPtr> f;
      for (auto it = a->args.rbegin(); it != a->args.rend(); ++it) f.push_back(invert(*it));
      return expr::product(std::move(f));
    }
    return expr::inverse(a);
  }

  ExprPtr parse_atom() {
    const Token t = peek();
    if (t.kind == Token::Number) {
      ++pos_;
      std::string lit = t.text;
      if (accept("/")) {
        if (peek().kind != Token::Number) fail("expected a denominator");
        lit += "/" + toks_[pos_++].text;
      }
      return expr::scalar(parse_rational(lit));
    }
    if (t.kind == Token::Sym && t.text == "(") {
      ++pos_;
      ExprPtr e = parse_sum();
      expect(")");
      return e;
    }
    if (t.kind != Token::Ident) fail("unexpected '" + t.text + "'");
    ++pos_;
    if (t.text == "id") {
      expect("(");
      const Token v = peek();
      if (v.kind != Token::Ident && v.kind != Token::Number) fail("expected a vertex name");
      ++pos_;
      expect(")");
      int idx = alg_.vertex_index(v.text);
      if (idx < 0) fail("unknown vertex '" + v.text + "'");
      return expr::idempotent(idx);
    }
    if (t.text == "inv") {
      expect("(");
      ExprPtr e = parse_sum();
      expect(")");
      return invert(e);
    }
    if (int g = alg_.generator_index(t.text); g >= 0) return expr::generator(g);
    if (int m = alg_.macro_index(t.text); m >= 0) return expr::macro(m);
    fail("unknown symbol '" + t.text + "'");
  }

  const Algebra& alg_;
  std::string src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr Algebra::parse_expr(const std::string& text) const { return Parser(*this, text).run(); }

}  // namespace mppa
