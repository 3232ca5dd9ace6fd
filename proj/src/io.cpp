#include "qdisc/io.hpp"

#include <cctype>
#include <optional>

namespace qdisc {

namespace {

struct Token {
  enum Kind { Int, Ident, Op, End } kind = End;
  std::string text;
  size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    cur_ = Token{Token::End, "", pos_};
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      cur_ = Token{Token::Int, std::string(src_.substr(start, pos_ - start)), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string text(src_.substr(start, pos_ - start));
      if (text == "z" && pos_ < src_.size() && src_[pos_] == '\'') {
        ++pos_;
        text = "z'";
      }
      cur_ = Token{Token::Ident, std::move(text), start};
      return;
    }
    if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      cur_ = Token{Token::Op, std::string(1, c), pos_};
      ++pos_;
      return;
    }
    throw UnknownToken(std::string(1, c), pos_);
  }

  std::string_view src_;
  size_t pos_ = 0;
  Token cur_;
};

// Exponent in half units of log_s: q^(n/2) -> n, plain m -> 2m.
struct Exponent {
  long half = 0;
  bool is_half = false;
};

Exponent parse_exponent(Lexer& lex) {
  Exponent e;
  Token t = lex.next();
  if (t.kind == Token::Int) {
    e.half = 2 * std::stol(t.text);
    return e;
  }
  if (t.kind == Token::Op && t.text == "(") {
    long sign = 1;
    Token u = lex.next();
    if (u.kind == Token::Op && u.text == "-") {
      sign = -1;
      u = lex.next();
    }
    if (u.kind != Token::Int) throw SyntaxError("expected integer exponent", u.offset);
    long n = std::stol(u.text);
    Token v = lex.next();
    if (v.kind == Token::Op && v.text == "/") {
      Token w = lex.next();
      if (w.kind != Token::Int || w.text != "2")
        throw SyntaxError("only half powers are supported", w.offset);
      e.half = sign * n;
      e.is_half = true;
      v = lex.next();
    } else {
      e.half = 2 * sign * n;
    }
    if (!(v.kind == Token::Op && v.text == ")"))
      throw SyntaxError("expected ')'", v.offset);
    return e;
  }
  throw SyntaxError("expected exponent", t.offset);
}

// --- Fun(U)_q parser --------------------------------------------------------

struct FunPolicy {
  using Value = FunElement;
  static constexpr const char* kind_name = "fun";

  ExactRing ring;

  Value from_scalar(const ExactScalar& c) const { return fun_of_pol(pol_monomial(ring, 0, 0, c)); }

  std::optional<Value> atom(const Token& t) const {
    if (t.text == "z") return fun_of_pol(pol_z(ring));
    if (t.text == "z'") return fun_of_pol(pol_zstar(ring));
    if (t.text == "f0") return fun_f0(ring);
    if (t.text == "y") return fun_of_pol(y_expand(ring, 1));
    if (t.text == "K" || t.text == "Kinv" || t.text == "E" || t.text == "F" ||
        t.text == "Omega")
      throw MixedKind(t.text, kind_name);
    return std::nullopt;
  }

  Value add(const Value& a, const Value& b) const { return fun_add(ring, a, b); }
  Value sub(const Value& a, const Value& b) const { return fun_sub(ring, a, b); }
  Value neg(const Value& a) const { return fun_scale(ring, a, ring.from_int(-1)); }
  Value mul(const Value& a, const Value& b) const { return fun_mul(ring, a, b); }
  Value one() const { return fun_of_pol(pol_one(ring)); }

  std::optional<ExactScalar> as_scalar(const Value& v) const {
    if (!v.fin.is_zero()) return std::nullopt;
    if (v.pol.is_zero()) return ExactScalar();
    if (v.pol.terms.size() != 1) return std::nullopt;
    const auto& [jk, c] = *v.pol.terms.begin();
    if (jk.first != 0 || jk.second != 0) return std::nullopt;
    return c;
  }
};

struct UqPolicy {
  using Value = UqElement;
  static constexpr const char* kind_name = "uq";

  ExactRing ring;

  Value from_scalar(const ExactScalar& c) const { return uq_monomial({0, 0, 0}, c); }

  std::optional<Value> atom(const Token& t) const {
    if (t.text == "K") return uq_gen_K(1);
    if (t.text == "Kinv") return uq_gen_K(-1);
    if (t.text == "E") return uq_gen_E();
    if (t.text == "F") return uq_gen_F();
    if (t.text == "Omega") return casimir();
    if (t.text == "z" || t.text == "z'" || t.text == "f0" || t.text == "y")
      throw MixedKind(t.text, kind_name);
    return std::nullopt;
  }

  Value add(const Value& a, const Value& b) const { return uq_add(a, b); }
  Value sub(const Value& a, const Value& b) const { return uq_sub(a, b); }
  Value neg(const Value& a) const { return uq_scale(a, -ExactScalar::one()); }
  Value mul(const Value& a, const Value& b) const { return uq_mul(a, b); }
  Value one() const { return uq_one(); }

  std::optional<ExactScalar> as_scalar(const Value& v) const {
    if (v.terms.empty()) return ExactScalar();
    if (v.terms.size() != 1) return std::nullopt;
    const auto& [m, c] = *v.terms.begin();
    if (m != UqMonomial{0, 0, 0}) return std::nullopt;
    return c;
  }
};

template <class Policy>
class Parser {
 public:
  using Value = typename Policy::Value;

  explicit Parser(std::string_view src) : lex_(src) {}

  Value parse() {
    Value v = expr();
    const Token& t = lex_.peek();
    if (t.kind != Token::End) throw SyntaxError("unexpected trailing input", t.offset);
    return v;
  }

 private:
  Value expr() {
    Value v = term();
    while (lex_.peek().kind == Token::Op &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      Token op = lex_.next();
      Value rhs = term();
      v = op.text == "+" ? pol_.add(v, rhs) : pol_.sub(v, rhs);
    }
    return v;
  }

  Value term() {
    Value v = factor();
    while (lex_.peek().kind == Token::Op &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      Token op = lex_.next();
      Value rhs = factor();
      if (op.text == "*") {
        v = pol_.mul(v, rhs);
      } else {
        auto c = pol_.as_scalar(rhs);
        if (!c) throw SyntaxError("division only by scalars", op.offset);
        if (c->is_zero()) throw DivisionByZero();
        v = pol_.mul(v, pol_.from_scalar(c->inverse()));
      }
    }
    return v;
  }

  Value factor() {
    if (lex_.peek().kind == Token::Op && lex_.peek().text == "-") {
      lex_.next();
      return pol_.neg(factor());
    }
    return power();
  }

  Value power() {
    Token t = lex_.next();
    Value base;
    bool base_is_q = false;
    bool base_is_K = false;
    if (t.kind == Token::Op && t.text == "(") {
      base = expr();
      Token close = lex_.next();
      if (!(close.kind == Token::Op && close.text == ")"))
        throw SyntaxError("expected ')'", close.offset);
    } else if (t.kind == Token::Int) {
      base = pol_.from_scalar(ExactScalar::integer(mpz_class(t.text)));
    } else if (t.kind == Token::Ident) {
      if (t.text == "q") {
        base = pol_.from_scalar(ExactScalar::spow(2));
        base_is_q = true;
      } else {
        auto v = pol_.atom(t);
        if (!v) throw UnknownToken(t.text, t.offset);
        base = *v;
        base_is_K = t.text == "K" || t.text == "Kinv";
      }
    } else {
      throw SyntaxError("expected an atom", t.offset);
    }

    if (!(lex_.peek().kind == Token::Op && lex_.peek().text == "^")) return base;
    Token caret = lex_.next();
    Exponent e = parse_exponent(lex_);
    if (base_is_q) return pol_.from_scalar(ExactScalar::spow(static_cast<int>(e.half)));
    if (e.is_half) throw SyntaxError("half powers only apply to q", caret.offset);
    long n = e.half / 2;
    if (n >= 0) {
      Value v = pol_.one();
      for (long i = 0; i < n; ++i) v = pol_.mul(v, base);
      return v;
    }
    if (base_is_K) {
      // K^(-n) and Kinv^(-n) are group-like; flip the generator.
      Value v = pol_.one();
      for (long i = 0; i < -n; ++i) v = pol_.mul(v, inverted_K(base));
      return v;
    }
    auto c = pol_.as_scalar(base);
    if (!c) throw SyntaxError("negative power of a non-invertible element", caret.offset);
    if (c->is_zero()) throw DivisionByZero();
    return pol_.from_scalar(c->pow(n));
  }

  static UqElement inverted_K(const UqElement& x) {
    return uq_gen_K(-x.terms.begin()->first.b);
  }
  static FunElement inverted_K(const FunElement& x) { return x; }  // unreachable

  Lexer lex_;
  Policy pol_;
};

// --- printers ----------------------------------------------------------------

// True when the canonical scalar string has a top-level '+' or interior '-',
// i.e. needs parentheses as a product factor.
bool scalar_needs_parens(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && i > 0 && (c == '+' || c == '-')) return true;
  }
  return false;
}

// Renders c * mono with the usual cosmetics; mono may be empty.
std::string render_term(const ExactScalar& c, const std::string& mono) {
  std::string cs = c.str();
  if (mono.empty()) return scalar_needs_parens(cs) ? "(" + cs + ")" : cs;
  if (c.is_one()) return mono;
  if ((-c).is_one()) return "-" + mono;
  if (scalar_needs_parens(cs)) cs = "(" + cs + ")";
  return cs + "*" + mono;
}

void append_term(std::string& out, const std::string& term) {
  if (out.empty()) {
    out = term;
    return;
  }
  if (!term.empty() && term[0] == '-')
    out += " - " + term.substr(1);
  else
    out += " + " + term;
}

std::string power_str(const std::string& gen, int n) {
  if (n == 0) return "";
  if (n == 1) return gen;
  return gen + "^" + std::to_string(n);
}

std::string join_factors(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

}  // namespace

FunElement parse_fun(std::string_view src) { return Parser<FunPolicy>(src).parse(); }
UqElement parse_uq(std::string_view src) { return Parser<UqPolicy>(src).parse(); }

std::string fun_str(const FunElement& f) {
  std::string out;
  for (auto it = f.pol.terms.rbegin(); it != f.pol.terms.rend(); ++it) {
    const auto& [jk, c] = *it;
    std::string mono = join_factors({power_str("z", jk.first), power_str("z'", jk.second)});
    append_term(out, render_term(c, mono));
  }
  for (auto it = f.fin.terms.rbegin(); it != f.fin.terms.rend(); ++it) {
    const auto& [jk, c] = *it;
    std::string mono =
        join_factors({power_str("z", jk.first), "f0", power_str("z'", jk.second)});
    append_term(out, render_term(c, mono));
  }
  return out.empty() ? "0" : out;
}

std::string uq_str(const UqElement& x) {
  std::string out;
  for (auto it = x.terms.rbegin(); it != x.terms.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono = join_factors({power_str("F", m.a),
                                     m.b >= 0 ? power_str("K", m.b) : power_str("Kinv", -m.b),
                                     power_str("E", m.c)});
    append_term(out, render_term(c, mono));
  }
  return out.empty() ? "0" : out;
}

nlohmann::json fun_to_json(const FunElement& f) {
  nlohmann::json pol = nlohmann::json::array();
  for (const auto& [jk, c] : f.pol.terms)
    pol.push_back({{"j", jk.first}, {"k", jk.second}, {"c", c.str()}});
  nlohmann::json fin = nlohmann::json::array();
  for (const auto& [jk, c] : f.fin.terms)
    fin.push_back({{"j", jk.first}, {"k", jk.second}, {"c", c.str()}});
  return {{"pol", pol}, {"fin", fin}};
}

FunElement fun_from_json(const nlohmann::json& j) {
  ExactRing ring;
  FunElement f;
  for (const auto& t : j.value("pol", nlohmann::json::array()))
    pol_add_term(ring, f.pol, t.at("j").get<int>(), t.at("k").get<int>(),
                 ExactScalar::parse(t.at("c").get<std::string>()));
  for (const auto& t : j.value("fin", nlohmann::json::array()))
    fin_add_term(ring, f.fin, t.at("j").get<int>(), t.at("k").get<int>(),
                 ExactScalar::parse(t.at("c").get<std::string>()));
  return f;
}

nlohmann::json uq_to_json(const UqElement& x) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : x.terms)
    out.push_back({{"a", m.a}, {"b", m.b}, {"c", m.c}, {"coef", c.str()}});
  return out;
}

UqElement uq_from_json(const nlohmann::json& j) {
  UqElement x;
  for (const auto& t : j)
    uq_add_term(x, {t.at("a").get<int>(), t.at("b").get<int>(), t.at("c").get<int>()},
                ExactScalar::parse(t.at("coef").get<std::string>()));
  return x;
}

nlohmann::json radial_to_json(const RadialX& f) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : f.values) values.push_back(v.str());
  return {{"parity", f.parity}, {"values", values}};
}

nlohmann::json radial_to_json(const RadialD& f) {
  return {{"parity", f.parity}, {"values", f.values}};
}

RadialX radial_exact_from_json(const nlohmann::json& j) {
  RadialX f;
  f.parity = j.value("parity", 0);
  for (const auto& v : j.at("values")) {
    if (v.is_string())
      f.values.push_back(ExactScalar::parse(v.get<std::string>()));
    else
      f.values.push_back(ExactScalar::from_int(v.get<long>()));
  }
  return f;
}

RadialD radial_numeric_from_json(const nlohmann::json& j, const NumericContext& ctx) {
  RadialD f;
  f.parity = j.value("parity", 0);
  for (const auto& v : j.at("values")) {
    if (v.is_string())
      f.values.push_back(ExactScalar::parse(v.get<std::string>()).eval(ctx));
    else
      f.values.push_back(v.get<double>());
  }
  return f;
}

nlohmann::json matrix_to_json(const MatrixModel& m, const NumericContext* ctx) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [rc, c] : m.entries) {
    nlohmann::json e = {{"row", rc.first}, {"col", rc.second}, {"c", c.str()}};
    if (ctx) e["value"] = c.eval(*ctx);
    entries.push_back(e);
  }
  return {{"cutoff", m.cutoff}, {"truncated", m.truncated}, {"entries", entries}};
}

nlohmann::json spectrum_to_json(const SpectrumResult& r, double q, int n) {
  return {{"q", q},           {"N", n},      {"eigs", r.eigenvalues},
          {"weights", r.weights}, {"c1", r.c1}, {"c2", r.c2}};
}

}  // namespace qdisc
