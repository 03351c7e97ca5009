#include "nqr/parse.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <set>

#include "nqr/error.hpp"

namespace nqr {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  std::pair<int, int> position(std::size_t at) const {
    int line = 1;
    int col = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    auto [line, col] = position(at);
    throw ParseError(what, line, col);
  }
  template <class E>
  [[noreturn]] void fail_as(const std::string& what, std::size_t at) const {
    auto [line, col] = position(at);
    throw E(fmt::format("{}:{}: {}", line, col, what));
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      char p = peek();
      fail(p ? fmt::format("expected '{}' but found '{}'", c, p) : fmt::format("expected '{}' at end of input", c));
    }
  }
  std::size_t pos() {
    skip_ws();
    return pos_;
  }
  bool ident_start() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    if (!ident_start()) fail("expected a name");
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '.' ||
            s_[pos_] == '\''))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  // identifier with an optional trailing '*'
  std::string arrow_name() {
    std::string n = ident();
    if (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      n += '*';
    }
    return n;
  }
  // peeks an identifier without consuming it
  std::string peek_ident() {
    std::size_t save = pos_;
    std::string n = ident_start() ? ident() : std::string();
    pos_ = save;
    return n;
  }
  bool number_start() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  Rational number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (dstart == pos_) fail("expected a denominator");
    }
    try {
      Rational r = Rational::parse(s_.substr(start, pos_ - start));
      return r;
    } catch (const ArithmeticOverflow& e) {
      fail(e.what(), start);
    }
  }
  int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    int v = 0;
    auto [p, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (start == pos_ || ec != std::errc()) fail("expected an integer", start);
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

HbarPoly power(const HbarPoly& b, int e) {
  HbarPoly r(1);
  for (int i = 0; i < e; ++i) r = r * b;
  return r;
}

// ---------------------------------------------------------------- elements

struct Value {
  enum class Kind { Scalar, Necklace, Height } kind = Kind::Scalar;
  HbarPoly scalar;
  NecklaceSum neck;
  HeightSum height;
};

class ElementParser {
 public:
  ElementParser(std::string_view text, const Quiver& q) : c_(text), q_(q) {
    if (!q.is_doubled()) throw QuiverError("expressions are parsed over a doubled quiver");
  }

  Value parse() {
    Value v = expr();
    if (!c_.at_end()) c_.fail(fmt::format("unexpected '{}'", c_.peek()));
    return v;
  }

 private:
  Value expr() {
    Value v = term();
    while (true) {
      if (c_.accept('+')) v = add(std::move(v), term(), false);
      else if (c_.accept('-')) v = add(std::move(v), term(), true);
      else return v;
    }
  }

  Value term() {
    std::size_t at = c_.pos();
    Value v = unary();
    while (c_.accept('*')) v = mul(std::move(v), unary(), at);
    return v;
  }

  Value unary() {
    if (c_.accept('-')) {
      Value v = unary();
      return scale(std::move(v), HbarPoly(-1));
    }
    if (c_.accept('+')) return unary();
    std::size_t at = c_.pos();
    Value v = primary();
    if (c_.accept('^')) {
      if (v.kind != Value::Kind::Scalar) c_.fail("only scalars can be raised to a power", at);
      v.scalar = power(v.scalar, c_.integer());
    }
    return v;
  }

  Value primary() {
    if (c_.number_start()) {
      Value v;
      v.scalar = HbarPoly(c_.number());
      return v;
    }
    if (c_.accept('(')) {
      Value v = expr();
      c_.expect(')');
      return v;
    }
    if (c_.ident_start()) {
      std::string name = c_.peek_ident();
      if (name == "hbar") {
        c_.ident();
        Value v;
        v.scalar = HbarPoly::hbar(1);
        return v;
      }
      return product();
    }
    char p = c_.peek();
    c_.fail(p ? fmt::format("unexpected '{}'", p) : "unexpected end of input");
  }

  Value product() {
    std::size_t at = c_.pos();
    std::vector<HeightMonomial::Component> comps;
    std::vector<VertexId> idems;
    std::optional<Necklace> single;
    bool has_heights = false;
    int factors = 0;
    do {
      std::size_t fat = c_.pos();
      std::string name = c_.ident();
      ++factors;
      if (name == "cyc") {
        c_.expect('(');
        std::vector<ArrowId> word;
        do {
          word.push_back(arrow());
        } while (c_.accept(','));
        c_.expect(')');
        try {
          single = normalize(q_, word);
        } catch (const InvalidCycle& e) {
          c_.fail_as<InvalidCycle>(e.what(), fat);
        }
      } else if (name == "e") {
        c_.expect('(');
        std::size_t vat = c_.pos();
        std::string v = c_.ident();
        auto id = q_.find_vertex(v);
        if (!id) c_.fail(fmt::format("unknown vertex '{}'", v), vat);
        c_.expect(')');
        idems.push_back(*id);
        single = Necklace::idempotent(*id);
      } else if (name == "h") {
        has_heights = true;
        c_.expect('[');
        HeightMonomial::Component comp;
        do {
          c_.expect('(');
          ArrowId a = arrow();
          c_.expect(',');
          std::size_t hat = c_.pos();
          int h = c_.integer();
          if (h < 1) c_.fail("heights start at 1", hat);
          if (!heights_.insert(h).second) c_.fail_as<InvalidMonomial>(fmt::format("duplicate height {}", h), hat);
          c_.expect(')');
          comp.push_back(HeightLetter{a, static_cast<std::uint32_t>(h - 1)});
        } while (c_.accept(','));
        c_.expect(']');
        std::vector<ArrowId> word;
        for (const auto& l : comp) word.push_back(l.arrow);
        try {
          validate_cycle(q_, word);
        } catch (const InvalidCycle& e) {
          c_.fail_as<InvalidCycle>(e.what(), fat);
        }
        comps.push_back(std::move(comp));
      } else {
        c_.fail(fmt::format("unknown element constructor '{}'", name), fat);
      }
      if (name == "cyc" && (factors > 1 || c_.peek() == '&'))
        c_.fail("cyc(...) cannot appear in a '&' product; use h[...]", fat);
    } while (c_.accept('&'));
    heights_.clear();
    (void)at;
    Value v;
    if (factors == 1 && !has_heights) {
      v.kind = Value::Kind::Necklace;
      v.neck = NecklaceSum(*single, Rational(1), q_.fingerprint());
      return v;
    }
    v.kind = Value::Kind::Height;
    v.height = HeightSum(HeightMonomial::make_unchecked(std::move(comps), std::move(idems)), HbarPoly(1),
                         q_.fingerprint());
    return v;
  }

  ArrowId arrow() {
    std::size_t at = c_.pos();
    std::string n = c_.arrow_name();
    auto a = q_.find_arrow(n);
    if (!a) c_.fail(fmt::format("unknown arrow '{}'", n), at);
    return *a;
  }

  HeightSum to_height(const Value& v) const {
    switch (v.kind) {
      case Value::Kind::Scalar:
        return HeightSum(HeightMonomial(), v.scalar, q_.fingerprint());
      case Value::Kind::Necklace: {
        HeightSum out;
        out.with_tag(q_.fingerprint());
        for (const auto& [n, c] : v.neck) out.add(lift_monomial({n}), HbarPoly(c));
        return out;
      }
      case Value::Kind::Height:
        return v.height;
    }
    return {};
  }

  Value add(Value a, Value b, bool subtract) {
    if (subtract) b = scale(std::move(b), HbarPoly(-1));
    if (a.kind == Value::Kind::Scalar && b.kind == Value::Kind::Scalar) {
      a.scalar += b.scalar;
      return a;
    }
    if (a.kind == Value::Kind::Necklace && b.kind == Value::Kind::Necklace) {
      a.neck += b.neck;
      return a;
    }
    Value r;
    r.kind = Value::Kind::Height;
    r.height = to_height(a) + to_height(b);
    return r;
  }

  Value scale(Value v, const HbarPoly& s) {
    switch (v.kind) {
      case Value::Kind::Scalar:
        v.scalar = v.scalar * s;
        return v;
      case Value::Kind::Necklace:
        if (s.degree() <= 0) {
          v.neck *= s.at_zero();
          return v;
        }
        v.height = to_height(v);
        v.kind = Value::Kind::Height;
        [[fallthrough]];
      case Value::Kind::Height:
        v.height *= s;
        return v;
    }
    return v;
  }

  Value mul(Value a, Value b, std::size_t at) {
    if (a.kind == Value::Kind::Scalar) return scale(std::move(b), a.scalar);
    if (b.kind == Value::Kind::Scalar) return scale(std::move(a), b.scalar);
    c_.fail("'*' multiplies by scalars only; use the star or bracket commands for products", at);
  }

  Cursor c_;
  const Quiver& q_;
  std::set<int> heights_;
};

// ---------------------------------------------------------------- operators

class WeylParser {
 public:
  WeylParser(std::string_view text, const CoordSystem& cs, bool commutative)
      : c_(text), cs_(cs), commutative_(commutative) {}

  WeylSum parse() {
    WeylSum v = expr();
    if (!c_.at_end()) c_.fail(fmt::format("unexpected '{}'", c_.peek()));
    return v;
  }

 private:
  WeylSum constant(const HbarPoly& c) const { return weyl_constant(cs_, c); }

  WeylSum expr() {
    WeylSum v = term();
    while (true) {
      if (c_.accept('+')) v += term();
      else if (c_.accept('-')) v -= term();
      else return v;
    }
  }
  WeylSum term() {
    WeylSum v = unary();
    while (c_.accept('*')) v = product(v, unary());
    return v;
  }
  WeylSum product(const WeylSum& a, const WeylSum& b) const {
    if (!commutative_) return weyl_mul(a, b);
    return normal_ordered(poly_mul(phi(a), phi(b)));
  }
  WeylSum unary() {
    if (c_.accept('-')) return -unary();
    if (c_.accept('+')) return unary();
    WeylSum v = primary();
    if (c_.accept('^')) {
      int e = c_.integer();
      WeylSum r = constant(HbarPoly(1));
      for (int i = 0; i < e; ++i) r = product(r, v);
      v = r;
    }
    return v;
  }
  WeylSum primary() {
    if (c_.number_start()) return constant(HbarPoly(c_.number()));
    if (c_.accept('(')) {
      WeylSum v = expr();
      c_.expect(')');
      return v;
    }
    std::size_t at = c_.pos();
    std::string name = c_.ident();
    if (name == "hbar") {
      if (commutative_) c_.fail("hbar does not occur in polynomials", at);
      return constant(HbarPoly::hbar(1));
    }
    if (name != "x" && name != "D") c_.fail(fmt::format("unknown symbol '{}'", name), at);
    if (name == "D" && commutative_) c_.fail("derivatives do not occur in polynomials; use x[a*][i][j]", at);
    c_.expect('[');
    std::size_t aat = c_.pos();
    std::string an = c_.arrow_name();
    c_.expect(']');
    auto a = cs_.quiver().find_arrow(an);
    if (!a) c_.fail(fmt::format("unknown arrow '{}'", an), aat);
    c_.expect('[');
    int i = c_.integer();
    c_.expect(']');
    c_.expect('[');
    int j = c_.integer();
    c_.expect(']');
    try {
      if (name == "D") {
        if (cs_.quiver().is_star(*a)) c_.fail("D[...] takes an arrow of Q", aat);
        PhaseMonomial m(cs_.variable_count());
        m.add_d(cs_.var_index(*a, i - 1, j - 1), 1);
        return WeylSum(m, HbarPoly(1), cs_.tag());
      }
      return weyl_generator(cs_, *a, i - 1, j - 1);
    } catch (const DimensionMismatch& e) {
      c_.fail(e.what(), at);
    }
  }

  Cursor c_;
  const CoordSystem& cs_;
  bool commutative_;
};

// ---------------------------------------------------------------- printing

template <class Coeff>
std::string join_terms(const std::vector<std::pair<Coeff, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, body] : terms) {
    // body empty means the unit monomial
    bool negative;
    std::string mag;
    if constexpr (std::is_same_v<Coeff, Rational>) {
      negative = c.sign() < 0;
      Rational a = negative ? -c : c;
      mag = a.is_one() && !body.empty() ? "" : a.str();
    } else {
      negative = c.is_single_term() && c.coefficients().back().sign() < 0;
      HbarPoly a = negative ? -c : c;
      mag = (a == HbarPoly(1) && !body.empty()) ? "" : a.str();
    }
    std::string t = mag.empty() ? body : (body.empty() ? mag : mag + "*" + body);
    if (first) out += negative ? "-" + t : t;
    else out += (negative ? " - " : " + ") + t;
    first = false;
  }
  return out;
}

std::string var_name(const CoordSystem& cs, std::size_t v, bool derivative, bool derivative_names) {
  const auto& info = cs.var(v);
  const Quiver& q = cs.quiver();
  if (!derivative) return fmt::format("x[{}][{}][{}]", q.arrow(info.arrow).name, info.row + 1, info.col + 1);
  if (derivative_names) return fmt::format("D[{}][{}][{}]", q.arrow(info.arrow).name, info.row + 1, info.col + 1);
  return fmt::format("x[{}][{}][{}]", q.arrow(q.star(info.arrow)).name, info.col + 1, info.row + 1);
}

}  // namespace

Expression parse_expression(std::string_view text, const Quiver& q) {
  Value v = ElementParser(text, q).parse();
  switch (v.kind) {
    case Value::Kind::Necklace:
      return v.neck;
    case Value::Kind::Height:
      return v.height;
    case Value::Kind::Scalar:
      return HeightSum(HeightMonomial(), v.scalar, q.fingerprint());
  }
  return NecklaceSum();
}

NecklaceSum parse_necklace_sum(std::string_view text, const Quiver& q) {
  Expression e = parse_expression(text, q);
  if (auto* n = std::get_if<NecklaceSum>(&e)) return *n;
  const auto& h = std::get<HeightSum>(e);
  if (h.is_zero()) return NecklaceSum().with_tag(q.fingerprint());
  throw ParseError("expected a necklace expression (cyc/e with rational coefficients)", 1, 1);
}

HeightSum parse_height_sum(std::string_view text, const Quiver& q) {
  Expression e = parse_expression(text, q);
  if (auto* h = std::get_if<HeightSum>(&e)) return *h;
  HeightSum out;
  out.with_tag(q.fingerprint());
  for (const auto& [n, c] : std::get<NecklaceSum>(e)) out.add(lift_monomial({n}), HbarPoly(c));
  return out;
}

WeylSum parse_weyl(std::string_view text, const CoordSystem& cs) { return WeylParser(text, cs, false).parse(); }

PolySum parse_poly(std::string_view text, const CoordSystem& cs) {
  return phi(WeylParser(text, cs, true).parse());
}

std::string to_string(const Quiver& q, const Necklace& n) {
  if (n.is_idempotent()) return fmt::format("e({})", q.vertex_name(n.base()));
  std::string out = "cyc(";
  for (std::size_t i = 0; i < n.word().size(); ++i) {
    if (i) out += ',';
    out += q.arrow(n.word()[i]).name;
  }
  return out + ")";
}

std::string to_string(const Quiver& q, const NecklaceSum& x) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [n, c] : x) terms.emplace_back(c, to_string(q, n));
  return join_terms(terms);
}

std::string to_string(const Quiver& q, const HeightMonomial& m) {
  if (m.is_unit()) return "1";
  std::vector<std::string> parts;
  for (const auto& c : m.components()) {
    std::string s = "h[";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += fmt::format("({},{})", q.arrow(c[i].arrow).name, c[i].height + 1);
    }
    parts.push_back(s + "]");
  }
  for (VertexId v : m.idempotents()) parts.push_back(fmt::format("e({})", q.vertex_name(v)));
  return fmt::format("{}", fmt::join(parts, " & "));
}

std::string to_string(const Quiver& q, const HeightSum& x) {
  std::vector<std::pair<HbarPoly, std::string>> terms;
  for (const auto& [m, c] : x) terms.emplace_back(c, m.is_unit() ? std::string() : to_string(q, m));
  return join_terms(terms);
}

std::string to_string(const Quiver& q, const SymMonomial& m) {
  if (m.empty()) return "1";
  std::vector<std::string> parts;
  for (const auto& n : m) parts.push_back(to_string(q, n));
  return fmt::format("{}", fmt::join(parts, " & "));
}

std::string to_string(const CoordSystem& cs, const PhaseMonomial& m, bool derivative_names) {
  if (m.is_constant()) return "1";
  std::vector<std::string> parts;
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t v = 0; v < m.nvars(); ++v) {
      int e = pass == 0 ? m.x(v) : m.d(v);
      if (e == 0) continue;
      std::string n = var_name(cs, v, pass == 1, derivative_names);
      parts.push_back(e == 1 ? n : fmt::format("{}^{}", n, e));
    }
  return fmt::format("{}", fmt::join(parts, "*"));
}

std::string to_string(const CoordSystem& cs, const WeylSum& x) {
  std::vector<std::pair<HbarPoly, std::string>> terms;
  for (const auto& [m, c] : x) terms.emplace_back(c, m.is_constant() ? std::string() : to_string(cs, m, true));
  return join_terms(terms);
}

std::string to_string(const CoordSystem& cs, const PolySum& x) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [m, c] : x) terms.emplace_back(c, m.is_constant() ? std::string() : to_string(cs, m, false));
  return join_terms(terms);
}

}  // namespace nqr
