#include "lojex/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lojex {

std::vector<int> ExponentPair::support() const {
  std::vector<int> out;
  for (int i = 0; i < n(); ++i)
    if (nu[i] + mu[i] > 0) out.push_back(i);
  return out;
}

bool VariableSubset::contains(int i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

VariableSubset VariableSubset::complement(int n) const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!contains(i)) out.push_back(i);
  return VariableSubset(std::move(out));
}

VariableSubset VariableSubset::intersect(const VariableSubset& other) const {
  std::vector<int> out;
  std::set_intersection(members.begin(), members.end(), other.members.begin(),
                        other.members.end(), std::back_inserter(out));
  return VariableSubset(std::move(out));
}

bool VariableSubset::subset_of(const VariableSubset& other) const {
  return std::includes(other.members.begin(), other.members.end(), members.begin(),
                       members.end());
}

std::string VariableSubset::str() const {
  std::string s = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(members[k] + 1);
  }
  return s + "}";
}

std::string ComplexRat::str() const {
  if (is_real()) return to_string(re);
  std::string s = "(" + to_string(re);
  s += (im.numerator() < 0) ? "-" : "+";
  Rational a = im.numerator() < 0 ? -im : im;
  s += to_string(a) + "i)";
  return s;
}

bool MixedFunction::is_holomorphic() const {
  for (const auto& [e, c] : terms_)
    if (e.mu.any()) return false;
  return true;
}

void MixedFunction::add_term(const ExponentPair& e, const ComplexRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MixedFunction MixedFunction::conjugate() const {
  MixedFunction out(n_);
  for (const auto& [e, c] : terms_) out.add_term(ExponentPair{e.mu, e.nu}, c.conj());
  return out;
}

// ---------------------------------------------------------------------------
// Parser.  Grammar (whitespace stripped up front):
//   expr   := term (('+'|'-') term)*
//   term   := coeff? ('*'? factor)* | factor ('*'? factor)*
//   factor := ('~'? 'z' INT) ('^' INT)?  |  '(' expr ')' ('^' INT)?
//   coeff  := RATIONAL | DECIMAL | '(' RATIONAL ('+'|'-') RATIONAL 'i' ')'
// Intermediate sums may carry constants; only the final germ is required to
// vanish at the origin.
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
  std::string s;
  std::size_t i = 0;

  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  char take() { return s[i++]; }
  bool accept(char c) {
    if (peek() == c) { ++i; return true; }
    return false;
  }
};

long parse_uint(Cursor& c, const char* what) {
  if (!std::isdigit(static_cast<unsigned char>(c.peek())))
    throw ParseError(std::string("expected ") + what, c.i);
  long v = 0;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.take() - '0');
    if (v > 1000000) throw ParseError("number too large", c.i);
  }
  return v;
}

Rational parse_unsigned_rational(Cursor& c) {
  std::size_t start = c.i;
  long num = parse_uint(c, "number");
  if (c.accept('/')) {
    long den = parse_uint(c, "denominator");
    if (den == 0) throw ParseError("zero denominator", start);
    return ratio(num, den);
  }
  if (c.accept('.')) {
    Int scaled(num), pow10(1);
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      scaled = scaled * 10 + (c.take() - '0');
      pow10 *= 10;
    }
    return Rational(scaled, pow10);
  }
  return ratio(num);
}

// Terms are accumulated without the MixedFunction invariants so that grouped
// subexpressions may hold constants.
struct RawPoly {
  std::map<ExponentPair, ComplexRat, ExponentLess> terms;

  void add(const ExponentPair& e, const ComplexRat& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
};

RawPoly poly_constant(int n, const ComplexRat& c) {
  RawPoly out;
  out.add(ExponentPair{ExpVec::Zero(n), ExpVec::Zero(n)}, c);
  return out;
}

RawPoly poly_mul(const RawPoly& a, const RawPoly& b) {
  RawPoly out;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms)
      out.add(ExponentPair{ea.nu + eb.nu, ea.mu + eb.mu}, ca * cb);
  return out;
}

RawPoly poly_pow(const RawPoly& a, long k, int n) {
  RawPoly out = poly_constant(n, ComplexRat::integer(1));
  for (long i = 0; i < k; ++i) out = poly_mul(out, a);
  return out;
}

struct Parser {
  Cursor c;
  int n;

  explicit Parser(std::string text, int dim) : n(dim) { c.s = std::move(text); }

  // '(' RATIONAL (+|-) RATIONAL 'i' ')', attempted with rollback
  std::optional<ComplexRat> try_complex_coeff() {
    std::size_t save = c.i;
    try {
      if (!c.accept('(')) return std::nullopt;
      Rational re = parse_unsigned_rational(c);
      int sign;
      if (c.accept('+')) sign = 1;
      else if (c.accept('-')) sign = -1;
      else { c.i = save; return std::nullopt; }
      Rational im = parse_unsigned_rational(c);
      if (!c.accept('i') || !c.accept(')')) { c.i = save; return std::nullopt; }
      return ComplexRat(re, sign > 0 ? im : -im);
    } catch (const ParseError&) {
      c.i = save;
      return std::nullopt;
    }
  }

  RawPoly parse_factor() {
    if (c.peek() == '(') {
      c.take();
      RawPoly inner = parse_expr();
      if (!c.accept(')')) throw ParseError("expected ')'", c.i);
      long k = 1;
      if (c.accept('^')) {
        if (c.peek() == '-') throw ParseError("negative exponent", c.i);
        k = parse_uint(c, "exponent");
        if (k > 64) throw ParseError("group exponent too large", c.i);
      }
      return poly_pow(inner, k, n);
    }
    bool conjugated = c.accept('~');
    if (!c.accept('z')) throw ParseError("expected variable like z1", c.i);
    long idx = parse_uint(c, "variable index");
    if (idx < 1) throw ParseError("variable indices are 1-based", c.i);
    long k = 1;
    if (c.accept('^')) {
      if (c.peek() == '-') throw ParseError("negative exponent", c.i);
      k = parse_uint(c, "exponent");
    }
    ExponentPair e{ExpVec::Zero(n), ExpVec::Zero(n)};
    if (conjugated) e.mu[static_cast<int>(idx - 1)] = static_cast<int>(k);
    else e.nu[static_cast<int>(idx - 1)] = static_cast<int>(k);
    RawPoly out;
    out.add(e, ComplexRat::integer(1));
    return out;
  }

  bool factor_ahead() {
    char ch = c.peek();
    return ch == 'z' || ch == '~' || ch == '(';
  }

  RawPoly parse_term() {
    std::size_t pos = c.i;
    RawPoly acc = poly_constant(n, ComplexRat::integer(1));
    bool have_any = false;
    if (auto cc = try_complex_coeff()) {
      acc = poly_constant(n, *cc);
      have_any = true;
    } else if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      acc = poly_constant(n, ComplexRat(parse_unsigned_rational(c)));
      have_any = true;
    }
    while (true) {
      std::size_t save = c.i;
      bool star = c.accept('*');
      std::optional<ComplexRat> cc;
      if (star) cc = try_complex_coeff();
      if (cc) {
        acc = poly_mul(acc, poly_constant(n, *cc));
        have_any = true;
        continue;
      }
      if (factor_ahead()) {
        acc = poly_mul(acc, parse_factor());
        have_any = true;
        continue;
      }
      if (star) throw ParseError("expected factor after '*'", c.i);
      c.i = save;
      break;
    }
    if (!have_any) throw ParseError("expected a term", pos);
    return acc;
  }

  RawPoly parse_expr() {
    RawPoly acc;
    int sign = c.accept('-') ? -1 : 1;
    if (c.accept('+')) sign = 1;
    auto absorb = [&](const RawPoly& t) {
      for (const auto& [e, coeff] : t.terms)
        acc.add(e, sign < 0 ? -coeff : coeff);
    };
    absorb(parse_term());
    while (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
      sign = c.take() == '-' ? -1 : 1;
      absorb(parse_term());
    }
    return acc;
  }
};

}  // namespace

MixedFunction parse_function(const std::string& text, std::optional<int> n_hint) {
  std::string stripped;
  stripped.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) stripped.push_back(ch);
  if (stripped.empty()) throw ParseError("empty expression", 0);

  // Pre-scan the largest variable index to fix the ambient dimension.
  int n = n_hint.value_or(0);
  for (std::size_t i = 0; i + 1 < stripped.size(); ++i) {
    if (stripped[i] != 'z' || !std::isdigit(static_cast<unsigned char>(stripped[i + 1])))
      continue;
    long idx = 0;
    std::size_t j = i + 1;
    while (j < stripped.size() && std::isdigit(static_cast<unsigned char>(stripped[j])))
      idx = idx * 10 + (stripped[j++] - '0');
    n = std::max(n, static_cast<int>(idx));
  }
  if (n == 0) throw ParseError("no variables present", 0);

  Parser parser(std::move(stripped), n);
  RawPoly poly = parser.parse_expr();
  if (!parser.c.done()) throw ParseError("unexpected character", parser.c.i);

  MixedFunction f(n);
  for (const auto& [e, coeff] : poly.terms) {
    if (e.total_degree() == 0) throw ParseError("constant term present", 0);
    f.add_term(e, coeff);
  }
  if (f.is_zero()) throw ParseError("function is identically zero", 0);
  return f;
}

MixedFunction multiply(const MixedFunction& f, const MixedFunction& g) {
  MixedFunction out(f.n());
  for (const auto& [ea, ca] : f.terms())
    for (const auto& [eb, cb] : g.terms())
      out.add_term(ExponentPair{ea.nu + eb.nu, ea.mu + eb.mu}, ca * cb);
  return out;
}

std::string format_function(const MixedFunction& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    ComplexRat coeff = c;
    if (first) {
      if (coeff.is_real() && coeff.re < Rational(Int(0))) {
        out << "-";
        coeff = -coeff;
      }
      first = false;
    } else {
      if (coeff.is_real() && coeff.re < Rational(Int(0))) {
        out << " - ";
        coeff = -coeff;
      } else {
        out << " + ";
      }
    }
    bool unit = coeff == ComplexRat::integer(1);
    std::string cs = coeff.str();
    bool wrote = false;
    if (!unit) {
      out << cs;
      wrote = true;
    }
    for (int i = 0; i < e.n(); ++i) {
      if (e.nu[i] > 0) {
        if (wrote) out << "*";
        out << "z" << (i + 1);
        if (e.nu[i] > 1) out << "^" << e.nu[i];
        wrote = true;
      }
      if (e.mu[i] > 0) {
        if (wrote) out << "*";
        out << "~z" << (i + 1);
        if (e.mu[i] > 1) out << "^" << e.mu[i];
        wrote = true;
      }
    }
  }
  return out.str();
}

MixedFunction wirtinger_derivative(const MixedFunction& f, int j, bool conjugated) {
  if (j < 0 || j >= f.n()) throw std::out_of_range("variable index out of range");
  MixedFunction out(f.n());
  for (const auto& [e, c] : f.terms()) {
    int k = conjugated ? e.mu[j] : e.nu[j];
    if (k == 0) continue;
    ExponentPair d = e;
    if (conjugated) d.mu[j] -= 1;
    else d.nu[j] -= 1;
    out.add_term(d, c * ComplexRat::integer(k));
  }
  return out;
}

MixedFunction restrict_to(const MixedFunction& f, const VariableSubset& I) {
  MixedFunction out(f.n());
  for (const auto& [e, c] : f.terms()) {
    bool inside = true;
    for (int i = 0; i < f.n(); ++i)
      if (!I.contains(i) && e.combined_at(i) != 0) { inside = false; break; }
    if (inside) out.add_term(e, c);
  }
  return out;
}

Rational radial_degree(const QVec& weight, const ExponentPair& e) {
  Rational acc(Int(0));
  for (int i = 0; i < e.n(); ++i) {
    int k = e.combined_at(i);
    if (k != 0) acc += weight[i] * Rational(Int(k));
  }
  return acc;
}

Rational min_radial_degree(const QVec& weight, const MixedFunction& f) {
  if (f.is_zero()) throw std::invalid_argument("minimal degree of the zero function");
  bool first = true;
  Rational best(Int(0));
  for (const auto& [e, c] : f.terms()) {
    Rational d = radial_degree(weight, e);
    if (first || d < best) { best = d; first = false; }
  }
  return best;
}

MixedFunction face_function(const MixedFunction& f, const QVec& weight) {
  Rational d = min_radial_degree(weight, f);
  MixedFunction out(f.n());
  for (const auto& [e, c] : f.terms())
    if (radial_degree(weight, e) == d) out.add_term(e, c);
  return out;
}

MixedFunction add(const MixedFunction& f, const MixedFunction& g) {
  MixedFunction out = f;
  for (const auto& [e, c] : g.terms()) out.add_term(e, c);
  return out;
}

MixedFunction subtract(const MixedFunction& f, const MixedFunction& g) {
  MixedFunction out = f;
  for (const auto& [e, c] : g.terms()) out.add_term(e, -c);
  return out;
}

MixedFunction scale(const MixedFunction& f, const ComplexRat& c) {
  MixedFunction out(f.n());
  for (const auto& [e, k] : f.terms()) out.add_term(e, k * c);
  return out;
}

MixedFunction monomial_multiple(const MixedFunction& f, const ExponentPair& e,
                                const ComplexRat& c) {
  MixedFunction out(f.n());
  for (const auto& [t, k] : f.terms())
    out.add_term(ExponentPair{t.nu + e.nu, t.mu + e.mu}, k * c);
  return out;
}

MixedFunction real_part(const MixedFunction& f) {
  return scale(add(f, f.conjugate()), ComplexRat(ratio(1, 2)));
}

MixedFunction imag_part(const MixedFunction& f) {
  // (f - conj f) / (2i) = -i/2 (f - conj f)
  return scale(subtract(f, f.conjugate()), ComplexRat(ratio(0), ratio(-1, 2)));
}

std::complex<double> evaluate(const MixedFunction& f, const Eigen::VectorXcd& z) {
  if (z.size() != f.n()) throw std::invalid_argument("dimension mismatch");
  std::complex<double> acc = 0;
  for (const auto& [e, c] : f.terms()) {
    std::complex<double> m = c.to_complex();
    for (int i = 0; i < f.n(); ++i) {
      for (int k = 0; k < e.nu[i]; ++k) m *= z[i];
      for (int k = 0; k < e.mu[i]; ++k) m *= std::conj(z[i]);
    }
    acc += m;
  }
  return acc;
}

ComplexRat evaluate_exact(const MixedFunction& f, const std::vector<ComplexRat>& z) {
  if (static_cast<int>(z.size()) != f.n()) throw std::invalid_argument("dimension mismatch");
  ComplexRat acc;
  for (const auto& [e, c] : f.terms()) {
    ComplexRat m = c;
    for (int i = 0; i < f.n(); ++i) {
      if (e.nu[i]) m *= z[i].pow(e.nu[i]);
      if (e.mu[i]) m *= z[i].conj().pow(e.mu[i]);
    }
    acc += m;
  }
  return acc;
}

std::vector<VariableSubset> vanishing_subspaces(const MixedFunction& f) {
  const int n = f.n();
  // Bitmask of each monomial's combined support; I vanishes iff no support
  // mask is contained in I. Subsets of a vanishing I vanish automatically.
  std::vector<unsigned> masks;
  for (const auto& [e, c] : f.terms()) {
    unsigned m = 0;
    for (int i : e.support()) m |= 1u << i;
    masks.push_back(m);
  }
  std::vector<VariableSubset> out;
  const unsigned full = (1u << n) - 1;
  for (unsigned I = 1; I < full; ++I) {
    bool vanishes = true;
    for (unsigned m : masks)
      if ((m & ~I) == 0) { vanishes = false; break; }
    if (vanishes) {
      std::vector<int> mem;
      for (int i = 0; i < n; ++i)
        if (I & (1u << i)) mem.push_back(i);
      out.emplace_back(std::move(mem));
    }
  }
  std::sort(out.begin(), out.end(), [](const VariableSubset& a, const VariableSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<VariableSubset> interaction_components(const MixedFunction& f) {
  const int n = f.n();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> used(n, false);
  for (const auto& [e, c] : f.terms()) {
    auto sup = e.support();
    for (int i : sup) used[i] = true;
    for (std::size_t k = 1; k < sup.size(); ++k) parent[find(sup[k])] = find(sup[0]);
  }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i)
    if (used[i]) groups[find(i)].push_back(i);
  std::vector<VariableSubset> out;
  for (auto& [root, mem] : groups) out.emplace_back(std::move(mem));
  std::sort(out.begin(), out.end());
  return out;
}

MixedFunction extract_reindexed(const MixedFunction& f, const VariableSubset& I) {
  MixedFunction g = restrict_to(f, I);
  const int m = static_cast<int>(I.size());
  MixedFunction out(m);
  for (const auto& [e, c] : g.terms()) {
    ExponentPair d{ExpVec::Zero(m), ExpVec::Zero(m)};
    for (int k = 0; k < m; ++k) {
      d.nu[k] = e.nu[I.members[k]];
      d.mu[k] = e.mu[I.members[k]];
    }
    out.add_term(d, c);
  }
  return out;
}

MixedFunction direct_sum(const MixedFunction& g, const MixedFunction& h) {
  const int n = g.n(), m = h.n();
  MixedFunction out(n + m);
  for (const auto& [e, c] : g.terms()) {
    ExponentPair d{ExpVec::Zero(n + m), ExpVec::Zero(n + m)};
    d.nu.head(n) = e.nu;
    d.mu.head(n) = e.mu;
    out.add_term(d, c);
  }
  for (const auto& [e, c] : h.terms()) {
    ExponentPair d{ExpVec::Zero(n + m), ExpVec::Zero(n + m)};
    d.nu.tail(m) = e.nu;
    d.mu.tail(m) = e.mu;
    out.add_term(d, c);
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  Cursor c;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) c.s.push_back(ch);
  bool neg = c.accept('-');
  Rational r = parse_unsigned_rational(c);
  if (!c.done()) throw ParseError("trailing characters in rational", c.i);
  return neg ? -r : r;
}

}  // namespace lojex
