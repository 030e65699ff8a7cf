#include "bettichar/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace bettichar {

bool DegreeVector::isZero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](long long e) { return e == 0; });
}

static void requireSameRank(const DegreeVector& a, const DegreeVector& b) {
  if (a.rank() != b.rank())
    throw ShapeError("degree vectors of rank " + std::to_string(a.rank()) +
                     " and " + std::to_string(b.rank()));
}

DegreeVector DegreeVector::operator+(const DegreeVector& rhs) const {
  requireSameRank(*this, rhs);
  DegreeVector out(*this);
  for (std::size_t i = 0; i < entries.size(); ++i)
    out.entries[i] += rhs.entries[i];
  return out;
}

DegreeVector DegreeVector::operator-(const DegreeVector& rhs) const {
  requireSameRank(*this, rhs);
  DegreeVector out(*this);
  for (std::size_t i = 0; i < entries.size(); ++i)
    out.entries[i] -= rhs.entries[i];
  return out;
}

DegreeVector DegreeVector::negated() const {
  DegreeVector out(*this);
  for (auto& e : out.entries) e = -e;
  return out;
}

std::string DegreeVector::toString() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out << ',';
    out << entries[i];
  }
  out << ')';
  return out.str();
}

Monomial Monomial::variable(std::size_t index, std::size_t varCount) {
  Monomial m = unit(varCount);
  m.exponents[index] = 1;
  return m;
}

bool Monomial::isUnit() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [](int e) { return e == 0; });
}

static void requireSameVars(const Monomial& a, const Monomial& b) {
  if (a.varCount() != b.varCount())
    throw ShapeError("monomials over different variable counts");
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  requireSameVars(*this, rhs);
  Monomial out(*this);
  for (std::size_t i = 0; i < exponents.size(); ++i)
    out.exponents[i] += rhs.exponents[i];
  return out;
}

bool Monomial::divides(const Monomial& rhs) const {
  requireSameVars(*this, rhs);
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > rhs.exponents[i]) return false;
  return true;
}

Monomial Monomial::dividedInto(const Monomial& rhs) const {
  requireSameVars(*this, rhs);
  Monomial out(rhs);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    out.exponents[i] -= exponents[i];
    if (out.exponents[i] < 0)
      throw ValidationError("monomial division with negative exponent");
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  requireSameVars(a, b);
  Monomial out(a);
  for (std::size_t i = 0; i < out.exponents.size(); ++i)
    out.exponents[i] = std::max(out.exponents[i], b.exponents[i]);
  return out;
}

GradedRing::GradedRing(std::vector<std::string> variableNames,
                       std::vector<DegreeVector> variableDegrees,
                       DegreeVector positivityWeight)
    : variableNames_(std::move(variableNames)),
      variableDegrees_(std::move(variableDegrees)),
      weight_(std::move(positivityWeight)) {
  if (variableNames_.empty())
    throw ValidationError("ring: at least one variable required");
  if (weight_.rank() == 0) throw ValidationError("ring: grading rank r >= 1");
  if (variableDegrees_.size() != variableNames_.size())
    throw ValidationError("ring: one degree per variable required");
  std::set<std::string> seen;
  for (const auto& name : variableNames_) {
    if (name.empty()) throw ValidationError("ring: empty variable name");
    if (!seen.insert(name).second)
      throw ValidationError("ring: duplicate variable name '" + name + "'");
  }
  for (std::size_t i = 0; i < variableDegrees_.size(); ++i) {
    if (variableDegrees_[i].rank() != weight_.rank())
      throw ValidationError("ring: degree of '" + variableNames_[i] +
                            "' has rank " +
                            std::to_string(variableDegrees_[i].rank()) +
                            ", grading rank is " +
                            std::to_string(weight_.rank()));
    if (weightOf(variableDegrees_[i]) <= 0)
      throw ValidationError(
          "ring: positivity witness fails on variable '" + variableNames_[i] +
          "' (w.deg must be strictly positive)");
  }
}

GradedRing GradedRing::standard(std::vector<std::string> variableNames) {
  std::vector<DegreeVector> degrees(variableNames.size(), DegreeVector({1}));
  return GradedRing(std::move(variableNames), std::move(degrees),
                    DegreeVector({1}));
}

long long GradedRing::weightOf(const DegreeVector& j) const {
  requireSameRank(weight_, j);
  long long out = 0;
  for (std::size_t i = 0; i < weight_.rank(); ++i)
    out += weight_.entries[i] * j.entries[i];
  return out;
}

Polynomial Polynomial::constant(const Rational& c,
                                std::size_t varCount) {
  return term(Monomial::unit(varCount), c);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial f;
  f.addTerm(m, c);
  return f;
}

Polynomial Polynomial::variable(std::size_t index, std::size_t varCount) {
  return term(Monomial::variable(index, varCount), 1);
}

std::optional<Rational> Polynomial::constantValue() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.isUnit())
    return terms_.begin()->second;
  return std::nullopt;
}

void Polynomial::addTerm(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.begin()->first.varCount() != m.varCount())
    throw ShapeError("polynomial terms over different variable counts");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out(*this);
  for (const auto& [m, c] : rhs.terms_) out.addTerm(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out(*this);
  for (const auto& [m, c] : rhs.terms_) out.addTerm(m, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.addTerm(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

DegreeVector degreeOfMonomial(const Monomial& m, const GradedRing& ring) {
  if (m.varCount() != ring.varCount())
    throw ShapeError("monomial over " + std::to_string(m.varCount()) +
                     " variables in a ring with " +
                     std::to_string(ring.varCount()));
  DegreeVector out = DegreeVector::zero(ring.gradingRank());
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    const int e = m.exponents[i];
    if (e < 0) throw ValidationError("negative exponent in monomial");
    if (e == 0) continue;
    const DegreeVector& d = ring.variableDegree(i);
    for (std::size_t k = 0; k < out.rank(); ++k)
      out.entries[k] += static_cast<long long>(e) * d.entries[k];
  }
  return out;
}

Homogeneity homogeneity(const Polynomial& f, const GradedRing& ring) {
  Homogeneity out;
  if (f.isZero()) {
    out.kind = HomogeneityKind::zero;
    return out;
  }
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    DegreeVector d = degreeOfMonomial(m, ring);
    if (first) {
      out.degree = std::move(d);
      first = false;
    } else if (d != out.degree) {
      out.kind = HomogeneityKind::mixed;
      out.degree = DegreeVector();
      return out;
    }
  }
  out.kind = HomogeneityKind::homogeneous;
  return out;
}

namespace {

void enumerateMonomials(const GradedRing& ring, std::size_t var,
                        DegreeVector remaining, long long remainingWeight,
                        std::vector<int>& exponents,
                        std::vector<Monomial>& out) {
  if (remainingWeight < 0) return;
  if (var == ring.varCount()) {
    if (remaining.isZero()) out.push_back(Monomial(exponents));
    return;
  }
  const DegreeVector& d = ring.variableDegree(var);
  const long long w = ring.weightOf(d);  // > 0 by the ring invariant
  const long long maxExp = remainingWeight / w;
  DegreeVector left = remaining;
  for (long long e = 0; e <= maxExp; ++e) {
    exponents[var] = static_cast<int>(e);
    enumerateMonomials(ring, var + 1, left, remainingWeight - e * w, exponents,
                       out);
    left = left - d;
  }
  exponents[var] = 0;
}

}  // namespace

std::vector<Monomial> monomialsOfDegree(const DegreeVector& j,
                                        const GradedRing& ring) {
  if (j.rank() != ring.gradingRank())
    throw ShapeError("degree rank mismatch in monomial enumeration");
  std::vector<Monomial> out;
  std::vector<int> exponents(ring.varCount(), 0);
  enumerateMonomials(ring, 0, j, ring.weightOf(j), exponents, out);
  return out;
}

Polynomial linearSubstitute(const Polynomial& f, const RationalMatrix& action,
                            const GradedRing& ring) {
  const std::size_t n = ring.varCount();
  if (action.rows() != n || action.cols() != n)
    throw ShapeError("linear substitution: matrix is " +
                     std::to_string(action.rows()) + "x" +
                     std::to_string(action.cols()) + ", ring has " +
                     std::to_string(n) + " variables");
  std::vector<Polynomial> image(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < n; ++u) {
      const Rational& c = action.at(u, v);
      if (c != 0) image[v].addTerm(Monomial::variable(u, n), c);
    }
  }
  // Cache powers of the variable images across terms.
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t v = 0; v < n; ++v)
    powers[v].push_back(Polynomial::constant(1, n));
  auto power = [&](std::size_t v, int e) -> const Polynomial& {
    while (static_cast<int>(powers[v].size()) <= e)
      powers[v].push_back(powers[v].back() * image[v]);
    return powers[v][static_cast<std::size_t>(e)];
  };

  Polynomial out;
  for (const auto& [m, c] : f.terms()) {
    if (m.varCount() != n)
      throw ShapeError("polynomial/ring variable count mismatch");
    Polynomial acc = Polynomial::constant(c, n);
    for (std::size_t v = 0; v < n; ++v)
      if (m.exponents[v] > 0) acc = acc * power(v, m.exponents[v]);
    out = out + acc;
  }
  return out;
}

namespace {

struct PolyLexer {
  const std::string& text;
  std::size_t pos = 0;

  explicit PolyLexer(const std::string& t) : text(t) {}

  void skipSpace() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skipSpace();
    return pos >= text.size();
  }
  char peek() {
    skipSpace();
    return text[pos];
  }
  bool accept(char c) {
    skipSpace();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("polynomial '" + text + "' at position " +
                     std::to_string(pos) + ": " + why);
  }
  std::string digits() {
    skipSpace();
    std::string out;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      out += text[pos++];
    if (out.empty()) fail("expected digits");
    return out;
  }
};

// Longest declared variable name starting at the current position.
std::optional<std::size_t> matchVariable(PolyLexer& lex,
                                         const GradedRing& ring) {
  lex.skipSpace();
  std::optional<std::size_t> best;
  std::size_t bestLen = 0;
  for (std::size_t i = 0; i < ring.varCount(); ++i) {
    const std::string& name = ring.variableName(i);
    if (name.size() > bestLen &&
        lex.text.compare(lex.pos, name.size(), name) == 0) {
      best = i;
      bestLen = name.size();
    }
  }
  if (best) lex.pos += bestLen;
  return best;
}

// term := factor ('*' factor)*; factor := rational | variable ['^' nat]
Polynomial parseTerm(PolyLexer& lex, const GradedRing& ring) {
  Rational coefficient = 1;
  Monomial monomial = Monomial::unit(ring.varCount());
  bool sawFactor = false;
  while (true) {
    lex.skipSpace();
    if (lex.pos < lex.text.size() &&
        std::isdigit(static_cast<unsigned char>(lex.text[lex.pos]))) {
      std::string num = lex.digits();
      std::string den = "1";
      if (lex.accept('/')) den = lex.digits();
      mpz_class d(den);
      if (d == 0) lex.fail("zero denominator");
      Rational q(mpz_class(num), d);
      q.canonicalize();
      coefficient *= q;
      sawFactor = true;
    } else if (auto var = matchVariable(lex, ring)) {
      int exponent = 1;
      if (lex.accept('^')) {
        const std::string e = lex.digits();
        try {
          exponent = std::stoi(e);
        } catch (const std::exception&) {
          lex.fail("exponent out of range");
        }
      }
      monomial.exponents[*var] += exponent;
      sawFactor = true;
    } else {
      lex.fail("expected coefficient or variable");
    }
    if (!lex.accept('*')) break;
  }
  if (!sawFactor) lex.fail("empty term");
  return Polynomial::term(monomial, coefficient);
}

}  // namespace

Polynomial parsePolynomial(const std::string& text, const GradedRing& ring) {
  PolyLexer lex(text);
  if (lex.done()) throw ParseError("empty polynomial text");
  Polynomial out;
  bool negate = false;
  if (lex.accept('-'))
    negate = true;
  else
    lex.accept('+');
  while (true) {
    Polynomial term = parseTerm(lex, ring);
    out = negate ? out - term : out + term;
    if (lex.done()) break;
    if (lex.accept('+'))
      negate = false;
    else if (lex.accept('-'))
      negate = true;
    else
      lex.fail("expected '+' or '-' between terms");
  }
  return out;
}

std::string formatPolynomial(const Polynomial& f, const GradedRing& ring) {
  if (f.isZero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Terms printed leading-first: reverse canonical (lexicographic) order.
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const Monomial& m = it->first;
    Rational c = it->second;
    const bool negative = c < 0;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? '-' : '+');
    }
    if (negative) c = -c;
    const bool unitMonomial = m.isUnit();
    const bool unitCoefficient = (c == 1);
    if (!unitCoefficient || unitMonomial) {
      out << formatRational(c);
      if (!unitMonomial) out << '*';
    }
    bool firstVar = true;
    for (std::size_t v = 0; v < m.exponents.size(); ++v) {
      if (m.exponents[v] == 0) continue;
      if (!firstVar) out << '*';
      firstVar = false;
      out << ring.variableName(v);
      if (m.exponents[v] > 1) out << '^' << m.exponents[v];
    }
  }
  return out.str();
}

}  // namespace bettichar
