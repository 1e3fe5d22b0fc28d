#pragma once

#include "lojex/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lojex {

/// Thrown on malformed input expressions; pos is a byte offset into the
/// (whitespace-stripped) source text.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

/// Exponents of one monomial c * z^nu * zbar^mu. nu and mu have length n;
/// mu is identically zero for holomorphic input. nu+mu is the support point.
struct ExponentPair {
  ExpVec nu;
  ExpVec mu;

  int n() const { return static_cast<int>(nu.size()); }
  ExpVec combined() const { return nu + mu; }
  int combined_at(int j) const { return nu[j] + mu[j]; }
  int total_degree() const { return nu.sum() + mu.sum(); }

  /// Variable indices (0-based) with nonzero combined exponent.
  std::vector<int> support() const;

  friend bool operator==(const ExponentPair& a, const ExponentPair& b) {
    return a.nu == b.nu && a.mu == b.mu;
  }
};

/// Canonical term order: lexicographic on (nu, mu).
struct ExponentLess {
  bool operator()(const ExponentPair& a, const ExponentPair& b) const {
    for (int i = 0; i < a.n(); ++i)
      if (a.nu[i] != b.nu[i]) return a.nu[i] < b.nu[i];
    for (int i = 0; i < a.n(); ++i)
      if (a.mu[i] != b.mu[i]) return a.mu[i] < b.mu[i];
    return false;
  }
};

struct MixedMonomial {
  ComplexRat coeff;
  ExponentPair exps;
};

/// Sorted 0-based variable index set I of {0..n-1}.
struct VariableSubset {
  std::vector<int> members;

  VariableSubset() = default;
  explicit VariableSubset(std::vector<int> m) : members(std::move(m)) {}

  bool contains(int i) const;
  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  VariableSubset complement(int n) const;
  VariableSubset intersect(const VariableSubset& other) const;
  bool subset_of(const VariableSubset& other) const;
  std::string str() const;  // e.g. "{1,3}" with 1-based indices

  friend bool operator==(const VariableSubset& a, const VariableSubset& b) {
    return a.members == b.members;
  }
  friend bool operator<(const VariableSubset& a, const VariableSubset& b) {
    return a.members < b.members;
  }
};

/// A finite sum of mixed monomials with exact complex-rational coefficients.
/// Canonical: no zero coefficients, no duplicate exponent pairs. The empty
/// term set is a valid value (the identically zero function); the parser
/// rejects it, but restriction and differentiation may produce it.
class MixedFunction {
 public:
  using TermMap = std::map<ExponentPair, ComplexRat, ExponentLess>;

  MixedFunction() : n_(0) {}
  explicit MixedFunction(int n) : n_(n) {}

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// True iff every mu vanishes.
  bool is_holomorphic() const;

  /// Adds c * z^nu * zbar^mu, merging and dropping zeros.
  void add_term(const ExponentPair& e, const ComplexRat& c);

  MixedFunction conjugate() const;

  friend bool operator==(const MixedFunction& a, const MixedFunction& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  TermMap terms_;
};

/// Parses the expression grammar (see README). n is the largest variable
/// index seen unless n_hint forces a larger ambient dimension.
/// Rejects constant terms and the identically zero result.
MixedFunction parse_function(const std::string& text, std::optional<int> n_hint = std::nullopt);

/// Canonical text form; parse_function(format_function(f)) == f.
std::string format_function(const MixedFunction& f);

/// d/dz_j (conjugated=false) or d/dzbar_j (conjugated=true), 0-based j.
/// May be identically zero.
MixedFunction wirtinger_derivative(const MixedFunction& f, int j, bool conjugated);

/// Keeps the monomials whose combined support lies inside I. An identically
/// zero result signals a vanishing coordinate subspace.
MixedFunction restrict_to(const MixedFunction& f, const VariableSubset& I);

/// Radial weight degree sum_i p_i (nu_i + mu_i), exact.
Rational radial_degree(const QVec& weight, const ExponentPair& e);

/// Minimal radial degree of f under the weight; f must be nonzero.
Rational min_radial_degree(const QVec& weight, const MixedFunction& f);

/// Sub-sum of monomials attaining the minimal radial degree d(P,f).
/// Requires P >= 0, P != 0, f nonzero.
MixedFunction face_function(const MixedFunction& f, const QVec& weight);

/// f + g, f - g, scalar multiples, and single-monomial multiplication.
MixedFunction add(const MixedFunction& f, const MixedFunction& g);
MixedFunction subtract(const MixedFunction& f, const MixedFunction& g);
MixedFunction scale(const MixedFunction& f, const ComplexRat& c);
MixedFunction monomial_multiple(const MixedFunction& f, const ExponentPair& e,
                                const ComplexRat& c = ComplexRat::integer(1));

/// Real and imaginary parts as mixed functions: f = g + i h.
MixedFunction real_part(const MixedFunction& f);
MixedFunction imag_part(const MixedFunction& f);

/// Floating evaluation; zbar_j is substituted as conj(z_j).
std::complex<double> evaluate(const MixedFunction& f, const Eigen::VectorXcd& z);

/// Exact evaluation at complex-rational points.
ComplexRat evaluate_exact(const MixedFunction& f, const std::vector<ComplexRat>& z);

/// All non-empty proper I with restrict_to(f, I) identically zero.
/// Sorted by size then lexicographically.
std::vector<VariableSubset> vanishing_subspaces(const MixedFunction& f);

/// Connected components of the variable-interaction graph (variables adjacent
/// when they share a monomial, combined exponents). Isolated variables that
/// appear in no monomial are dropped.
std::vector<VariableSubset> interaction_components(const MixedFunction& f);

/// f restricted to I and re-indexed onto variables 1..|I| in order.
MixedFunction extract_reindexed(const MixedFunction& f, const VariableSubset& I);

/// g(z_1..z_n) + h(z_{n+1}..z_{n+m}) on disjoint variable blocks.
MixedFunction direct_sum(const MixedFunction& g, const MixedFunction& h);

}  // namespace lojex
