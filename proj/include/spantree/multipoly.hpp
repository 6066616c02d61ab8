#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "spantree/exact_linalg.hpp"

namespace spantree {

using Exponents = std::vector<unsigned>;

/// Orders exponent vectors by descending graded lexicographic order, so the
/// first term of a polynomial is its leading term.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in x_1..x_n with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class MultiPoly {
public:
  using Terms = std::map<Exponents, BigInt, GrlexDescending>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars);
  MultiPoly(int nvars, const BigInt& constant);

  /// x_i, 1-based.
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(const Exponents& exps, const BigInt& coefficient);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  unsigned total_degree() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  BigInt evaluate(const std::vector<BigInt>& point) const;
  std::string to_string() const;

private:
  void add_term(const Exponents& e, const BigInt& c);
  void require_same(const MultiPoly& o) const;

  int nvars_ = 0;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Value at x_i = 1 for every i.
BigInt substitute_all_ones(const MultiPoly& p);

MultiPoly pow(const MultiPoly& p, unsigned k);

/// a / b in the polynomial ring. Throws ExactnessError when b does not
/// divide a and std::domain_error when b is zero.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Sum of x_v over v in `vertices`.
MultiPoly variable_sum(int nvars, const std::vector<Vertex>& vertices);

} // namespace spantree
