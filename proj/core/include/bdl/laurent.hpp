#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace bdl {

using Integer = mpz_class;
using Exponent = std::vector<int>;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients. Terms are kept in lexicographic exponent order with no zero
/// coefficients, so equality is structural.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Integer>;

  explicit LaurentPoly(int var_count = 1);

  static LaurentPoly constant(int var_count, const Integer& c);
  static LaurentPoly monomial(const Exponent& e, const Integer& c = 1);
  /// The single variable with index `var` (0-based).
  static LaurentPoly variable(int var_count, int var, int power = 1);

  int var_count() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  /// True for c * x^I with c = +-1.
  bool is_unit_monomial() const;

  /// Adds c * x^e; drops the term if the result is zero.
  void add_term(const Exponent& e, const Integer& c);
  Integer coefficient(const Exponent& e) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Integer(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Divides every coefficient by d; throws DomainError unless exact.
  LaurentPoly exact_divide(const Integer& d) const;
  /// Multiplies by x^e (e may be negative).
  LaurentPoly shifted(const Exponent& e) const;

  /// Per-variable minimum and maximum exponents. Empty for the zero poly.
  std::vector<std::pair<int, int>> exponent_ranges() const;

  /// Human-readable form over variable names (default t, q, s...).
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  int vars_;
  TermMap terms_;
};

LaurentPoly power(const LaurentPoly& f, unsigned k);

/// l1 norm: sum of absolute values of coefficients.
Integer norm(const LaurentPoly& f);

/// Value at a point on the unit torus. Points off the torus by more than
/// 1e-6 are rejected; between 1e-12 and 1e-6 a warning is logged once.
Complex eval(const LaurentPoly& f, std::span<const Complex> point);

/// Dense matrix of Laurent polynomials sharing one var_count.
class LaurentMatrix {
 public:
  LaurentMatrix(std::size_t rows, std::size_t cols, int var_count);
  LaurentMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows);

  static LaurentMatrix identity(std::size_t d, int var_count);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  int var_count() const noexcept { return vars_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  LaurentPoly& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

  /// Total number of stored terms over all cells.
  std::size_t term_count() const noexcept;
  bool is_identity() const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  LaurentMatrix transposed() const;
  /// Substitutes x_v -> x_v^{-1} in every entry.
  LaurentMatrix inverted_variables() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  int vars_;
  std::vector<LaurentPoly> cells_;
};

LaurentMatrix power(const LaurentMatrix& a, unsigned k);

/// Exact inverse of a square matrix whose determinant is a unit monomial
/// (+-x^I), via the Faddeev-LeVerrier recurrence. Throws DomainError if the
/// determinant is not a unit.
LaurentMatrix inverse(const LaurentMatrix& a);

/// Coefficients of det(xI - A), from x^0 up to x^d (leading coefficient 1).
std::vector<LaurentPoly> characteristic_polynomial(const LaurentMatrix& a);

LaurentPoly trace(const LaurentMatrix& a);
/// Entrywise l1 norms.
std::vector<std::vector<Integer>> matrix_norm(const LaurentMatrix& a);
/// Sum over the diagonal of ||a_ii||.
Integer trace_of_norm(const LaurentMatrix& a);
/// ||sum_i a_ii||.
Integer norm_of_trace(const LaurentMatrix& a);
/// Sum over all cells of ||a_ij||.
Integer total_norm(const LaurentMatrix& a);

ComplexMatrix matrix_eval(const LaurentMatrix& a, std::span<const Complex> point);

}  // namespace bdl
