#include "bdl/laurent.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <sstream>

#include "bdl/errors.hpp"

namespace bdl {

namespace {

void require_same_vars(int a, int b) {
  if (a != b)
    throw DomainError("variable count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

const char* default_name(int v) {
  static const char* names[] = {"t", "q", "s", "u", "v", "w"};
  return v < 6 ? names[v] : "x";
}

std::atomic<bool> warned_off_torus{false};

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int var_count) : vars_(var_count) {
  if (var_count < 1) throw RangeError("a Laurent polynomial needs at least one variable");
}

LaurentPoly LaurentPoly::constant(int var_count, const Integer& c) {
  LaurentPoly p(var_count);
  p.add_term(Exponent(var_count, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Integer& c) {
  LaurentPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int var_count, int var, int power) {
  if (var < 0 || var >= var_count) throw RangeError("variable index out of range");
  Exponent e(var_count, 0);
  e[var] = power;
  return monomial(e);
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](int x) { return x == 0; });
}

bool LaurentPoly::is_unit_monomial() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (static_cast<int>(e.size()) != vars_) throw DomainError("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_same_vars(vars_, o.vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_same_vars(vars_, o.vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_vars(a.vars_, b.vars_);
  LaurentPoly out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  const auto& small = a.term_count() <= b.term_count() ? a : b;
  const auto& large = a.term_count() <= b.term_count() ? b : a;
  Exponent e(a.vars_);
  Integer prod;
  for (const auto& [es, cs] : small.terms_) {
    // Shifting a sorted map by a fixed exponent keeps it sorted, so each
    // pass can reuse the previous insertion point as a hint.
    auto hint = out.terms_.begin();
    for (const auto& [el, cl] : large.terms_) {
      for (int v = 0; v < a.vars_; ++v) e[v] = es[v] + el[v];
      mpz_mul(prod.get_mpz_t(), cs.get_mpz_t(), cl.get_mpz_t());
      hint = out.terms_.lower_bound(e);
      if (hint != out.terms_.end() && hint->first == e) {
        hint->second += prod;
        if (hint->second == 0) hint = out.terms_.erase(hint);
      } else {
        hint = out.terms_.emplace_hint(hint, e, prod);
      }
    }
  }
  return out;
}

LaurentPoly LaurentPoly::exact_divide(const Integer& d) const {
  if (d == 0) throw DomainError("division by zero");
  LaurentPoly out(*this);
  for (auto& [e, c] : out.terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw DomainError("inexact integer division of a Laurent polynomial");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
  if (static_cast<int>(s.size()) != vars_) throw DomainError("shift length does not match variable count");
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (int v = 0; v < vars_; ++v) f[v] += s[v];
    out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
  }
  return out;
}

std::vector<std::pair<int, int>> LaurentPoly::exponent_ranges() const {
  if (terms_.empty()) return {};
  std::vector<std::pair<int, int>> r(vars_, {INT32_MAX, INT32_MIN});
  for (const auto& [e, c] : terms_)
    for (int v = 0; v < vars_; ++v) {
      r[v].first = std::min(r[v].first, e[v]);
      r[v].second = std::max(r[v].second, e[v]);
    }
  return r;
}

std::string LaurentPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || constant) os << mag.get_str();
    bool need_sep = mag != 1 && !constant;
    for (int v = 0; v < vars_; ++v) {
      if (e[v] == 0) continue;
      if (need_sep) os << '*';
      os << (v < static_cast<int>(names.size()) ? names[v] : std::string(default_name(v)));
      if (e[v] != 1) os << '^' << e[v];
      need_sep = true;
    }
  }
  return os.str();
}

LaurentPoly power(const LaurentPoly& f, unsigned k) {
  LaurentPoly result = LaurentPoly::constant(f.var_count(), 1);
  LaurentPoly base = f;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Integer norm(const LaurentPoly& f) {
  Integer s = 0;
  for (const auto& [e, c] : f.terms()) s += abs(c);
  return s;
}

Complex eval(const LaurentPoly& f, std::span<const Complex> point) {
  if (static_cast<int>(point.size()) != f.var_count())
    throw DomainError("evaluation point has " + std::to_string(point.size()) + " coordinates, expected " +
                      std::to_string(f.var_count()));
  for (const Complex& x : point) {
    const double dev = std::abs(std::abs(x) - 1.0);
    if (!(dev <= 1e-6)) throw DomainError("evaluation point is not on the unit torus");
    if (dev > 1e-12 && !warned_off_torus.exchange(true))
      std::clog << "bdl: warning: evaluation point off the unit torus by " << dev << "\n";
  }
  if (f.is_zero()) return {0.0, 0.0};
  // Per-variable power tables over the exponent range, built by repeated
  // multiplication from x^0 outward.
  const auto ranges = f.exponent_ranges();
  std::vector<std::vector<Complex>> powers(f.var_count());
  for (int v = 0; v < f.var_count(); ++v) {
    const auto [lo, hi] = ranges[v];
    auto& table = powers[v];
    table.assign(hi - lo + 1, Complex(1.0, 0.0));
    const Complex x = point[v];
    const Complex xinv = 1.0 / x;
    Complex p(1.0, 0.0);
    for (int e = 1; e <= hi; ++e) {
      p *= x;
      if (e >= lo) table[e - lo] = p;
    }
    p = Complex(1.0, 0.0);
    for (int e = -1; e >= lo; --e) {
      p *= xinv;
      if (e <= hi) table[e - lo] = p;
    }
    if (lo <= 0 && 0 <= hi) table[-lo] = Complex(1.0, 0.0);
  }
  Complex sum(0.0, 0.0);
  for (const auto& [e, c] : f.terms()) {
    Complex m(c.get_d(), 0.0);
    for (int v = 0; v < f.var_count(); ++v) m *= powers[v][e[v] - ranges[v].first];
    sum += m;
  }
  return sum;
}

// -------------------------------------------------------------- LaurentMatrix

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols, int var_count)
    : rows_(rows), cols_(cols), vars_(var_count), cells_(rows * cols, LaurentPoly(var_count)) {}

LaurentMatrix::LaurentMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), vars_(1) {
  if (rows_ == 0 || cols_ == 0) throw DomainError("empty matrix literal");
  vars_ = rows.begin()->begin()->var_count();
  cells_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DomainError("ragged matrix literal");
    for (const auto& p : row) {
      require_same_vars(vars_, p.var_count());
      cells_.push_back(p);
    }
  }
}

LaurentMatrix LaurentMatrix::identity(std::size_t d, int var_count) {
  LaurentMatrix m(d, d, var_count);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = LaurentPoly::constant(var_count, 1);
  return m;
}

std::size_t LaurentMatrix::term_count() const noexcept {
  std::size_t n = 0;
  for (const auto& c : cells_) n += c.term_count();
  return n;
}

bool LaurentMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
  return true;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimensions do not match for multiplication");
  require_same_vars(a.vars_, b.vars_);
  LaurentMatrix out(a.rows_, b.cols_, a.vars_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      LaurentPoly acc(a.vars_);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k);
        const auto& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
      }
      out(i, j) = std::move(acc);
    }
  return out;
}

LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix dimensions differ");
  require_same_vars(a.vars_, b.vars_);
  LaurentMatrix out = a;
  for (std::size_t i = 0; i < out.cells_.size(); ++i) out.cells_[i] += b.cells_[i];
  return out;
}

LaurentMatrix LaurentMatrix::transposed() const {
  LaurentMatrix out(cols_, rows_, vars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

LaurentMatrix LaurentMatrix::inverted_variables() const {
  LaurentMatrix out(rows_, cols_, vars_);
  for (std::size_t i = 0; i < cells_.size(); ++i)
    for (const auto& [e, c] : cells_[i].terms()) {
      Exponent f = e;
      for (int& x : f) x = -x;
      out.cells_[i].add_term(f, c);
    }
  return out;
}

LaurentMatrix power(const LaurentMatrix& a, unsigned k) {
  if (!a.is_square()) throw DomainError("power of a non-square matrix");
  LaurentMatrix result = LaurentMatrix::identity(a.rows(), a.var_count());
  for (unsigned i = 0; i < k; ++i) result = result * a;
  return result;
}

LaurentPoly trace(const LaurentMatrix& a) {
  if (!a.is_square()) throw DomainError("trace of a non-square matrix");
  LaurentPoly t(a.var_count());
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

std::vector<LaurentPoly> characteristic_polynomial(const LaurentMatrix& a) {
  if (!a.is_square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t d = a.rows();
  const int vars = a.var_count();
  // Faddeev-LeVerrier: M_1 = I, c_{d-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{d-k} I.
  std::vector<LaurentPoly> c(d + 1, LaurentPoly(vars));
  c[d] = LaurentPoly::constant(vars, 1);
  LaurentMatrix m = LaurentMatrix::identity(d, vars);
  for (std::size_t k = 1; k <= d; ++k) {
    const LaurentMatrix am = a * m;
    c[d - k] = (-trace(am)).exact_divide(Integer(static_cast<unsigned long>(k)));
    m = am;
    for (std::size_t i = 0; i < d; ++i) m(i, i) += c[d - k];
  }
  return c;
}

LaurentMatrix inverse(const LaurentMatrix& a) {
  if (!a.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t d = a.rows();
  const int vars = a.var_count();
  // Same recurrence as above, keeping M_d: A M_d = -c_0 I, so A^{-1} = -M_d / c_0.
  LaurentMatrix m = LaurentMatrix::identity(d, vars);
  LaurentMatrix m_prev = m;
  LaurentPoly c0(vars);
  for (std::size_t k = 1; k <= d; ++k) {
    const LaurentMatrix am = a * m;
    const LaurentPoly ck = (-trace(am)).exact_divide(Integer(static_cast<unsigned long>(k)));
    m_prev = m;
    m = am;
    for (std::size_t i = 0; i < d; ++i) m(i, i) += ck;
    if (k == d) c0 = ck;
  }
  if (!c0.is_unit_monomial()) throw DomainError("matrix is not invertible over the Laurent ring");
  const auto& [e, c] = *c0.terms().begin();
  Exponent inv_e = e;
  for (int& x : inv_e) x = -x;
  const LaurentPoly scale = LaurentPoly::monomial(inv_e, -c);  // -1/c0, c = +-1
  LaurentMatrix out(d, d, vars);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i, j) = m_prev(i, j) * scale;
  return out;
}

std::vector<std::vector<Integer>> matrix_norm(const LaurentMatrix& a) {
  std::vector<std::vector<Integer>> out(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = norm(a(i, j));
  return out;
}

Integer trace_of_norm(const LaurentMatrix& a) {
  if (!a.is_square()) throw DomainError("trace of a non-square matrix");
  Integer s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) s += norm(a(i, i));
  return s;
}

Integer norm_of_trace(const LaurentMatrix& a) { return norm(trace(a)); }

Integer total_norm(const LaurentMatrix& a) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += norm(a(i, j));
  return s;
}

ComplexMatrix matrix_eval(const LaurentMatrix& a, std::span<const Complex> point) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = eval(a(i, j), point);
  return out;
}

}  // namespace bdl
