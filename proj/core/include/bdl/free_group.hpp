#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bdl/braid.hpp"
#include "bdl/laurent.hpp"

namespace bdl {

/// Freely reduced word in x_1..x_n; letter i > 0 is x_i, i < 0 is x_|i|^{-1}.
/// Words compare lexicographically by letter value.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces `letters` on construction.
  explicit FreeWord(std::vector<int> letters);
  static FreeWord generator(int i) { return FreeWord({i}); }

  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  FreeWord inverse() const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  /// "x1*x2*x1^-1"; the empty word prints as "1".
  std::string to_string() const;

 private:
  std::vector<int> letters_;
};

/// Element z^z_exp * word of the mapping-torus group, presented by
/// g z = z f(g) where f is the Artin automorphism of the braid. Ordered by
/// (z_exp, word).
struct GammaElement {
  std::int64_t z_exp = 0;
  FreeWord word;

  friend auto operator<=>(const GammaElement&, const GammaElement&) = default;
  friend bool operator==(const GammaElement&, const GammaElement&) = default;
};

/// Finite integer combination of mapping-torus group elements.
class GroupRingElement {
 public:
  using TermMap = std::map<GammaElement, Integer>;

  GroupRingElement() = default;
  static GroupRingElement one() { return of(GammaElement{}); }
  static GroupRingElement of(const GammaElement& g, const Integer& c = 1);
  static GroupRingElement of(const FreeWord& w, const Integer& c = 1) { return of(GammaElement{0, w}, c); }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const GammaElement& g, const Integer& c);
  Integer coefficient(const GammaElement& g) const;

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  GroupRingElement& operator*=(const Integer& c);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(GroupRingElement a) { return a *= Integer(-1); }
  /// Product in the free group ring; both operands must have z_exp = 0
  /// throughout (use `MappingTorus::multiply` otherwise).
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  /// Same element with every term's z exponent replaced by `z_exp`.
  GroupRingElement with_z(std::int64_t z_exp) const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Sum of absolute coefficients after collection.
Integer norm(const GroupRingElement& u);

/// Ring map x_j -> t, z -> 1 into Z[t^{+-1}].
LaurentPoly specialize(const GroupRingElement& u);

/// Automorphism of F_n given by the images of x_1..x_n.
class FreeAutomorphism {
 public:
  explicit FreeAutomorphism(std::vector<FreeWord> images);
  static FreeAutomorphism identity(int n);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const noexcept { return images_; }

  FreeWord apply(const FreeWord& w) const;
  GroupRingElement apply(const GroupRingElement& u) const;
  /// (*this) o inner: x -> this(inner(x)).
  FreeAutomorphism after(const FreeAutomorphism& inner) const;

  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;

 private:
  std::vector<FreeWord> images_;
};

/// Images of x_1..x_n under the Artin action of `b`. Generators act by
/// sigma_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i, and the map
/// b -> artin_image(b) is a homomorphism: artin_image(ab) = artin_image(a)
/// o artin_image(b).
FreeAutomorphism artin_automorphism(const BraidWord& b);
std::vector<FreeWord> artin_image(const BraidWord& b);

/// Fox derivative d w / d x_i (1-based i, 1 <= i <= n). Throws RangeError
/// otherwise.
GroupRingElement fox_derivative(const FreeWord& w, int i, int n);

/// Rectangular matrix over the group ring.
class GroupRingMatrix {
 public:
  GroupRingMatrix(std::size_t rows, std::size_t cols);
  static GroupRingMatrix identity(std::size_t d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  GroupRingElement& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  const GroupRingElement& operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

  friend GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b);
  friend bool operator==(const GroupRingMatrix&, const GroupRingMatrix&) = default;

  GroupRingMatrix apply(const FreeAutomorphism& f) const;
  GroupRingElement trace() const;
  LaurentMatrix specialize() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GroupRingElement> cells_;
};

/// Entry (i, j) is d(artin_image(b)_j) / d x_i. Fox matrices compose by
/// fox_matrix(ab)_{ij} = sum_k f_a(fox_matrix(b)_{kj}) * fox_matrix(a)_{ik}.
GroupRingMatrix fox_matrix(const BraidWord& b);

/// The group ring of the mapping torus of a braid's Artin automorphism f,
/// with multiplication (z^a u)(z^b v) = z^{a+b} f^b(u) v.
class MappingTorus {
 public:
  explicit MappingTorus(const BraidWord& b);

  const BraidWord& braid() const noexcept { return braid_; }
  /// f^k for any integer k.
  FreeAutomorphism power(std::int64_t k) const;

  GroupRingElement multiply(const GroupRingElement& u, const GroupRingElement& v) const;

 private:
  BraidWord braid_;
  FreeAutomorphism forward_;
  FreeAutomorphism backward_;
};

struct Zeta1Sample {
  int k = 0;
  /// sum_i || (M_k)_ii ||
  Integer trace_of_norms;
  /// || sum_i (M_k)_ii || with equal group elements collected.
  Integer norm_of_collected_trace;
};

inline constexpr std::size_t kDefaultTermCap = 10'000'000;

/// Trace norms of M_k = z^k * fox_matrix(b^k) for k = 1..kmax. Diagonal
/// entries are collected through a prefix trie of the images of b^k, so
/// memory is linear in the word lengths. Throws ResourceLimit once the
/// letters or terms involved exceed `term_cap`.
std::vector<Zeta1Sample> zeta1_trace_data(const BraidWord& b, int kmax,
                                          std::size_t term_cap = kDefaultTermCap);

}  // namespace bdl
