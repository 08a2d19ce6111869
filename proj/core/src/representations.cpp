#include "bdl/representations.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <tuple>

#include "bdl/errors.hpp"
#include "bdl/free_group.hpp"

namespace bdl {

std::string_view to_string(RepKind kind) {
  switch (kind) {
    case RepKind::burau_reduced: return "burau";
    case RepKind::lkb: return "lkb";
    case RepKind::fox_specialized: return "fox";
  }
  return "?";
}

RepKind parse_rep_kind(std::string_view text) {
  if (text == "burau" || text == "burau_reduced") return RepKind::burau_reduced;
  if (text == "lkb") return RepKind::lkb;
  if (text == "fox" || text == "fox_specialized") return RepKind::fox_specialized;
  throw ParseError("unknown representation kind '" + std::string(text) + "'");
}

std::size_t rep_dimension(RepKind kind, int n) {
  switch (kind) {
    case RepKind::burau_reduced: return static_cast<std::size_t>(n - 1);
    case RepKind::lkb: return static_cast<std::size_t>(n) * (n - 1) / 2;
    case RepKind::fox_specialized: return static_cast<std::size_t>(n);
  }
  return 0;
}

int rep_var_count(RepKind kind) { return kind == RepKind::lkb ? 2 : 1; }

Integer dim_basis(int n, int m) {
  if (n < 2 || m < 0)
    throw RangeError("dim_basis needs n >= 2 and m >= 0, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n + m - 2), static_cast<unsigned long>(m));
  return out;
}

namespace {

// Variable layout: Burau and the Fox specialization use t as variable 0;
// LKB uses (q, t) as variables (0, 1).
LaurentPoly t1(int power = 1) { return LaurentPoly::variable(1, 0, power); }
LaurentPoly q2(int power = 1) { return LaurentPoly::variable(2, 0, power); }
LaurentPoly t2(int power = 1) { return LaurentPoly::variable(2, 1, power); }
LaurentPoly one(int vars) { return LaurentPoly::constant(vars, 1); }

/// sigma_i acts on rows/cols (i-1, i, i+1) of the reduced Burau matrix
/// through the block [[1,0,0],[t,-t,1],[0,0,1]], clipped to 1..n-1.
LaurentMatrix burau_generator(int n, int i) {
  const std::size_t d = n - 1;
  LaurentMatrix m = LaurentMatrix::identity(d, 1);
  const std::size_t r = i - 1;  // 0-based row of index i
  m(r, r) = -t1();
  if (i - 1 >= 1) m(r, r - 1) = t1();
  if (i + 1 <= n - 1) m(r, r + 1) = one(1);
  return m;
}

std::size_t pair_index(int n, int j, int k) {
  // Lexicographic order on 1 <= j < k <= n.
  std::size_t idx = 0;
  for (int a = 1; a < j; ++a) idx += n - a;
  return idx + (k - j - 1);
}

/// Column (j,k) holds the image of v_{j,k} under sigma_i (Bigelow's form of
/// the Lawrence-Krammer representation).
LaurentMatrix lkb_generator(int n, int i) {
  const std::size_t d = static_cast<std::size_t>(n) * (n - 1) / 2;
  LaurentMatrix m(d, d, 2);
  const LaurentPoly q = q2();
  const LaurentPoly t = t2();
  const LaurentPoly q2_minus_q = q * q - q;
  const LaurentPoly one_minus_q = one(2) - q;
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      const std::size_t col = pair_index(n, j, k);
      auto put = [&](int a, int b, const LaurentPoly& c) { m(pair_index(n, a, b), col) += c; };
      if (i != j - 1 && i != j && i != k - 1 && i != k) {
        put(j, k, one(2));
      } else if (i == j - 1) {
        put(i, k, q);
        put(i, j, q2_minus_q);
        put(j, k, one_minus_q);
      } else if (i == j && i != k - 1) {
        put(j + 1, k, one(2));
      } else if (i == k - 1 && i != j) {
        put(j, i, q);
        put(j, k, one_minus_q);
        put(i, k, -(q2_minus_q * t));
      } else if (i == k) {
        put(j, k + 1, one(2));
      } else {  // i == j == k - 1
        put(j, k, -(t * q * q));
      }
    }
  return m;
}

/// x_j -> t image of the Fox matrix of a single letter.
LaurentMatrix fox_generator(int n, int letter) { return fox_matrix(BraidWord(n, {letter})).specialize(); }

LaurentMatrix build_generator(RepKind kind, int n, int letter) {
  const int i = std::abs(letter);
  if (kind == RepKind::fox_specialized) return fox_generator(n, letter);
  LaurentMatrix m = kind == RepKind::burau_reduced ? burau_generator(n, i) : lkb_generator(n, i);
  return letter > 0 ? m : inverse(m);
}

LaurentMatrix product(RepKind kind, const BraidWord& b) {
  LaurentMatrix m = LaurentMatrix::identity(rep_dimension(kind, b.strands()), rep_var_count(kind));
  for (int letter : b.letters()) m = m * generator_matrix(kind, b.strands(), letter);
  return m;
}

}  // namespace

const LaurentMatrix& generator_matrix(RepKind kind, int n, int letter) {
  if (n < 2 || letter == 0 || std::abs(letter) > n - 1)
    throw RangeError("generator " + std::to_string(letter) + " out of range for B_" + std::to_string(n));
  static std::mutex mutex;
  static std::map<std::tuple<RepKind, int, int>, LaurentMatrix> cache;
  const std::lock_guard lock(mutex);
  const auto key = std::make_tuple(kind, n, letter);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_generator(kind, n, letter)).first;
  return it->second;  // std::map nodes are stable
}

RepMatrixBundle burau_reduced(const BraidWord& b) {
  return {RepKind::burau_reduced, product(RepKind::burau_reduced, b), b};
}

RepMatrixBundle lkb_matrix(const BraidWord& b) { return {RepKind::lkb, product(RepKind::lkb, b), b}; }

RepMatrixBundle specialize_fox(const BraidWord& b) {
  return {RepKind::fox_specialized, fox_matrix(b).specialize(), b};
}

RepMatrixBundle representation(RepKind kind, const BraidWord& b) {
  switch (kind) {
    case RepKind::burau_reduced: return burau_reduced(b);
    case RepKind::lkb: return lkb_matrix(b);
    case RepKind::fox_specialized: return specialize_fox(b);
  }
  throw DomainError("unknown representation kind");
}

}  // namespace bdl
