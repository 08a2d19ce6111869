#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bdl {

/// A word in the Artin generators of B_n. Letter g > 0 is sigma_g, g < 0 is
/// sigma_{|g|}^{-1}. Words are never rewritten with braid relations; two
/// words are equal only if their letter lists are.
class BraidWord {
 public:
  /// Throws RangeError if n < 2 or some |letter| is outside 1..n-1.
  BraidWord(int n, std::vector<int> letters = {});

  static BraidWord identity(int n) { return BraidWord(n); }

  int strands() const noexcept { return n_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  bool is_freely_reduced() const noexcept;

  /// "g1,g2,...,gk"; the identity prints as the empty string.
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_;
  std::vector<int> letters_;
};

/// images[i-1] is the image of i. Composition of permutations follows the
/// letters of a braid left to right: permutation(ab) = permutation(b) o
/// permutation(a), i.e. a acts first.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i - 1); }
  const std::vector<int>& images() const noexcept { return images_; }

  /// (*this) then `next`: result(i) = next(this(i)).
  Permutation then(const Permutation& next) const;
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Parses "g1,g2,...". Whitespace around tokens is ignored; the empty string
/// is the identity. No free reduction is applied.
BraidWord parse_braid(std::string_view text, int n);

BraidWord free_reduce(const BraidWord& a);
/// Concatenation followed by free reduction.
BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
/// Concatenation of |k| copies of a (or of inverse(a) for k < 0), without
/// reduction.
BraidWord power(const BraidWord& a, std::int64_t k);

Permutation permutation(const BraidWord& a);
std::int64_t exponent_sum(const BraidWord& a);

}  // namespace bdl
