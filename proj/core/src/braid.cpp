#include "bdl/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "bdl/errors.hpp"

namespace bdl {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

void check_strands(int n) {
  if (n < 2) throw RangeError("strand count must be at least 2, got " + std::to_string(n));
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<int> letters) : n_(n), letters_(std::move(letters)) {
  check_strands(n);
  for (int g : letters_) {
    if (g == 0 || std::abs(g) > n - 1)
      throw RangeError("generator " + std::to_string(g) + " out of range for B_" + std::to_string(n));
  }
}

bool BraidWord::is_freely_reduced() const noexcept {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == -letters_[i - 1]) return false;
  return true;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
      throw DomainError("permutation images are not a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw DomainError("permutation sizes differ");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = next(images_[i]);
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

BraidWord parse_braid(std::string_view text, int n) {
  check_strands(n);
  std::vector<int> letters;
  text = trim(text);
  if (text.empty()) return BraidWord(n);
  while (true) {
    const auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw ParseError("malformed braid letter '" + std::string(token) + "'");
    if (value == 0) throw ParseError("braid letter 0 is not a generator");
    letters.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return BraidWord(n, std::move(letters));
}

BraidWord free_reduce(const BraidWord& a) {
  std::vector<int> out;
  out.reserve(a.length());
  for (int g : a.letters()) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return BraidWord(a.strands(), std::move(out));
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw DomainError("cannot compose braids on " + std::to_string(a.strands()) + " and " +
                      std::to_string(b.strands()) + " strands");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return free_reduce(BraidWord(a.strands(), std::move(letters)));
}

BraidWord inverse(const BraidWord& a) {
  std::vector<int> letters(a.letters().rbegin(), a.letters().rend());
  for (int& g : letters) g = -g;
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord power(const BraidWord& a, std::int64_t k) {
  const BraidWord base = k < 0 ? inverse(a) : a;
  const auto copies = static_cast<std::size_t>(k < 0 ? -k : k);
  std::vector<int> letters;
  letters.reserve(copies * base.length());
  for (std::size_t i = 0; i < copies; ++i)
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

Permutation permutation(const BraidWord& a) {
  // Track where each strand position ends up: letter g swaps positions g, g+1.
  std::vector<int> position(a.strands());
  std::iota(position.begin(), position.end(), 1);
  for (int g : a.letters()) {
    const int i = std::abs(g);
    for (int& p : position) {
      if (p == i)
        p = i + 1;
      else if (p == i + 1)
        p = i;
    }
  }
  return Permutation(std::move(position));
}

std::int64_t exponent_sum(const BraidWord& a) {
  std::int64_t sum = 0;
  for (int g : a.letters()) sum += g > 0 ? 1 : -1;
  return sum;
}

}  // namespace bdl
