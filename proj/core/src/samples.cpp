#include "bdl/samples.hpp"

namespace bdl::samples {

BraidWord random_braid(Rng& rng, int n, int length) {
  std::vector<int> letters;
  while (static_cast<int>(letters.size()) < length) {
    int g = rng.uniform(1, n - 1);
    if (rng.uniform(0, 1)) g = -g;
    if (!letters.empty() && letters.back() == -g) continue;
    letters.push_back(g);
  }
  return BraidWord(n, std::move(letters));
}

FreeWord random_free_word(Rng& rng, int n, int max_length) {
  const int length = rng.uniform(0, max_length);
  std::vector<int> letters;
  while (static_cast<int>(letters.size()) < length) {
    int g = rng.uniform(1, n);
    if (rng.uniform(0, 1)) g = -g;
    if (!letters.empty() && letters.back() == -g) continue;
    letters.push_back(g);
  }
  return FreeWord(std::move(letters));
}

LaurentPoly random_laurent(Rng& rng, int var_count, int span, int max_coeff) {
  std::vector<int> offset(var_count);
  for (int& o : offset) o = rng.uniform(-span, 0);
  LaurentPoly p(var_count);
  Exponent e(var_count, 0);
  std::vector<int> digit(var_count, 0);
  while (true) {
    for (int v = 0; v < var_count; ++v) e[v] = offset[v] + digit[v];
    p.add_term(e, rng.uniform(-max_coeff, max_coeff));
    int v = var_count - 1;
    while (v >= 0 && ++digit[v] > span) digit[v--] = 0;
    if (v < 0) break;
  }
  return p;
}

LaurentMatrix random_laurent_matrix(Rng& rng, std::size_t d, int var_count, int span, int max_coeff) {
  LaurentMatrix m(d, d, var_count);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = random_laurent(rng, var_count, span, max_coeff);
  return m;
}

}  // namespace bdl::samples
