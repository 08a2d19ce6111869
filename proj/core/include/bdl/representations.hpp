#pragma once

#include <string_view>

#include "bdl/braid.hpp"
#include "bdl/laurent.hpp"

namespace bdl {

enum class RepKind {
  burau_reduced,    ///< variable t, dimension n-1
  lkb,              ///< variables (q, t), dimension n(n-1)/2
  fox_specialized,  ///< variable t, dimension n (unreduced Burau)
};

std::string_view to_string(RepKind kind);
/// Accepts "burau", "lkb", "fox" and the enum spellings.
RepKind parse_rep_kind(std::string_view text);

/// Expected matrix dimension and variable count for a kind on n strands.
std::size_t rep_dimension(RepKind kind, int n);
int rep_var_count(RepKind kind);

struct RepMatrixBundle {
  RepKind kind;
  LaurentMatrix matrix;
  BraidWord braid;
};

/// |Lambda| for the degree-m basis on n strands: binomial(n + m - 2, m).
/// Throws RangeError unless n >= 2 and m >= 0.
Integer dim_basis(int n, int m);

/// Image of a single Artin letter (sign = inversion). Generator images are
/// built once per (kind, n, letter) and cached.
const LaurentMatrix& generator_matrix(RepKind kind, int n, int letter);

/// Product of generator matrices over the letters, left to right, so that
/// rep(ab) = rep(a) * rep(b).
RepMatrixBundle burau_reduced(const BraidWord& b);
RepMatrixBundle lkb_matrix(const BraidWord& b);
/// fox_matrix(b) under x_j -> t.
RepMatrixBundle specialize_fox(const BraidWord& b);

RepMatrixBundle representation(RepKind kind, const BraidWord& b);

}  // namespace bdl
