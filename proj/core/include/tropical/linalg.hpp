#pragma once

// Max-plus matrices and the tropical determinant (the max-plus permanent).

#include <cstddef>
#include <optional>
#include <vector>

#include "tropical/maxplus.hpp"

namespace tropical {

class TropicalMatrix {
 public:
  // rows x cols, every entry Bottom.
  TropicalMatrix(std::size_t rows, std::size_t cols);
  TropicalMatrix(std::size_t rows, std::size_t cols, std::vector<MaxPlus> entries);

  // 1o on the diagonal, 0o elsewhere.
  static TropicalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const MaxPlus& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  MaxPlus& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  const std::vector<MaxPlus>& entries() const noexcept { return entries_; }

  TropicalMatrix transposed() const;

  friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MaxPlus> entries_;
};

// Throw DimensionMismatch on incompatible shapes.
TropicalMatrix mat_oplus(const TropicalMatrix& a, const TropicalMatrix& b);
TropicalMatrix mat_odot(const TropicalMatrix& a, const TropicalMatrix& b);

enum class DeterminantEngine {
  Permutation,  // exhaustive over all n! permutations, n <= 9
  Assignment,   // maximum-weight perfect matching, O(n^3)
};

inline constexpr std::size_t kPermutationEngineLimit = 9;

struct OptimalAssignment {
  MaxPlus weight;
  // row i is matched to column permutation[i]; empty when weight is Bottom
  std::vector<std::size_t> permutation;
};

// Throws NotSquare, and PermutationEngineTooLarge above the limit.
MaxPlus tropical_determinant(const TropicalMatrix& a,
                             DeterminantEngine engine = DeterminantEngine::Assignment);

// The maximizing permutation. The permutation engine returns the
// lexicographically first maximizer.
OptimalAssignment optimal_assignment(const TropicalMatrix& a, DeterminantEngine engine);

// Some finite entry in every row.
bool is_row_regular(const TropicalMatrix& a);

// |A| != 0o. Throws NotSquare.
bool is_det_regular(const TropicalMatrix& a);

}  // namespace tropical
