#pragma once

#include <cstdint>
#include <vector>

namespace edgedepth {

/// Incremental column-echelon rank over GF(2). Columns are bit-packed;
/// feed columns one at a time, read `rank()` at any point.
class Gf2RankAccumulator {
 public:
  explicit Gf2RankAccumulator(int rows)
      : words_((rows + 63) / 64) {}

  /// col: packed bit-vector with words_ words. Consumed destructively.
  void add_column(std::vector<std::uint64_t>& col);
  int rank() const { return static_cast<int>(basis_.size()); }
  int words() const { return words_; }

 private:
  int words_;
  std::vector<std::vector<std::uint64_t>> basis_;  // echelon columns
  std::vector<int> pivots_;                        // pivot bit of each basis column
};

/// Rank over GF(p), p an odd prime, via dense elimination.
/// cols[i] is a column of length `rows` with entries already reduced mod p.
int gfp_rank(std::vector<std::vector<std::int32_t>> cols, int rows, int p);

bool is_prime(int p);

}  // namespace edgedepth
