#include "edgedepth/gf_rank.hpp"

#include <bit>

namespace edgedepth {

void Gf2RankAccumulator::add_column(std::vector<std::uint64_t>& col) {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    int p = pivots_[i];
    if ((col[static_cast<std::size_t>(p >> 6)] >> (p & 63)) & 1u) {
      const auto& b = basis_[i];
      for (int w = 0; w < words_; ++w) col[static_cast<std::size_t>(w)] ^= b[static_cast<std::size_t>(w)];
    }
  }
  for (int w = 0; w < words_; ++w) {
    if (col[static_cast<std::size_t>(w)]) {
      pivots_.push_back(w * 64 + std::countr_zero(col[static_cast<std::size_t>(w)]));
      basis_.push_back(col);
      return;
    }
  }
}

int gfp_rank(std::vector<std::vector<std::int32_t>> cols, int rows, int p) {
  // modular inverse by Fermat
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, b = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };

  int rank = 0;
  std::size_t ncols = cols.size();
  for (int r = 0; r < rows && rank < static_cast<int>(ncols); ++r) {
    std::size_t piv = static_cast<std::size_t>(-1);
    for (std::size_t c = static_cast<std::size_t>(rank); c < ncols; ++c) {
      if (cols[c][static_cast<std::size_t>(r)] % p != 0) {
        piv = c;
        break;
      }
    }
    if (piv == static_cast<std::size_t>(-1)) continue;
    std::swap(cols[static_cast<std::size_t>(rank)], cols[piv]);
    auto& pc = cols[static_cast<std::size_t>(rank)];
    std::int64_t iv = inv(((pc[static_cast<std::size_t>(r)] % p) + p) % p);
    for (std::size_t c = static_cast<std::size_t>(rank) + 1; c < ncols; ++c) {
      std::int64_t f = ((cols[c][static_cast<std::size_t>(r)] % p) + p) % p;
      if (f == 0) continue;
      std::int64_t mult = f * iv % p;
      for (int k = r; k < rows; ++k) {
        std::int64_t v = cols[c][static_cast<std::size_t>(k)] -
                         mult * pc[static_cast<std::size_t>(k)] % p;
        cols[c][static_cast<std::size_t>(k)] = static_cast<std::int32_t>(((v % p) + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace edgedepth
