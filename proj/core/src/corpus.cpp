#include "gsheaf/corpus.hpp"

#include <random>

#include "gsheaf/error.hpp"
#include "gsheaf/lie_algebra.hpp"
#include "gsheaf/parabolic.hpp"

namespace gsheaf::corpus {

namespace {

using filt::Weight;

/// Traceless diagonal with value d_b on block b, from decreasing raw values.
Matrix block_diagonal(const std::vector<std::size_t>& blocks, const std::vector<Weight>& raw) {
  std::size_t n = 0;
  Weight total = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    n += blocks[b];
    total += raw[b] * static_cast<Weight>(blocks[b]);
  }
  Matrix d(n, n);
  std::size_t i = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t k = 0; k < blocks[b]; ++k, ++i) d(i, i) = Rational(static_cast<Weight>(n) * raw[b] - total);
  }
  return d;
}

void compositions(std::size_t n, std::vector<std::size_t>& prefix, std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    prefix.push_back(k);
    compositions(n - k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<filt::WeightedFlag> parabolic_flags(std::size_t n) {
  const auto g = lie::sl(n);
  std::vector<std::vector<std::size_t>> all;
  std::vector<std::size_t> prefix;
  compositions(n, prefix, all);
  std::vector<filt::WeightedFlag> flags;
  for (const auto& blocks : all) {
    const std::size_t k = blocks.size();
    std::vector<Weight> unit(k), uneven(k);
    for (std::size_t b = 0; b < k; ++b) {
      unit[b] = static_cast<Weight>(k - b);
      uneven[b] = b == 0 ? 0 : uneven[b - 1] - static_cast<Weight>(b);
    }
    flags.push_back(parab::filtration_from_element(g, lie::sl_coordinates(block_diagonal(blocks, unit))));
    if (k > 2) flags.push_back(parab::filtration_from_element(g, lie::sl_coordinates(block_diagonal(blocks, uneven))));
  }
  return flags;
}

filt::WeightedFlag random_algebra_flag(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw MathError("sl(n) requires n >= 2");
  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };

  std::vector<std::size_t> blocks;
  for (std::size_t left = n; left > 0;) {
    // At least two blocks, so the flag is never trivial.
    const long cap = left == n ? static_cast<long>(n) - 1 : static_cast<long>(left);
    const auto size = static_cast<std::size_t>(uniform(1, cap));
    blocks.push_back(size);
    left -= size;
  }
  std::vector<Weight> raw(blocks.size());
  for (std::size_t b = 1; b < raw.size(); ++b) raw[b] = raw[b - 1] - uniform(1, 3);

  // Product of elementary transvections I + t·E_ij: determinant 1, integral inverse.
  Matrix p = Matrix::identity(n);
  Matrix p_inv = Matrix::identity(n);
  const long moves = uniform(1, 2 * static_cast<long>(n));
  for (long k = 0; k < moves; ++k) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    const Rational t(uniform(-2, 2));
    Matrix e = Matrix::identity(n), e_inv = Matrix::identity(n);
    e(i, j) = t;
    e_inv(i, j) = -t;
    p = p * e;
    p_inv = e_inv * p_inv;
  }
  const Matrix v = p * block_diagonal(blocks, raw) * p_inv;
  return parab::filtration_from_element(lie::sl(n), lie::sl_coordinates(v));
}

}  // namespace gsheaf::corpus
