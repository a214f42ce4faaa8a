#include "walshtf/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace walshtf {

int walshFunction(std::uint64_t l, const DyadicPoint& x) {
  if (!x.digits().empty() && x.highestDigit() >= 0) return 0;  // x >= 1
  if (l == 0) return 1;
  // x in [0,1); descend the recursion one digit at a time
  bool right = x.hasDigit(-1);
  // y = 2x or 2x - 1: digits shift up by one, digit 0 dropped
  std::vector<int> ydigits;
  for (int n : x.digits())
    if (n != -1) ydigits.push_back(n + 1);
  int sub = walshFunction(l >> 1, DyadicPoint(std::move(ydigits)));
  return ((l & 1) && right) ? -sub : sub;
}

namespace {

// in-place natural-order fast Walsh-Hadamard butterfly, componentwise
void fwhtInPlace(std::vector<double>& v, std::size_t n, int dim) {
  for (std::size_t stride = 1; stride < n; stride <<= 1)
    for (std::size_t base = 0; base < n; base += 2 * stride)
      for (std::size_t t = base; t < base + stride; ++t)
        for (int d = 0; d < dim; ++d) {
          double a = v[t * dim + d];
          double b = v[(t + stride) * dim + d];
          v[t * dim + d] = a + b;
          v[(t + stride) * dim + d] = a - b;
        }
}

std::size_t reverseBits(std::size_t x, int bits) {
  std::size_t r = 0;
  for (int b = 0; b < bits; ++b)
    if (x & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
  return r;
}

}  // namespace

StepFunction walshFourier(const StepFunction& f) {
  const int logn = f.grid.logCells();
  const std::size_t n = f.grid.cellCount();
  if (f.values.size() != n * static_cast<std::size_t>(f.dim))
    throw std::invalid_argument("walshFourier: value vector does not match grid");

  // The character pairing e(x (x) xi) at time cell t and frequency cell s
  // equals (-1)^<t, rev(s)>, so the transform is the natural-order butterfly
  // followed by bit reversal of the output index and the cell-width factor.
  StepFunction out(f.grid.frequencyGrid(), f.dim);
  std::vector<double> work = f.values;
  fwhtInPlace(work, n, f.dim);
  const double scale = f.grid.cellWidth();
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t rs = reverseBits(s, logn);
    for (int d = 0; d < f.dim; ++d) out.values[s * f.dim + d] = scale * work[rs * f.dim + d];
  }
  return out;
}

StepFunction conditionalExpectation(const StepFunction& f, int kLevel) {
  StepFunction out(f.grid, f.dim);
  if (kLevel == kInfinity) return out;
  if (kLevel <= -f.grid.k) return f;
  int level = std::min(kLevel, f.grid.j);
  const std::size_t block = std::size_t{1} << (level + f.grid.k);
  const std::size_t n = f.grid.cellCount();
  for (std::size_t start = 0; start < n; start += block) {
    for (int d = 0; d < f.dim; ++d) {
      double sum = 0.0;
      for (std::size_t c = start; c < start + block; ++c) sum += f.at(c, d);
      double avg = sum / static_cast<double>(block);
      for (std::size_t c = start; c < start + block; ++c) out.at(c, d) = avg;
    }
  }
  return out;
}

StepFunction maximalFunction(const StepFunction& f, double s) {
  if (f.dim != 1) throw std::invalid_argument("maximalFunction: scalar input required");
  if (s < 1.0) throw std::invalid_argument("maximalFunction: s >= 1 required");
  const std::size_t n = f.grid.cellCount();
  StepFunction out(f.grid, 1);
  std::vector<double> pow_s(n);
  for (std::size_t c = 0; c < n; ++c) pow_s[c] = std::pow(std::abs(f.values[c]), s);
  // walk scales from cells upward, keeping block averages of |f|^s
  std::vector<double> avg = pow_s;
  for (std::size_t c = 0; c < n; ++c) out.values[c] = std::pow(avg[c], 1.0 / s);
  std::size_t blocks = n;
  while (blocks > 1) {
    blocks >>= 1;
    for (std::size_t b = 0; b < blocks; ++b) avg[b] = 0.5 * (avg[2 * b] + avg[2 * b + 1]);
    std::size_t width = n / blocks;
    for (std::size_t b = 0; b < blocks; ++b) {
      double val = std::pow(avg[b], 1.0 / s);
      for (std::size_t c = b * width; c < (b + 1) * width; ++c)
        out.values[c] = std::max(out.values[c], val);
    }
  }
  return out;
}

StepFunction bandProjection(const StepFunction& f, const DyadicInterval& omega) {
  Grid freq = f.grid.frequencyGrid();
  auto [first, last] = f.grid.frequencyCellRange(omega);
  StepFunction fhat = walshFourier(f);
  StepFunction clipped(freq, f.dim);
  for (std::size_t c = first; c < last; ++c)
    for (int d = 0; d < f.dim; ++d) clipped.at(c, d) = fhat.at(c, d);
  return walshFourier(clipped);
}

StepFunction applyMultiplier(const StepFunction& f, std::span<const double> m) {
  if (m.size() != f.grid.cellCount())
    throw std::invalid_argument("applyMultiplier: multiplier length mismatch");
  StepFunction fhat = walshFourier(f);
  for (std::size_t c = 0; c < fhat.cells(); ++c)
    for (int d = 0; d < f.dim; ++d) fhat.at(c, d) *= m[c];
  return walshFourier(fhat);
}

}  // namespace walshtf
