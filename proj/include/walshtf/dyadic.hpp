#ifndef WALSHTF_DYADIC_HPP
#define WALSHTF_DYADIC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace walshtf {

/// A nonnegative dyadic rational stored as the finite set of binary digit
/// positions n with a_n = 1, so the value is sum of 2^n over the set.
/// Position -1 is the first fractional digit. Always the terminating
/// expansion; never floating point.
class DyadicPoint {
 public:
  DyadicPoint() = default;
  explicit DyadicPoint(std::vector<int> digit_positions);

  static DyadicPoint zero() { return DyadicPoint(); }
  static DyadicPoint one() { return fromInteger(1); }
  static DyadicPoint fromInteger(std::uint64_t n);
  // value = numerator * 2^exponent, numerator >= 0
  static DyadicPoint fromScaled(std::uint64_t numerator, int exponent);

  const std::vector<int>& digits() const { return digits_; }
  bool isZero() const { return digits_.empty(); }
  bool hasDigit(int n) const;
  int lowestDigit() const;   // requires nonzero
  int highestDigit() const;  // requires nonzero

  double toDouble() const;
  // value as numerator/denominator with denominator a power of two
  void toFraction(std::uint64_t& num, std::uint64_t& den) const;
  // integer part of value * 2^{-scale}
  std::int64_t floorShifted(int scale) const;

  DyadicPoint shifted(int by) const;  // value * 2^by

  bool operator==(const DyadicPoint& o) const { return digits_ == o.digits_; }
  bool operator<(const DyadicPoint& o) const;

  std::string str() const;

 private:
  std::vector<int> digits_;  // sorted ascending
};

// digitwise addition mod 2 (xor of digit sets)
DyadicPoint xorAdd(const DyadicPoint& x, const DyadicPoint& y);
// GF(2) polynomial product of digit sequences
DyadicPoint carrylessMul(const DyadicPoint& x, const DyadicPoint& y);
// +1 when digit a_{-1} is 0, -1 when it is 1
int signE(const DyadicPoint& x);
// e(x (x) xi) = signE(carrylessMul(x, xi)); symmetric in its arguments
int character(const DyadicPoint& x, const DyadicPoint& xi);

/// The dyadic interval [2^scale * index, 2^scale * (index + 1)).
struct DyadicInterval {
  int scale = 0;
  std::int64_t index = 0;

  double length() const;
  double leftEndpoint() const;
  double rightEndpoint() const;
  DyadicPoint leftEndpointPoint() const;

  bool contains(const DyadicInterval& other) const;
  bool contains(const DyadicPoint& x) const;
  bool disjointFrom(const DyadicInterval& other) const;
  DyadicInterval parent() const;
  DyadicInterval leftChild() const;
  DyadicInterval rightChild() const;
  bool isLeftChild() const { return (index & 1) == 0; }

  bool operator==(const DyadicInterval& o) const = default;
  auto operator<=>(const DyadicInterval& o) const = default;

  std::string str() const;
};

/// Finite truncation of the half-line: time domain [0, 2^j) split into
/// cells of width 2^-k; the frequency domain is [0, 2^k) with cell width
/// 2^-j. Both sides have n = 2^(j+k) cells.
struct Grid {
  int j = 0;
  int k = 0;

  int logCells() const { return j + k; }
  std::size_t cellCount() const { return std::size_t{1} << (j + k); }
  double cellWidth() const;
  double domainLength() const;
  Grid frequencyGrid() const { return Grid{k, j}; }

  // time cell t = [t*2^-k, (t+1)*2^-k)
  DyadicPoint timePoint(std::size_t cell) const;
  DyadicInterval timeCell(std::size_t cell) const;
  // frequency cell s = [s*2^-j, (s+1)*2^-j)
  DyadicPoint frequencyPoint(std::size_t cell) const;

  // all dyadic intervals contained in the time domain, scales -k..j
  std::vector<DyadicInterval> timeIntervals() const;
  // cell range covered by a time interval; interval must fit the grid
  std::pair<std::size_t, std::size_t> cellRange(const DyadicInterval& iv) const;
  bool timeIntervalFits(const DyadicInterval& iv) const;
  // dyadic intervals in the frequency domain [0, 2^k), scales -j..k
  bool frequencyIntervalFits(const DyadicInterval& iv) const;
  std::pair<std::size_t, std::size_t> frequencyCellRange(const DyadicInterval& iv) const;

  bool operator==(const Grid& o) const = default;
};

/// A scalar- or H-valued function piecewise constant on grid cells.
/// Values are stored cell-major: values[cell * dim + component].
struct StepFunction {
  Grid grid;
  int dim = 1;
  std::vector<double> values;

  StepFunction() = default;
  StepFunction(Grid g, int d = 1)
      : grid(g), dim(d), values(g.cellCount() * static_cast<std::size_t>(d), 0.0) {}

  std::size_t cells() const { return grid.cellCount(); }
  double& at(std::size_t cell, int comp = 0) { return values[cell * dim + comp]; }
  double at(std::size_t cell, int comp = 0) const { return values[cell * dim + comp]; }
  std::span<const double> cell(std::size_t c) const {
    return {values.data() + c * dim, static_cast<std::size_t>(dim)};
  }
  std::span<double> cell(std::size_t c) {
    return {values.data() + c * dim, static_cast<std::size_t>(dim)};
  }

  double normL2() const;
  double normLq(double q) const;
  double supAbs() const;
};

}  // namespace walshtf

#endif
