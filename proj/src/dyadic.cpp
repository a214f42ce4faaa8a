#include "walshtf/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace walshtf {

DyadicPoint::DyadicPoint(std::vector<int> digit_positions) : digits_(std::move(digit_positions)) {
  std::sort(digits_.begin(), digits_.end());
  digits_.erase(std::unique(digits_.begin(), digits_.end()), digits_.end());
}

DyadicPoint DyadicPoint::fromInteger(std::uint64_t n) { return fromScaled(n, 0); }

DyadicPoint DyadicPoint::fromScaled(std::uint64_t numerator, int exponent) {
  DyadicPoint p;
  for (int b = 0; b < 64; ++b)
    if (numerator & (std::uint64_t{1} << b)) p.digits_.push_back(b + exponent);
  return p;
}

bool DyadicPoint::hasDigit(int n) const {
  return std::binary_search(digits_.begin(), digits_.end(), n);
}

int DyadicPoint::lowestDigit() const {
  if (digits_.empty()) throw std::logic_error("lowestDigit of zero");
  return digits_.front();
}

int DyadicPoint::highestDigit() const {
  if (digits_.empty()) throw std::logic_error("highestDigit of zero");
  return digits_.back();
}

double DyadicPoint::toDouble() const {
  double v = 0.0;
  for (int n : digits_) v += std::ldexp(1.0, n);
  return v;
}

void DyadicPoint::toFraction(std::uint64_t& num, std::uint64_t& den) const {
  int shift = digits_.empty() ? 0 : std::max(0, -digits_.front());
  num = 0;
  for (int n : digits_) num |= std::uint64_t{1} << (n + shift);
  den = std::uint64_t{1} << shift;
}

std::int64_t DyadicPoint::floorShifted(int scale) const {
  std::int64_t v = 0;
  for (int n : digits_)
    if (n >= scale && n - scale < 63) v |= std::int64_t{1} << (n - scale);
  return v;
}

DyadicPoint DyadicPoint::shifted(int by) const {
  DyadicPoint p;
  p.digits_.reserve(digits_.size());
  for (int n : digits_) p.digits_.push_back(n + by);
  return p;
}

bool DyadicPoint::operator<(const DyadicPoint& o) const {
  // compare from the highest digit down
  auto a = digits_.rbegin(), b = o.digits_.rbegin();
  while (a != digits_.rend() && b != o.digits_.rend()) {
    if (*a != *b) return *a < *b;
    ++a;
    ++b;
  }
  return a == digits_.rend() && b != o.digits_.rend();
}

std::string DyadicPoint::str() const {
  std::uint64_t num, den;
  toFraction(num, den);
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

DyadicPoint xorAdd(const DyadicPoint& x, const DyadicPoint& y) {
  std::vector<int> out;
  std::set_symmetric_difference(x.digits().begin(), x.digits().end(), y.digits().begin(),
                                y.digits().end(), std::back_inserter(out));
  return DyadicPoint(std::move(out));
}

DyadicPoint carrylessMul(const DyadicPoint& x, const DyadicPoint& y) {
  std::set<int> acc;
  for (int a : x.digits())
    for (int b : y.digits()) {
      int n = a + b;
      auto it = acc.find(n);
      if (it == acc.end())
        acc.insert(n);
      else
        acc.erase(it);  // mod 2
    }
  return DyadicPoint(std::vector<int>(acc.begin(), acc.end()));
}

int signE(const DyadicPoint& x) { return x.hasDigit(-1) ? -1 : 1; }

int character(const DyadicPoint& x, const DyadicPoint& xi) {
  // (-1)^(sum over m of a_m(x) a_{-1-m}(xi)); only the parity of the number
  // of pairs (a, b) with a + b = -1 matters
  int parity = 0;
  for (int a : x.digits())
    if (xi.hasDigit(-1 - a)) parity ^= 1;
  return parity ? -1 : 1;
}

double DyadicInterval::length() const { return std::ldexp(1.0, scale); }
double DyadicInterval::leftEndpoint() const { return std::ldexp(static_cast<double>(index), scale); }
double DyadicInterval::rightEndpoint() const {
  return std::ldexp(static_cast<double>(index + 1), scale);
}

DyadicPoint DyadicInterval::leftEndpointPoint() const {
  if (index < 0) throw std::invalid_argument("dyadic interval with negative index");
  return DyadicPoint::fromScaled(static_cast<std::uint64_t>(index), scale);
}

bool DyadicInterval::contains(const DyadicInterval& other) const {
  if (other.scale > scale) return false;
  return (other.index >> (scale - other.scale)) == index;
}

bool DyadicInterval::contains(const DyadicPoint& x) const {
  return x.floorShifted(scale) == index;
}

bool DyadicInterval::disjointFrom(const DyadicInterval& other) const {
  return !contains(other) && !other.contains(*this);
}

DyadicInterval DyadicInterval::parent() const { return {scale + 1, index >> 1}; }
DyadicInterval DyadicInterval::leftChild() const { return {scale - 1, index * 2}; }
DyadicInterval DyadicInterval::rightChild() const { return {scale - 1, index * 2 + 1}; }

std::string DyadicInterval::str() const {
  std::ostringstream os;
  os << "[" << leftEndpoint() << "," << rightEndpoint() << ")";
  return os.str();
}

double Grid::cellWidth() const { return std::ldexp(1.0, -k); }
double Grid::domainLength() const { return std::ldexp(1.0, j); }

DyadicPoint Grid::timePoint(std::size_t cell) const {
  return DyadicPoint::fromScaled(cell, -k);
}

DyadicInterval Grid::timeCell(std::size_t cell) const {
  return {-k, static_cast<std::int64_t>(cell)};
}

DyadicPoint Grid::frequencyPoint(std::size_t cell) const {
  return DyadicPoint::fromScaled(cell, -j);
}

std::vector<DyadicInterval> Grid::timeIntervals() const {
  std::vector<DyadicInterval> out;
  for (int s = -k; s <= j; ++s) {
    std::int64_t count = std::int64_t{1} << (j - s);
    for (std::int64_t m = 0; m < count; ++m) out.push_back({s, m});
  }
  return out;
}

bool Grid::timeIntervalFits(const DyadicInterval& iv) const {
  if (iv.scale < -k || iv.scale > j) return false;
  std::int64_t count = std::int64_t{1} << (j - iv.scale);
  return iv.index >= 0 && iv.index < count;
}

std::pair<std::size_t, std::size_t> Grid::cellRange(const DyadicInterval& iv) const {
  if (!timeIntervalFits(iv)) throw std::invalid_argument("interval outside grid: " + iv.str());
  std::size_t width = std::size_t{1} << (iv.scale + k);
  std::size_t first = static_cast<std::size_t>(iv.index) * width;
  return {first, first + width};
}

bool Grid::frequencyIntervalFits(const DyadicInterval& iv) const {
  if (iv.scale < -j || iv.scale > k) return false;
  std::int64_t count = std::int64_t{1} << (k - iv.scale);
  return iv.index >= 0 && iv.index < count;
}

std::pair<std::size_t, std::size_t> Grid::frequencyCellRange(const DyadicInterval& iv) const {
  if (!frequencyIntervalFits(iv))
    throw std::invalid_argument("frequency interval outside grid: " + iv.str());
  std::size_t width = std::size_t{1} << (iv.scale + j);
  std::size_t first = static_cast<std::size_t>(iv.index) * width;
  return {first, first + width};
}

double StepFunction::normL2() const {
  double s = 0.0;
  for (double v : values) s += v * v;
  return std::sqrt(s * grid.cellWidth());
}

double StepFunction::normLq(double q) const {
  double s = 0.0;
  for (std::size_t c = 0; c < cells(); ++c) {
    double m2 = 0.0;
    for (int d = 0; d < dim; ++d) m2 += at(c, d) * at(c, d);
    s += std::pow(std::sqrt(m2), q);
  }
  return std::pow(s * grid.cellWidth(), 1.0 / q);
}

double StepFunction::supAbs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace walshtf
