#ifndef WALSHTF_TRANSFORM_HPP
#define WALSHTF_TRANSFORM_HPP

#include <limits>

#include "walshtf/dyadic.hpp"

namespace walshtf {

inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// l-th Walsh function, evaluated through the dyadic dilation recursion
/// W_0 = 1_[0,1), W_2l(x) = W_l(2x) + W_l(2x-1), W_2l+1(x) = W_l(2x) - W_l(2x-1).
/// Values are -1, 0 or +1; support is [0,1).
int walshFunction(std::uint64_t l, const DyadicPoint& x);

/// The Walsh-Fourier transform on a grid, realized as a fast
/// O(n log n) butterfly plus a bit-reversal reindexing of the character
/// pairing. The transform is its own inverse and an L2 isometry.
StepFunction walshFourier(const StepFunction& f);

/// Conditional expectation onto dyadic intervals of length 2^kLevel.
/// kLevel <= -grid.k returns f unchanged, kLevel >= grid.j averages over
/// the whole domain, kLevel == kInfinity gives the zero function.
StepFunction conditionalExpectation(const StepFunction& f, int kLevel);

/// Dyadic maximal function M_s f(x) = sup over grid intervals I containing x
/// of (|I|^-1 int_I |f|^s)^(1/s). Scalar f only, s >= 1.
StepFunction maximalFunction(const StepFunction& f, double s);

// (f^ 1_omega)v for a dyadic frequency interval, via two transforms
StepFunction bandProjection(const StepFunction& f, const DyadicInterval& omega);

// (f^ m)v for a multiplier given cellwise on the frequency grid
StepFunction applyMultiplier(const StepFunction& f, std::span<const double> m);

}  // namespace walshtf

#endif
