#pragma once

namespace psent {

/// Error function. Absolute error below 1e-14 on the whole real line:
/// a positive-term series for |x| < 3, the erfc continued fraction beyond.
double erf(double x);

/// Complementary error function 1 - erf(x), accurate in relative terms for
/// large positive x.
double erfc(double x);

}  // namespace psent
