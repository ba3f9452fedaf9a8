#pragma once

namespace slitmon {

/// Error function from W. J. Cody's rational Chebyshev approximations
/// (Math. Comp. 23, 1969). Absolute error below 1e-15 on the real line in
/// double precision; exactly odd.
double erf(double x);

/// Complementary error function 1 - erf(x), accurate in the far tail.
double erfc(double x);

}  // namespace slitmon
