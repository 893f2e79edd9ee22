#pragma once

#include <array>
#include <complex>

#include "selberg/errors.hpp"

namespace selberg {

using cplx = std::complex<double>;

// Distance below which an argument counts as sitting on a nonpositive integer.
inline constexpr double kPoleTol = 1e-12;

bool near_nonpositive_integer(cplx z, double tol = kPoleTol);

// log Gamma, principal in the sense that exp(log_gamma(z)) = Gamma(z); for
// real z with Gamma(z) < 0 the imaginary part is +pi.
cplx log_gamma(cplx z);

// Gamma itself; throws pole_error within kPoleTol of 0, -1, -2, ...
cplx gamma(cplx z);

// exp(log_gamma(a) - log_gamma(b)), stable for large |a|,|b|.
cplx gamma_ratio(cplx a, cplx b);

// 1/Gamma(z), entire (0 at the poles).
cplx rgamma(cplx z);

// Digamma.
cplx digamma(cplx z);

// Paper-convention Beta: B(a,b) = Gamma(1+a)Gamma(1+b)/Gamma(2+a+b).
cplx beta_mero(cplx a, cplx b);

// Gauss 2F1 with series + connection transformations (incl. the logarithmic
// cases). Principal branch, cut along [1, inf).
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z);

// 3F2 at unit argument. Requires Re(b1+b2-a1-a2-a3) > 0 or a terminating
// series; throws divergent_series otherwise.
cplx hyp3f2_at1(const std::array<cplx, 3>& a, const std::array<cplx, 2>& b);

// F_k(g) = Gamma(1+k g)/Gamma(1+g) with the removable points g in Z^{<0}
// filled in by their limits.
cplx digamma_factor(int k, cplx g);

namespace detail {
// Pochhammer (x)_n for small n.
cplx pochhammer(cplx x, int n);
// Nearest integer to Re(z) if z lies within tol of that real integer,
// otherwise nullopt-like flag via the bool.
bool near_integer(cplx z, long& n, double tol = 1e-10);
} // namespace detail

} // namespace selberg
