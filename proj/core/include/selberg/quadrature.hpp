#pragma once

#include <functional>

#include "selberg/functionals.hpp"
#include "selberg/poly.hpp"

namespace selberg {

struct QuadSettings {
    int max_level = 7;      // <= 12
    double target_rel = 1e-9; // >= 1e-14
    bool compactify = true;
    int min_level = 3;
    double domain_margin = 0.05;
    double contour_r = 1.0;
};

struct QuadResult {
    cplx value = 0.0;
    double err_est = 0.0;
    long evaluations = 0;
};

// Number of worker threads (SELBERG_THREADS env, else hardware concurrency).
int worker_count();

// tanh-sinh nodes over (0,1); level L uses step h = 2^-L. `x` is the node,
// `omx` its distance to 1 (exact to working precision), `w` the weight.
struct TsNode {
    double x, omx, w;
};
const std::vector<TsNode>& ts_nodes(int level);

// One-dimensional tanh-sinh integral of f over (0,1) at a given level;
// f(x, 1-x).
cplx ts_integrate_level(const std::function<cplx(double, double)>& f, int level);

// Adaptive driver: doubles levels until |I_L - I_{L-1}| <= target_rel |I_L|.
QuadResult ts_integrate(const std::function<cplx(double, double)>& f, const QuadSettings& s);

// S_{l,m,n}[F] by iterated tanh-sinh over the compactified region. Requires
// the Omega margin; throws out_of_domain / unconverged.
QuadResult selberg_quad(const RegionShape& shape, const LaurentPoly& F, const GenericParams& p,
                        const QuadSettings& s);

// As selberg_quad but integrating in reversed variable order (Fubini check).
QuadResult selberg_quad_reversed(const RegionShape& shape, const LaurentPoly& F,
                                 const GenericParams& p, const QuadSettings& s);

// I_{l,m,n}[F] as the phase-weighted sum over S_{l,m,n}^sigma.
QuadResult df_quad(const RegionShape& shape, const LaurentPoly& F, const GenericParams& p,
                   const QuadSettings& s);

// Appendix-style N=2 trapezoidal contour value
//   G(1+a)G(1+b)/G(2+a+b) * int_G z^(a+2g) (1-z)^b 2F1(-2g,1+a,2+a+b;1/z) dz
// over Gamma_{[0,1],+,r}.
QuadResult contour_df2(cplx alpha_p, cplx beta_p, cplx gamma, const QuadSettings& s);

// General five-slot variant (the b67 layout): prefactor on (a1,b1), contour
// exponents (a2,b2).
QuadResult contour_df2_general(cplx a1, cplx a2, cplx b1, cplx b2, cplx gamma,
                               const QuadSettings& s);

} // namespace selberg
