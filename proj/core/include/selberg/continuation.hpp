#pragma once

#include <functional>
#include <optional>

#include "selberg/quadrature.hpp"

namespace selberg {

// Taylor coefficient generator for the smooth factor at the expansion
// endpoint: coeff(j) returns c_j with psi(t) = sum c_j t^j.
struct TaylorOracle {
    std::function<cplx(int)> coeff;
};

struct insufficient_order : domain_error {
    using domain_error::domain_error;
};

// Boundary-Taylor continuation of int_0^T t^rho psi(t) dt + tail:
//   sum_{j<=J} c_j T^{rho+j+1}/(rho+j+1)
// + int_0^T t^{rho+J+1} E(t) dt  (E summed from the oracle's series tail)
// + tail().
// Throws pole_error when rho+j+1 vanishes for some j <= J, and
// insufficient_order when Re rho <= -J-2.
cplx continue_1d(cplx rho, const TaylorOracle& psi, double T, int J,
                 const std::function<cplx()>& tail);

// Meromorphically continued Euler Beta built on continue_1d (split at T,
// remainder integral by tanh-sinh); agrees with beta_mero.
cplx beta_continued(cplx alpha, cplx beta, double T = 0.5, int J = 12);

// Options for the N=2 continuation.
struct ContinueOptions {
    double T = 0.5;
    int J = 12;
    QuadSettings quad; // tail quadrature
    ContinueOptions() { quad.target_rel = 1e-11; }
};

// Continued S_2[F] in the (rho, lambda) chart (or its mirror), with inner
// lambda-integrals reduced to beta_mero values and the outer rho integral
// split into an analytic head and a quadrature tail.
cplx continue_s2(const GenericParams& p, const LaurentPoly& F,
                 const ContinueOptions& opt = ContinueOptions());

// N=2 closed form (the 3F2-at-1 formula) and its alpha<->beta mirror.
cplx s2_closed(const GenericParams& p);
cplx s2_closed_mirrored(const GenericParams& p);

// Insertion-shifted closed form: S_2[F](p) as a sum of monomial shifts of
// the 3F2 formula. F must be a polynomial in two variables.
cplx s2_closed_insertion(const GenericParams& p, const LaurentPoly& F);

// Selberg's product formula over the ordered simplex (1/N! convention).
// Returns 0 when a denominator Gamma sits at a pole and everything else is
// regular (the truncation zeros).
cplx selberg_closed(int N, const SymmetricParams& p);

// residue of S_2 at the hyperplane 2+a1+a2+2g+k = 0 with respect to that
// affine coordinate (eq-level Taylor/Beta expansion; k counts the full
// rho-power ladder including monomial shifts of F).
cplx residue_series(const LaurentPoly& F, int k, const GenericParams& p);

// ---------------------------------------------------------------------------
// Gamma factorizations
// ---------------------------------------------------------------------------

enum class FactorizationVariant { Generic, Symmetric, DF0 };

struct GammaFactor {
    AffineFunctional functional;
    int shift = 0; // Gamma-argument = 1 + functional + shift
    cplx gamma_argument(const GenericParams& p) const {
        return 1.0 + functional.eval(p) + static_cast<double>(shift);
    }
};

struct GammaFactorization {
    std::vector<GammaFactor> factors;
    // evaluates the full S/I value divided by the Gamma product
    std::function<cplx(const GenericParams&)> regular_part;
};

GammaFactorization gamma_factorization(const RegionShape& shape, const LaurentPoly& F,
                                       FactorizationVariant variant,
                                       const std::vector<int>& df_set = {});

// S_{N;Reg}[F] for N=2: S_2[F] times the symmetric prefactor
//   prod_j Gamma(2+bar_d_j+a+b+(N+j-2)g)
//        / (Gamma(1+bar_delta_j+a+(j-1)g) Gamma(1+bar_atled_j+b+(j-1)g) F_j(g)).
// Near a stripped pole the value is taken as a two-direction limit with
// Richardson step h (throws limit_disagreement on mismatch).
cplx regularized_s2(const LaurentPoly& F, const SymmetricParams& p, double limit_step = 1e-3);

} // namespace selberg
