#pragma once

#include <string>

#include "selberg/continuation.hpp"

namespace selberg {

struct PhasePermutation {
    std::vector<int> sigma; // image list, 1-based
    double theta = 0.0;
};

struct IdentityReport {
    cplx lhs = 0.0, rhs = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    bool skipped = false;
    std::string skipped_reason;
    std::string identity_tag;
};

IdentityReport make_report(const std::string& tag, cplx lhs, cplx rhs, double tol);

// Theta(sigma) = 2 pi sum_{j<k} 1_{sigma(j)>sigma(k)} gamma_{j,k}
double theta_phase(const std::vector<int>& sigma, const GenericParams& p);

// sum over S_N of zeta^{inversions} (brute force) and the bubble-sort
// product prod_{n<=N} (1 + zeta + ... + zeta^{n-1}).
cplx bubble_sort_sum(int N, cplx zeta);
cplx bubble_sort_product(int N, cplx zeta);

// I (df_quad) against the per-block bubble-sort factor times S (selberg_quad)
// for block-constant gamma and block-symmetric F.
IdentityReport check_symmetrization(const RegionShape& shape, const LaurentPoly& F,
                                    const GenericParams& p, double tol,
                                    const QuadSettings& qs);

// Three-term relation: sum of phase-weighted S over the three region families,
// each term by quadrature with permuted parameters. sign = +1 or -1.
IdentityReport check_aomoto_three_term(const RegionShape& shape, const LaurentPoly& F,
                                       const GenericParams& p, int sign, double tol,
                                       const QuadSettings& qs);

// Sine-ratio relation between S_{0,N,0} and S_{0,0,N} (variant 0) or
// S_{N,0,0} (variant 1); throws sine_too_small near sine zeros.
IdentityReport check_aomoto_ratio(int N, const LaurentPoly& F, const SymmetricParams& p,
                                  int variant, double tol, const QuadSettings& qs);

// Single-step recursion S_{0,N-n,n} = -[...] S_{0,N-n-1,n+1}.
IdentityReport check_aomoto_step(int N, int n, const LaurentPoly& F, const SymmetricParams& p,
                                 double tol, const QuadSettings& qs);

// DF-symmetry test; on failure returns the first violated pair (j,k).
struct DfSymResult {
    bool ok = true;
    int j = 0, k = 0;
    std::string reason;
};
DfSymResult dfsym_check(const LaurentPoly& F, const std::vector<int>& S, cplx lambda);

// Right-hand side of the DF product formula (known up to proportionality).
cplx df_product_formula(int n_minus, int n_plus, cplx alpha_p, cplx beta_p, cplx gamma_p,
                        int sign_choice);

// The N=2 DF claim: compares |contour value| (gamma-slot -1, the convention
// the acceptance run records) against the Gamma-product magnitude.
struct DfN2Report {
    IdentityReport report;
    cplx lhs_slot_minus; // contour with the -1 slot
    cplx lhs_slot_plus;  // contour with the +1 slot
    cplx rhs;
    int sign = 0; // sign of Re(lhs/rhs) for the matching slot
    std::string convention;
};
DfN2Report df_n2_claim(cplx alpha_p, cplx beta_p, double tol, const QuadSettings& qs);

// Moebius parameter map: the (l',m',n') triple, sigma^param(p), and whether
// the block-reversal applies (odd permutations).
struct MoebiusPerm {
    int image[3]; // images of {0,1,inf} as 0,1,2
};
struct MoebiusResult {
    RegionShape shape;
    GenericParams params;
    bool reversed = false;
};
MoebiusResult moebius_param_map(const MoebiusPerm& sigma, const RegionShape& shape,
                                const GenericParams& p);

// All six Moebius permutations in a fixed order: 1, (01), (0inf), (1inf),
// (01inf), (0inf1).
const std::vector<MoebiusPerm>& moebius_group();

// Block reversal of parameter slots (for applying the rev flag).
GenericParams reverse_blocks(const RegionShape& shape, const GenericParams& p);
LaurentPoly reverse_blocks(const RegionShape& shape, const LaurentPoly& F);

} // namespace selberg
