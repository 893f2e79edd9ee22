#pragma once

#include <string>
#include <vector>

#include "selberg/assoc.hpp"
#include "selberg/poly.hpp"
#include "selberg/special.hpp"

namespace selberg {

// Exponent vectors (alpha, beta, gamma_{jk}) of the integrand.
struct GenericParams {
    std::vector<cplx> alpha, beta;
    std::vector<cplx> gamma; // pair-indexed, j<k lexicographic
    int N = 0;

    GenericParams() = default;
    explicit GenericParams(int n)
        : alpha(static_cast<std::size_t>(n), 0.0),
          beta(static_cast<std::size_t>(n), 0.0),
          gamma(static_cast<std::size_t>(n * (n - 1) / 2), 0.0),
          N(n) {}

    static int pair_index(int j, int k, int N); // 1-based j<k
    cplx gam(int j, int k) const;               // symmetric accessor, 1-based
    void set_gam(int j, int k, cplx v);

    bool is_real() const;
    bool is_constant() const;

    // parameters with permuted slots: alpha^sigma_i = alpha_{sigma(i)}
    GenericParams permuted(const std::vector<int>& sigma) const;
};

struct SymmetricParams {
    cplx alpha = 0.0, beta = 0.0, gamma = 0.0;
    GenericParams expand(int N) const;
};

// Affine functional over the (alpha, beta, gamma)-slots with exact integer
// coefficients, so identities between functionals are checked exactly.
struct AffineFunctional {
    int N = 0;
    int cst = 0;
    std::vector<int> a, b; // length N
    std::vector<int> g;    // pair-indexed

    explicit AffineFunctional(int n = 0)
        : N(n),
          cst(0),
          a(static_cast<std::size_t>(n), 0),
          b(static_cast<std::size_t>(n), 0),
          g(static_cast<std::size_t>(n * (n - 1) / 2), 0) {}

    cplx eval(const GenericParams& p) const;
    cplx eval(const SymmetricParams& p) const;

    AffineFunctional permuted(const std::vector<int>& sigma) const;

    friend bool operator==(const AffineFunctional&, const AffineFunctional&) = default;
    std::string describe() const;
};

struct StarFunctionals {
    std::vector<AffineFunctional> alpha_star, beta_star; // index j-1
    std::vector<std::vector<AffineFunctional>> gamma_star; // [j-1][k-1], j<k
    // relabeled access: gamma*_{0,k} = alpha*_k, gamma*_{N+1-j,N+1} = beta*_j
    AffineFunctional relabeled(int j, int k, int N) const;
};

StarFunctionals star_functionals(int N);

// Face exponent functional of K_{l,m,n} (the rt1..rt4 cases, with the rt1
// constant k-j-1).
AffineFunctional rho(const RegionShape& shape, const KFaceId& face);
cplx rho_value(const RegionShape& shape, const KFaceId& face, const GenericParams& p);

// Face exponent functional of A_{l,m,n}.
AffineFunctional varrho(const RegionShape& shape, const AFaceId& face);
cplx varrho_value(const RegionShape& shape, const AFaceId& face, const GenericParams& p);

enum class DomainKind { Omega, DotOmega, V, DotV, U, DotU, RingU, W };

struct DomainViolation {
    std::string constraint;
    double margin = 0.0; // negative = violated by that much
};

struct DomainCheck {
    bool ok = true;
    std::vector<DomainViolation> violations;
};

// Membership in the convergence/continuation regions. The dotted and ring
// variants take the vanishing profile of the insertion polynomial; pass
// nullptr for F = 1. U/DotU/RingU/W require constant parameters.
DomainCheck in_domain(DomainKind kind, const RegionShape& shape, const GenericParams& p,
                      const VanishingProfile* profile = nullptr);

// Smallest Re-margin over the Omega (resp. V) inequalities; negative if out.
double omega_margin(const RegionShape& shape, const GenericParams& p);
double v_margin(const RegionShape& shape, const GenericParams& p);

} // namespace selberg
