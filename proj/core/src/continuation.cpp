#include "selberg/continuation.hpp"

#include <algorithm>
#include <cmath>

namespace selberg {

namespace {

constexpr double kPoleHitTol = 1e-9;

cplx binom_c(cplx b, int i) {
    cplx v = 1.0;
    for (int t = 0; t < i; ++t) v *= (b - static_cast<double>(t)) / (t + 1.0);
    return v;
}

} // namespace

cplx continue_1d(cplx rho, const TaylorOracle& psi, double T, int J,
                 const std::function<cplx()>& tail) {
    if (rho.real() <= -static_cast<double>(J) - 2.0)
        throw insufficient_order("continue_1d: Re rho <= -J-2");
    cplx head = 0.0;
    for (int j = 0; j <= J; ++j) {
        const cplx denom = rho + static_cast<double>(j) + 1.0;
        const cplx cj = psi.coeff(j);
        if (std::abs(denom) < kPoleHitTol)
            throw pole_error(denom, "continue_1d: rho+j+1 vanishes at j=" + std::to_string(j));
        head += cj * std::pow(T, denom) / denom;
    }
    // E(t) = sum_{j>J} c_j t^{j-J-1}, integrated against t^{rho+J+1}
    auto E = [&](double t) -> cplx {
        cplx s = 0.0;
        double tp = 1.0;
        for (int j = J + 1; j <= J + 260; ++j) {
            const cplx add = psi.coeff(j) * tp;
            s += add;
            tp *= t;
            if (j > J + 8 && std::abs(add) <= 1e-18 * (1.0 + std::abs(s))) break;
        }
        return s;
    };
    QuadSettings qs;
    qs.target_rel = 1e-12;
    qs.max_level = 9;
    const cplx expo = rho + static_cast<double>(J) + 1.0;
    const QuadResult er = ts_integrate(
        [&](double x, double omx) {
            (void)omx;
            const double t = T * x;
            return std::pow(cplx(t, 0.0), expo) * E(t) * T;
        },
        qs);
    return head + er.value + tail();
}

cplx beta_continued(cplx alpha, cplx beta, double T, int J) {
    TaylorOracle psi{[beta](int j) { return binom_c(beta, j) * ((j % 2 == 0) ? 1.0 : -1.0); }};
    auto tail = [&]() -> cplx {
        QuadSettings qs;
        qs.target_rel = 1e-12;
        qs.max_level = 9;
        return ts_integrate(
                   [&](double x, double omx) {
                       const double t = T + (1.0 - T) * x;
                       const double omt = (1.0 - T) * omx;
                       return std::pow(cplx(t, 0.0), alpha) * std::pow(cplx(omt, 0.0), beta) *
                              (1.0 - T);
                   },
                   qs)
            .value;
    };
    return continue_1d(alpha, psi, T, J, tail);
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

namespace {

void expect_n2(const GenericParams& p, const char* who) {
    if (p.N != 2) throw domain_error(std::string(who) + ": N = 2 only");
}

cplx s2_closed_raw(cplx a1, cplx a2, cplx b1, cplx b2, cplx g) {
    const cplx twog = 2.0 * g;
    const cplx c1 = 1.0 + a1;
    const cplx c2 = 1.0 + b2;
    const cplx c3 = 2.0 + twog + a1 + a2;
    const cplx c4 = 1.0 + twog;
    const cplx d1 = 2.0 + a1 + twog;
    const cplx d2 = 3.0 + a1 + a2 + b2 + twog;
    for (cplx z : {c1, c2, c3, c4})
        if (near_nonpositive_integer(z, kPoleHitTol))
            throw pole_error(z, "s2_closed: Gamma pole in the prefactor");
    // a lower 3F2 parameter at a nonpositive integer meets the 1/Gamma zero
    // of the prefactor: indeterminate, reported as a pole hit
    const cplx f = hyp3f2_at1({c1, -b1, c3}, {d1, d2});
    const cplx pre = std::exp(log_gamma(c1) + log_gamma(c2) + log_gamma(c3) + log_gamma(c4) -
                              log_gamma(d1) - log_gamma(d2));
    return pre * f;
}

} // namespace

cplx s2_closed(const GenericParams& p) {
    expect_n2(p, "s2_closed");
    return s2_closed_raw(p.alpha[0], p.alpha[1], p.beta[0], p.beta[1], p.gam(1, 2));
}

cplx s2_closed_mirrored(const GenericParams& p) {
    expect_n2(p, "s2_closed_mirrored");
    // x -> 1-x maps the region onto itself with slots (b2,b1,a2,a1)
    return s2_closed_raw(p.beta[1], p.beta[0], p.alpha[1], p.alpha[0], p.gam(1, 2));
}

cplx s2_closed_insertion(const GenericParams& p, const LaurentPoly& F) {
    expect_n2(p, "s2_closed_insertion");
    if (F.nvars() != 2) throw domain_error("s2_closed_insertion: F must have two variables");
    cplx total = 0.0;
    for (const auto& [k, c] : F.terms()) {
        total += c * s2_closed_raw(p.alpha[0] + static_cast<double>(k[0]),
                                   p.alpha[1] + static_cast<double>(k[1]), p.beta[0], p.beta[1],
                                   p.gam(1, 2));
    }
    return total;
}

cplx selberg_closed(int N, const SymmetricParams& p) {
    bool zero = false;
    cplx lg = -std::lgamma(static_cast<double>(N) + 1.0);
    for (int j = 1; j <= N; ++j) {
        const cplx n1 = 1.0 + p.alpha + (j - 1.0) * p.gamma;
        const cplx n2 = 1.0 + p.beta + (j - 1.0) * p.gamma;
        const cplx n3 = 1.0 + static_cast<double>(j) * p.gamma;
        const cplx d1 = 2.0 + p.alpha + p.beta + (N + j - 2.0) * p.gamma;
        const cplx d2 = 1.0 + p.gamma;
        for (cplx z : {n1, n2, n3})
            if (near_nonpositive_integer(z, kPoleHitTol))
                throw pole_error(z, "selberg_closed: numerator Gamma pole at j=" + std::to_string(j));
        for (cplx z : {d1, d2}) {
            if (near_nonpositive_integer(z, kPoleHitTol)) {
                zero = true;
            }
        }
        if (!zero)
            lg += log_gamma(n1) + log_gamma(n2) + log_gamma(n3) - log_gamma(d1) - log_gamma(d2);
    }
    if (zero) return 0.0;
    return std::exp(lg);
}

// ---------------------------------------------------------------------------
// N=2 continuation in the (rho, lambda) chart
// ---------------------------------------------------------------------------

namespace {

// psi_j coefficients of the outer rho-expansion:
//   psi_j = sum_{(d1,d2),i,r : d1+d2+i+r = j}
//           c_d (-1)^{i+r} C(b1,i) C(b2,r) B(a1+d1+i, 2g)
struct S2Head {
    cplx a1, b1, b2, g;
    const LaurentPoly* F;
    cplx coeff(int j) const {
        cplx s = 0.0;
        for (const auto& [k, c] : F->terms()) {
            const int base = k[0] + k[1];
            if (base > j) continue;
            for (int i = 0; i + base <= j; ++i) {
                const int r = j - base - i;
                const double sgn = ((i + r) % 2 == 0) ? 1.0 : -1.0;
                s += c * sgn * binom_c(b1, i) * binom_c(b2, r) *
                     beta_mero(a1 + static_cast<double>(k[0] + i), 2.0 * g);
            }
        }
        return s;
    }
};

cplx continue_s2_chartA(cplx a1, cplx a2, cplx b1, cplx b2, cplx g, const LaurentPoly& F,
                        const ContinueOptions& opt) {
    // tail-side requirements of this chart
    const double m_b2 = b2.real() + 1.0;
    const double m_corner = (2.0 + b1 + b2 + 2.0 * g).real(); // (1-rho)-corner: 1+beta_{2,*}+1
    if (m_b2 < 0.02 || m_corner < 0.02)
        throw chart_not_covered("continue_s2: beta-side continuation not covered by this chart");
    if ((1.0 + a1 + a2 + 2.0 * g).real() <= -static_cast<double>(opt.J) - 2.0)
        throw insufficient_order("continue_s2: Re(1+a1+a2+2g) below the configured order");
    if (near_nonpositive_integer(1.0 + 2.0 * g, kPoleHitTol))
        throw pole_error(1.0 + 2.0 * g, "continue_s2: Gamma(1+2g) pole (2g functional)");
    for (const auto& [k, c] : F.terms()) {
        if (near_nonpositive_integer(1.0 + a1 + static_cast<double>(k[0]), kPoleHitTol))
            throw pole_error(1.0 + a1, "continue_s2: Gamma(1+a1+shift) pole (a1 functional)");
        if (near_nonpositive_integer(2.0 + a1 + 2.0 * g + static_cast<double>(k[0]), kPoleHitTol))
            throw pole_error(2.0 + a1 + 2.0 * g,
                             "continue_s2: lambda-integral Gamma(2+a1+2g+shift) degenerate");
    }

    const cplx P = 1.0 + a1 + a2 + 2.0 * g;
    const S2Head head{a1, b1, b2, g, &F};
    const double T = opt.T;
    // analytic head: full series sum (the j<=J split plus the remainder
    // integral collapse to the same closed form)
    cplx hsum = 0.0;
    int maxdeg = 0;
    for (const auto& [k, c] : F.terms()) maxdeg = std::max(maxdeg, k[0] + k[1]);
    const int jcap = 420 + maxdeg;
    for (int j = 0; j < jcap; ++j) {
        const cplx denom = P + static_cast<double>(j) + 1.0;
        const cplx cj = head.coeff(j);
        if (std::abs(denom) < kPoleHitTol && std::abs(cj) > 1e-14)
            throw pole_error(denom, "continue_s2: pole on 2+a1+a2+2g+k = 0 at k=" + std::to_string(j));
        const cplx add = cj * std::pow(T, denom) / denom;
        hsum += add;
        if (j > 32 + maxdeg && std::abs(add) <= 1e-18 * (1.0 + std::abs(hsum))) break;
    }
    // tail: int_T^1 rho^P (1-rho)^{b2} Lambda(rho) with
    // Lambda = sum_d c rho^{d1+d2} B(a1+d1, 2g) 2F1(-b1, 1+a1+d1; 2+a1+d1+2g; rho)
    auto lam = [&](double rho) -> cplx {
        cplx s = 0.0;
        for (const auto& [k, c] : F.terms()) {
            const cplx ad = a1 + static_cast<double>(k[0]);
            s += c * std::pow(rho, static_cast<double>(k[0] + k[1])) * beta_mero(ad, 2.0 * g) *
                 hyp2f1(-b1, 1.0 + ad, 2.0 + ad + 2.0 * g, rho);
        }
        return s;
    };
    QuadSettings qs = opt.quad;
    const QuadResult tail = ts_integrate(
        [&](double x, double omx) -> cplx {
            const double rho = T + (1.0 - T) * x;
            const double omrho = (1.0 - T) * omx;
            return std::pow(cplx(rho, 0.0), P) * std::pow(cplx(omrho, 0.0), b2) * lam(rho) *
                   (1.0 - T);
        },
        qs);
    return hsum + tail.value;
}

} // namespace

cplx continue_s2(const GenericParams& p, const LaurentPoly& F, const ContinueOptions& opt) {
    expect_n2(p, "continue_s2");
    const cplx a1 = p.alpha[0], a2 = p.alpha[1], b1 = p.beta[0], b2 = p.beta[1], g = p.gam(1, 2);
    // chart A continues the {alpha_{2,*}, a1, 2g} families and needs the
    // beta-side mild; the mirrored chart swaps the roles.
    const bool alpha_deep = (a1.real() <= -1.0 + 0.02) || ((1.0 + a1 + a2 + 2.0 * g).real() <= 0.02);
    const bool beta_deep = (b2.real() <= -1.0 + 0.02) || ((1.0 + b1 + b2 + 2.0 * g).real() <= 0.02);
    if (!beta_deep) return continue_s2_chartA(a1, a2, b1, b2, g, F, opt);
    if (!alpha_deep) {
        // mirrored chart: x -> 1-x, slots (b2,b1,a2,a1), F reflected and
        // variable-swapped
        try {
            LaurentPoly FR = F.reflected();
            const std::vector<int> swap_sigma{2, 1};
            FR = FR.permuted(swap_sigma);
            return continue_s2_chartA(b2, b1, a2, a1, g, FR, opt);
        } catch (const laurent_input&) {
            throw chart_not_covered("continue_s2: Laurent insertion blocks the mirrored chart");
        }
    }
    throw chart_not_covered("continue_s2: both corner families need deep continuation");
}

cplx residue_series(const LaurentPoly& F, int k, const GenericParams& p) {
    expect_n2(p, "residue_series");
    const cplx a1 = p.alpha[0], b1 = p.beta[0], b2 = p.beta[1], g = p.gam(1, 2);
    const S2Head head{a1, b1, b2, g, &F};
    return head.coeff(k);
}

// ---------------------------------------------------------------------------
// Gamma factorizations
// ---------------------------------------------------------------------------

namespace {

int corner_weight_k(const RegionShape& shape, const KFaceId& face, const VanishingProfile* vp) {
    if (!vp || shape.l != 0 || shape.n != 0) return 0;
    if (face.interval.contains(shape.anchor_zero(), shape.ring()))
        return vp->delta[static_cast<std::size_t>(face.interval.len - 2)];
    if (face.interval.contains(shape.anchor_one(), shape.ring()))
        return vp->atled[static_cast<std::size_t>(face.interval.len - 2)];
    return 0;
}

AffineFunctional symmetric_alpha_functional(int N, int k) {
    // k(1+alpha+(k-1)gamma) - 1 as an affine functional: 1+f = k(1+a+(k-1)g)
    AffineFunctional f(N);
    f.cst = k - 1;
    for (int i = 0; i < N && i < k; ++i) f.a[i] += 1; // k slots; value k*alpha at constants
    // distribute: use first k alpha slots and pair weights to realize
    // k(k-1) gamma at constant parameters
    int remaining = k * (k - 1) / 2;
    for (int j = 1; j <= N && remaining > 0; ++j)
        for (int kk = j + 1; kk <= N && remaining > 0; ++kk) {
            f.g[static_cast<std::size_t>(GenericParams::pair_index(j, kk, N))] += 2;
            --remaining;
        }
    return f;
}

AffineFunctional symmetric_beta_functional(int N, int k) {
    AffineFunctional f(N);
    f.cst = k - 1;
    for (int i = 0; i < N && i < k; ++i) f.b[i] += 1;
    int remaining = k * (k - 1) / 2;
    for (int j = 1; j <= N && remaining > 0; ++j)
        for (int kk = j + 1; kk <= N && remaining > 0; ++kk) {
            f.g[static_cast<std::size_t>(GenericParams::pair_index(j, kk, N))] += 2;
            --remaining;
        }
    return f;
}

AffineFunctional symmetric_mixed_functional(int N, int k) {
    // 1+f = -k(1+a+b+(2N-k-1)g)
    AffineFunctional f(N);
    f.cst = -k - 1;
    for (int i = 0; i < N && i < k; ++i) {
        f.a[i] -= 1;
        f.b[i] -= 1;
    }
    int remaining = k * (2 * N - k - 1) / 2;
    for (int j = 1; j <= N && remaining > 0; ++j)
        for (int kk = j + 1; kk <= N && remaining > 0; ++kk) {
            f.g[static_cast<std::size_t>(GenericParams::pair_index(j, kk, N))] -= 2;
            --remaining;
        }
    return f;
}

} // namespace

GammaFactorization gamma_factorization(const RegionShape& shape, const LaurentPoly& F,
                                       FactorizationVariant variant,
                                       const std::vector<int>& df_set) {
    GammaFactorization out;
    const int N = shape.N();
    std::optional<VanishingProfile> vp;
    if (F.is_polynomial() && !F.is_one()) vp = vanishing_profile(F);

    switch (variant) {
        case FactorizationVariant::Generic: {
            for (const auto& face : enumerate_k_faces(shape)) {
                GammaFactor gf;
                gf.functional = rho(shape, face);
                gf.shift = corner_weight_k(shape, face, vp ? &*vp : nullptr);
                out.factors.push_back(std::move(gf));
            }
            break;
        }
        case FactorizationVariant::Symmetric: {
            // eq-level families delta_k + k(1+a+(k-1)g), atled-, and
            // -d_k - k(1+a+b+(2N-k-1)g) with d_k = -deg_k
            for (int k = 1; k <= shape.l + shape.m; ++k) {
                GammaFactor gf;
                gf.functional = symmetric_alpha_functional(N, k);
                gf.shift = vp ? vp->delta[static_cast<std::size_t>(k - 1)] : 0;
                out.factors.push_back(std::move(gf));
            }
            for (int k = 1; k <= shape.m + shape.n; ++k) {
                GammaFactor gf;
                gf.functional = symmetric_beta_functional(N, k);
                gf.shift = vp ? vp->atled[static_cast<std::size_t>(k - 1)] : 0;
                out.factors.push_back(std::move(gf));
            }
            for (int k = 1; k <= shape.l + shape.n; ++k) {
                GammaFactor gf;
                gf.functional = symmetric_mixed_functional(N, k);
                gf.shift = vp ? vp->deg[static_cast<std::size_t>(k - 1)] : 0;
                out.factors.push_back(std::move(gf));
            }
            break;
        }
        case FactorizationVariant::DF0: {
            if (df_set.empty())
                throw unsupported("gamma_factorization: DF0 needs the screening set S");
            std::vector<bool> inS(static_cast<std::size_t>(N) + 1, false);
            for (int v : df_set) {
                if (v < 1 || v > N) throw domain_error("gamma_factorization: S out of range");
                inS[static_cast<std::size_t>(v)] = true;
            }
            auto block_members = [&](int lo, int hi, bool plus) {
                std::vector<int> m;
                for (int v = lo; v <= hi; ++v)
                    if (inS[static_cast<std::size_t>(v)] == plus) m.push_back(v);
                return m;
            };
            const int l = shape.l, m = shape.m;
            auto family = [&](int anchor) {
                // representative faces per split (j_-, j_+), both >= 1
                std::vector<int> lo_minus, lo_plus;
                switch (anchor) {
                    case kAnchorZero: {
                        lo_minus = block_members(1, l + m, false);
                        lo_plus = block_members(1, l + m, true);
                        break;
                    }
                    case kAnchorOne: {
                        lo_minus = block_members(l + 1, N, false);
                        lo_plus = block_members(l + 1, N, true);
                        break;
                    }
                    default: {
                        std::vector<int> mm = block_members(1, l, false);
                        for (int v : block_members(l + m + 1, N, false)) mm.push_back(v);
                        lo_minus = mm;
                        std::vector<int> pp = block_members(1, l, true);
                        for (int v : block_members(l + m + 1, N, true)) pp.push_back(v);
                        lo_plus = pp;
                        break;
                    }
                }
                for (std::size_t jm = 1; jm <= lo_minus.size(); ++jm)
                    for (std::size_t jp = 1; jp <= lo_plus.size(); ++jp) {
                        std::uint32_t mask = 0;
                        for (std::size_t t = 0; t < jm; ++t) mask |= 1u << (lo_minus[t] - 1);
                        for (std::size_t t = 0; t < jp; ++t) mask |= 1u << (lo_plus[t] - 1);
                        AFaceId face;
                        face.anchor = anchor;
                        face.S = mask; // split into blocks is immaterial for varrho
                        face.Q = 0;
                        GammaFactor gf;
                        gf.functional = varrho(shape, face);
                        gf.shift = 0;
                        out.factors.push_back(std::move(gf));
                    }
            };
            family(kAnchorZero);
            family(kAnchorOne);
            family(kAnchorInf);
            break;
        }
    }

    const RegionShape sh = shape;
    const LaurentPoly Fc = F;
    const auto factors = out.factors;
    out.regular_part = [sh, Fc, factors](const GenericParams& p) -> cplx {
        cplx value;
        if (sh.N() == 2 && sh.l == 0 && sh.n == 0) {
            value = s2_closed_insertion(p, Fc);
        } else if (sh.N() == 1 && sh.l == 0 && sh.n == 0) {
            value = 0.0;
            for (const auto& [k, c] : Fc.terms())
                value += c * beta_mero(p.alpha[0] + static_cast<double>(k[0]), p.beta[0]);
        } else {
            QuadSettings qs;
            qs.target_rel = 1e-8;
            value = selberg_quad(sh, Fc, p, qs).value;
        }
        cplx lg = 0.0;
        for (const auto& f : factors) lg += log_gamma(f.gamma_argument(p));
        return value * std::exp(-lg);
    };
    return out;
}

cplx regularized_s2(const LaurentPoly& F, const SymmetricParams& p, double limit_step) {
    if (F.nvars() != 2) throw domain_error("regularized_s2: two variables only");
    const VanishingProfile vp = vanishing_profile(F);
    const int N = 2;
    auto prefactor_log = [&](const SymmetricParams& q) -> cplx {
        cplx lg = 0.0;
        for (int j = 1; j <= N; ++j) {
            lg += log_gamma(2.0 + vp.bar_d[j - 1] + q.alpha + q.beta + (N + j - 2.0) * q.gamma);
            lg -= log_gamma(1.0 + vp.bar_delta[j - 1] + q.alpha + (j - 1.0) * q.gamma);
            lg -= log_gamma(1.0 + vp.bar_atled[j - 1] + q.beta + (j - 1.0) * q.gamma);
            lg -= std::log(digamma_factor(j, q.gamma));
        }
        return lg;
    };
    auto eval_at = [&](const SymmetricParams& q) -> cplx {
        const GenericParams gp = q.expand(2);
        const cplx s2 = s2_closed_insertion(gp, F);
        return s2 * std::exp(prefactor_log(q));
    };
    // detect proximity to a stripped hyperplane
    bool near_pole = false;
    for (int j = 1; j <= N && !near_pole; ++j) {
        if (near_nonpositive_integer(1.0 + vp.bar_delta[j - 1] + p.alpha + (j - 1.0) * p.gamma, 1e-7) ||
            near_nonpositive_integer(1.0 + vp.bar_atled[j - 1] + p.beta + (j - 1.0) * p.gamma, 1e-7) ||
            near_nonpositive_integer(2.0 + vp.bar_d[j - 1] + p.alpha + p.beta + (N + j - 2.0) * p.gamma,
                                     1e-7) ||
            near_nonpositive_integer(1.0 + p.alpha + (j - 1.0) * p.gamma, 1e-7) ||
            near_nonpositive_integer(1.0 + 2.0 * p.gamma, 1e-7) ||
            near_nonpositive_integer(2.0 + p.alpha + 2.0 * p.gamma, 1e-7) ||
            near_nonpositive_integer(2.0 + 2.0 * p.alpha + 2.0 * p.gamma +
                                         static_cast<double>(vp.deg[1]), 1e-7))
            near_pole = true;
    }
    if (!near_pole) {
        try {
            return eval_at(p);
        } catch (const error&) {
            near_pole = true;
        }
    }
    const double h = limit_step;
    auto avg = [&](cplx da, cplx dg) -> cplx {
        SymmetricParams q1 = p, q2 = p;
        q1.alpha += h * da;
        q1.gamma += h * dg;
        q2.alpha -= h * da;
        q2.gamma -= h * dg;
        return 0.5 * (eval_at(q1) + eval_at(q2));
    };
    const cplx la = avg(1.0, 0.0);
    const cplx lgm = avg(0.0, 1.0);
    const double rel = std::abs(la - lgm) / std::max({std::abs(la), std::abs(lgm), 1e-30});
    if (rel > 1e-5)
        throw limit_disagreement("regularized_s2: directional limits disagree by " +
                                 std::to_string(rel));
    return 0.5 * (la + lgm);
}

} // namespace selberg
