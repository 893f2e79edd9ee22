#include "selberg/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace selberg {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr cplx kI{0.0, 1.0};
} // namespace

IdentityReport make_report(const std::string& tag, cplx lhs, cplx rhs, double tol) {
    IdentityReport r;
    r.identity_tag = tag;
    r.lhs = lhs;
    r.rhs = rhs;
    r.tolerance = tol;
    r.residual = std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
    r.passed = r.residual <= tol;
    return r;
}

double theta_phase(const std::vector<int>& sigma, const GenericParams& p) {
    cplx acc = 0.0;
    for (int j = 1; j <= p.N; ++j)
        for (int k = j + 1; k <= p.N; ++k)
            if (sigma[j - 1] > sigma[k - 1]) acc += p.gam(j, k);
    return 2.0 * kPi * acc.real();
}

cplx bubble_sort_sum(int N, cplx zeta) {
    std::vector<int> perm(static_cast<std::size_t>(N));
    std::iota(perm.begin(), perm.end(), 1);
    cplx s = 0.0;
    do {
        int inv = 0;
        for (int j = 0; j < N; ++j)
            for (int k = j + 1; k < N; ++k)
                if (perm[j] > perm[k]) ++inv;
        cplx zp = 1.0;
        for (int t = 0; t < inv; ++t) zp *= zeta;
        s += zp;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return s;
}

cplx bubble_sort_product(int N, cplx zeta) {
    cplx prod = 1.0;
    for (int n = 1; n <= N; ++n) {
        cplx run = 0.0, zp = 1.0;
        for (int j = 0; j < n; ++j) {
            run += zp;
            zp *= zeta;
        }
        prod *= run;
    }
    return prod;
}

IdentityReport check_symmetrization(const RegionShape& shape, const LaurentPoly& F,
                                    const GenericParams& p, double tol, const QuadSettings& qs) {
    if (!F.invariant_under_block_permutations({shape.l, shape.m, shape.n}))
        throw domain_error("check_symmetrization: F not block-symmetric");
    const QuadResult I = df_quad(shape, F, p, qs);
    const QuadResult S = selberg_quad(shape, F, p, qs);
    cplx factor = 1.0;
    auto block_factor = [&](int first, int count) {
        if (count == 0) return;
        const cplx g = p.gam(first, first + 1); // block-constant
        const cplx zeta = std::exp(2.0 * kPi * kI * g);
        factor *= bubble_sort_product(count, zeta);
    };
    if (shape.l >= 2) block_factor(1, shape.l);
    if (shape.m >= 2) block_factor(shape.l + 1, shape.m);
    if (shape.n >= 2) block_factor(shape.l + shape.m + 1, shape.n);
    return make_report("symmetrization", I.value, factor * S.value, tol);
}

namespace {

std::vector<int> sigma_cycle(int j, int N) {
    // sigma_j = (1 j j-1 ... 2): sigma(1) = j, sigma(i) = i-1 for 2<=i<=j
    std::vector<int> s(static_cast<std::size_t>(N));
    std::iota(s.begin(), s.end(), 1);
    if (j >= 2) {
        s[0] = j;
        for (int i = 2; i <= j; ++i) s[static_cast<std::size_t>(i - 1)] = i - 1;
    }
    return s;
}

} // namespace

IdentityReport check_aomoto_three_term(const RegionShape& shape, const LaurentPoly& F,
                                       const GenericParams& p, int sign, double tol,
                                       const QuadSettings& qs) {
    if (shape.l < 1) throw domain_error("check_aomoto_three_term: needs l >= 1");
    const int N = shape.N();
    const double sg = (sign >= 0) ? 1.0 : -1.0;
    const cplx a1 = p.alpha[0], b1 = p.beta[0];
    auto gamma_partial = [&](int j) {
        cplx acc = 0.0;
        for (int j0 = 2; j0 <= j; ++j0) acc += p.gam(1, j0);
        return acc;
    };
    struct Term {
        RegionShape sh;
        int j;
        cplx phase;
    };
    std::vector<Term> terms;
    const RegionShape shA = shape;
    const RegionShape shB{shape.l - 1, shape.m + 1, shape.n};
    const RegionShape shC{shape.l - 1, shape.m, shape.n + 1};
    for (int j = 1; j <= shape.l; ++j)
        terms.push_back({shA, j, sg * 2.0 * kPi * gamma_partial(j)});
    for (int j = shape.l; j <= shape.l + shape.m; ++j)
        terms.push_back({shB, j, sg * (kPi * a1 + 2.0 * kPi * gamma_partial(j))});
    for (int j = shape.l + shape.m; j <= N; ++j)
        terms.push_back({shC, j, sg * (kPi * (a1 + b1) + 2.0 * kPi * gamma_partial(j))});

    cplx first = 0.0, rest = 0.0;
    bool have_first = false;
    for (const auto& t : terms) {
        const auto sig = sigma_cycle(t.j, N);
        const QuadResult q = selberg_quad(t.sh, F.permuted(sig), p.permuted(sig), qs);
        const cplx v = std::exp(kI * t.phase) * q.value;
        if (!have_first) {
            first = v;
            have_first = true;
        } else {
            rest += v;
        }
    }
    return make_report("aomoto-three-term", -first, rest, tol);
}

IdentityReport check_aomoto_ratio(int N, const LaurentPoly& F, const SymmetricParams& p,
                                  int variant, double tol, const QuadSettings& qs) {
    auto s = [](cplx t) { return std::sin(kPi * t); };
    cplx factor = (N % 2 == 0) ? 1.0 : -1.0;
    for (int m = 0; m < N; ++m) {
        const cplx num = s(p.alpha + p.beta + (N + m - 1.0) * p.gamma);
        const cplx den = (variant == 0) ? s(p.alpha + static_cast<double>(m) * p.gamma)
                                        : s(p.beta + static_cast<double>(m) * p.gamma);
        if (std::abs(den) < 1e-6)
            throw sine_too_small("check_aomoto_ratio: sine denominator below 1e-6");
        factor *= num / den;
    }
    const GenericParams gp = p.expand(N);
    const RegionShape mid{0, N, 0};
    const RegionShape other = (variant == 0) ? RegionShape{0, 0, N} : RegionShape{N, 0, 0};
    const QuadResult Smid = selberg_quad(mid, F, gp, qs);
    const QuadResult Soth = selberg_quad(other, F, gp, qs);
    return make_report(variant == 0 ? "aomoto-ratio-0" : "aomoto-ratio-1", Smid.value,
                       factor * Soth.value, tol);
}

IdentityReport check_aomoto_step(int N, int n, const LaurentPoly& F, const SymmetricParams& p,
                                 double tol, const QuadSettings& qs) {
    auto s = [](cplx t) { return std::sin(kPi * t); };
    const cplx den = s(p.alpha + (N - n - 1.0) * p.gamma) * s((N - n + 0.0) * p.gamma);
    if (std::abs(den) < 1e-6) throw sine_too_small("check_aomoto_step: sine below 1e-6");
    const cplx fac = -s(p.alpha + p.beta + (2.0 * N - n - 2.0) * p.gamma) * s((n + 1.0) * p.gamma) / den;
    const GenericParams gp = p.expand(N);
    const QuadResult lhs = selberg_quad({0, N - n, n}, F, gp, qs);
    const QuadResult rhs = selberg_quad({0, N - n - 1, n + 1}, F, gp, qs);
    return make_report("aomoto-step", lhs.value, fac * rhs.value, tol);
}

DfSymResult dfsym_check(const LaurentPoly& F, const std::vector<int>& S, cplx lambda) {
    const int N = F.nvars();
    DfSymResult out;
    std::vector<bool> inS(static_cast<std::size_t>(N) + 1, false);
    for (int v : S) inS[static_cast<std::size_t>(v)] = true;
    // invariance under S-preserving permutations: adjacent transpositions
    // within S and within the complement generate them
    auto check_swap = [&](int u, int v) -> bool {
        std::vector<int> sigma(static_cast<std::size_t>(N));
        std::iota(sigma.begin(), sigma.end(), 1);
        std::swap(sigma[static_cast<std::size_t>(u - 1)], sigma[static_cast<std::size_t>(v - 1)]);
        const LaurentPoly P = F.permuted(sigma);
        if (P.terms().size() != F.terms().size()) return false;
        for (const auto& [k, c] : F.terms()) {
            auto it = P.terms().find(k);
            if (it == P.terms().end() || std::abs(it->second - c) > 1e-12 * (1.0 + std::abs(c)))
                return false;
        }
        return true;
    };
    std::vector<int> sset, cset;
    for (int v = 1; v <= N; ++v) (inS[static_cast<std::size_t>(v)] ? sset : cset).push_back(v);
    for (std::size_t t = 0; t + 1 < sset.size(); ++t)
        if (!check_swap(sset[t], sset[t + 1])) {
            out.ok = false;
            out.j = sset[t];
            out.k = sset[t + 1];
            out.reason = "not invariant under an S-preserving transposition";
            return out;
        }
    for (std::size_t t = 0; t + 1 < cset.size(); ++t)
        if (!check_swap(cset[t], cset[t + 1])) {
            out.ok = false;
            out.j = cset[t];
            out.k = cset[t + 1];
            out.reason = "not invariant under a complement-preserving transposition";
            return out;
        }
    // derivative matching: lambda dF/dx_j |_{x_j=x_k} = d/dx_k (F|_{x_j=x_k})
    for (int j : sset)
        for (int k : cset) {
            const LaurentPoly lhs = F.derivative(j).restrict_equal(j, k);
            const LaurentPoly rhs = F.restrict_equal(j, k).derivative(k > j ? k - 1 : k);
            // compare lambda*lhs == rhs exactly on coefficients
            LaurentPoly diff = rhs;
            for (const auto& [key, c] : lhs.terms()) diff.add_term(key, -lambda * c);
            for (const auto& [key, c] : diff.terms()) {
                if (std::abs(c) > 1e-10) {
                    out.ok = false;
                    out.j = j;
                    out.k = k;
                    out.reason = "derivative matching fails";
                    return out;
                }
            }
        }
    return out;
}

cplx df_product_formula(int n_minus, int n_plus, cplx alpha_p, cplx beta_p, cplx gamma_p,
                        int sign_choice) {
    if (std::abs(gamma_p) < 1e-12) throw domain_error("df_product_formula: gamma_+ = 0");
    const cplx gm = 1.0 / gamma_p;
    const cplx am = -gm * alpha_p, bm = -gm * beta_p;
    // sign +: (pm, mp) = (+, -); sign -: swapped
    cplx aS, bS, gS, aO, bO, gO;
    int nS, nO;
    if (sign_choice >= 0) {
        aS = alpha_p; bS = beta_p; gS = gamma_p; nS = n_plus;
        aO = am; bO = bm; gO = gm; nO = n_minus;
    } else {
        aS = am; bS = bm; gS = gm; nS = n_minus;
        aO = alpha_p; bO = beta_p; gO = gamma_p; nO = n_plus;
    }
    auto sinp = [](cplx t) { return std::sin(kPi * t); };
    auto guard = [&](cplx z, const char* what) {
        if (near_nonpositive_integer(z, 1e-9)) throw pole_error(z, what);
    };
    cplx v = std::pow(gO, 2.0 * n_minus * n_plus);
    // prod_{j=1}^{nS} e^{-i pi (j-1) gS} Gamma(j gS) sin(pi j gS) / (Gamma(gS) sin(pi gS))
    for (int j = 2; j <= nS; ++j) {
        guard(static_cast<double>(j) * gS, "df_product_formula: Gamma(j gamma) pole");
        if (std::abs(sinp(gS)) < 1e-9) throw pole_error(gS, "df_product_formula: sine zero");
        v *= std::exp(-kI * kPi * (j - 1.0) * gS) * gamma_ratio(static_cast<double>(j) * gS, gS) *
             sinp(static_cast<double>(j) * gS) / sinp(gS);
    }
    for (int j = 1; j <= nO; ++j) {
        const cplx arg = static_cast<double>(j) * gO - static_cast<double>(nS);
        guard(arg, "df_product_formula: Gamma(j gamma - N) pole");
        cplx term = std::exp(-kI * kPi * (j - 1.0) * gO) * gamma(arg) / gamma(gO);
        if (j > 1) {
            if (std::abs(sinp(gO)) < 1e-9) throw pole_error(gO, "df_product_formula: sine zero");
            term *= sinp(static_cast<double>(j) * gO) / sinp(gO);
        }
        v *= term;
    }
    for (int j = 1; j <= nS; ++j) {
        const cplx d = 2.0 - 2.0 * n_minus * (sign_choice >= 0 ? 1.0 : 0.0) -
                       2.0 * n_plus * (sign_choice >= 0 ? 0.0 : 1.0) + aS + bS +
                       (nS - 2.0 + j) * gS;
        guard(1.0 + aS + (j - 1.0) * gS, "df_product_formula: numerator Gamma pole");
        guard(1.0 + bS + (j - 1.0) * gS, "df_product_formula: numerator Gamma pole");
        v *= std::exp(log_gamma(1.0 + aS + (j - 1.0) * gS) + log_gamma(1.0 + bS + (j - 1.0) * gS) -
                      log_gamma(d));
    }
    for (int j = 1; j <= nO; ++j) {
        const cplx d = 2.0 - static_cast<double>(nS) + aO + bO + (nO - 2.0 + j) * gO;
        guard(1.0 + aO + (j - 1.0) * gO - static_cast<double>(nS),
              "df_product_formula: numerator Gamma pole");
        guard(1.0 + bO + (j - 1.0) * gO - static_cast<double>(nS),
              "df_product_formula: numerator Gamma pole");
        v *= std::exp(log_gamma(1.0 + aO + (j - 1.0) * gO - static_cast<double>(nS)) +
                      log_gamma(1.0 + bO + (j - 1.0) * gO - static_cast<double>(nS)) - log_gamma(d));
    }
    return v;
}

DfN2Report df_n2_claim(cplx alpha_p, cplx beta_p, double tol, const QuadSettings& qs) {
    DfN2Report out;
    if (alpha_p.real() < 1.0 || beta_p.real() < 1.0)
        throw decay_violation("df_n2_claim: Re alpha_+, Re beta_+ >= 1 required");
    out.lhs_slot_minus = contour_df2(alpha_p, beta_p, cplx(-1.0), qs).value;
    out.lhs_slot_plus = contour_df2(alpha_p, beta_p, cplx(1.0), qs).value;
    out.rhs = -std::exp(log_gamma(1.0 + alpha_p) + log_gamma(1.0 + beta_p) + log_gamma(alpha_p) +
                        log_gamma(beta_p) - log_gamma(1.0 + alpha_p + beta_p) -
                        log_gamma(alpha_p + beta_p)) /
              2.0;
    out.convention = "gamma_slot=-1";
    out.report = make_report("df-n2-claim", std::abs(out.lhs_slot_minus), std::abs(out.rhs), tol);
    const cplx ratio = out.lhs_slot_minus / out.rhs;
    out.sign = (ratio.real() >= 0.0) ? 1 : -1;
    return out;
}

// ---------------------------------------------------------------------------
// Moebius maps
// ---------------------------------------------------------------------------

const std::vector<MoebiusPerm>& moebius_group() {
    static const std::vector<MoebiusPerm> g = {
        {{0, 1, 2}}, // identity
        {{1, 0, 2}}, // (0 1)
        {{2, 1, 0}}, // (0 inf)
        {{0, 2, 1}}, // (1 inf)
        {{1, 2, 0}}, // (0 1 inf): 0->1, 1->inf, inf->0
        {{2, 0, 1}}, // (0 inf 1): 0->inf, 1->0, inf->1
    };
    return g;
}

namespace {

bool perm_is_odd(const MoebiusPerm& s) {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (s.image[i] > s.image[j]) ++inv;
    return inv % 2 == 1;
}

} // namespace

GenericParams reverse_blocks(const RegionShape& shape, const GenericParams& p) {
    std::vector<int> sigma(static_cast<std::size_t>(p.N));
    std::iota(sigma.begin(), sigma.end(), 1);
    auto rev_block = [&](int first, int count) {
        for (int i = 0; i < count; ++i) sigma[static_cast<std::size_t>(first - 1 + i)] = first + count - 1 - i;
    };
    rev_block(1, shape.l);
    rev_block(shape.l + 1, shape.m);
    rev_block(shape.l + shape.m + 1, shape.n);
    return p.permuted(sigma);
}

LaurentPoly reverse_blocks(const RegionShape& shape, const LaurentPoly& F) {
    std::vector<int> sigma(static_cast<std::size_t>(F.nvars()));
    std::iota(sigma.begin(), sigma.end(), 1);
    auto rev_block = [&](int first, int count) {
        for (int i = 0; i < count; ++i) sigma[static_cast<std::size_t>(first - 1 + i)] = first + count - 1 - i;
    };
    rev_block(1, shape.l);
    rev_block(shape.l + 1, shape.m);
    rev_block(shape.l + shape.m + 1, shape.n);
    return F.permuted(sigma);
}

MoebiusResult moebius_param_map(const MoebiusPerm& sigma, const RegionShape& shape,
                                const GenericParams& p) {
    MoebiusResult out;
    // edge labels: l between {0,inf}, m between {0,1}, n between {1,inf}
    auto edge_between = [&](int a, int b) {
        if ((a == 0 && b == 2) || (a == 2 && b == 0)) return shape.l;
        if ((a == 0 && b == 1) || (a == 1 && b == 0)) return shape.m;
        return shape.n;
    };
    // find preimages: new edge between (x, y) = old edge between preimages
    int pre[3];
    for (int i = 0; i < 3; ++i) pre[sigma.image[i]] = i;
    out.shape.l = edge_between(pre[0], pre[2]);
    out.shape.m = edge_between(pre[0], pre[1]);
    out.shape.n = edge_between(pre[1], pre[2]);

    const int N = p.N;
    GenericParams q(N);
    q.gamma = p.gamma;
    std::vector<cplx> contraction(static_cast<std::size_t>(N), 0.0);
    for (int j = 1; j <= N; ++j)
        for (int k = 1; k <= N; ++k)
            if (k != j) contraction[static_cast<std::size_t>(j - 1)] += p.gam(j, k);
    auto third = [&](int i) {
        return -2.0 - p.alpha[static_cast<std::size_t>(i)] - p.beta[static_cast<std::size_t>(i)] -
               2.0 * contraction[static_cast<std::size_t>(i)];
    };
    // classify sigma by its images
    const auto& im = sigma.image;
    for (int i = 0; i < N; ++i) {
        if (im[0] == 0 && im[1] == 1) { // identity
            q.alpha[static_cast<std::size_t>(i)] = p.alpha[static_cast<std::size_t>(i)];
            q.beta[static_cast<std::size_t>(i)] = p.beta[static_cast<std::size_t>(i)];
        } else if (im[0] == 1 && im[1] == 0) { // (0 1)
            q.alpha[static_cast<std::size_t>(i)] = p.beta[static_cast<std::size_t>(i)];
            q.beta[static_cast<std::size_t>(i)] = p.alpha[static_cast<std::size_t>(i)];
        } else if (im[0] == 2 && im[1] == 1) { // (0 inf)
            q.alpha[static_cast<std::size_t>(i)] = third(i);
            q.beta[static_cast<std::size_t>(i)] = p.beta[static_cast<std::size_t>(i)];
        } else if (im[0] == 0 && im[1] == 2) { // (1 inf)
            q.alpha[static_cast<std::size_t>(i)] = p.alpha[static_cast<std::size_t>(i)];
            q.beta[static_cast<std::size_t>(i)] = third(i);
        } else if (im[0] == 1 && im[1] == 2) { // (0 1 inf)
            q.alpha[static_cast<std::size_t>(i)] = third(i);
            q.beta[static_cast<std::size_t>(i)] = p.alpha[static_cast<std::size_t>(i)];
        } else { // (0 inf 1)
            q.alpha[static_cast<std::size_t>(i)] = p.beta[static_cast<std::size_t>(i)];
            q.beta[static_cast<std::size_t>(i)] = third(i);
        }
    }
    out.params = std::move(q);
    out.reversed = perm_is_odd(sigma);
    return out;
}

} // namespace selberg
