#include "selberg/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace selberg {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogSqrt2Pi = 0.918938533204672741780329736405617639;
constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// log Gamma for Re(z) >= 0.5 via Lanczos.
cplx log_gamma_positive(cplx z) {
    const cplx zz = z - 1.0;
    cplx acc = kLanczos[0];
    for (int k = 1; k < 15; ++k) acc += kLanczos[k] / (zz + static_cast<double>(k));
    const cplx t = zz + kLanczosG + 0.5;
    return kLogSqrt2Pi + (zz + 0.5) * std::log(t) - t + std::log(acc);
}

// log sin(pi z) avoiding overflow for large |Im z|; exp(result) = sin(pi z).
cplx log_sin_pi(cplx z) {
    const cplx iz = cplx(0.0, 1.0) * (kPi * z);
    if (z.imag() > 0) {
        // sin(pi z) = e^{-i pi z} (1 - e^{2 i pi z}) i/2
        return -iz + std::log((1.0 - std::exp(2.0 * iz)) * cplx(0.0, 0.5));
    }
    return iz + std::log((1.0 - std::exp(-2.0 * iz)) * cplx(0.0, -0.5));
}

double real_log_abs_gamma(double x); // forward

double real_log_abs_gamma_impl(double x, bool& negative) {
    negative = false;
    if (x >= 0.5) return log_gamma_positive(cplx(x, 0.0)).real();
    const double s = std::sin(kPi * x);
    negative = s < 0.0;
    return std::log(kPi / std::abs(s)) - real_log_abs_gamma(1.0 - x);
}

double real_log_abs_gamma(double x) {
    bool neg;
    return real_log_abs_gamma_impl(x, neg);
}

} // namespace

bool near_nonpositive_integer(cplx z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    return r <= 0.5 && std::abs(z.real() - r) <= tol;
}

namespace detail {

bool near_integer(cplx z, long& n, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    if (std::abs(z.real() - r) > tol) return false;
    n = static_cast<long>(r);
    return true;
}

cplx pochhammer(cplx x, int n) {
    cplx v = 1.0;
    for (int k = 0; k < n; ++k) v *= x + static_cast<double>(k);
    return v;
}

} // namespace detail

cplx log_gamma(cplx z) {
    if (near_nonpositive_integer(z))
        throw pole_error(z, "log_gamma: argument at a nonpositive integer");
    if (z.imag() == 0.0) {
        bool neg;
        const double la = real_log_abs_gamma_impl(z.real(), neg);
        return {la, neg ? kPi : 0.0};
    }
    if (z.real() >= 0.5) return log_gamma_positive(z);
    // exp of the result is Gamma(z); the branch is not the analytic one.
    return std::log(kPi) - log_sin_pi(z) - log_gamma_positive(1.0 - z);
}

cplx gamma(cplx z) {
    return std::exp(log_gamma(z));
}

cplx gamma_ratio(cplx a, cplx b) {
    return std::exp(log_gamma(a) - log_gamma(b));
}

cplx rgamma(cplx z) {
    if (near_nonpositive_integer(z)) return 0.0;
    return std::exp(-log_gamma(z));
}

cplx digamma(cplx z) {
    if (near_nonpositive_integer(z))
        throw pole_error(z, "digamma: argument at a nonpositive integer");
    if (z.real() < 0.5) {
        const cplx piz = kPi * z;
        return digamma(1.0 - z) - kPi * std::cos(piz) / std::sin(piz);
    }
    cplx acc = 0.0;
    while (z.real() < 8.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    const cplx w = 1.0 / (z * z);
    cplx s = std::log(z) - 0.5 / z;
    const double c[7] = {1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
                         1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0};
    cplx wp = w;
    for (int k = 0; k < 7; ++k) {
        s -= c[k] * wp;
        wp *= w;
    }
    return s + acc;
}

cplx beta_mero(cplx a, cplx b) {
    if (near_nonpositive_integer(1.0 + a))
        throw pole_error(1.0 + a, "beta_mero: pole in Gamma(1+a)");
    if (near_nonpositive_integer(1.0 + b))
        throw pole_error(1.0 + b, "beta_mero: pole in Gamma(1+b)");
    return std::exp(log_gamma(1.0 + a) + log_gamma(1.0 + b) - log_gamma(2.0 + a + b));
}

// ---------------------------------------------------------------------------
// 2F1
// ---------------------------------------------------------------------------

namespace {

constexpr double kParamIntTol = 1e-10;

cplx series_2f1(cplx a, cplx b, cplx c, cplx z) {
    cplx term = 1.0, sum = 1.0;
    for (int k = 0; k < 4000; ++k) {
        term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
                ((c + static_cast<double>(k)) * static_cast<double>(k + 1)) * z;
        sum += term;
        if (std::abs(term) <= 1e-17 * (1.0 + std::abs(sum))) return sum;
    }
    throw nonconvergent("hyp2f1: series did not converge");
}

cplx terminating_2f1(cplx a, long na, cplx b, cplx c, cplx z) {
    cplx term = 1.0, sum = 1.0;
    for (long k = 0; k < na; ++k) {
        term *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
                ((c + static_cast<double>(k)) * static_cast<double>(k + 1)) * z;
        sum += term;
    }
    return sum;
}

cplx eval_2f1(cplx a, cplx b, cplx c, cplx z, int depth);

// Connection at 1-z, c-a-b not an integer (DLMF 15.8.4).
cplx oneminus_generic(cplx a, cplx b, cplx c, cplx z, int depth) {
    const cplx u = 1.0 - z;
    const cplx s = c - a - b;
    const cplx t1 = std::exp(log_gamma(c) + log_gamma(s) - log_gamma(c - a) - log_gamma(c - b)) *
                    eval_2f1(a, b, 1.0 - s, u, depth + 1);
    const cplx t2 = std::exp(log_gamma(c) + log_gamma(-s) - log_gamma(a) - log_gamma(b)) *
                    std::pow(u, s) * eval_2f1(c - a, c - b, 1.0 + s, u, depth + 1);
    return t1 + t2;
}

// c = a+b+m, m >= 0: logarithmic expansion in u = 1-z (A&S 15.3.10/15.3.11).
cplx oneminus_log_m(cplx a, cplx b, long m, cplx z) {
    const double md = static_cast<double>(m);
    const cplx u = 1.0 - z;
    const cplx c = a + b + md;
    const cplx lnu = std::log(u);
    cplx tot = 0.0;
    if (m > 0) {
        cplx s1 = 0.0, t = 1.0;
        for (long n = 0; n < m; ++n) {
            if (n > 0) {
                const double nd = static_cast<double>(n);
                t *= (a + (nd - 1.0)) * (b + (nd - 1.0)) / (nd * (nd - md)) * u;
            }
            s1 += t;
        }
        tot += std::exp(log_gamma(md) + log_gamma(c) - log_gamma(a + md) - log_gamma(b + md)) * s1;
    }
    const cplx pre = rgamma(a) * rgamma(b) * gamma(c) * ((m % 2 == 0) ? 1.0 : -1.0);
    const cplx am = a + md, bm = b + md;
    cplx s2 = 0.0;
    cplx t = std::pow(u, md) * std::exp(-std::lgamma(md + 1.0));
    double psi_n1 = -kEulerGamma;            // psi(n+1)
    cplx psi_nm1 = digamma(cplx(md + 1.0));  // psi(n+m+1)
    for (long n = 0; n < 700; ++n) {
        const double nd = static_cast<double>(n);
        const cplx br = lnu - psi_n1 - psi_nm1 + digamma(am + nd) + digamma(bm + nd);
        const cplx add = t * br;
        s2 += add;
        if (n > 4 && std::abs(add) <= 1e-17 * (1.0 + std::abs(s2))) break;
        t *= (am + nd) * (bm + nd) / ((nd + 1.0) * (nd + 1.0 + md)) * u;
        psi_n1 += 1.0 / (nd + 1.0);
        psi_nm1 += 1.0 / (nd + 1.0 + md);
    }
    return tot - pre * s2;
}

// c = a+b-m, m > 0 (A&S 15.3.12).
cplx oneminus_log_mneg(cplx a, cplx b, long m, cplx z) {
    const double md = static_cast<double>(m);
    const cplx u = 1.0 - z;
    const cplx c = a + b - md;
    const cplx lnu = std::log(u);
    const cplx amm = a - md, bmm = b - md;
    cplx s1 = 0.0, t1 = 1.0;
    for (long n = 0; n < m; ++n) {
        if (n > 0) {
            const double nd = static_cast<double>(n);
            t1 *= (amm + (nd - 1.0)) * (bmm + (nd - 1.0)) / (nd * (nd - md)) * u;
        }
        s1 += t1;
    }
    cplx tot = std::exp(log_gamma(md) + log_gamma(c) - log_gamma(a) - log_gamma(b)) *
               std::pow(u, -md) * s1;
    const cplx pre = rgamma(amm) * rgamma(bmm) * gamma(c) * ((m % 2 == 0) ? 1.0 : -1.0);
    if (pre == 0.0) return tot;
    cplx s2 = 0.0;
    cplx t = std::exp(-std::lgamma(md + 1.0));
    double psi_n1 = -kEulerGamma;
    cplx psi_nm1 = digamma(cplx(md + 1.0));
    for (long n = 0; n < 700; ++n) {
        const double nd = static_cast<double>(n);
        const cplx br = lnu - psi_n1 - psi_nm1 + digamma(a + nd) + digamma(b + nd);
        const cplx add = t * br;
        s2 += add;
        if (n > 4 && std::abs(add) <= 1e-17 * (1.0 + std::abs(s2))) break;
        t *= (a + nd) * (b + nd) / ((nd + 1.0) * (nd + 1.0 + md)) * u;
        psi_n1 += 1.0 / (nd + 1.0);
        psi_nm1 += 1.0 / (nd + 1.0 + md);
    }
    return tot - pre * s2;
}

// Connection at 1/z, a-b not an integer (DLMF 15.8.2).
cplx inverse_generic(cplx a, cplx b, cplx c, cplx z, int depth) {
    const cplx w = 1.0 / z;
    const cplx t1 = std::exp(log_gamma(c) + log_gamma(b - a) - log_gamma(b) - log_gamma(c - a)) *
                    std::pow(-z, -a) * eval_2f1(a, a - c + 1.0, a - b + 1.0, w, depth + 1);
    const cplx t2 = std::exp(log_gamma(c) + log_gamma(a - b) - log_gamma(a) - log_gamma(c - b)) *
                    std::pow(-z, -b) * eval_2f1(b, b - c + 1.0, b - a + 1.0, w, depth + 1);
    return t1 + t2;
}

// b = a+m, m >= 0: logarithmic expansion in 1/z (A&S 15.3.13/15.3.14). When
// c-a-m is a positive integer p+1 the psi pole meets the vanishing
// Pochhammer (1-c+a+m)_n for n > p and leaves the finite tail
// -(-1)^p p! (n-p-1)! (a+m)_n / (n!(n+m)!) w^n.
cplx inverse_log(cplx a, long m, cplx c, cplx z) {
    const double md = static_cast<double>(m);
    const cplx w = 1.0 / z;
    const cplx lnmz = std::log(-z);
    cplx tot = 0.0;
    if (m > 0) {
        cplx s1 = 0.0, t1 = 1.0;
        for (long n = 0; n < m; ++n) {
            if (n > 0) {
                const double nd = static_cast<double>(n);
                t1 *= (a + (nd - 1.0)) * (1.0 - c + a + (nd - 1.0)) / (nd * (nd - md)) * w;
            }
            s1 += t1;
        }
        tot += std::exp(log_gamma(c) + log_gamma(md) - log_gamma(a + md) - log_gamma(c - a)) *
               std::pow(-z, -a) * s1;
    }
    const cplx am = a + md;
    const cplx x = 1.0 - c + am;
    const cplx pre = gamma(c) * rgamma(a) * rgamma(c - am) * std::pow(-z, -am) *
                     ((m % 2 == 0) ? 1.0 : -1.0);
    long p = 0;
    const bool deg = detail::near_integer(-x, p, kParamIntTol) && p >= 0;
    if (!deg && near_nonpositive_integer(c - am, kParamIntTol))
        throw nonconvergent("hyp2f1: doubly degenerate 1/z log case");
    if (deg && p > 600) throw nonconvergent("hyp2f1: degenerate order too large");
    const double sgn_p = (deg && (p % 2 != 0)) ? -1.0 : 1.0;
    cplx s2 = 0.0;
    cplx t = std::exp(-std::lgamma(md + 1.0)); // (am)_n / (n!(n+m)!) w^n
    double psi_n1 = -kEulerGamma;
    cplx psi_nm1 = digamma(cplx(md + 1.0));
    for (long n = 0; n < 700; ++n) {
        const double nd = static_cast<double>(n);
        cplx add;
        if (deg && n > p) {
            add = -sgn_p * t *
                  std::exp(std::lgamma(static_cast<double>(p) + 1.0) +
                           std::lgamma(static_cast<double>(n - p)));
        } else {
            const cplx br = lnmz + psi_n1 + psi_nm1 - digamma(am + nd) - digamma(c - am - nd);
            add = t * detail::pochhammer(x, static_cast<int>(n)) * br;
        }
        s2 += add;
        if (n > 4 && std::abs(add) <= 1e-17 * (1.0 + std::abs(s2))) break;
        t *= (am + nd) / ((nd + 1.0) * (nd + 1.0 + md)) * w;
        psi_n1 += 1.0 / (nd + 1.0);
        psi_nm1 += 1.0 / (nd + 1.0 + md);
    }
    return tot + pre * s2;
}

cplx eval_at_oneminus(cplx a, cplx b, cplx c, cplx z, int depth) {
    long m = 0;
    if (detail::near_integer(c - a - b, m, kParamIntTol))
        return (m >= 0) ? oneminus_log_m(a, b, m, z) : oneminus_log_mneg(a, b, -m, z);
    return oneminus_generic(a, b, c, z, depth);
}

cplx eval_at_inverse(cplx a, cplx b, cplx c, cplx z, int depth) {
    long m = 0;
    if (detail::near_integer(b - a, m, kParamIntTol))
        return (m >= 0) ? inverse_log(a, m, c, z) : inverse_log(b, -m, c, z);
    return inverse_generic(a, b, c, z, depth);
}

cplx eval_direct(cplx a, cplx b, cplx c, cplx z) {
    if (std::abs(z) <= std::abs(z / (z - 1.0))) return series_2f1(a, b, c, z);
    return std::pow(1.0 - z, -b) * series_2f1(c - a, b, c, z / (z - 1.0));
}

cplx eval_2f1(cplx a, cplx b, cplx c, cplx z, int depth) {
    if (depth > 3) throw nonconvergent("hyp2f1: transformation recursion too deep");
    if (near_nonpositive_integer(c, kParamIntTol))
        throw pole_error(c, "hyp2f1: c at a nonpositive integer");
    long na = 0, nb = 0;
    const bool ta = detail::near_integer(a, na, kParamIntTol) && na <= 0;
    const bool tb = detail::near_integer(b, nb, kParamIntTol) && nb <= 0;
    if (ta && tb) return (na >= nb) ? terminating_2f1(a, -na, b, c, z) : terminating_2f1(b, -nb, a, c, z);
    if (ta) return terminating_2f1(a, -na, b, c, z);
    if (tb) return terminating_2f1(b, -nb, a, c, z);
    if (z == 0.0) return 1.0;
    if (std::abs(z - 1.0) < 1e-14) {
        if ((c - a - b).real() <= 0.0) throw nonconvergent("hyp2f1: divergent at z=1");
        return std::exp(log_gamma(c) + log_gamma(c - a - b) - log_gamma(c - a) - log_gamma(c - b));
    }

    const double direct = std::min(std::abs(z), std::abs(z / (z - 1.0)));
    const double a1m = std::abs(1.0 - z);
    const double ainv = 1.0 / std::abs(z);

    if (direct <= 0.72) return eval_direct(a, b, c, z);
    if (a1m <= 0.72) return eval_at_oneminus(a, b, c, z, depth);
    if (ainv <= 0.72) return eval_at_inverse(a, b, c, z, depth);
    const double best = std::min({direct, a1m, ainv});
    if (best <= 0.9) {
        if (best == direct) return eval_direct(a, b, c, z);
        if (best == a1m) return eval_at_oneminus(a, b, c, z, depth);
        return eval_at_inverse(a, b, c, z, depth);
    }
    throw nonconvergent("hyp2f1: no convergent transformation for this argument");
}

} // namespace

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z) {
    return eval_2f1(a, b, c, z, 0);
}

// ---------------------------------------------------------------------------
// 3F2 at unit argument
// ---------------------------------------------------------------------------

namespace {

// Levin u-transform (beta = 1, n = 0) of partial sums s with terms t.
cplx levin_u(const std::vector<cplx>& s, const std::vector<cplx>& t, int k, double& cond) {
    cplx num = 0.0, den = 0.0;
    double binom = 1.0;
    double maxmag = 0.0;
    for (int j = 0; j <= k; ++j) {
        const cplx omega = (1.0 + j) * t[j + 1];
        const double ratio = std::pow((1.0 + j) / (1.0 + k), k - 1);
        const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        const cplx wgt = sgn * binom * ratio / omega;
        num += wgt * s[j];
        den += wgt;
        maxmag = std::max(maxmag, std::abs(wgt * s[j]));
        binom = binom * (k - j) / (j + 1.0);
    }
    cond = maxmag / std::max(std::abs(num), 1e-300);
    return num / den;
}

} // namespace

cplx hyp3f2_at1(const std::array<cplx, 3>& a, const std::array<cplx, 2>& b) {
    long termk = -1;
    for (const auto& ai : a) {
        long n = 0;
        if (detail::near_integer(ai, n, 1e-10) && n <= 0) {
            const long kk = -n;
            if (termk < 0 || kk < termk) termk = kk;
        }
    }
    for (const auto& bi : b) {
        long n = 0;
        if (detail::near_integer(bi, n, 1e-10) && n <= 0) {
            if (termk < 0 || -n < termk)
                throw pole_error(bi, "hyp3f2_at1: lower parameter at a nonpositive integer");
        }
    }
    if (termk >= 0) {
        cplx term = 1.0, sum = 1.0;
        for (long k = 0; k < termk; ++k) {
            const double kd = static_cast<double>(k);
            term *= (a[0] + kd) * (a[1] + kd) * (a[2] + kd) / ((b[0] + kd) * (b[1] + kd) * (kd + 1.0));
            sum += term;
        }
        return sum;
    }
    const cplx s = b[0] + b[1] - a[0] - a[1] - a[2];
    if (s.real() <= 0.0)
        throw divergent_series("hyp3f2_at1: Re(b1+b2-a1-a2-a3) <= 0 and series does not terminate");

    const std::size_t kLevinWindow = 64;
    std::vector<cplx> partial, terms;
    partial.reserve(kLevinWindow + 1);
    terms.reserve(kLevinWindow + 2);
    cplx term = 1.0, sum = 0.0;
    const long kmax = 1000000;
    for (long k = 0; k <= kmax; ++k) {
        sum += term;
        if (partial.size() <= kLevinWindow) {
            partial.push_back(sum);
            terms.push_back(term);
        }
        const double kd = static_cast<double>(k);
        const cplx next = term * (a[0] + kd) * (a[1] + kd) * (a[2] + kd) /
                          ((b[0] + kd) * (b[1] + kd) * (kd + 1.0));
        if (k > 8 && std::abs(next) <= 1e-16 * std::abs(sum)) return sum;
        term = next;
    }
    if (terms.size() == partial.size()) terms.push_back(term);
    cplx best = 0.0, prev = 0.0;
    double best_err = std::numeric_limits<double>::infinity();
    for (int k = 2; k + 1 < static_cast<int>(partial.size()); ++k) {
        double cond;
        const cplx est = levin_u(partial, terms, k, cond);
        const double err = std::abs(est - prev) + 1e-15 * cond * std::abs(est);
        if (k > 4 && err < best_err) {
            best_err = err;
            best = est;
        }
        prev = est;
    }
    if (best_err > 1e-8 * std::abs(best))
        throw nonconvergent("hyp3f2_at1: acceleration failed to reach tolerance");
    return best;
}

cplx digamma_factor(int k, cplx g) {
    if (k < 1) throw domain_error("digamma_factor: k must be positive");
    if (k == 1) return 1.0;
    long g0 = 0;
    if (detail::near_integer(g, g0, 1e-10)) {
        if (g0 >= 0) {
            return gamma_ratio(1.0 + static_cast<double>(k * g0), 1.0 + static_cast<double>(g0));
        }
        const long p = -g0;
        const double lg = std::lgamma(static_cast<double>(p)) -
                          std::lgamma(static_cast<double>(k) * static_cast<double>(p)) -
                          std::log(static_cast<double>(k));
        const double sgn = ((p * (k - 1)) % 2 == 0) ? 1.0 : -1.0;
        return sgn * std::exp(lg);
    }
    const cplx kg = static_cast<double>(k) * g;
    if (near_nonpositive_integer(1.0 + kg, 1e-10))
        throw pole_error(1.0 + kg, "digamma_factor: Gamma(1+k g) pole with g not an integer");
    return gamma_ratio(1.0 + kg, 1.0 + g);
}

} // namespace selberg
