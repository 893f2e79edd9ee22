#include "selberg/poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace selberg {

namespace {

constexpr double kDropTol = 1e-14;

double powi(double x, int e) {
    if (e < 0) return 1.0 / powi(x, -e);
    double r = 1.0, b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

cplx powi(cplx x, int e) {
    if (e < 0) return 1.0 / powi(x, -e);
    cplx r = 1.0, b = x;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

long long binom_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
    return r;
}

} // namespace

bool LaurentPoly::is_polynomial() const {
    for (const auto& [k, c] : terms_)
        for (int e : k)
            if (e < 0) return false;
    return true;
}

bool LaurentPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [k, c] = *terms_.begin();
    return std::all_of(k.begin(), k.end(), [](int e) { return e == 0; }) &&
           std::abs(c - cplx(1.0)) == 0.0;
}

void LaurentPoly::add_term(const Key& exps, cplx coeff) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw domain_error("LaurentPoly: exponent vector length mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (std::abs(coeff) > 0.0) terms_.emplace(exps, coeff);
        return;
    }
    it->second += coeff;
    if (std::abs(it->second) <= kDropTol) terms_.erase(it);
}

cplx LaurentPoly::eval(const std::vector<cplx>& x) const {
    cplx s = 0.0;
    for (const auto& [k, c] : terms_) {
        cplx t = c;
        for (int i = 0; i < nvars_; ++i)
            if (k[i] != 0) t *= powi(x[i], k[i]);
        s += t;
    }
    return s;
}

double LaurentPoly::eval_real(const std::vector<double>& x) const {
    double s = 0.0;
    for (const auto& [k, c] : terms_) {
        double t = c.real();
        for (int i = 0; i < nvars_; ++i)
            if (k[i] != 0) t *= powi(x[i], k[i]);
        s += t;
    }
    return s;
}

bool LaurentPoly::real_coeffs() const {
    for (const auto& [k, c] : terms_)
        if (c.imag() != 0.0) return false;
    return true;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r(nvars_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Key k(ka);
            for (int i = 0; i < nvars_; ++i) k[i] += kb[i];
            r.add_term(k, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::permuted(const std::vector<int>& sigma) const {
    LaurentPoly r(nvars_);
    for (const auto& [k, c] : terms_) {
        Key nk(static_cast<std::size_t>(nvars_), 0);
        // y_i exponent in F^sigma equals exponent of x_{sigma(i)} in F:
        // F^sigma(y) = F(y_{sigma^{-1}(.)}) means x_j -> y_{sigma(j)}.
        for (int j = 0; j < nvars_; ++j) nk[sigma[j] - 1] += k[j];
        r.add_term(nk, c);
    }
    return r;
}

LaurentPoly LaurentPoly::reflected() const {
    if (!is_polynomial()) throw laurent_input("reflected: Laurent input not allowed");
    LaurentPoly r(nvars_);
    for (const auto& [k, c] : terms_) {
        // expand prod_i (1-x_i)^{k_i}
        std::vector<Key> keys{Key(static_cast<std::size_t>(nvars_), 0)};
        std::vector<cplx> coef{c};
        for (int i = 0; i < nvars_; ++i) {
            if (k[i] == 0) continue;
            std::vector<Key> nkeys;
            std::vector<cplx> ncoef;
            for (std::size_t t = 0; t < keys.size(); ++t) {
                for (int e = 0; e <= k[i]; ++e) {
                    Key nk = keys[t];
                    nk[i] += e;
                    const double sgn = (e % 2 == 0) ? 1.0 : -1.0;
                    nkeys.push_back(std::move(nk));
                    ncoef.push_back(coef[t] * sgn * static_cast<double>(binom_ll(k[i], e)));
                }
            }
            keys = std::move(nkeys);
            coef = std::move(ncoef);
        }
        for (std::size_t t = 0; t < keys.size(); ++t) r.add_term(keys[t], coef[t]);
    }
    return r;
}

LaurentPoly LaurentPoly::restrict_equal(int j, int k) const {
    // x_j := x_k, variable j removed (1-based indices)
    LaurentPoly r(nvars_ - 1);
    for (const auto& [key, c] : terms_) {
        Key nk;
        nk.reserve(static_cast<std::size_t>(nvars_) - 1);
        for (int i = 0; i < nvars_; ++i) {
            if (i == j - 1) continue;
            int e = key[i];
            if (i == k - 1) e += key[j - 1];
            nk.push_back(e);
        }
        r.add_term(nk, c);
    }
    return r;
}

LaurentPoly LaurentPoly::derivative(int var) const {
    LaurentPoly r(nvars_);
    for (const auto& [k, c] : terms_) {
        if (k[var - 1] == 0) continue;
        Key nk = k;
        nk[var - 1] -= 1;
        r.add_term(nk, c * static_cast<double>(k[var - 1]));
    }
    return r;
}

bool LaurentPoly::invariant_under_block_permutations(const std::vector<int>& block_sizes) const {
    // check invariance under adjacent transpositions within each block
    int base = 0;
    for (int bs : block_sizes) {
        for (int i = 0; i + 1 < bs; ++i) {
            std::vector<int> sigma(static_cast<std::size_t>(nvars_));
            std::iota(sigma.begin(), sigma.end(), 1);
            std::swap(sigma[base + i], sigma[base + i + 1]);
            const LaurentPoly p = permuted(sigma);
            if (p.terms().size() != terms_.size()) return false;
            for (const auto& [k, c] : terms_) {
                auto it = p.terms().find(k);
                if (it == p.terms().end()) return false;
                if (std::abs(it->second - c) > 1e-12 * (1.0 + std::abs(c))) return false;
            }
        }
        base += bs;
    }
    return true;
}

VanishingProfile vanishing_profile(const LaurentPoly& F) {
    if (!F.is_polynomial()) throw laurent_input("vanishing_profile: Laurent input rejected");
    if (F.terms().empty()) throw domain_error("vanishing_profile: zero polynomial");
    const int N = F.nvars();
    VanishingProfile vp;
    vp.delta.assign(N, std::numeric_limits<int>::max());
    vp.atled.assign(N, std::numeric_limits<int>::max());
    vp.deg.assign(N, std::numeric_limits<int>::min());
    for (const auto& [k, c] : F.terms()) {
        int acc = 0;
        for (int j = 0; j < N; ++j) {
            acc += k[j];
            vp.delta[j] = std::min(vp.delta[j], acc);
            vp.deg[j] = std::max(vp.deg[j], acc);
        }
    }
    const LaurentPoly R = F.reflected();
    for (const auto& [k, c] : R.terms()) {
        int acc = 0;
        for (int j = 0; j < N; ++j) {
            acc += k[N - 1 - j];
            vp.atled[j] = std::min(vp.atled[j], acc);
        }
    }
    vp.bar_delta.resize(N);
    vp.bar_atled.resize(N);
    vp.bar_d.resize(N);
    for (int j = 1; j <= N; ++j) {
        vp.bar_delta[j - 1] = static_cast<int>(std::ceil(static_cast<double>(vp.delta[j - 1]) / j));
        vp.bar_atled[j - 1] = static_cast<int>(std::ceil(static_cast<double>(vp.atled[j - 1]) / j));
        vp.bar_d[j - 1] =
            static_cast<int>(std::floor(static_cast<double>(vp.deg[j - 1]) / (N - j + 1)));
    }
    return vp;
}

} // namespace selberg
