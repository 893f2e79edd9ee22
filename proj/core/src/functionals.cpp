#include "selberg/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace selberg {

int GenericParams::pair_index(int j, int k, int N) {
    if (j > k) std::swap(j, k);
    // 1-based (j,k), j<k, lexicographic: (1,2),(1,3),...,(1,N),(2,3),...
    return (j - 1) * N - (j - 1) * j / 2 + (k - j) - 1;
}

cplx GenericParams::gam(int j, int k) const {
    return gamma[static_cast<std::size_t>(pair_index(j, k, N))];
}

void GenericParams::set_gam(int j, int k, cplx v) {
    gamma[static_cast<std::size_t>(pair_index(j, k, N))] = v;
}

bool GenericParams::is_real() const {
    for (const auto& v : alpha)
        if (v.imag() != 0.0) return false;
    for (const auto& v : beta)
        if (v.imag() != 0.0) return false;
    for (const auto& v : gamma)
        if (v.imag() != 0.0) return false;
    return true;
}

bool GenericParams::is_constant() const {
    for (const auto& v : alpha)
        if (v != alpha[0]) return false;
    for (const auto& v : beta)
        if (v != beta[0]) return false;
    for (const auto& v : gamma)
        if (v != (gamma.empty() ? cplx(0.0) : gamma[0])) return false;
    return true;
}

GenericParams GenericParams::permuted(const std::vector<int>& sigma) const {
    GenericParams q(N);
    for (int i = 1; i <= N; ++i) {
        q.alpha[i - 1] = alpha[static_cast<std::size_t>(sigma[i - 1] - 1)];
        q.beta[i - 1] = beta[static_cast<std::size_t>(sigma[i - 1] - 1)];
    }
    for (int j = 1; j <= N; ++j)
        for (int k = j + 1; k <= N; ++k) q.set_gam(j, k, gam(sigma[j - 1], sigma[k - 1]));
    return q;
}

GenericParams SymmetricParams::expand(int N) const {
    GenericParams p(N);
    std::fill(p.alpha.begin(), p.alpha.end(), alpha);
    std::fill(p.beta.begin(), p.beta.end(), beta);
    std::fill(p.gamma.begin(), p.gamma.end(), gamma);
    return p;
}

cplx AffineFunctional::eval(const GenericParams& p) const {
    cplx v = static_cast<double>(cst);
    for (int i = 0; i < N; ++i) {
        if (a[i]) v += static_cast<double>(a[i]) * p.alpha[i];
        if (b[i]) v += static_cast<double>(b[i]) * p.beta[i];
    }
    for (std::size_t t = 0; t < g.size(); ++t)
        if (g[t]) v += static_cast<double>(g[t]) * p.gamma[t];
    return v;
}

cplx AffineFunctional::eval(const SymmetricParams& p) const {
    cplx v = static_cast<double>(cst);
    int sa = 0, sb = 0, sg = 0;
    for (int i = 0; i < N; ++i) {
        sa += a[i];
        sb += b[i];
    }
    for (int t : g) sg += t;
    return v + static_cast<double>(sa) * p.alpha + static_cast<double>(sb) * p.beta +
           static_cast<double>(sg) * p.gamma;
}

AffineFunctional AffineFunctional::permuted(const std::vector<int>& sigma) const {
    // coefficients of the pulled-back functional f(p^sigma)
    AffineFunctional r(N);
    r.cst = cst;
    for (int i = 1; i <= N; ++i) {
        r.a[sigma[i - 1] - 1] += a[i - 1];
        r.b[sigma[i - 1] - 1] += b[i - 1];
    }
    for (int j = 1; j <= N; ++j)
        for (int k = j + 1; k <= N; ++k) {
            const int src = GenericParams::pair_index(j, k, N);
            const int dst = GenericParams::pair_index(sigma[j - 1], sigma[k - 1], N);
            r.g[static_cast<std::size_t>(dst)] += g[static_cast<std::size_t>(src)];
        }
    return r;
}

std::string AffineFunctional::describe() const {
    std::ostringstream os;
    os << cst;
    for (int i = 0; i < N; ++i)
        if (a[i]) os << (a[i] > 0 ? "+" : "") << a[i] << "*a" << (i + 1);
    for (int i = 0; i < N; ++i)
        if (b[i]) os << (b[i] > 0 ? "+" : "") << b[i] << "*b" << (i + 1);
    for (int j = 1; j <= N; ++j)
        for (int k = j + 1; k <= N; ++k) {
            const int t = GenericParams::pair_index(j, k, N);
            if (g[static_cast<std::size_t>(t)])
                os << (g[static_cast<std::size_t>(t)] > 0 ? "+" : "")
                   << g[static_cast<std::size_t>(t)] << "*g" << j << "," << k;
        }
    return os.str();
}

StarFunctionals star_functionals(int N) {
    StarFunctionals s;
    s.alpha_star.assign(static_cast<std::size_t>(N), AffineFunctional(N));
    s.beta_star.assign(static_cast<std::size_t>(N), AffineFunctional(N));
    s.gamma_star.assign(static_cast<std::size_t>(N),
                        std::vector<AffineFunctional>(static_cast<std::size_t>(N), AffineFunctional(N)));
    for (int j = 1; j <= N; ++j) {
        AffineFunctional& fa = s.alpha_star[j - 1];
        for (int j0 = 1; j0 <= j; ++j0) fa.a[j0 - 1] += 1;
        for (int j0 = 1; j0 <= j; ++j0)
            for (int k = j0 + 1; k <= j; ++k)
                fa.g[static_cast<std::size_t>(GenericParams::pair_index(j0, k, N))] += 2;
        AffineFunctional& fb = s.beta_star[j - 1];
        for (int j0 = N - j + 1; j0 <= N; ++j0) fb.b[j0 - 1] += 1;
        for (int j0 = N - j + 1; j0 <= N; ++j0)
            for (int k = j0 + 1; k <= N; ++k)
                fb.g[static_cast<std::size_t>(GenericParams::pair_index(j0, k, N))] += 2;
    }
    for (int j = 1; j <= N; ++j)
        for (int k = j + 1; k <= N; ++k) {
            AffineFunctional& fg = s.gamma_star[j - 1][k - 1];
            for (int j0 = j; j0 <= k; ++j0)
                for (int k0 = j0 + 1; k0 <= k; ++k0)
                    fg.g[static_cast<std::size_t>(GenericParams::pair_index(j0, k0, N))] += 2;
        }
    return s;
}

AffineFunctional StarFunctionals::relabeled(int j, int k, int N) const {
    if (j == 0) return alpha_star[static_cast<std::size_t>(k - 1)];
    if (k == N + 1) return beta_star[static_cast<std::size_t>(N + 1 - j - 1)];
    return gamma_star[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
}

namespace {

void add_gamma_range(AffineFunctional& f, int lo, int hi, int coeff) {
    // gamma_{j0,k0} for lo <= j0 < k0 <= hi (variable indices)
    for (int j0 = lo; j0 <= hi; ++j0)
        for (int k0 = j0 + 1; k0 <= hi; ++k0)
            f.g[static_cast<std::size_t>(GenericParams::pair_index(j0, k0, f.N))] += coeff;
}

} // namespace

AffineFunctional rho(const RegionShape& shape, const KFaceId& face) {
    const int N = shape.N();
    const int R = shape.ring();
    const int l = shape.l, m = shape.m;
    AffineFunctional f(N);
    const CyclicInterval& iv = face.interval;
    const bool has_inf = iv.contains(shape.anchor_inf(), R);
    const bool has_zero = iv.contains(shape.anchor_zero(), R);
    const bool has_one = iv.contains(shape.anchor_one(), R);
    if (static_cast<int>(has_inf) + static_cast<int>(has_zero) + static_cast<int>(has_one) > 1)
        throw invalid_face("rho: interval holds two distinguished indices");

    if (!has_inf) {
        const int j = iv.start;
        const int k = iv.start + iv.len - 1; // no wrap when 0 not contained
        if (k >= R) throw invalid_face("rho: malformed interval");
        if (has_zero) {
            // rt2: j in {1..l+1}, k in {l+1..l+m+1}
            if (j < 1 || j > l + 1 || k < l + 1 || k > l + m + 1)
                throw invalid_face("rho: endpoints out of range for the 0-anchored case");
            f.cst = k - j - 1;
            for (int i = j; i <= l; ++i) f.a[i - 1] += 1;
            for (int i = l + 2; i <= k; ++i) f.a[i - 2] += 1;
            add_gamma_range(f, j, k - 1, 2);
        } else if (has_one) {
            // rt3: j in {l+2..l+m+2}, k in {l+m+2..N+2}
            if (j < l + 2 || j > l + m + 2 || k < l + m + 2 || k > N + 2)
                throw invalid_face("rho: endpoints out of range for the 1-anchored case");
            f.cst = k - j - 1;
            for (int i = j; i <= l + m + 1; ++i) f.b[i - 2] += 1;
            for (int i = l + m + 3; i <= k; ++i) f.b[i - 3] += 1;
            add_gamma_range(f, j - 1, k - 2, 2);
        } else {
            // rt1 in one variable block; constant k-j-1 (see the cross checks)
            auto varidx = [&](int i) {
                if (i >= 1 && i <= l) return i;
                if (i >= l + 2 && i <= l + m + 1) return i - 1;
                return i - 2; // {l+m+3..N+2}
            };
            f.cst = iv.len - 2; // k - j - 1 within the block
            add_gamma_range(f, varidx(j), varidx(k), 2);
        }
        return f;
    }
    // rt4: interval wraps through 0; right part {k..N+3}, left part {0..j}
    int j = (iv.start + iv.len - 1) % R; // in {0..l}
    int k = iv.start;                    // in {l+m+3..N+3}; start==0 means N+3
    if (k == 0) k = R;
    if (j > l || k < l + m + 3 || k > N + 3)
        throw invalid_face("rho: endpoints out of range for the infinity case");
    f.cst = k - j - N - 4;
    for (int i = 1; i <= j; ++i) {
        f.a[i - 1] -= 1;
        f.b[i - 1] -= 1;
    }
    for (int i = k; i <= N + 2; ++i) {
        f.a[i - 3] -= 1;
        f.b[i - 3] -= 1;
    }
    auto add_row = [&](int v, int coeff) { // gamma_{i,v} over i != v
        for (int i = 1; i <= N; ++i) {
            if (i == v) continue;
            f.g[static_cast<std::size_t>(GenericParams::pair_index(i, v, N))] += coeff;
        }
    };
    for (int jp = 1; jp <= j; ++jp) add_row(jp, -2);
    for (int kp = k - 2; kp <= N; ++kp) add_row(kp, -2);
    add_gamma_range(f, 1, j, 2);
    add_gamma_range(f, k - 2, N, 2);
    for (int jp = 1; jp <= j; ++jp)
        for (int kp = k - 2; kp <= N; ++kp)
            f.g[static_cast<std::size_t>(GenericParams::pair_index(jp, kp, N))] += 2;
    return f;
}

cplx rho_value(const RegionShape& shape, const KFaceId& face, const GenericParams& p) {
    return rho(shape, face).eval(p);
}

AffineFunctional varrho(const RegionShape& shape, const AFaceId& face) {
    const int N = shape.N();
    AffineFunctional f(N);
    const std::uint32_t mem = face.members();
    if (mem == 0) throw invalid_face("varrho: S and Q both empty");
    int sz = 0;
    for (int i = 0; i < N; ++i)
        if (mem & (1u << i)) ++sz;
    auto in = [&](int v) { return (mem >> (v - 1)) & 1u; }; // 1-based
    if (face.anchor == kAnchorZero || face.anchor == kAnchorOne) {
        f.cst = sz - 1;
        for (int v = 1; v <= N; ++v)
            if (in(v)) {
                if (face.anchor == kAnchorZero)
                    f.a[v - 1] += 1;
                else
                    f.b[v - 1] += 1;
            }
        for (int j = 1; j <= N; ++j)
            for (int k = j + 1; k <= N; ++k)
                if (in(j) && in(k))
                    f.g[static_cast<std::size_t>(GenericParams::pair_index(j, k, N))] += 2;
        return f;
    }
    // anchor infinity
    f.cst = -sz - 1;
    for (int v = 1; v <= N; ++v)
        if (in(v)) {
            f.a[v - 1] -= 1;
            f.b[v - 1] -= 1;
        }
    for (int j = 1; j <= N; ++j)
        for (int k = j + 1; k <= N; ++k)
            if (in(j) || in(k))
                f.g[static_cast<std::size_t>(GenericParams::pair_index(j, k, N))] -= 2;
    return f;
}

cplx varrho_value(const RegionShape& shape, const AFaceId& face, const GenericParams& p) {
    return varrho(shape, face).eval(p);
}

// ---------------------------------------------------------------------------
// Domain membership
// ---------------------------------------------------------------------------

namespace {

constexpr double kLatticeTol = 1e-9;

bool in_lattice_below(cplx z, int bound, double tol = kLatticeTol) {
    // z in Z^{<= bound}?
    if (std::abs(z.imag()) > tol) return false;
    const double r = std::round(z.real());
    return std::abs(z.real() - r) <= tol && r <= static_cast<double>(bound) + 0.5;
}

// corner-face weight of F for a K face (0 unless the face sits at the
// x->0 or x->1 corner of (0,N,0) and a profile is supplied)
int k_face_weight(const RegionShape& shape, const KFaceId& face, const VanishingProfile* vp) {
    if (!vp || shape.l != 0 || shape.n != 0) return 0;
    const int R = shape.ring();
    if (face.interval.contains(shape.anchor_zero(), R)) {
        // variables 1..len-1 pinned to 0
        return vp->delta[static_cast<std::size_t>(face.interval.len - 2)];
    }
    if (face.interval.contains(shape.anchor_one(), R)) {
        return vp->atled[static_cast<std::size_t>(face.interval.len - 2)];
    }
    return 0;
}

int a_face_weight(const RegionShape& shape, const AFaceId& face, const VanishingProfile* vp) {
    if (!vp) return 0;
    int sz = 0;
    const std::uint32_t mem = face.members();
    for (int i = 0; i < shape.N(); ++i)
        if (mem & (1u << i)) ++sz;
    switch (face.anchor) {
        case kAnchorZero: return vp->delta[static_cast<std::size_t>(sz - 1)];
        case kAnchorOne: return vp->atled[static_cast<std::size_t>(sz - 1)];
        default: return -vp->deg[static_cast<std::size_t>(sz - 1)];
    }
}

SymmetricParams require_constant(const GenericParams& p, const char* who) {
    if (!p.is_constant())
        throw domain_error(std::string(who) + ": requires constant parameters");
    SymmetricParams s;
    s.alpha = p.alpha[0];
    s.beta = p.beta[0];
    s.gamma = p.gamma.empty() ? cplx(0.0) : p.gamma[0];
    return s;
}

} // namespace

DomainCheck in_domain(DomainKind kind, const RegionShape& shape, const GenericParams& p,
                      const VanishingProfile* profile) {
    DomainCheck out;
    const int N = shape.N();
    auto violate = [&](const std::string& what, double margin) {
        out.ok = false;
        out.violations.push_back({what, margin});
    };
    switch (kind) {
        case DomainKind::Omega: {
            for (const auto& f : enumerate_k_faces(shape)) {
                const cplx v = rho(shape, f).eval(p);
                const double margin = v.real() + 1.0;
                if (margin <= 0.0)
                    violate("Re rho_{" + std::to_string(f.j) + "," + std::to_string(f.k) + "} > -1",
                            margin);
            }
            break;
        }
        case DomainKind::DotOmega: {
            for (const auto& f : enumerate_k_faces(shape)) {
                const cplx v = rho(shape, f).eval(p);
                const int d = k_face_weight(shape, f, profile);
                if (in_lattice_below(v + static_cast<double>(d), -1))
                    violate("rho_{" + std::to_string(f.j) + "," + std::to_string(f.k) + "} + " +
                                std::to_string(d) + " not in Z^{<=-1}",
                            0.0);
            }
            break;
        }
        case DomainKind::V: {
            for (const auto& f : enumerate_a_faces(shape)) {
                const cplx v = varrho(shape, f).eval(p);
                const double margin = v.real() + 1.0;
                if (margin <= 0.0) violate("Re varrho > -1 (anchor " + std::to_string(f.anchor) + ")", margin);
            }
            break;
        }
        case DomainKind::DotV: {
            for (const auto& f : enumerate_a_faces(shape)) {
                const cplx v = varrho(shape, f).eval(p);
                const int d = a_face_weight(shape, f, profile);
                if (in_lattice_below(v + static_cast<double>(d), -1))
                    violate("varrho + d not in Z^{<=-1} (anchor " + std::to_string(f.anchor) + ")", 0.0);
            }
            break;
        }
        case DomainKind::U: {
            const SymmetricParams s = require_constant(p, "in_domain(U)");
            for (int j = 1; j <= N; ++j) {
                const int dj = profile ? profile->delta[j - 1] : 0;
                const int aj = profile ? profile->atled[j - 1] : 0;
                double mg = (static_cast<double>(j) * (s.alpha + (j - 1.0) * s.gamma)).real() + 1.0 + dj;
                if (mg <= 0.0) violate("Re j(alpha+(j-1)gamma) > -1-delta_j, j=" + std::to_string(j), mg);
                mg = (static_cast<double>(j) * (s.beta + (j - 1.0) * s.gamma)).real() + 1.0 + aj;
                if (mg <= 0.0) violate("Re j(beta+(j-1)gamma) > -1-atled_j, j=" + std::to_string(j), mg);
            }
            if (N >= 2) {
                const double mg = s.gamma.real() + 1.0 / (N - 1.0);
                if (mg <= 0.0) violate("Re gamma > -1/(N-1)", mg);
            }
            break;
        }
        case DomainKind::DotU: {
            const SymmetricParams s = require_constant(p, "in_domain(DotU)");
            for (int j = 1; j <= N; ++j) {
                const int dj = profile ? profile->delta[j - 1] : 0;
                const int aj = profile ? profile->atled[j - 1] : 0;
                if (in_lattice_below(static_cast<double>(j) * (s.alpha + (j - 1.0) * s.gamma), -j - dj))
                    violate("j(alpha+(j-1)gamma) in Z^{<=-j-delta_j}, j=" + std::to_string(j), 0.0);
                if (in_lattice_below(static_cast<double>(j) * (s.beta + (j - 1.0) * s.gamma), -j - aj))
                    violate("j(beta+(j-1)gamma) in Z^{<=-j-atled_j}, j=" + std::to_string(j), 0.0);
            }
            for (int j = 1; j <= N - 1; ++j)
                if (in_lattice_below(static_cast<double>(j * (j + 1)) * s.gamma, -j))
                    violate("j(j+1)gamma in Z^{<=-j}, j=" + std::to_string(j), 0.0);
            break;
        }
        case DomainKind::RingU: {
            const SymmetricParams s = require_constant(p, "in_domain(RingU)");
            for (int j = 1; j <= N; ++j) {
                const int bd = profile ? profile->bar_delta[j - 1] : 0;
                const int ba = profile ? profile->bar_atled[j - 1] : 0;
                if (in_lattice_below(s.alpha + static_cast<double>(bd) + (j - 1.0) * s.gamma, -1))
                    violate("alpha+bar_delta_j+(j-1)gamma in Z^{<=-1}, j=" + std::to_string(j), 0.0);
                if (in_lattice_below(s.beta + static_cast<double>(ba) + (j - 1.0) * s.gamma, -1))
                    violate("beta+bar_atled_j+(j-1)gamma in Z^{<=-1}, j=" + std::to_string(j), 0.0);
            }
            long gint = 0;
            const bool gamma_integer = detail::near_integer(s.gamma, gint, kLatticeTol);
            for (int j = 1; j <= N - 1; ++j)
                if (!gamma_integer && in_lattice_below((j + 1.0) * s.gamma, -1))
                    violate("(j+1)gamma in Z^{<=-1} with gamma not integer, j=" + std::to_string(j), 0.0);
            break;
        }
        case DomainKind::W: {
            const SymmetricParams s = require_constant(p, "in_domain(W)");
            const GenericParams q = s.expand(N);
            return in_domain(DomainKind::V, shape, q, profile);
        }
        default:
            throw unsupported("in_domain: unsupported kind");
    }
    return out;
}

double omega_margin(const RegionShape& shape, const GenericParams& p) {
    double mg = 1e300;
    for (const auto& f : enumerate_k_faces(shape))
        mg = std::min(mg, rho(shape, f).eval(p).real() + 1.0);
    return mg;
}

double v_margin(const RegionShape& shape, const GenericParams& p) {
    double mg = 1e300;
    for (const auto& f : enumerate_a_faces(shape))
        mg = std::min(mg, varrho(shape, f).eval(p).real() + 1.0);
    return mg;
}

} // namespace selberg
