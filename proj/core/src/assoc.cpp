#include "selberg/assoc.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace selberg {

namespace {

int anchors_contained(const RegionShape& s, const CyclicInterval& iv) {
    int c = 0;
    if (iv.contains(s.anchor_inf(), s.ring())) ++c;
    if (iv.contains(s.anchor_zero(), s.ring())) ++c;
    if (iv.contains(s.anchor_one(), s.ring())) ++c;
    return c;
}

bool nested_or_disjoint(const CyclicInterval& a, const CyclicInterval& b, int ring) {
    // classify a vs b on the ring
    int inside = 0;
    for (int i = 0; i < a.len; ++i)
        if (b.contains((a.start + i) % ring, ring)) ++inside;
    if (inside == a.len) return true;   // a subset of b
    if (inside == 0) {
        // b might still be a subset of a
        int binside = 0;
        for (int i = 0; i < b.len; ++i)
            if (a.contains((b.start + i) % ring, ring)) ++binside;
        return binside == 0 || binside == b.len;
    }
    // partial overlap: allowed only if b inside a entirely
    int binside = 0;
    for (int i = 0; i < b.len; ++i)
        if (a.contains((b.start + i) % ring, ring)) ++binside;
    return binside == b.len;
}

} // namespace

std::vector<KFaceId> enumerate_k_faces(const RegionShape& shape) {
    if (!shape.valid()) throw domain_error("enumerate_k_faces: invalid shape");
    const int R = shape.ring();
    const int N = shape.N();
    std::vector<KFaceId> out;
    for (int start = 0; start < R; ++start) {
        for (int len = 2; len <= N + 1; ++len) {
            CyclicInterval iv{start, len};
            if (anchors_contained(shape, iv) > 1) continue;
            KFaceId f;
            f.interval = iv;
            f.j = start;
            f.k = (start + len - 1) % R;
            f.codim = len - 1;
            out.push_back(f);
        }
    }
    return out;
}

std::vector<AFaceId> enumerate_a_faces(const RegionShape& shape) {
    if (!shape.valid()) throw domain_error("enumerate_a_faces: invalid shape");
    const int N = shape.N();
    const auto block1 = static_cast<std::uint32_t>(((1u << shape.l) - 1u));
    const auto block2 = static_cast<std::uint32_t>(((1u << shape.m) - 1u) << shape.l);
    const auto block3 = static_cast<std::uint32_t>(((1u << shape.n) - 1u) << (shape.l + shape.m));
    std::vector<AFaceId> out;
    auto add = [&](std::uint32_t sblock, std::uint32_t qblock, int anchor) {
        // all (S,Q) with S subset sblock, Q subset qblock, not both empty
        std::uint32_t S = 0;
        do {
            std::uint32_t Q = 0;
            do {
                if (S | Q) out.push_back({S, Q, anchor});
                Q = (Q - qblock) & qblock;
            } while (Q != 0);
            S = (S - sblock) & sblock;
        } while (S != 0);
    };
    (void)N;
    add(block2, block1, kAnchorZero);   // F_{S,Q;0}: S in I2, Q in I1
    add(block2, block3, kAnchorOne);    // F_{S,Q;1}: S in I2, Q in I3
    add(block3, block1, kAnchorInf);    // F_{S,Q;inf}: S in I3, Q in I1
    std::sort(out.begin(), out.end(), [](const AFaceId& a, const AFaceId& b) {
        if (a.anchor != b.anchor) return a.anchor < b.anchor;
        if (a.members() != b.members()) return a.members() < b.members();
        return a.S < b.S;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const AFaceId& a, const AFaceId& b) {
                              return a.anchor == b.anchor && a.S == b.S && a.Q == b.Q;
                          }),
              out.end());
    return out;
}

std::vector<ParenFamily> enumerate_tamari(const RegionShape& shape) {
    const auto faces = enumerate_k_faces(shape);
    const int R = shape.ring();
    const int F = static_cast<int>(faces.size());
    std::vector<ParenFamily> out;
    std::vector<int> chosen;

    auto compatible = [&](int cand) {
        for (int c : chosen)
            if (!nested_or_disjoint(faces[cand].interval, faces[c].interval, R)) return false;
        return true;
    };
    auto is_maximal = [&]() {
        for (int f = 0; f < F; ++f) {
            if (std::find(chosen.begin(), chosen.end(), f) != chosen.end()) continue;
            if (compatible(f)) return false;
        }
        return true;
    };
    // enumerate increasing index subsets; output order is lexicographic in
    // the canonical face order by construction
    auto rec = [&](auto&& self, int next) -> void {
        if (is_maximal()) {
            ParenFamily fam;
            for (int c : chosen) fam.intervals.push_back(faces[c].interval);
            out.push_back(std::move(fam));
            return;
        }
        for (int f = next; f < F; ++f) {
            if (!compatible(f)) continue;
            chosen.push_back(f);
            self(self, f + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<ParenFamily> enumerate_sigma_tamari(const RegionShape& shape) {
    if (!shape.valid()) throw domain_error("enumerate_sigma_tamari: invalid shape");
    const int N = shape.N();
    const std::uint32_t block1 = (1u << shape.l) - 1u;
    const std::uint32_t block2 = ((1u << shape.m) - 1u) << shape.l;
    const std::uint32_t block3 = ((1u << shape.n) - 1u) << (shape.l + shape.m);
    const std::uint32_t allowed[3] = {block1 | block2, block2 | block3, block1 | block3};

    // A maximal family is three complete flags with pairwise disjoint tops
    // (T0, T1, Tinf) partitioning {1..N}, T_x inside the anchor's allowed
    // blocks; each flag contributes its member chain.
    std::vector<ParenFamily> out;
    std::vector<int> assign(N, 0); // variable -> anchor
    auto emit = [&]() {
        std::uint32_t tops[3] = {0, 0, 0};
        for (int v = 0; v < N; ++v) tops[assign[v]] |= (1u << v);
        for (int a = 0; a < 3; ++a)
            if (tops[a] & ~allowed[a]) return;
        // orderings within each top: every permutation gives one flag
        std::vector<std::vector<int>> members(3);
        for (int v = 0; v < N; ++v) members[assign[v]].push_back(v);
        std::vector<std::vector<std::vector<int>>> perms(3);
        for (int a = 0; a < 3; ++a) {
            std::vector<int> p = members[a];
            std::sort(p.begin(), p.end());
            do {
                perms[a].push_back(p);
            } while (std::next_permutation(p.begin(), p.end()));
        }
        for (const auto& p0 : perms[0])
            for (const auto& p1 : perms[1])
                for (const auto& p2 : perms[2]) {
                    ParenFamily fam;
                    auto push_chain = [&](int anchor, const std::vector<int>& p) {
                        std::uint32_t acc = 0;
                        for (int v : p) {
                            acc |= (1u << v);
                            fam.anchored.push_back({anchor, acc});
                        }
                    };
                    push_chain(kAnchorZero, p0);
                    push_chain(kAnchorOne, p1);
                    push_chain(kAnchorInf, p2);
                    std::sort(fam.anchored.begin(), fam.anchored.end());
                    out.push_back(std::move(fam));
                }
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (v == N) {
            emit();
            return;
        }
        for (int a = 0; a < 3; ++a) {
            if (!((1u << v) & allowed[a])) continue;
            assign[v] = a;
            self(self, v + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const ParenFamily& a, const ParenFamily& b) {
        return a.anchored < b.anchored;
    });
    return out;
}

std::vector<KFaceId> minimal_facet_faces(const RegionShape& shape, const ParenFamily& fam) {
    const auto faces = enumerate_k_faces(shape);
    std::vector<KFaceId> out;
    for (const auto& iv : fam.intervals) {
        for (const auto& f : faces)
            if (f.interval == iv) {
                out.push_back(f);
                break;
            }
    }
    return out;
}

long long catalan(int n) {
    static std::map<int, long long> memo;
    if (n <= 1) return 1;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    long long s = 0;
    for (int i = 0; i < n; ++i) s += catalan(i) * catalan(n - 1 - i);
    memo[n] = s;
    return s;
}

double bdf_value(const std::vector<int>& S, const std::vector<double>& x) {
    if (S.empty()) throw empty_set("bdf_value: S must be nonempty");
    const int N = static_cast<int>(x.size());
    for (double xi : x)
        if (!(xi > 0.0)) throw domain_error("bdf_value: coordinates must be positive");
    std::uint32_t smask = 0;
    for (int i : S) {
        if (i < 1 || i > N) throw domain_error("bdf_value: index out of range");
        smask |= (1u << (i - 1));
    }
    double base = 0.0;
    for (int i = 0; i < N; ++i)
        if (smask & (1u << i)) base += x[i];
    // iterate over supersets S0 = S u E, sign (-1)^{|E|}
    const std::uint32_t comp = ~smask & ((N == 32) ? ~0u : ((1u << N) - 1u));
    double logsum = 0.0;
    std::uint32_t E = 0;
    do {
        double s = base;
        int bits = 0;
        for (int i = 0; i < N; ++i)
            if (E & (1u << i)) {
                s += x[i];
                ++bits;
            }
        logsum += ((bits % 2 == 0) ? 1.0 : -1.0) * std::log(s);
        E = (E - comp) & comp;
    } while (E != 0);
    return std::exp(logsum);
}

} // namespace selberg
