#pragma once

#include <cstdint>
#include <vector>

#include "selberg/errors.hpp"

namespace selberg {

// The triple (l, m, n) selecting the region: x_1 <= ... <= x_l <= 0 <=
// x_{l+1} <= ... <= x_{l+m} <= 1 <= ... <= x_N, N = l+m+n.
struct RegionShape {
    int l = 0, m = 0, n = 0;
    int N() const { return l + m + n; }
    int ring() const { return N() + 3; }  // index ring Z/(N+3)
    // anchors in the t-index ring: t=+-inf, t=0, t=1
    int anchor_inf() const { return 0; }
    int anchor_zero() const { return l + 1; }
    int anchor_one() const { return l + m + 2; }
    bool valid() const { return l >= 0 && m >= 0 && n >= 0 && N() >= 1; }
};

// Consecutive subset of Z/(N+3), canonically stored as (start, len) with
// start in [0, ring).
struct CyclicInterval {
    int start = 0;
    int len = 0;
    bool contains(int e, int ring) const {
        int d = e - start;
        d %= ring;
        if (d < 0) d += ring;
        return d < len;
    }
    std::vector<int> elements(int ring) const {
        std::vector<int> out;
        out.reserve(len);
        for (int i = 0; i < len; ++i) out.push_back((start + i) % ring);
        return out;
    }
    friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;
    friend auto operator<=>(const CyclicInterval&, const CyclicInterval&) = default;
};

// A face F_{j,k} of K_{l,m,n}; {j,k} are the endpoints of the unique
// admissible interval I(j,k), codim = |I(j,k)| - 1.
struct KFaceId {
    int j = 0, k = 0;
    CyclicInterval interval;
    int codim = 0;
};

// A face F_{S,Q;x0} of A_{l,m,n}; sets stored as bitmasks over {1..N}
// (bit i-1 for variable i), anchor in {0,1,2} meaning {0,1,inf}.
struct AFaceId {
    std::uint32_t S = 0, Q = 0;
    int anchor = 0;
    std::uint32_t members() const { return S | Q; }
};

inline constexpr int kAnchorZero = 0;
inline constexpr int kAnchorOne = 1;
inline constexpr int kAnchorInf = 2;

struct AnchoredSet {
    int anchor = 0;
    std::uint32_t mask = 0;
    friend bool operator==(const AnchoredSet&, const AnchoredSet&) = default;
    friend auto operator<=>(const AnchoredSet&, const AnchoredSet&) = default;
};

// Maximal nested family: `intervals` populated for K-type families,
// `anchored` for Sigma-type families.
struct ParenFamily {
    std::vector<CyclicInterval> intervals;
    std::vector<AnchoredSet> anchored;
};

// All faces of K_{l,m,n}; count N(N+3)/2, lexicographic in (start, len).
std::vector<KFaceId> enumerate_k_faces(const RegionShape& shape);

// All faces of A_{l,m,n}.
std::vector<AFaceId> enumerate_a_faces(const RegionShape& shape);

// Maximal families of nested admissible intervals (minimal facets of K).
std::vector<ParenFamily> enumerate_tamari(const RegionShape& shape);

// Maximal families of anchored sets (minimal facets of A).
std::vector<ParenFamily> enumerate_sigma_tamari(const RegionShape& shape);

// Faces F_{j,k} with I(j,k) in the family (the minimal-facet correspondence).
std::vector<KFaceId> minimal_facet_faces(const RegionShape& shape, const ParenFamily& fam);

// Catalan numbers by direct recursion (serves as an independent oracle).
long long catalan(int n);

// Boundary defining function x_{F_S,N} of the total-boundary blowup of
// [0,1)^N: prod over supersets S0 of S of (sum_{j in S0} x_j)^(+-1),
// computed in log space. S holds 1-based variable indices.
double bdf_value(const std::vector<int>& S, const std::vector<double>& x);

} // namespace selberg
