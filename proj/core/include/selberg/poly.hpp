#pragma once

#include <complex>
#include <map>
#include <vector>

#include "selberg/errors.hpp"

namespace selberg {

using cplx = std::complex<double>;

// Laurent polynomial in x_1..x_N; exponent vectors may be negative.
class LaurentPoly {
  public:
    using Key = std::vector<int>;

    explicit LaurentPoly(int nvars) : nvars_(nvars) {}
    static LaurentPoly one(int nvars) {
        LaurentPoly p(nvars);
        p.add_term(Key(static_cast<std::size_t>(nvars), 0), 1.0);
        return p;
    }

    int nvars() const { return nvars_; }
    const std::map<Key, cplx>& terms() const { return terms_; }
    bool is_polynomial() const;
    bool is_one() const;

    void add_term(const Key& exps, cplx coeff);

    cplx eval(const std::vector<cplx>& x) const;
    double eval_real(const std::vector<double>& x) const;
    bool real_coeffs() const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;

    // F(x_{sigma^{-1}(1)}, ..., x_{sigma^{-1}(N)}): sigma given as the image
    // list sigma[i] = sigma(i+1) (1-based values).
    LaurentPoly permuted(const std::vector<int>& sigma) const;

    // substitute x_i -> 1 - x_i and expand (polynomials only)
    LaurentPoly reflected() const;

    // substitute x_j = x_k (drop variable j); result in the same ambient
    // variable list with x_j's slot removed
    LaurentPoly restrict_equal(int j, int k) const;

    LaurentPoly derivative(int var) const;

    // symmetric under all permutations fixing the given index set?
    bool invariant_under_block_permutations(const std::vector<int>& block_sizes) const;

  private:
    int nvars_;
    std::map<Key, cplx> terms_;
};

// Orders delta_j (vanishing at the x=0 corner flags), atled_j (at x=1,
// via F o refl), deg_j, and the ceil/floor reductions of Thm-level use.
struct VanishingProfile {
    std::vector<int> delta, atled, deg;
    std::vector<int> bar_delta, bar_atled, bar_d;
};

// Profile of a genuine polynomial; throws laurent_input on negative powers.
VanishingProfile vanishing_profile(const LaurentPoly& F);

} // namespace selberg
