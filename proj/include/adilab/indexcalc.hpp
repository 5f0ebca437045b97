#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "adilab/complexval.hpp"
#include "adilab/prec.hpp"

namespace adi {

// Exponent triple (l0, l1, l2) for the factors (Gamma^p-normalized) 1, F, LF.
struct LambdaIndex {
    int l0 = 0, l1 = 0, l2 = 0;

    int degree() const { return l0 + l1 + l2; }
    auto operator<=>(const LambdaIndex&) const = default;
};

// |lambda| = p with star weight q = l1 + ell * l2 and layer r = l2:
// l0 = p - q + (ell-1) r, l1 = q - ell r, l2 = r. Empty when infeasible.
std::optional<LambdaIndex> lambda_from_qr(int p, int q, int r, int ell);
int q_of(const LambdaIndex& l, int ell);
int r_of(const LambdaIndex& l);

// Polynomial in the jet variables u_0..u_m with complex coefficients,
// keyed by exponent vectors of length m + 1.
struct UPoly {
    int m = 0;
    std::map<std::vector<int>, Complex> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const std::vector<int>& exps, const Complex& c);
    long total_degree() const;
};

UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_scale(const UPoly& a, const Complex& c);
UPoly upoly_scale(const UPoly& a, const mpz_class& c);
// Evaluates at u_j = vals[j]; vals.size() must be m + 1.
Complex upoly_eval(const UPoly& p, const std::vector<Complex>& vals,
                   const PrecisionConfig& ctx);

// Sum over lambda of u-coefficient polynomials; the top-level object under study.
struct ADEPoly {
    int m = 0;
    std::map<LambdaIndex, UPoly> terms;

    bool is_zero() const { return terms.empty(); }
    int total_degree() const;  // L = max |lambda|; -1 when zero
    void add(const LambdaIndex& l, const UPoly& u);
};

// Restriction to the terms with |lambda| = p.
std::map<int, ADEPoly> homogeneous_parts(const ADEPoly& p);

// Dense (q, r) grid of u-coefficient polynomials for one homogeneous part.
struct CoeffTable {
    char kind = 'a';  // 'a' raw, 'b' binomial-transformed
    int ell = 2;
    int p = 0;
    int max_q = -1;  // -1 for the zero part: an empty grid
    int max_r = -1;
    std::vector<UPoly> cells;  // (max_q+1) x (max_r+1), row-major in q

    const UPoly& at(int q, int r) const;
    UPoly& at(int q, int r);
};

// a-table of a homogeneous part; requires ell >= 2.
CoeffTable a_table(const ADEPoly& part, int p, int ell);
// b_{q,r} = sum_{s >= r} C(s, r) a_{q,s}
CoeffTable b_from_a(const CoeffTable& a);
// a_{q,r} = sum_{s >= r} (-1)^(s-r) C(s, r) b_{q,s}
CoeffTable a_from_b(const CoeffTable& b);
// Scans r ascending, q descending from max_q; first cell that is not identically zero.
std::optional<std::pair<int, int>> first_nonzero_b(const CoeffTable& b);
// Rebuilds the homogeneous part from its a-table.
ADEPoly reassemble(const CoeffTable& a);

}  // namespace adi
