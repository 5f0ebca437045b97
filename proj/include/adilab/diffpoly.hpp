#pragma once

#include <map>
#include <string>
#include <vector>

#include "adilab/complexval.hpp"
#include "adilab/prec.hpp"
#include "adilab/rational.hpp"

namespace adi {

// Value of a function and its first k derivatives at a point.
struct FunctionJet {
    Complex base;
    std::vector<Complex> derivs;  // derivs[j] = (j+1)-th derivative

    int order() const { return (int)derivs.size(); }
    const Complex& at(int j) const;  // j = 0 is base
};

// Monomial in f, f', f'', ...: sorted (derivative order, exponent) pairs, exponents > 0.
struct JetMonomial {
    std::vector<std::pair<int, int>> factors;

    long weight() const;   // sum (order + 1) * exponent
    int max_order() const;  // -1 for the empty monomial
    int exponent_of(int order) const;
    bool operator==(const JetMonomial&) const = default;
};

// Display order: ascending weight, then within a weight the monomial whose exponents,
// read from the highest derivative order downward, are lexicographically larger comes first.
struct JetMonomialBefore {
    bool operator()(const JetMonomial& a, const JetMonomial& b) const;
};

// Polynomial in f and its derivatives with exact rational coefficients.
class DiffPolynomial {
public:
    using TermMap = std::map<JetMonomial, Rational, JetMonomialBefore>;

    static DiffPolynomial zero() { return DiffPolynomial(); }
    static DiffPolynomial constant(const Rational& c);
    static DiffPolynomial jet_var(int order);  // f^(order) as a polynomial

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    Rational coeff(const JetMonomial& m) const;
    void add_term(const JetMonomial& m, const Rational& c);

    DiffPolynomial operator+(const DiffPolynomial& o) const;
    DiffPolynomial operator*(const DiffPolynomial& o) const;
    DiffPolynomial scaled(const Rational& c) const;

    // Sum of all coefficients (evaluation with every jet entry = 1).
    Rational coeff_sum() const;
    int max_order() const;  // highest derivative order appearing, -1 if constant/zero
    // True when every term has the same weight; reports it.
    bool homogeneous_weight(long& w) const;

    // Text form like "f'' + 3*f*f' + f^3", terms in display order.
    std::string text() const;

private:
    TermMap terms_;
};

// d/dz acting formally: f^(j) -> f^(j+1) by the product rule.
DiffPolynomial formal_derive(const DiffPolynomial& p);

// Polynomial expressing f^(n)/f in terms of f = (log Gamma)' and derivatives:
// index 0 gives 1, index n + 1 is the derivative of index n plus f times index n.
const DiffPolynomial& gamma_ratio_poly(int n);

// Coefficient of f^(n-2) f' in gamma_ratio_poly(n); equals n(n-1)/2.
Rational extract_cn(int n);

// Evaluates at a jet; requires jet.order() >= max_order of the polynomial.
Complex eval_diffpoly(const DiffPolynomial& p, const FunctionJet& jet,
                      const PrecisionConfig& ctx);

}  // namespace adi
