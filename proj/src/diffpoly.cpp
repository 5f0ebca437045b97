#include "adilab/diffpoly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>

#include "adilab/errors.hpp"

namespace adi {

const Complex& FunctionJet::at(int j) const {
    if (j == 0) return base;
    if (j < 1 || j > (int)derivs.size())
        throw DomainError("jet order", "jet does not carry derivative order " + std::to_string(j));
    return derivs[(size_t)j - 1];
}

long JetMonomial::weight() const {
    long w = 0;
    for (auto& [o, e] : factors) w += (long)(o + 1) * e;
    return w;
}

int JetMonomial::max_order() const { return factors.empty() ? -1 : factors.back().first; }

int JetMonomial::exponent_of(int order) const {
    for (auto& [o, e] : factors)
        if (o == order) return e;
    return 0;
}

bool JetMonomialBefore::operator()(const JetMonomial& a, const JetMonomial& b) const {
    long wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    int top = std::max(a.max_order(), b.max_order());
    for (int o = top; o >= 0; --o) {
        int ea = a.exponent_of(o), eb = b.exponent_of(o);
        if (ea != eb) return ea > eb;
    }
    return false;
}

DiffPolynomial DiffPolynomial::constant(const Rational& c) {
    DiffPolynomial p;
    p.add_term(JetMonomial{}, c);
    return p;
}

DiffPolynomial DiffPolynomial::jet_var(int order) {
    if (order < 0) throw DomainError("jet order", "derivative order must be nonnegative");
    DiffPolynomial p;
    p.add_term(JetMonomial{{{order, 1}}}, Rational(1));
    return p;
}

Rational DiffPolynomial::coeff(const JetMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void DiffPolynomial::add_term(const JetMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffPolynomial DiffPolynomial::operator+(const DiffPolynomial& o) const {
    DiffPolynomial r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

namespace {

JetMonomial merge_monomials(const JetMonomial& a, const JetMonomial& b) {
    JetMonomial r;
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() || ib != b.factors.end()) {
        if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first))
            r.factors.push_back(*ia++);
        else if (ia == a.factors.end() || ib->first < ia->first)
            r.factors.push_back(*ib++);
        else {
            r.factors.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return r;
}

}  // namespace

DiffPolynomial DiffPolynomial::operator*(const DiffPolynomial& o) const {
    DiffPolynomial r;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) r.add_term(merge_monomials(ma, mb), ca * cb);
    return r;
}

DiffPolynomial DiffPolynomial::scaled(const Rational& c) const {
    DiffPolynomial r;
    if (c.is_zero()) return r;
    for (auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

Rational DiffPolynomial::coeff_sum() const {
    Rational s(0);
    for (auto& [m, c] : terms_) s += c;
    return s;
}

int DiffPolynomial::max_order() const {
    int top = -1;
    for (auto& [m, c] : terms_) top = std::max(top, m.max_order());
    return top;
}

bool DiffPolynomial::homogeneous_weight(long& w) const {
    bool first = true;
    for (auto& [m, c] : terms_) {
        long mw = m.weight();
        if (first) {
            w = mw;
            first = false;
        } else if (mw != w) {
            return false;
        }
    }
    return !first;
}

namespace {

std::string var_text(int order) {
    if (order == 0) return "f";
    if (order <= 3) return "f" + std::string((size_t)order, '\'');
    return "f^(" + std::to_string(order) + ")";
}

std::string monomial_text(const JetMonomial& m) {
    std::string out;
    for (auto& [o, e] : m.factors) {
        if (!out.empty()) out += "*";
        std::string v = var_text(o);
        if (e > 1) {
            if (o > 0) v = "(" + v + ")";
            v += "^" + std::to_string(e);
        }
        out += v;
    }
    return out;
}

std::string coeff_text(const Rational& c) {
    Rational a = c.sign() < 0 ? -c : c;
    return a.is_integer() ? a.str() : "(" + a.str() + ")";
}

}  // namespace

std::string DiffPolynomial::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational a = neg ? -c : c;
        std::string body = monomial_text(m);
        if (body.empty()) {
            out += coeff_text(c);
        } else {
            if (!(a == Rational(1))) out += coeff_text(c) + "*";
            out += body;
        }
    }
    return out;
}

DiffPolynomial formal_derive(const DiffPolynomial& p) {
    DiffPolynomial r;
    for (auto& [m, c] : p.terms()) {
        for (size_t i = 0; i < m.factors.size(); ++i) {
            auto [o, e] = m.factors[i];
            JetMonomial d = m;
            if (e == 1)
                d.factors.erase(d.factors.begin() + (long)i);
            else
                d.factors[i].second = e - 1;
            d = merge_monomials(d, JetMonomial{{{o + 1, 1}}});
            r.add_term(d, c * Rational(e));
        }
    }
    return r;
}

namespace {

std::shared_mutex ratio_mu;
std::deque<DiffPolynomial> ratio_cache;  // deque keeps references stable across growth

void ratio_extend_locked(int n) {
    if (ratio_cache.empty()) ratio_cache.push_back(DiffPolynomial::constant(Rational(1)));
    DiffPolynomial f = DiffPolynomial::jet_var(0);
    while ((int)ratio_cache.size() <= n) {
        const DiffPolynomial& prev = ratio_cache.back();
        ratio_cache.push_back(formal_derive(prev) + f * prev);
    }
}

}  // namespace

const DiffPolynomial& gamma_ratio_poly(int n) {
    if (n < 0) throw DomainError("ratio index", "polynomial index must be nonnegative");
    {
        std::shared_lock lk(ratio_mu);
        if (n < (int)ratio_cache.size()) return ratio_cache[(size_t)n];
    }
    std::unique_lock lk(ratio_mu);
    ratio_extend_locked(n);
    return ratio_cache[(size_t)n];
}

Rational extract_cn(int n) {
    if (n < 1) throw DomainError("ratio index", "the f^(n-2) f' coefficient needs n >= 1");
    if (n == 1) return Rational(0L);  // R_1 = f carries no f' monomial at all
    JetMonomial m;
    if (n == 3)
        m.factors = {{0, 1}, {1, 1}};
    else if (n == 2)
        m.factors = {{1, 1}};
    else
        m.factors = {{0, n - 2}, {1, 1}};
    return gamma_ratio_poly(n).coeff(m);
}

Complex eval_diffpoly(const DiffPolynomial& p, const FunctionJet& jet,
                      const PrecisionConfig& ctx) {
    const mpfr_prec_t wp = ctx.working();
    int need = p.max_order();
    if (need > jet.order())
        throw DomainError("jet order", "jet carries " + std::to_string(jet.order()) +
                                           " derivatives but the polynomial needs " +
                                           std::to_string(need));
    // Power tables per derivative order, dominated by repeated f powers.
    std::map<int, std::vector<Complex>> pows;
    for (auto& [m, c] : p.terms())
        for (auto& [o, e] : m.factors) {
            auto& tab = pows[o];
            if (tab.empty()) tab.push_back(jet.at(o).round_to(wp));
            while ((int)tab.size() < e) tab.push_back(tab.back() * tab.front());
        }
    Complex acc(wp);
    for (auto& [m, c] : p.terms()) {
        Complex t(Complex(to_real(c, wp)));
        for (auto& [o, e] : m.factors) t = t * pows[o][(size_t)e - 1];
        acc += t;
    }
    return acc;
}

}  // namespace adi
