#include "adilab/indexcalc.hpp"

#include <algorithm>

#include "adilab/errors.hpp"
#include "adilab/rational.hpp"

namespace adi {

std::optional<LambdaIndex> lambda_from_qr(int p, int q, int r, int ell) {
    if (ell < 2) throw regime_error_small_params();
    LambdaIndex l{p - q + (ell - 1) * r, q - ell * r, r};
    if (l.l0 < 0 || l.l1 < 0 || l.l2 < 0) return std::nullopt;
    return l;
}

int q_of(const LambdaIndex& l, int ell) { return l.l1 + ell * l.l2; }
int r_of(const LambdaIndex& l) { return l.l2; }

void UPoly::add(const std::vector<int>& exps, const Complex& c) {
    if ((int)exps.size() != m + 1)
        throw DomainError("u-poly arity", "exponent vector length must be m + 1");
    if (c.is_zero()) return;
    auto [it, inserted] = terms.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

long UPoly::total_degree() const {
    long d = 0;
    for (auto& [e, c] : terms) {
        long s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

UPoly upoly_add(const UPoly& a, const UPoly& b) {
    if (!a.is_zero() && !b.is_zero() && a.m != b.m)
        throw DomainError("u-poly arity", "cannot add u-polynomials of different arity");
    UPoly r = a.is_zero() ? b : a;
    const UPoly& other = a.is_zero() ? a : b;
    if (&other == &b)
        for (auto& [e, c] : b.terms) r.add(e, c);
    return r;
}

UPoly upoly_scale(const UPoly& a, const Complex& c) {
    UPoly r;
    r.m = a.m;
    if (c.is_zero()) return r;
    for (auto& [e, k] : a.terms) r.add(e, k * c);
    return r;
}

UPoly upoly_scale(const UPoly& a, const mpz_class& c) {
    UPoly r;
    r.m = a.m;
    if (c == 0) return r;
    for (auto& [e, k] : a.terms) {
        Real f = to_real(c, k.prec());
        r.add(e, k * f);
    }
    return r;
}

Complex upoly_eval(const UPoly& p, const std::vector<Complex>& vals,
                   const PrecisionConfig& ctx) {
    ctx.validate();
    const mpfr_prec_t wp = ctx.working();
    if ((int)vals.size() < p.m + 1)
        throw DomainError("u-poly arity", "evaluation needs m + 1 jet values");
    Complex acc(wp);
    for (auto& [e, c] : p.terms) {
        Complex t = c.round_to(wp);
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j] != 0) t = t * pow_si(vals[j].round_to(wp), e[j]);
        acc += t;
    }
    return acc;
}

int ADEPoly::total_degree() const {
    int d = -1;
    for (auto& [l, u] : terms)
        if (!u.is_zero()) d = std::max(d, l.degree());
    return d;
}

void ADEPoly::add(const LambdaIndex& l, const UPoly& u) {
    if (u.is_zero()) return;
    auto it = terms.find(l);
    if (it == terms.end()) {
        terms.emplace(l, u);
    } else {
        it->second = upoly_add(it->second, u);
        if (it->second.is_zero()) terms.erase(it);
    }
}

std::map<int, ADEPoly> homogeneous_parts(const ADEPoly& p) {
    std::map<int, ADEPoly> out;
    for (auto& [l, u] : p.terms) {
        if (u.is_zero()) continue;
        ADEPoly& part = out[l.degree()];
        part.m = p.m;
        part.add(l, u);
    }
    return out;
}

const UPoly& CoeffTable::at(int q, int r) const {
    if (q < 0 || q > max_q || r < 0 || r > max_r)
        throw DomainError("table index", "coefficient table index out of range");
    return cells[(size_t)q * (size_t)(max_r + 1) + (size_t)r];
}

UPoly& CoeffTable::at(int q, int r) {
    if (q < 0 || q > max_q || r < 0 || r > max_r)
        throw DomainError("table index", "coefficient table index out of range");
    return cells[(size_t)q * (size_t)(max_r + 1) + (size_t)r];
}

namespace {

CoeffTable blank_like(const CoeffTable& o, char kind) {
    CoeffTable t;
    t.kind = kind;
    t.ell = o.ell;
    t.p = o.p;
    t.max_q = o.max_q;
    t.max_r = o.max_r;
    UPoly blank;
    if (!o.cells.empty()) blank.m = o.cells.front().m;
    t.cells.assign(o.cells.size(), blank);
    return t;
}

}  // namespace

CoeffTable a_table(const ADEPoly& part, int p, int ell) {
    if (ell < 2) throw regime_error_small_params();
    CoeffTable t;
    t.kind = 'a';
    t.ell = ell;
    t.p = p;
    for (auto& [l, u] : part.terms) {
        if (u.is_zero()) continue;
        if (l.degree() != p)
            throw DomainError("homogeneity", "a-table input must be a single homogeneous part");
        t.max_q = std::max(t.max_q, q_of(l, ell));
        t.max_r = std::max(t.max_r, r_of(l));
    }
    if (t.max_q < 0) return t;  // zero part: empty grid
    UPoly blank;
    blank.m = part.m;
    t.cells.assign((size_t)(t.max_q + 1) * (size_t)(t.max_r + 1), blank);
    for (auto& [l, u] : part.terms) {
        if (u.is_zero()) continue;
        t.at(q_of(l, ell), r_of(l)) = u;
    }
    return t;
}

CoeffTable b_from_a(const CoeffTable& a) {
    CoeffTable b = blank_like(a, 'b');
    for (int q = 0; q <= a.max_q; ++q)
        for (int r = 0; r <= a.max_r; ++r) {
            UPoly acc;
            for (int s = r; s <= a.max_r; ++s) {
                const UPoly& cell = a.at(q, s);
                if (cell.is_zero()) continue;
                acc = upoly_add(acc, upoly_scale(cell, binom((unsigned long)s, r)));
            }
            if (!acc.is_zero()) b.at(q, r) = acc;
        }
    return b;
}

CoeffTable a_from_b(const CoeffTable& b) {
    CoeffTable a = blank_like(b, 'a');
    for (int q = 0; q <= b.max_q; ++q)
        for (int r = 0; r <= b.max_r; ++r) {
            UPoly acc;
            for (int s = r; s <= b.max_r; ++s) {
                const UPoly& cell = b.at(q, s);
                if (cell.is_zero()) continue;
                mpz_class c = binom((unsigned long)s, r);
                if ((s - r) % 2 != 0) c = -c;
                acc = upoly_add(acc, upoly_scale(cell, c));
            }
            if (!acc.is_zero()) a.at(q, r) = acc;
        }
    return a;
}

std::optional<std::pair<int, int>> first_nonzero_b(const CoeffTable& b) {
    for (int r = 0; r <= b.max_r; ++r)
        for (int q = b.max_q; q >= 0; --q)
            if (!b.at(q, r).is_zero()) return std::make_pair(q, r);
    return std::nullopt;
}

ADEPoly reassemble(const CoeffTable& a) {
    ADEPoly p;
    if (!a.cells.empty()) p.m = a.cells.front().m;
    for (int q = 0; q <= a.max_q; ++q)
        for (int r = 0; r <= a.max_r; ++r) {
            const UPoly& cell = a.at(q, r);
            if (cell.is_zero()) continue;
            auto l = lambda_from_qr(a.p, q, r, a.ell);
            if (!l)
                throw DomainError("table index",
                                  "nonzero cell at an infeasible (q, r) position");
            p.add(*l, cell);
        }
    return p;
}

}  // namespace adi
