#include "adilab/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace adi {

namespace {

std::shared_mutex mu;
// full[m] = B_m for all m, odd entries included to run the recurrence.
std::vector<mpq_class> full;

void extend_locked(unsigned long upto) {
    if (full.empty()) full.push_back(mpq_class(1));
    for (unsigned long m = full.size(); m <= upto; ++m) {
        // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
        mpq_class s(0);
        mpz_class c;
        for (unsigned long k = 0; k < m; ++k) {
            if (sgn(full[k]) == 0) continue;
            mpz_bin_uiui(c.get_mpz_t(), m + 1, k);
            s += c * full[k];
        }
        mpq_class b = -s / mpz_class(m + 1);
        b.canonicalize();
        full.push_back(b);
    }
}

}  // namespace

Rational bernoulli_even(unsigned long j) {
    unsigned long idx = 2 * j;
    {
        std::shared_lock lk(mu);
        if (idx < full.size()) return Rational(full[idx]);
    }
    std::unique_lock lk(mu);
    if (idx >= full.size()) extend_locked(idx + 16);
    return Rational(full[idx]);
}

}  // namespace adi
