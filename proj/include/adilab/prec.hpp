#pragma once

#include <mpfr.h>

#include "adilab/errors.hpp"

namespace adi {

// Every evaluator takes one of these explicitly; there is no ambient precision state.
// bits is the delivered accuracy target, guard_bits pad the internal working precision.
struct PrecisionConfig {
    long bits = 256;
    long guard_bits = 32;

    long working() const { return bits + guard_bits; }

    void validate() const {
        if (bits < 64) throw DomainError("precision", "bits must be at least 64");
        if (guard_bits < 0 || guard_bits > bits)
            throw DomainError("precision", "guard_bits must lie in [0, bits]");
    }
};

inline PrecisionConfig make_precision(long bits, long guard_bits = 32) {
    PrecisionConfig c{bits, guard_bits};
    c.validate();
    return c;
}

}  // namespace adi
