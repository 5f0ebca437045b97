#pragma once

#include "adilab/rational.hpp"

namespace adi {

// B_{2j} with B_0 = 1, B_2 = 1/6, B_4 = -1/30, ... (B_1 = -1/2 convention).
// Exact, cached, thread-safe; returned by value since the cache may grow.
Rational bernoulli_even(unsigned long j);

}  // namespace adi
