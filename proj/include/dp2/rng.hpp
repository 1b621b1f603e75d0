#pragma once

#include <random>

#include "dp2/matrix.hpp"

namespace dp2 {

/// Deterministic seeded generators used by the smoothness fallback and the
/// randomized test suites.
using Rng = std::mt19937_64;

inline FieldElement random_element(FieldPtr F, Rng& rng) {
    std::uniform_int_distribution<int64_t> dist(0, F->q() - 1);
    return F->element_at(dist(rng));
}

inline FieldElement random_nonzero_element(FieldPtr F, Rng& rng) {
    std::uniform_int_distribution<int64_t> dist(1, F->q() - 1);
    return F->element_at(dist(rng));
}

inline MatFq random_gl3(FieldPtr F, Rng& rng) {
    for (;;) {
        MatFq m(F, 3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = random_element(F, rng);
        if (m.is_invertible()) return m;
    }
}

}  // namespace dp2
