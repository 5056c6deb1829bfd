#pragma once

#include <numeric>
#include <random>

#include "quasiq/cohomology.hpp"

namespace quasiq::testing {

// Gauge transformation with seeded random values in mu_{n_max}.
inline Cochain2 random_gauge(const FiniteGroup& g, std::mt19937& rng, long n_max = 8) {
    const int n = g.order();
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<Cyclotomic> values(static_cast<size_t>(n) * n, Cyclotomic(1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == g.identity || b == g.identity) continue;
            values[static_cast<size_t>(a) * n + b] = Cyclotomic::root_of_unity(
                n_max, static_cast<long>(rng() % static_cast<unsigned long>(n_max)));
        }
    return make_cochain2(g, std::move(all), std::move(values));
}

}  // namespace quasiq::testing
