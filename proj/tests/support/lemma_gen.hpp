#pragma once

#include <cmath>
#include <random>

#include "hwext/gap_filler.hpp"

namespace hwext::fixtures {

/// Random parameters satisfying every strict lemma bound, resampled until the branch
/// test selects `want`.
inline LemmaParams random_lemma_params(std::mt19937_64& rng, Branch want) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (;;) {
    LemmaParams p;
    p.eps = std::exp(std::log(1e-6) + u(rng) * (std::log(0.3) - std::log(1e-6)));
    p.delta = p.eps * (0.05 + 0.9 * u(rng));
    const double r_cap = want == Branch::Circle ? std::sqrt(p.eps) / 7.0 : 3.0;
    const double r = std::min(r_cap, 0.99 * p.eps / p.delta) * u(rng);
    p.ell = r * p.delta;
    const double spread = want == Branch::Circle ? std::min(p.eps, std::sqrt(p.eps) / 8.0) : p.eps;
    p.alpha = r + spread * (2 * u(rng) - 1) * 0.99;
    p.beta = r + spread * (2 * u(rng) - 1) * 0.99;
    p.mu = p.eps * (2 * u(rng) - 1) * 0.99;
    p.nu = p.eps * (2 * u(rng) - 1) * 0.99;
    p.lambda = p.delta * p.delta * p.eps * (2 * u(rng) - 1) * 0.99;
    p.big_m = 1.0 + 2.0 * u(rng);
    p.c_prime = default_c_prime(p.big_m);
    if (branch_test(p) == want) return p;
  }
}

}  // namespace hwext::fixtures
