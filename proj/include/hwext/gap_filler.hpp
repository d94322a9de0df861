#pragma once

// Planar gap fillers: a C^1 curve from (0,0) to (ell,0) on [0, delta] with prescribed
// end derivatives and prescribed signed area, then moved into place by a rigid motion.

#include <string>
#include <vector>

#include "hwext/planar_piece.hpp"
#include "hwext/whitney.hpp"

namespace hwext {

struct GapFrame {
  PlanarPoint u{1.0, 0.0};
  PlanarPoint v{0.0, 1.0};
  double ell = 0.0;
  Rot2 rot;
  PlanarPoint shift;
  bool degenerate = true;
};

GapFrame gap_frame(PlanarPoint pA, PlanarPoint pB);

struct LemmaParams {
  double delta = 0.0;
  double ell = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double lambda = 0.0;
  double eps = 0.0;
  double big_m = 1.0;
  double c_prime = 0.0;
};

/// max(6M+5, 12, 2M+2, 2 sqrt(46656 pi), 300).
double default_c_prime(double big_m);
/// P(eps) = c_prime (sqrt(eps) + eps^2).
double envelope_bound(double c_prime, double eps);

/// Throws Error(LemmaBound) naming the first violated strict bound.
void check_lemma_bounds(const LemmaParams& p);

/// Parameters for plane j of a gap (gap.epsilon must be set); validates the bounds.
LemmaParams lemma_params(const WhitneyJet& jet, const Gap& gap, int j, double c_prime,
                         double big_m);

enum class Branch { Polynomial, Circle };

/// Polynomial iff |alpha + beta - 9 ell/delta| > sqrt(eps); ties go to Circle.
Branch branch_test(const LemmaParams& p);
const char* to_string(Branch b) noexcept;

/// Cubic x and quartic y on [0, delta].
PlanarPiece eta_polynomial(const LemmaParams& p);
/// Cubic pair on [0, delta/3], full circle loop on [delta/3, 2 delta/3], cubic pair on
/// [2 delta/3, delta].
std::vector<PlanarPiece> eta_circle(const LemmaParams& p);
std::vector<PlanarPiece> build_eta(const LemmaParams& p);

/// H = lambda - delta ell (mu - nu) / 15, the area the loop must contribute.
double circle_loop_area(const LemmaParams& p);

struct EnvelopeReport {
  double sup_value = 0.0;                 // sup |eta|
  double sup_derivative_deviation = 0.0;  // sup |eta' - (alpha, mu)|
  double bound = 0.0;                     // P(eps)
  double c_prime = 0.0;
  int samples = 0;
  bool value_ok = false;
  bool derivative_ok = false;
};

EnvelopeReport envelope_check(const std::vector<PlanarPiece>& pieces, const LemmaParams& p,
                              int samples = 10000);

/// Applies p -> rot p + shift and maps [0, delta] onto [gap_start, gap_end].
std::vector<PlanarPiece> relocate(const std::vector<PlanarPiece>& pieces, const GapFrame& frame,
                                  double gap_start, double gap_end);
std::vector<PlanarPiece> relocate(const std::vector<PlanarPiece>& pieces, const GapFrame& frame,
                                  double gap_start);

}  // namespace hwext
