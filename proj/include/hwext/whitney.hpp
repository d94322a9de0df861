#pragma once

// Compact sets, Whitney jets and the sampled moduli used to decide extendability.

#include <string>
#include <vector>

#include "hwext/planar_piece.hpp"
#include "hwext/polynomial.hpp"

namespace hwext {

/// Finite union of disjoint closed intervals, sorted; isolated points are degenerate intervals.
class CompactSet {
 public:
  /// Throws Error(InvalidArgument) when empty, unsorted, overlapping or with lo > hi.
  explicit CompactSet(std::vector<Interval> intervals);

  const std::vector<Interval>& intervals() const { return intervals_; }
  Interval hull() const { return {intervals_.front().lo, intervals_.back().hi}; }
  double measure() const;
  /// Index of the interval containing s, or -1.
  int find(double s) const;
  bool contains(double s) const { return find(s) >= 0; }

 private:
  std::vector<Interval> intervals_;
};

/// Jet data on one interval of K. Polynomials use the absolute parameter s.
struct JetPiece {
  std::vector<PolyPair> gamma;        // n planar components (f_j, g_j)
  Polynomial height;                  // h
  std::vector<PolyPair> gamma_prime;  // empty: derived exactly from gamma
  Polynomial height_prime;            // used only when gamma_prime is given
  bool has_prime = false;
};

class WhitneyJet {
 public:
  static constexpr int kDefaultDegreeCap = 6;

  /// Throws Error(InvalidJet) on misaligned pieces, degree above the cap, a missing derivative
  /// on a degenerate interval, or a supplied derivative inconsistent with the values on a
  /// nondegenerate interval.
  WhitneyJet(int n, CompactSet set, std::vector<JetPiece> pieces,
             int degree_cap = kDefaultDegreeCap);

  int n() const { return n_; }
  const CompactSet& set() const { return set_; }
  const std::vector<JetPiece>& pieces() const { return pieces_; }
  Interval hull() const { return set_.hull(); }

  /// Γ(s) and Γ'(s) as (x1, y1, ..., xn, yn, t); Error(Domain) when s is not in K.
  std::vector<double> value(double s) const;
  std::vector<double> derivative(double s) const;
  PlanarPoint planar(double s, int j) const;
  PlanarPoint planar_derivative(double s, int j) const;
  double height(double s) const;
  double height_derivative(double s) const;

  /// Jet restricted to the listed interval indices (kept in order).
  WhitneyJet restricted(const std::vector<std::size_t>& keep) const;

 private:
  std::size_t piece_at(double s) const;

  int n_;
  CompactSet set_;
  std::vector<JetPiece> pieces_;
  std::vector<JetPiece> derived_;  // exact derivative polynomials per piece
  int degree_cap_;
};

struct Gap {
  double a = 0.0;
  double b = 0.0;
  double epsilon = 0.0;
};

/// Complementary open intervals of K inside its hull, left to right.
std::vector<Gap> gaps(const WhitneyJet& jet);

/// Sample points of K: every endpoint plus `samples_per_interval` uniform points per interval.
std::vector<double> sample_points(const WhitneyJet& jet, int samples_per_interval);

struct PairModuli {
  double whitney = 0.0;         // full R^{2n+1} Taylor remainder quotient
  double planar_whitney = 0.0;  // planar components only
  double height_whitney = 0.0;  // h component only
  double area = 0.0;
  long long pairs = 0;
};

/// All pair-based moduli at scale t in one pass over sampled pairs with 0 < |b-a| <= t.
PairModuli pair_moduli(const WhitneyJet& jet, double t, int samples_per_interval);

double whitney_modulus(const WhitneyJet& jet, double t, int samples_per_interval = 64);
double area_modulus(const WhitneyJet& jet, double t, int samples_per_interval = 64);
double horizontality_defect(const WhitneyJet& jet, int samples_per_interval = 64);
double big_m(const WhitneyJet& jet);

/// Per-gap epsilons (tight value x 1.01, floor 1e-12, suffix-max monotonized);
/// returned in order of decreasing gap length. Error(NonFinite) names the offending gap.
std::vector<Gap> epsilon_sequence(const WhitneyJet& jet, const std::vector<Gap>& gs);

/// Upper bound for the h-component Whitney quotient implied by the planar Whitney quotient,
/// the area quotient and the horizontality defect:
/// t * area + 2 * max|gamma| * planar_whitney + defect, with max|gamma| over the same samples.
double implied_height_whitney_bound(const WhitneyJet& jet, const PairModuli& m, double t,
                                    double horizontality, int samples_per_interval = 64);

struct Tolerances {
  double whitney = 0.5;
  double area = 0.5;
  double horizontality = 1e-9;
  int levels = 8;
  int samples_per_interval = 64;
  double t_min = 0.0;  // 0 selects the resolution-based default
  bool check_height_whitney = true;
};

struct ScaleRow {
  double t = 0.0;
  double whitney = 0.0;
  double area = 0.0;
  long long pairs = 0;
  bool inconclusive = false;
};

struct ValidationVerdict {
  std::vector<ScaleRow> scales;  // decreasing t
  double horizontality = 0.0;
  double big_m = 1.0;
  int samples_per_interval = 0;
  bool whitney_ok = false;
  bool area_ok = false;
  bool horizontality_ok = false;
  bool extendable = false;
  std::vector<std::string> failing;  // subset of {"whitney", "area", "horizontality"}
};

/// Default smallest probe scale: the smallest |I| 2^{-k} that is >= the smallest gap
/// (|I| 2^{-10} without gaps).
double default_min_scale(const WhitneyJet& jet);

ValidationVerdict validate(const WhitneyJet& jet, const Tolerances& tol = {});

}  // namespace hwext
