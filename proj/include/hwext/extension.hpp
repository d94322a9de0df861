#pragma once

// Assembly of the C^1 horizontal extension of a Whitney jet over a window, plus an
// independent verification pass.

#include <optional>
#include <string>
#include <vector>

#include "hwext/gap_filler.hpp"
#include "hwext/lift.hpp"
#include "hwext/whitney.hpp"

namespace hwext {

struct Segment {
  enum class Kind { OnK, GapFill, Tail };

  Kind kind = Kind::OnK;
  Interval domain;
  std::size_t jet_piece = 0;  // OnK
  int gap_index = -1;         // GapFill
  HorizontalLift lift;        // GapFill and Tail
  double height_offset = 0.0; // height at the segment start
};

const char* to_string(Segment::Kind k) noexcept;

struct GapRecord {
  Gap gap;
  std::vector<LemmaParams> params;  // per plane
  std::vector<Branch> branches;
  std::vector<EnvelopeReport> envelopes;
};

struct ExtendOptions {
  double c_prime = 0.0;  // 0 selects default_c_prime(M)
  bool force = false;    // skip the validation gate
  Tolerances validation;
  int envelope_samples = 2000;
  unsigned long long seed = 0;  // recorded only
};

class ExtendedCurve {
 public:
  ExtendedCurve(WhitneyJet jet, Interval window, std::vector<Segment> segments,
                std::vector<GapRecord> gaps, double c_prime, double big_m, bool forced,
                unsigned long long seed);

  int n() const { return jet_.n(); }
  const WhitneyJet& jet() const { return jet_; }
  const Interval& window() const { return window_; }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<GapRecord>& gap_records() const { return gaps_; }
  double c_prime() const { return c_prime_; }
  double big_m() const { return big_m_; }
  bool forced() const { return forced_; }
  unsigned long long seed() const { return seed_; }

  /// Segment used for s: OnK whenever s lies in K. Error(Domain) outside the window.
  std::size_t locate(double s) const;
  std::vector<double> value(double s) const;
  std::vector<double> derivative(double s) const;
  /// Evaluation through one specific segment (s must lie in its domain).
  std::vector<double> segment_value(std::size_t k, double s) const;
  std::vector<double> segment_derivative(std::size_t k, double s) const;

 private:
  WhitneyJet jet_;
  Interval window_;
  std::vector<Segment> segments_;
  std::vector<GapRecord> gaps_;
  double c_prime_;
  double big_m_;
  bool forced_;
  unsigned long long seed_;
};

/// Builds the extension on `window` (which must contain the hull of K). Without `force`,
/// a jet rejected by validate() raises Error(ValidationRejected) naming the failing conditions.
ExtendedCurve extend(const WhitneyJet& jet, Interval window, const ExtendOptions& opt = {});
/// Window equal to the hull of K.
ExtendedCurve extend(const WhitneyJet& jet, const ExtendOptions& opt = {});

struct GapDeviation {
  double a = 0.0, b = 0.0, epsilon = 0.0, delta = 0.0;
  double value = 0.0;              // max_j sup |gamma~_j - gamma_j(a)|
  double planar_derivative = 0.0;  // max_j sup |gamma~_j' - gamma_j'(a)|
  double height_derivative = 0.0;  // sup |h~' - h'(a)|
  double envelope = 0.0;           // P(eps)
  double height_envelope = 0.0;
  double lift_residual = 0.0;      // |integral of h~' - (h(b) - h(a))|
  double lift_scale = 1.0;         // max(1, |h(b) - h(a)|)
  std::vector<std::string> branches;
};

struct VerificationReport {
  double match_on_k_value = 0.0;
  double match_on_k_derivative = 0.0;
  double seam_value = 0.0;
  double seam_derivative = 0.0;
  double horizontality = 0.0;
  double lift_consistency = 0.0;
  std::vector<GapDeviation> gaps;  // left to right
  int samples_per_segment = 0;

  bool seams_ok = false;
  bool horizontality_ok = false;
  bool lift_ok = false;
  bool match_ok = false;
  bool envelopes_ok = false;
  bool passed = false;
  std::vector<std::string> failing;
};

struct VerifyTolerances {
  double seam_value = 1e-10;
  double seam_derivative = 1e-9;
  double horizontality = 1e-9;
  double lift = 1e-9;  // relative to max(1, |h(b) - h(a)|)
  double match = 1e-12;
};

VerificationReport verify(const ExtendedCurve& ext, int samples_per_segment = 1000,
                          const VerifyTolerances& tol = {});

/// Values and derivatives on a grid; Error(Domain) for points outside the window.
SampledCurve sample(const ExtendedCurve& ext, const std::vector<double>& grid);

std::string manifest_json(const ExtendedCurve& ext, const std::optional<VerificationReport>& report);
ExtendedCurve extension_from_manifest(std::string_view text);
std::string report_json(const VerificationReport& report);
std::string sample_csv(const SampledCurve& curve, int n);

}  // namespace hwext
