#include "hwext/hwext.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hwext/counterexample.hpp"
#include "hwext/error.hpp"
#include "hwext/extension.hpp"
#include "hwext/jet_io.hpp"
#include "hwext/luzin.hpp"

struct hwext_jet {
  hwext::WhitneyJet jet;
};

struct hwext_extension {
  hwext::ExtendedCurve ext;
};

namespace {

thread_local std::string g_last_error;

hwext_status status_of(hwext::ErrorCode code) {
  using hwext::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return HWEXT_E_INVALID_ARGUMENT;
    case ErrorCode::Dimension: return HWEXT_E_DIMENSION;
    case ErrorCode::Domain: return HWEXT_E_DOMAIN;
    case ErrorCode::NonFinite: return HWEXT_E_NON_FINITE;
    case ErrorCode::Quadrature: return HWEXT_E_QUADRATURE;
    case ErrorCode::InvalidJet: return HWEXT_E_INVALID_JET;
    case ErrorCode::LemmaBound: return HWEXT_E_LEMMA_BOUND;
    case ErrorCode::ValidationRejected: return HWEXT_E_VALIDATION_REJECTED;
    case ErrorCode::MeasureBudget: return HWEXT_E_MEASURE_BUDGET;
    case ErrorCode::Parse: return HWEXT_E_PARSE;
    case ErrorCode::Io: return HWEXT_E_IO;
    case ErrorCode::Internal: return HWEXT_E_INTERNAL;
  }
  return HWEXT_E_INTERNAL;
}

template <class F>
hwext_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return HWEXT_OK;
  } catch (const hwext::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HWEXT_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HWEXT_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr)
    throw hwext::Error(hwext::ErrorCode::InvalidArgument, std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hwext::Tolerances to_cpp(const hwext_tolerances* t) {
  hwext::Tolerances out;
  if (t == nullptr) return out;
  out.whitney = t->whitney;
  out.area = t->area;
  out.horizontality = t->horizontality;
  out.levels = t->levels;
  out.samples_per_interval = t->samples_per_interval;
  out.t_min = t->t_min;
  out.check_height_whitney = t->check_height_whitney != 0;
  return out;
}

hwext::HPoint point(int n, const double* p) {
  require(p, "point");
  if (n < 1) throw hwext::Error(hwext::ErrorCode::Dimension, "n must be >= 1");
  return hwext::HPoint(std::vector<double>(p, p + 2 * n + 1));
}

void copy_out(const hwext::HPoint& p, double* out) {
  require(out, "out");
  std::memcpy(out, p.coords().data(), p.size() * sizeof(double));
}

void write_csv(const hwext::ExtendedCurve& ext, const std::vector<double>& grid, char** out) {
  require(out, "out");
  *out = dup_string(hwext::sample_csv(hwext::sample(ext, grid), ext.n()));
}

}  // namespace

extern "C" {

const char* hwext_last_error(void) { return g_last_error.c_str(); }

const char* hwext_status_name(hwext_status status) {
  switch (status) {
    case HWEXT_OK: return "ok";
    case HWEXT_E_INVALID_ARGUMENT: return "invalid argument";
    case HWEXT_E_DIMENSION: return "dimension mismatch";
    case HWEXT_E_DOMAIN: return "domain error";
    case HWEXT_E_NON_FINITE: return "non-finite value";
    case HWEXT_E_QUADRATURE: return "quadrature did not converge";
    case HWEXT_E_INVALID_JET: return "invalid jet";
    case HWEXT_E_LEMMA_BOUND: return "lemma bound violated";
    case HWEXT_E_VALIDATION_REJECTED: return "validation rejected";
    case HWEXT_E_MEASURE_BUDGET: return "measure budget not achievable";
    case HWEXT_E_PARSE: return "parse error";
    case HWEXT_E_IO: return "i/o error";
    case HWEXT_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hwext_version(void) { return "0.1.0"; }

void hwext_string_free(char* s) { std::free(s); }

void hwext_tolerances_default(hwext_tolerances* out) {
  if (out == nullptr) return;
  const hwext::Tolerances d;
  out->whitney = d.whitney;
  out->area = d.area;
  out->horizontality = d.horizontality;
  out->levels = d.levels;
  out->samples_per_interval = d.samples_per_interval;
  out->t_min = d.t_min;
  out->check_height_whitney = d.check_height_whitney ? 1 : 0;
}

void hwext_extend_options_default(hwext_extend_options* out) {
  if (out == nullptr) return;
  out->c_prime = 0.0;
  out->force = 0;
  out->has_window = 0;
  out->window_lo = 0.0;
  out->window_hi = 0.0;
  out->seed = 0;
  hwext_tolerances_default(&out->validation);
}

hwext_status hwext_jet_from_json(const char* text, hwext_jet** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new hwext_jet{hwext::parse_jet(text)};
  });
}

hwext_status hwext_jet_from_file(const char* path, hwext_jet** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new hwext_jet{hwext::read_jet_file(path)};
  });
}

void hwext_jet_free(hwext_jet* jet) { delete jet; }

hwext_status hwext_jet_to_json(const hwext_jet* jet, char** out) {
  return guarded([&] {
    require(jet, "jet");
    require(out, "out");
    *out = dup_string(hwext::jet_to_json(jet->jet));
  });
}

hwext_status hwext_jet_dimension(const hwext_jet* jet, int* n) {
  return guarded([&] {
    require(jet, "jet");
    require(n, "n");
    *n = jet->jet.n();
  });
}

hwext_status hwext_validate(const hwext_jet* jet, const hwext_tolerances* tol, int* extendable,
                            char** report_json) {
  return guarded([&] {
    require(jet, "jet");
    const hwext::Tolerances t = to_cpp(tol);
    const hwext::ValidationVerdict v = hwext::validate(jet->jet, t);
    if (extendable != nullptr) *extendable = v.extendable ? 1 : 0;
    if (report_json != nullptr) *report_json = dup_string(hwext::verdict_to_json(v, t));
  });
}

hwext_status hwext_extend(const hwext_jet* jet, const hwext_extend_options* opt,
                          hwext_extension** out) {
  return guarded([&] {
    require(jet, "jet");
    require(out, "out");
    hwext_extend_options o;
    hwext_extend_options_default(&o);
    if (opt != nullptr) o = *opt;
    hwext::ExtendOptions eo;
    eo.c_prime = o.c_prime;
    eo.force = o.force != 0;
    eo.validation = to_cpp(&o.validation);
    eo.seed = o.seed;
    const hwext::Interval window =
        o.has_window ? hwext::Interval{o.window_lo, o.window_hi} : jet->jet.hull();
    *out = new hwext_extension{hwext::extend(jet->jet, window, eo)};
  });
}

void hwext_extension_free(hwext_extension* ext) { delete ext; }

hwext_status hwext_extension_verify(const hwext_extension* ext, int samples_per_segment,
                                    int* passed, char** report_json) {
  return guarded([&] {
    require(ext, "extension");
    const hwext::VerificationReport r = hwext::verify(ext->ext, samples_per_segment);
    if (passed != nullptr) *passed = r.passed ? 1 : 0;
    if (report_json != nullptr) *report_json = dup_string(hwext::report_json(r));
  });
}

hwext_status hwext_extension_manifest(const hwext_extension* ext, int samples_per_segment,
                                      char** out) {
  return guarded([&] {
    require(ext, "extension");
    require(out, "out");
    std::optional<hwext::VerificationReport> report;
    if (samples_per_segment > 0) report = hwext::verify(ext->ext, samples_per_segment);
    *out = dup_string(hwext::manifest_json(ext->ext, report));
  });
}

hwext_status hwext_extension_from_manifest(const char* text, hwext_extension** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new hwext_extension{hwext::extension_from_manifest(text)};
  });
}

hwext_status hwext_extension_window(const hwext_extension* ext, double* lo, double* hi) {
  return guarded([&] {
    require(ext, "extension");
    if (lo != nullptr) *lo = ext->ext.window().lo;
    if (hi != nullptr) *hi = ext->ext.window().hi;
  });
}

hwext_status hwext_extension_dimension(const hwext_extension* ext, int* n) {
  return guarded([&] {
    require(ext, "extension");
    require(n, "n");
    *n = ext->ext.n();
  });
}

hwext_status hwext_extension_eval(const hwext_extension* ext, double s, double* value,
                                  double* deriv) {
  return guarded([&] {
    require(ext, "extension");
    const std::size_t k = ext->ext.locate(s);
    if (value != nullptr) {
      const auto v = ext->ext.segment_value(k, s);
      std::memcpy(value, v.data(), v.size() * sizeof(double));
    }
    if (deriv != nullptr) {
      const auto d = ext->ext.segment_derivative(k, s);
      std::memcpy(deriv, d.data(), d.size() * sizeof(double));
    }
  });
}

hwext_status hwext_extension_sample_csv(const hwext_extension* ext, int count, char** out) {
  return guarded([&] {
    require(ext, "extension");
    if (count < 2) throw hwext::Error(hwext::ErrorCode::InvalidArgument, "need at least 2 samples");
    const hwext::Interval w = ext->ext.window();
    std::vector<double> grid;
    for (int k = 0; k < count; ++k)
      grid.push_back(k == count - 1 ? w.hi : w.lo + w.length() * k / (count - 1));
    write_csv(ext->ext, grid, out);
  });
}

hwext_status hwext_extension_sample_grid_csv(const hwext_extension* ext, const double* grid,
                                             size_t count, char** out) {
  return guarded([&] {
    require(ext, "extension");
    if (count > 0) require(grid, "grid");
    write_csv(ext->ext, std::vector<double>(grid, grid + count), out);
  });
}

hwext_status hwext_counterexample_table(int levels, char** csv) {
  return guarded([&] {
    require(csv, "csv");
    *csv = dup_string(hwext::counterexample::table_csv(hwext::counterexample::table(levels)));
  });
}

hwext_status hwext_counterexample_jet(int levels, hwext_jet** out) {
  return guarded([&] {
    require(out, "out");
    *out = new hwext_jet{hwext::counterexample::build(levels)};
  });
}

hwext_status hwext_luzin(const char* curve_json, double eps, int cells, int samples_per_segment,
                         int* passed, char** result_json, hwext_extension** out) {
  return guarded([&] {
    require(curve_json, "curve_json");
    const hwext::PiecewiseCurve curve = hwext::parse_piecewise_curve(curve_json);
    hwext::LuzinOptions opt;
    if (cells > 0) opt.cells = cells;
    hwext::LuzinResult r = hwext::approximate(curve, eps, opt);
    std::optional<hwext::VerificationReport> report;
    if (samples_per_segment > 0) report = hwext::verify(r.extension, samples_per_segment);
    if (passed != nullptr) *passed = (!report || report->passed) && r.agreement <= 1e-9 ? 1 : 0;
    if (result_json != nullptr) *result_json = dup_string(hwext::luzin_json(r, report));
    if (out != nullptr) *out = new hwext_extension{std::move(r.extension)};
  });
}

hwext_status hwext_group_mul(int n, const double* p, const double* q, double* out) {
  return guarded([&] { copy_out(hwext::group_mul(point(n, p), point(n, q)), out); });
}

hwext_status hwext_group_inv(int n, const double* p, double* out) {
  return guarded([&] { copy_out(hwext::group_inv(point(n, p)), out); });
}

hwext_status hwext_dilate(int n, double r, const double* p, double* out) {
  return guarded([&] { copy_out(hwext::dilate(r, point(n, p)), out); });
}

hwext_status hwext_pansu_quotient(int n, const double* pa, const double* pb, double step,
                                  double* out) {
  return guarded([&] { copy_out(hwext::pansu_quotient(point(n, pa), point(n, pb), step), out); });
}

hwext_status hwext_contact_residual(int n, const double* value, const double* velocity,
                                    double* out) {
  return guarded([&] {
    require(velocity, "velocity");
    require(out, "out");
    const hwext::HPoint v = point(n, value);
    *out = hwext::contact_residual(v, std::span<const double>(velocity, v.size()));
  });
}

}  // extern "C"
