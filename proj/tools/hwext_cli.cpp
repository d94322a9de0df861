// Command-line front end; talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hwext/hwext.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kRejected = 2, kVerifyFailed = 3 };

struct CStr {
  char* p = nullptr;
  ~CStr() { hwext_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct JetDel {
  void operator()(hwext_jet* j) const { hwext_jet_free(j); }
};
struct ExtDel {
  void operator()(hwext_extension* e) const { hwext_extension_free(e); }
};
using JetPtr = std::unique_ptr<hwext_jet, JetDel>;
using ExtPtr = std::unique_ptr<hwext_extension, ExtDel>;

struct Failure {
  int code;
  std::string message;
};

void check(hwext_status st, const std::string& context) {
  if (st == HWEXT_OK) return;
  const int code = st == HWEXT_E_VALIDATION_REJECTED ? kRejected : kUsage;
  throw Failure{code, context + ": " + hwext_status_name(st) + ": " + hwext_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot open '" + path + "' for reading"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kUsage, "cannot write '" + path + "'"};
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

std::string csv_path_for(const std::string& output) {
  const auto dot = output.find_last_of('.');
  const auto slash = output.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return output + ".csv";
  return output.substr(0, dot) + ".csv";
}

std::vector<double> parse_window(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Failure{kUsage, "--window expects lo,hi"};
    }
  }
  if (out.size() != 2 || !(out[0] < out[1])) throw Failure{kUsage, "--window expects lo,hi with lo < hi"};
  return out;
}

/// Space-separated entries of the "failing" array of a report.
std::string failing_names(const std::string& text) {
  const auto j = nlohmann::json::parse(text, nullptr, false);
  std::string out;
  if (j.is_discarded() || !j.contains("failing")) return out;
  for (const auto& name : j["failing"]) out += (out.empty() ? "" : " ") + name.get<std::string>();
  return out;
}

struct Config {
  std::string input;
  std::string output;
  std::string csv;
  std::string window;
  double tol = 0.0;
  int samples = 0;
  int points = 1001;
  int levels = 0;
  double eps = 0.0;
  int cells = 0;
  bool force = false;
  unsigned long long seed = 0;
};

hwext_tolerances tolerances(const Config& c) {
  hwext_tolerances t;
  hwext_tolerances_default(&t);
  if (c.tol > 0.0) {
    t.whitney = c.tol;
    t.area = c.tol;
  }
  if (c.samples > 0) t.samples_per_interval = c.samples;
  if (c.levels > 0) t.levels = c.levels;
  return t;
}

int run_validate(const Config& c) {
  hwext_jet* raw = nullptr;
  check(hwext_jet_from_file(c.input.c_str(), &raw), "validate");
  JetPtr jet(raw);
  const hwext_tolerances t = tolerances(c);
  int ok = 0;
  CStr report;
  check(hwext_validate(jet.get(), &t, &ok, &report.p), "validate");
  emit(c.output, report.str());
  if (!ok) {
    std::cerr << "validate: rejected; failing condition(s): " << failing_names(report.str()) << "\n";
    return kRejected;
  }
  std::cerr << "validate: extendable\n";
  return kOk;
}

int write_extension(hwext_extension* ext, const Config& c, const std::string& label) {
  const int samples = c.samples > 0 ? c.samples : 1000;
  int passed = 0;
  CStr report;
  check(hwext_extension_verify(ext, samples, &passed, &report.p), label);
  CStr manifest;
  check(hwext_extension_manifest(ext, samples, &manifest.p), label);
  CStr csv;
  check(hwext_extension_sample_csv(ext, c.points, &csv.p), label);
  emit(c.output, manifest.str());
  if (!c.output.empty() && c.output != "-") write_file(c.csv.empty() ? csv_path_for(c.output) : c.csv, csv.str());
  if (!passed) {
    std::cerr << label << ": verification failed: " << failing_names(report.str()) << "\n";
    return kVerifyFailed;
  }
  std::cerr << label << ": verification passed\n";
  return kOk;
}

int run_extend(const Config& c) {
  hwext_jet* raw = nullptr;
  check(hwext_jet_from_file(c.input.c_str(), &raw), "extend");
  JetPtr jet(raw);
  hwext_extend_options o;
  hwext_extend_options_default(&o);
  o.force = c.force ? 1 : 0;
  o.seed = c.seed;
  o.validation = tolerances(c);
  o.validation.samples_per_interval = 64;
  if (!c.window.empty()) {
    const auto w = parse_window(c.window);
    o.has_window = 1;
    o.window_lo = w[0];
    o.window_hi = w[1];
  }
  hwext_extension* ext = nullptr;
  check(hwext_extend(jet.get(), &o, &ext), "extend");
  ExtPtr holder(ext);
  return write_extension(ext, c, "extend");
}

int run_verify(const Config& c) {
  const std::string text = read_file(c.input);
  hwext_extension* ext = nullptr;
  check(hwext_extension_from_manifest(text.c_str(), &ext), "verify");
  ExtPtr holder(ext);
  int passed = 0;
  CStr report;
  check(hwext_extension_verify(ext, c.samples > 0 ? c.samples : 1000, &passed, &report.p), "verify");
  emit(c.output, report.str());
  if (!passed) {
    std::cerr << "verify: failed: " << failing_names(report.str()) << "\n";
    return kVerifyFailed;
  }
  std::cerr << "verify: passed\n";
  return kOk;
}

int run_counterexample(const Config& c) {
  const int levels = c.levels > 0 ? c.levels : 11;
  CStr table;
  check(hwext_counterexample_table(levels, &table.p), "counterexample");
  emit(c.output, table.str());

  hwext_jet* raw = nullptr;
  check(hwext_counterexample_jet(levels, &raw), "counterexample");
  JetPtr jet(raw);
  const hwext_tolerances t = tolerances(c);
  int ok = 0;
  CStr report;
  check(hwext_validate(jet.get(), &t, &ok, &report.p), "counterexample");
  std::cerr << "counterexample: validate " << (ok ? "accepted" : "rejected; failing condition(s): ")
            << failing_names(report.str()) << "\n";
  return kOk;
}

int run_luzin(const Config& c) {
  if (!(c.eps > 0.0)) throw Failure{kUsage, "luzin: --eps must be positive"};
  const std::string text = read_file(c.input);
  int passed = 0;
  CStr result;
  hwext_extension* ext = nullptr;
  check(hwext_luzin(text.c_str(), c.eps, c.cells, c.samples > 0 ? c.samples : 1000, &passed,
                    &result.p, &ext),
        "luzin");
  ExtPtr holder(ext);
  CStr csv;
  check(hwext_extension_sample_csv(ext, c.points, &csv.p), "luzin");
  emit(c.output, result.str());
  if (!c.output.empty() && c.output != "-") write_file(c.csv.empty() ? csv_path_for(c.output) : c.csv, csv.str());
  if (!passed) {
    std::cerr << "luzin: verification failed\n";
    return kVerifyFailed;
  }
  std::cerr << "luzin: verification passed\n";
  return kOk;
}

int run_sample(const Config& c) {
  const std::string text = read_file(c.input);
  hwext_extension* ext = nullptr;
  check(hwext_extension_from_manifest(text.c_str(), &ext), "sample");
  ExtPtr holder(ext);
  const int count = c.samples > 0 ? c.samples : c.points;
  CStr csv;
  if (c.window.empty()) {
    check(hwext_extension_sample_csv(ext, count, &csv.p), "sample");
  } else {
    const auto w = parse_window(c.window);
    if (count < 2) throw Failure{kUsage, "sample: need at least 2 points"};
    std::vector<double> grid;
    for (int k = 0; k < count; ++k) grid.push_back(k == count - 1 ? w[1] : w[0] + (w[1] - w[0]) * k / (count - 1));
    check(hwext_extension_sample_grid_csv(ext, grid.data(), grid.size(), &csv.p), "sample");
  }
  emit(c.output, csv.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whitney extension for horizontal curves in the Heisenberg group"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--output,-o", c.output, "Output path ('-' or empty: stdout)");
    sub->add_option("--seed", c.seed, "Seed recorded in outputs");
  };

  auto* validate = app.add_subcommand("validate", "Check a jet against the extension conditions");
  validate->add_option("--input,-i", c.input, "Jet JSON")->required()->check(CLI::ExistingFile);
  validate->add_option("--tol", c.tol, "Tolerance for the Whitney and area moduli")->check(CLI::PositiveNumber);
  validate->add_option("--samples", c.samples, "Samples per interval")->check(CLI::Range(2, 1 << 20));
  validate->add_option("--levels", c.levels, "Number of probe scales")->check(CLI::Range(1, 64));
  add_common(validate);

  auto* extend = app.add_subcommand("extend", "Build and verify the extension, write manifest and CSV");
  extend->add_option("--input,-i", c.input, "Jet JSON")->required()->check(CLI::ExistingFile);
  extend->add_option("--window", c.window, "Window lo,hi containing K");
  extend->add_option("--tol", c.tol, "Validation tolerance")->check(CLI::PositiveNumber);
  extend->add_option("--samples", c.samples, "Verification samples per segment")->check(CLI::Range(2, 1 << 20));
  extend->add_option("--points", c.points, "CSV grid points")->check(CLI::Range(2, 1 << 24));
  extend->add_option("--csv", c.csv, "CSV path (default: output with .csv extension)");
  extend->add_flag("--force", c.force, "Extend even when validation rejects the jet");
  add_common(extend);

  auto* verify = app.add_subcommand("verify", "Re-verify a stored extension manifest");
  verify->add_option("--input,-i", c.input, "Manifest JSON")->required()->check(CLI::ExistingFile);
  verify->add_option("--samples", c.samples, "Samples per segment")->check(CLI::Range(2, 1 << 20));
  add_common(verify);

  auto* counter = app.add_subcommand("counterexample", "Blow-up table for the Cantor-like jet");
  counter->add_option("--levels", c.levels, "Number of intervals")->check(CLI::Range(1, 40));
  add_common(counter);

  auto* luzin = app.add_subcommand("luzin", "C^1 approximation off a set of small measure");
  luzin->add_option("--input,-i", c.input, "Piecewise curve JSON")->required()->check(CLI::ExistingFile);
  luzin->add_option("--eps", c.eps, "Measure budget")->required()->check(CLI::PositiveNumber);
  luzin->add_option("--cells", c.cells, "Grid cells")->check(CLI::Range(1, 1 << 20));
  luzin->add_option("--samples", c.samples, "Verification samples per segment")->check(CLI::Range(2, 1 << 20));
  luzin->add_option("--points", c.points, "CSV grid points")->check(CLI::Range(2, 1 << 24));
  luzin->add_option("--csv", c.csv, "CSV path (default: output with .csv extension)");
  add_common(luzin);

  auto* sample = app.add_subcommand("sample", "Evaluate a stored extension on a uniform grid");
  sample->add_option("--input,-i", c.input, "Manifest JSON")->required()->check(CLI::ExistingFile);
  sample->add_option("--samples", c.samples, "Grid points")->check(CLI::Range(2, 1 << 24));
  sample->add_option("--window", c.window, "Sub-window lo,hi");
  add_common(sample);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return run_validate(c);
    if (extend->parsed()) return run_extend(c);
    if (verify->parsed()) return run_verify(c);
    if (counter->parsed()) return run_counterexample(c);
    if (luzin->parsed()) return run_luzin(c);
    if (sample->parsed()) return run_sample(c);
  } catch (const Failure& f) {
    std::cerr << "hwext: " << f.message << "\n";
    return f.code;
  }
  return kUsage;
}
