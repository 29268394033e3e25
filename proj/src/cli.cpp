// Copyright 2026 The ergocap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ergocap/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ergocap/channel.hpp"
#include "ergocap/errors.hpp"
#include "ergocap/gaussian_capacity.hpp"
#include "ergocap/jacobi_capacity.hpp"
#include "ergocap/mc_oracle.hpp"
#include "ergocap/selftest.hpp"

namespace ergocap::cli {

double snr_db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

// Flags shared by every computing subcommand.
struct Common {
  std::string scaling = "per_mode";
  std::string units = "nats";
  std::string format = "csv";
  std::string out_path;
  double rtol = 1e-10;
  int n_initial = 64;
  int n_max = 4096;
  int terms = 400;
  long samples = 100'000;
  std::uint64_t seed = 42;

  SnrScaling snr_scaling() const {
    return scaling == "total_power" ? SnrScaling::kTotalPower : SnrScaling::kPerMode;
  }
  double unit_factor() const { return units == "bits" ? 1.0 / std::numbers::ln2 : 1.0; }
  quadrature::IntegrationOptions quad() const { return {n_initial, n_max, rtol}; }
  mc::McOptions mc_opts() const {
    mc::McOptions o;
    o.samples = samples;
    o.seed = seed;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_mc) {
  cmd->add_option("--scaling", c.scaling, "SNR convention")
      ->check(CLI::IsMember({"per_mode", "total_power"}));
  cmd->add_option("--units", c.units, "Output units")->check(CLI::IsMember({"nats", "bits"}));
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", c.out_path, "Write output to this file instead of stdout");
  cmd->add_option("--rtol", c.rtol, "Quadrature doubling tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--n-initial", c.n_initial, "Initial quadrature size")->check(CLI::PositiveNumber);
  cmd->add_option("--n-max", c.n_max, "Largest quadrature size")->check(CLI::PositiveNumber);
  cmd->add_option("--terms", c.terms, "Moment-series terms")->check(CLI::PositiveNumber);
  if (with_mc) {
    cmd->add_option("--samples", c.samples, "Monte Carlo samples")->check(CLI::Range(2L, 1L << 40));
    cmd->add_option("--seed", c.seed, "Monte Carlo seed");
  }
}

enum class Channel { kJacobi, kGaussian };

Method parse_method(const std::string& name, Channel ch) {
  static const std::map<std::string, Method> jacobi = {
      {"theorem1", Method::kTheorem1},         {"cd", Method::kCdReference},
      {"cd_reference", Method::kCdReference},  {"moment", Method::kMomentSeries},
      {"moment_series", Method::kMomentSeries}, {"mc", Method::kMc}};
  static const std::map<std::string, Method> gaussian = {
      {"theorem2", Method::kTheorem2},
      {"laguerre", Method::kLaguerreReference},
      {"laguerre_reference", Method::kLaguerreReference},
      {"mc", Method::kMc}};
  const auto& table = ch == Channel::kJacobi ? jacobi : gaussian;
  const auto it = table.find(name);
  if (it == table.end()) {
    throw UsageError("unknown method '" + name + "' for the " +
                     (ch == Channel::kJacobi ? "jacobi" : "gaussian") + " channel");
  }
  return it->second;
}

struct Point {
  int m = 0;  // unused for the Gaussian channel
  int m_t = 0;
  int m_r = 0;
  double snr_db = 0.0;
};

OutputRow base_row(const Point& p, Channel ch, const Common& c) {
  OutputRow r;
  if (ch == Channel::kJacobi) r.m = p.m;
  r.m_t = p.m_t;
  r.m_r = p.m_r;
  r.snr_db = p.snr_db;
  r.scaling = c.scaling;
  r.units = c.units;
  return r;
}

class Evaluator {
 public:
  Evaluator(Channel ch, const Common& c, std::ostream& err) : ch_(ch), c_(c), err_(err) {}

  // Rows for one method over all points, in point order.
  std::vector<OutputRow> rows(Method method, const std::vector<Point>& points) {
    if (method == Method::kMc) return mc_rows(points);
    std::vector<OutputRow> out;
    for (const auto& p : points) out.push_back(analytic_row(method, p));
    return out;
  }

 private:
  OutputRow analytic_row(Method method, const Point& p) {
    const Snr snr{snr_db_to_linear(p.snr_db), c_.snr_scaling()};
    CapacityEstimate est;
    if (ch_ == Channel::kJacobi) {
      const ChannelDims dims{p.m, p.m_t, p.m_r};
      if (method == Method::kMomentSeries) {
        dims.validate();
        if (dims.m < dims.m_t + dims.m_r) {
          throw UsageError("moment series needs m >= m_t + m_r");
        }
        JacobiParams jp = jacobi::jacobi_params(dims);
        est = jacobi::capacity_moment_series(jp, snr, c_.terms);
      } else {
        est = jacobi::capacity(dims, snr, method, c_.quad());
      }
    } else {
      const GaussianDims dims{p.m_t, p.m_r};
      dims.validate();
      est = method == Method::kTheorem2 ? gaussian::capacity_theorem2(dims, snr, c_.quad())
                                        : gaussian::capacity_laguerre_reference(dims, snr, c_.quad());
    }
    note(est.meta.note);
    OutputRow r = base_row(p, ch_, c_);
    r.method = std::string(to_string(est.method));
    r.capacity = est.nats * c_.unit_factor();
    r.err = est.err * c_.unit_factor();
    if (est.meta.n_used > 0) r.n_used = est.meta.n_used;
    return r;
  }

  // All points share one set of random draws per channel size.
  std::vector<OutputRow> mc_rows(const std::vector<Point>& points) {
    std::vector<OutputRow> out;
    if (points.empty()) return out;
    std::vector<mc::Probe> probes;
    for (const auto& p : points) {
      const Snr snr{snr_db_to_linear(p.snr_db), c_.snr_scaling()};
      if (ch_ == Channel::kJacobi) ChannelDims{p.m, p.m_t, p.m_r}.validate();
      else GaussianDims{p.m_t, p.m_r}.validate();
      probes.push_back({p.m_t, p.m_r, snr.effective(p.m_t)});
    }
    const auto est = ch_ == Channel::kJacobi ? mc::mc_haar_batch(points.front().m, probes, c_.mc_opts())
                                             : mc::mc_gaussian_batch(probes, c_.mc_opts());
    for (std::size_t i = 0; i < points.size(); ++i) {
      OutputRow r = base_row(points[i], ch_, c_);
      r.method = "mc";
      r.capacity = est[i].mean * c_.unit_factor();
      r.err = est[i].std_error * c_.unit_factor();
      r.samples = est[i].samples;
      r.seed = est[i].seed;
      out.push_back(r);
    }
    return out;
  }

  void note(const std::string& text) {
    if (!text.empty() && seen_.insert(text).second) err_ << "note: " << text << '\n';
  }

  Channel ch_;
  const Common& c_;
  std::ostream& err_;
  std::set<std::string> seen_;
};

std::vector<double> parse_range(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--range: '" + item + "' is not a number");
    }
  }
  if (parts.size() != 3) throw UsageError("--range must be start:stop:step");
  const double start = parts[0], stop = parts[1], step = parts[2];
  if (!(step > 0.0)) throw UsageError("--range: step must be positive");
  if (!(start <= stop)) throw UsageError("--range: start must not exceed stop");
  const long count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 1'000'000) throw UsageError("--range: too many points");
  std::vector<double> values;
  for (long i = 0; i < count; ++i) values.push_back(start + static_cast<double>(i) * step);
  return values;
}

int as_count(double v, const char* what) {
  if (v != std::floor(v) || v < 1.0 || v > 1e6) {
    throw UsageError(std::string("--range: ") + what + " values must be positive integers");
  }
  return static_cast<int>(v);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw UsageError("--methods: empty list");
  return out;
}

void emit(const std::vector<OutputRow>& rows, const Common& c, std::ostream& out) {
  const std::string text = c.format == "json" ? to_json(rows) : to_csv(rows);
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot open --out file '" + c.out_path + "'");
  f << text;
  if (!f) throw UsageError("failed writing --out file '" + c.out_path + "'");
}

}  // namespace

std::string csv_header() {
  return "method,m,mt,mr,snr_db,scaling,units,capacity,err,samples,seed,N_used";
}

std::string to_csv(const std::vector<OutputRow>& rows) {
  std::string s = csv_header() + "\n";
  for (const auto& r : rows) {
    s += r.method + ",";
    s += (r.m ? std::to_string(*r.m) : "") + ",";
    s += std::to_string(r.m_t) + "," + std::to_string(r.m_r) + ",";
    s += fmt(r.snr_db, 15) + "," + r.scaling + "," + r.units + ",";
    s += fmt(r.capacity) + "," + fmt(r.err) + ",";
    s += (r.samples ? std::to_string(*r.samples) : "") + ",";
    s += (r.seed ? std::to_string(*r.seed) : "") + ",";
    s += (r.n_used ? std::to_string(*r.n_used) : "") + "\n";
  }
  return s;
}

std::string to_json(const std::vector<OutputRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["method"] = r.method;
    o["m"] = r.m ? nlohmann::ordered_json(*r.m) : nullptr;
    o["mt"] = r.m_t;
    o["mr"] = r.m_r;
    o["snr_db"] = r.snr_db;
    o["scaling"] = r.scaling;
    o["units"] = r.units;
    o["capacity"] = r.capacity;
    o["err"] = r.err;
    o["samples"] = r.samples ? nlohmann::ordered_json(*r.samples) : nullptr;
    o["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nullptr;
    o["N_used"] = r.n_used ? nlohmann::ordered_json(*r.n_used) : nullptr;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ergodic capacity of Jacobi (optical SDM) and Gaussian MIMO channels", "ergocap"};
  app.require_subcommand(1);

  Common c;
  Point pt;
  std::string jacobi_method;
  std::string gaussian_method;

  auto* jac = app.add_subcommand("jacobi", "Analytic Jacobi-channel capacity");
  jac->add_option("--m", pt.m, "Total fiber modes")->required()->check(CLI::PositiveNumber);
  jac->add_option("--mt", pt.m_t, "Transmit modes")->required()->check(CLI::PositiveNumber);
  jac->add_option("--mr", pt.m_r, "Receive modes")->required()->check(CLI::PositiveNumber);
  jac->add_option("--snr-db", pt.snr_db, "SNR in dB")->required();
  jac->add_option("--method", jacobi_method, "theorem1 | cd | moment")->default_val("theorem1");
  add_common(jac, c, false);

  auto* gau = app.add_subcommand("gaussian", "Analytic Gaussian-channel capacity");
  gau->add_option("--mt", pt.m_t, "Transmit antennas")->required()->check(CLI::PositiveNumber);
  gau->add_option("--mr", pt.m_r, "Receive antennas")->required()->check(CLI::PositiveNumber);
  gau->add_option("--snr-db", pt.snr_db, "SNR in dB")->required();
  gau->add_option("--method", gaussian_method, "theorem2 | laguerre")->default_val("theorem2");
  add_common(gau, c, false);

  std::string channel_name = "jacobi";
  auto* mcc = app.add_subcommand("mc", "Monte Carlo capacity estimate");
  mcc->add_option("--channel", channel_name, "jacobi | gaussian")
      ->check(CLI::IsMember({"jacobi", "gaussian"}));
  mcc->add_option("--m", pt.m, "Total fiber modes (jacobi)")->check(CLI::PositiveNumber);
  mcc->add_option("--mt", pt.m_t, "Transmit modes")->required()->check(CLI::PositiveNumber);
  mcc->add_option("--mr", pt.m_r, "Receive modes")->required()->check(CLI::PositiveNumber);
  mcc->add_option("--snr-db", pt.snr_db, "SNR in dB")->required();
  add_common(mcc, c, true);

  std::string axis = "snr_db";
  std::string range;
  std::string methods;
  bool have_snr = false;
  auto* swp = app.add_subcommand("sweep", "Capacity over a parameter range");
  swp->add_option("--channel", channel_name, "jacobi | gaussian")
      ->check(CLI::IsMember({"jacobi", "gaussian"}));
  swp->add_option("--m", pt.m, "Total fiber modes (jacobi)")->check(CLI::PositiveNumber);
  swp->add_option("--mt", pt.m_t, "Transmit modes")->check(CLI::PositiveNumber);
  swp->add_option("--mr", pt.m_r, "Receive modes")->check(CLI::PositiveNumber);
  swp->add_option("--snr-db", pt.snr_db, "SNR in dB (when the axis is not snr_db)");
  swp->add_option("--axis", axis, "snr_db | m_r | m_t")
      ->check(CLI::IsMember({"snr_db", "m_r", "m_t"}));
  swp->add_option("--range", range, "start:stop:step")->required();
  swp->add_option("--methods", methods, "Comma-separated method list")->required();
  add_common(swp, c, true);

  selftest::Options st;
  auto* slf = app.add_subcommand("selftest", "Run the built-in invariant suite");
  slf->add_option("--samples", st.mc_samples, "Monte Carlo samples per check")
      ->check(CLI::Range(2L, 1L << 40));
  slf->add_option("--seed", st.seed, "Monte Carlo seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*slf) return selftest::run_all(out, st) ? kExitOk : kExitNumerical;

    const Channel ch = (*gau || ((*mcc || *swp) && channel_name == "gaussian"))
                           ? Channel::kGaussian
                           : Channel::kJacobi;
    if (ch == Channel::kJacobi && (*mcc || *swp) && pt.m == 0) {
      throw UsageError("--m is required for the jacobi channel");
    }
    Evaluator ev(ch, c, err);
    std::vector<OutputRow> rows;

    if (*jac || *gau) {
      rows = ev.rows(parse_method(*jac ? jacobi_method : gaussian_method, ch), {pt});
    } else if (*mcc) {
      rows = ev.rows(Method::kMc, {pt});
    } else {
      have_snr = swp->count("--snr-db") > 0;
      if (axis != "snr_db" && !have_snr) throw UsageError("--snr-db is required for this axis");
      if (axis != "m_t" && pt.m_t == 0) throw UsageError("--mt is required");
      if (axis != "m_r" && pt.m_r == 0) throw UsageError("--mr is required");
      std::vector<Point> points;
      for (double v : parse_range(range)) {
        Point p = pt;
        if (axis == "snr_db") p.snr_db = v;
        else if (axis == "m_r") p.m_r = as_count(v, "m_r");
        else p.m_t = as_count(v, "m_t");
        points.push_back(p);
      }
      std::vector<Method> list;
      for (const auto& name : split_list(methods)) list.push_back(parse_method(name, ch));
      for (Method m : list) {
        auto part = ev.rows(m, points);
        rows.insert(rows.end(), part.begin(), part.end());
      }
    }
    emit(rows, c, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (last " << fmt(e.last()) << ", previous "
        << fmt(e.previous()) << ")\n";
    return kExitNumerical;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace ergocap::cli
