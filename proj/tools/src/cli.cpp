#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "catlab/errors.hpp"
#include "catlab/experiments.hpp"
#include "catlab/indices.hpp"
#include "catlab/oracle.hpp"
#include "catlab/statistics.hpp"
#include "catlab/theory.hpp"
#include "catlab/verification.hpp"
#include "config.hpp"
#include "svg.hpp"

namespace catlab::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kDefaultIndices = "hoover,zagreb,randic,wiener,hyper_wiener";

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<index_spec> parse_indices(const std::string& text) {
  std::vector<index_spec> out;
  for (const auto& item : split_list(text)) out.push_back(parse_index_spec(item));
  if (out.empty()) throw usage_error("--indices must name at least one index");
  return out;
}

std::string utc_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json make_manifest(const std::string& command, json config,
                   json verdicts = json::array()) {
  json m;
  m["tool"] = "catlab";
  m["version"] = kToolVersion;
  m["command"] = command;
  m["config"] = std::move(config);
  m["rng"] = {{"generator", "xoshiro256**"},
              {"substream", "splitmix64 from mix(seed) ^ mix(stream + 0x6A09E667F3BCC909)"},
              {"stream", "replicate index"}};
  m["timestamp"] = utc_timestamp();
  m["verdicts"] = std::move(verdicts);
  return m;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw usage_error("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw usage_error("failed writing '" + path + "'");
}

json value_to_json(const index_value& v) {
  if (const auto* exact = std::get_if<wide_int>(&v.value)) {
    if (*exact >= std::numeric_limits<std::int64_t>::min() &&
        *exact <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(*exact);
    }
    return to_string(*exact);
  }
  return std::get<double>(v.value);
}

json test_to_json(const stats::normality_test& t) {
  return {{"test", t.name},
          {"statistic", t.statistic},
          {"critical_value", t.critical_value},
          {"alpha", t.alpha},
          {"reject", t.reject}};
}

// --- simulate -------------------------------------------------------------

struct simulate_args {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::uint64_t seed = verify::kDefaultSeed;
  std::int64_t replications = 1;
  std::string indices = kDefaultIndices;
  std::string sampler = "sequential";
  std::string out;
  std::string format = "csv";
};

int cmd_simulate(const simulate_args& a, std::ostream& out) {
  experiment_config cfg;
  cfg.m = a.m;
  cfg.n = a.n;
  cfg.seed = a.seed;
  cfg.replications = a.replications;
  cfg.indices = parse_indices(a.indices);
  cfg.sampler = parse_sampler(a.sampler);
  validate(cfg);

  json config = {{"m", a.m},           {"n", a.n},
                 {"seed", a.seed},     {"replications", a.replications},
                 {"indices", a.indices}, {"sampler", a.sampler},
                 {"format", a.format}};

  std::ostringstream body;
  if (a.format == "csv") {
    body << "replicate_id";
    for (const auto& spec : cfg.indices) body << ',' << spec.name();
    body << '\n';
    for (std::int64_t r = 0; r < cfg.replications; ++r) {
      const auto c = generate_replicate(cfg, static_cast<std::uint64_t>(r));
      body << r;
      for (const auto& spec : cfg.indices) {
        body << ',' << compute_index(spec, c).to_string();
      }
      body << '\n';
    }
  } else if (a.format == "json") {
    json doc;
    doc["columns"] = json::array({"replicate_id"});
    for (const auto& spec : cfg.indices) doc["columns"].push_back(spec.name());
    doc["rows"] = json::array();
    for (std::int64_t r = 0; r < cfg.replications; ++r) {
      const auto c = generate_replicate(cfg, static_cast<std::uint64_t>(r));
      json row = json::array({r});
      for (const auto& spec : cfg.indices) {
        row.push_back(value_to_json(compute_index(spec, c)));
      }
      doc["rows"].push_back(std::move(row));
    }
    body << doc.dump(2) << '\n';
  } else {
    throw usage_error("--format must be csv or json");
  }

  if (a.out.empty()) {
    out << body.str();
  } else {
    write_file(a.out, body.str());
    write_file(a.out + ".manifest.json",
               make_manifest("simulate", config).dump(2) + "\n");
  }
  return kOk;
}

// --- theory ---------------------------------------------------------------

struct theory_args {
  std::string index;
  std::int64_t m = 0;
  std::int64_t n = 0;
  bool exact = false;
  std::string scaled = "none";
};

theory::theory_value evaluate_theory(const std::string& name, std::int64_t m,
                                     std::int64_t n) {
  if (name == "gini_mean") return theory::gini_mean(m, n);
  if (name == "hoover_mean") return theory::hoover_mean(m, n);
  if (name == "zagreb_mean") return theory::zagreb_mean(m, n);
  if (name == "zagreb_second_moment") return theory::zagreb_second_moment(m, n);
  if (name == "zagreb_variance") return theory::zagreb_variance(m, n);
  if (name == "zagreb_compensator") return theory::zagreb_compensator(m, n);
  if (name == "zagreb_clt_variance") return theory::zagreb_clt_params(m).variance;
  if (name == "randic_mean") return theory::randic_mean(m, n);
  if (name == "wiener_mean") return theory::wiener_mean(m, n);
  if (name == "hyper_wiener_mean_paper") return theory::hyper_wiener_mean_paper(m, n);
  if (name == "hyper_wiener_mean_corrected") {
    return theory::hyper_wiener_mean_corrected(m, n);
  }
  throw usage_error("unknown theory index '" + name + "'");
}

int cmd_theory(const theory_args& a, std::ostream& out) {
  auto tv = evaluate_theory(a.index, a.m, a.n);
  if (a.scaled == "n2") {
    if (a.n <= 0) throw usage_error("--scaled n2 needs n > 0");
    tv.value /= rational(a.n) * a.n;
  } else if (a.scaled != "none") {
    throw usage_error("--scaled must be none or n2");
  }
  json doc;
  doc["index"] = a.index;
  doc["m"] = a.m;
  doc["n"] = a.n;
  doc["scaled"] = a.scaled;
  doc["value"] = tv.approx();
  doc["numerator"] = boost::multiprecision::numerator(tv.value).str();
  doc["denominator"] = boost::multiprecision::denominator(tv.value).str();
  if (a.exact) doc["exact"] = to_fraction_string(tv.value);
  doc["validity"] = theory::to_string(tv.domain);
  doc["erratum"] = tv.domain == theory::validity::erratum_paper_form;
  doc["source"] = tv.source;
  out << doc.dump(2) << '\n';
  return kOk;
}

// --- verify ---------------------------------------------------------------

struct verify_args {
  std::string suite = "all";
  std::uint64_t seed = verify::kDefaultSeed;
  std::string profile = "default";
  unsigned threads = 0;
  std::string json_path;
};

int cmd_verify(const verify_args& a, std::ostream& out) {
  verify::options opts;
  opts.which = verify::parse_suite(a.suite);
  opts.seed = a.seed;
  opts.profile = verify::parse_profile(a.profile);
  opts.threads = a.threads;
  const auto report = verify::run(opts);
  out << verify::render_table(report);
  if (!a.json_path.empty()) write_file(a.json_path, verify::render_json(report));
  return report.passed() ? kOk : kVerificationFailed;
}

// --- clt ------------------------------------------------------------------

struct clt_args {
  std::int64_t m = 200;
  std::int64_t n = 5000;
  std::int64_t replications = 500;
  std::uint64_t seed = verify::kDefaultSeed;
  std::int64_t bins = 20;
  std::string plot = "zagreb_clt.svg";
  std::string out = "zagreb_standardized.csv";
  std::string sampler = "sequential";
  unsigned threads = 0;
};

int cmd_clt(const clt_args& a, std::ostream& out) {
  if (a.bins < 1) throw usage_error("--bins must be >= 1");
  if (theory::zagreb_variance(a.m, a.n).value <= 0) {
    throw domain_error("Var[Z_n] = 0 at m=" + std::to_string(a.m) +
                       ", n=" + std::to_string(a.n) +
                       "; nothing to standardize");
  }
  experiment_config cfg;
  cfg.m = a.m;
  cfg.n = a.n;
  cfg.replications = a.replications;
  cfg.seed = a.seed;
  cfg.threads = a.threads;
  cfg.sampler = parse_sampler(a.sampler);
  cfg.indices = {{index_kind::zagreb}};
  validate(cfg);
  if (cfg.replications < 20) {
    throw domain_error("clt needs at least 20 replications for the tests");
  }
  const auto summary = run_mc(cfg);
  const auto& z = summary.indices[0].sample;
  const auto& std_sample = summary.standardized_zagreb;

  std::ostringstream csv;
  csv << "replicate_id,zagreb,standardized\n";
  for (std::size_t r = 0; r < z.size(); ++r) {
    csv << r << ',' << format_real(z[r]) << ',' << format_real(std_sample[r])
        << '\n';
  }
  const auto hist = stats::histogram(std_sample, static_cast<std::size_t>(a.bins));
  const auto density = stats::kde(std_sample);
  const std::string title = "Standardized Zagreb index, m=" +
                            std::to_string(a.m) + ", n=" + std::to_string(a.n) +
                            ", R=" + std::to_string(a.replications);
  const auto moments = stats::summarize(std_sample);

  json verdicts = json::array({test_to_json(*summary.ks),
                               test_to_json(*summary.jarque_bera)});
  json config = {{"m", a.m},       {"n", a.n},         {"replications", a.replications},
                 {"seed", a.seed}, {"bins", a.bins},   {"sampler", a.sampler},
                 {"plot", a.plot}, {"out", a.out}};
  write_file(a.out, csv.str());
  write_file(a.out + ".manifest.json",
             make_manifest("clt", config, verdicts).dump(2) + "\n");
  write_file(a.plot, render_histogram_svg(hist, density, title));

  json doc;
  doc["m"] = a.m;
  doc["n"] = a.n;
  doc["replications"] = a.replications;
  doc["seed"] = a.seed;
  doc["standardized_mean"] = moments.mean();
  doc["standardized_variance"] = moments.variance();
  doc["kde_bandwidth"] = density.bandwidth;
  doc["tests"] = verdicts;
  doc["csv"] = a.out;
  doc["plot"] = a.plot;
  out << doc.dump(2) << '\n';
  return kOk;
}

// --- oracle ---------------------------------------------------------------

struct oracle_args {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::string index = "zagreb";
  std::string mode = "auto";
};

int cmd_oracle(const oracle_args& a, std::ostream& out) {
  oracle::enumeration_mode mode;
  if (a.mode == "auto") {
    mode = oracle::enumeration_mode::automatic;
  } else if (a.mode == "histories") {
    mode = oracle::enumeration_mode::histories;
  } else if (a.mode == "compositions") {
    mode = oracle::enumeration_mode::compositions;
  } else {
    throw usage_error("--mode must be auto, histories or compositions");
  }
  const auto spec = parse_index_spec(a.index);
  const auto moments = oracle::enumerate_exact(a.m, a.n, spec, mode);
  json doc;
  doc["index"] = spec.name();
  doc["m"] = a.m;
  doc["n"] = a.n;
  doc["mode"] = a.mode;
  doc["mean"] = to_fraction_string(moments.mean);
  doc["second_moment"] = to_fraction_string(moments.second_moment);
  doc["variance"] = to_fraction_string(moments.variance);
  doc["mean_float"] = to_double(moments.mean);
  doc["variance_float"] = to_double(moments.variance);
  doc["history_count"] = moments.history_count.str();
  doc["support_size"] = moments.support_size;
  out << doc.dump(2) << '\n';
  return kOk;
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.starts_with(flag + "=");
  });
}

// Appends values from --config and CATLAB_SEED for options the command line
// left unset.
void apply_fallbacks(std::vector<std::string>& args, CLI::App& app) {
  if (args.empty()) return;
  CLI::App* sub = nullptr;
  try {
    sub = app.get_subcommand(args.front());
  } catch (const CLI::OptionNotFound&) {
    return;
  }
  const auto given = args;

  std::string config_path;
  for (std::size_t i = 0; i < given.size(); ++i) {
    if (given[i] == "--config" && i + 1 < given.size()) config_path = given[i + 1];
    if (given[i].starts_with("--config=")) config_path = given[i].substr(9);
  }
  std::map<std::string, std::string> values;
  if (!config_path.empty()) {
    std::ifstream f(config_path);
    if (!f) throw usage_error("cannot read config file '" + config_path + "'");
    values = parse_config(f);
  }
  if (const char* env = std::getenv("CATLAB_SEED"); env && !values.contains("seed")) {
    values["seed"] = env;
  }
  for (const auto& [key, value] : values) {
    const std::string flag = "--" + key;
    if (key == "config" || has_flag(given, flag)) continue;
    if (sub->get_option_no_throw(flag) == nullptr) continue;
    args.push_back(flag);
    args.push_back(value);
  }
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"catlab: random caterpillar topological-index laboratory"};
  app.name("catlab");
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string config_path;
  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key=value file of option defaults");
  };

  simulate_args sim;
  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate caterpillars and compute indices");
  simulate_cmd->add_option("--m", sim.m, "spine size (>= 2)")->required();
  simulate_cmd->add_option("--n", sim.n, "number of leaves (>= 0)")->required();
  simulate_cmd->add_option("--seed", sim.seed, "64-bit seed");
  simulate_cmd->add_option("--replications", sim.replications, "number of replicates");
  simulate_cmd->add_option("--indices", sim.indices,
                           "comma list: gini,hoover,zagreb,randic[:alpha],wiener,hyper_wiener");
  simulate_cmd->add_option("--sampler", sim.sampler, "sequential or direct");
  simulate_cmd->add_option("--out", sim.out, "output file (manifest goes to <out>.manifest.json)");
  simulate_cmd->add_option("--format", sim.format, "csv or json");
  add_config(simulate_cmd);

  theory_args th;
  auto* theory_cmd = app.add_subcommand("theory", "Evaluate a closed-form mean, variance or limit");
  theory_cmd->add_option("--index", th.index, "e.g. zagreb_mean, wiener_mean")->required();
  theory_cmd->add_option("--m", th.m, "spine size")->required();
  theory_cmd->add_option("--n", th.n, "number of leaves");
  theory_cmd->add_flag("--exact", th.exact, "also print the rational as num/den");
  theory_cmd->add_option("--scaled", th.scaled, "none or n2 (divide by n^2)");
  add_config(theory_cmd);

  verify_args ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run acceptance criteria");
  verify_cmd->add_option("--suite", ver.suite, "oracle, montecarlo, paper7 or all");
  verify_cmd->add_option("--seed", ver.seed, "64-bit seed");
  verify_cmd->add_option("--tolerance-profile", ver.profile, "default or strict");
  verify_cmd->add_option("--threads", ver.threads, "worker threads (0 = auto)");
  verify_cmd->add_option("--json", ver.json_path, "also write the JSON report here");
  add_config(verify_cmd);

  clt_args clt;
  auto* clt_cmd = app.add_subcommand("clt", "Standardized Zagreb sample, normality tests and plot");
  clt_cmd->add_option("--m", clt.m, "spine size");
  clt_cmd->add_option("--n", clt.n, "number of leaves");
  clt_cmd->add_option("--replications", clt.replications, "number of replicates");
  clt_cmd->add_option("--seed", clt.seed, "64-bit seed");
  clt_cmd->add_option("--bins", clt.bins, "histogram bins");
  clt_cmd->add_option("--plot", clt.plot, "SVG output path");
  clt_cmd->add_option("--out", clt.out, "CSV output path");
  clt_cmd->add_option("--sampler", clt.sampler, "sequential or direct");
  clt_cmd->add_option("--threads", clt.threads, "worker threads (0 = auto)");
  add_config(clt_cmd);

  oracle_args orc;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact moments by exhaustive enumeration");
  oracle_cmd->add_option("--m", orc.m, "spine size")->required();
  oracle_cmd->add_option("--n", orc.n, "number of leaves")->required();
  oracle_cmd->add_option("--index", orc.index, "zagreb, randic, wiener or hyper_wiener");
  oracle_cmd->add_option("--mode", orc.mode, "auto, histories or compositions");
  add_config(oracle_cmd);

  try {
    std::vector<std::string> args = raw_args;
    apply_fallbacks(args, app);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*simulate_cmd) return cmd_simulate(sim, out);
    if (*theory_cmd) return cmd_theory(th, out);
    if (*verify_cmd) return cmd_verify(ver, out);
    if (*clt_cmd) return cmd_clt(clt, out);
    if (*oracle_cmd) return cmd_oracle(orc, out);
  } catch (const resource_error& e) {
    err << "resource guard: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const validity_error& e) {
    err << "validity error: " << e.what() << '\n';
    return kUsageError;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "no command given\n";
  return kUsageError;
}

}  // namespace catlab::cli
