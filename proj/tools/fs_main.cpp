// fs: command-line front end for friends-and-strangers graph computations.
//
// Exit codes: 0 success (or connected), 1 disconnected, 2 usage, parse or
// size mismatch, 3 resource limit. JSON and CSV go to stdout; diagnostics
// go to stderr.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fsg/certificate.hpp"
#include "fsg/engine.hpp"
#include "fsg/error.hpp"
#include "fsg/spec.hpp"
#include "fsg/theorems.hpp"

namespace {

enum Exit : int { kOk = 0, kDisconnected = 1, kUsage = 2, kResource = 3 };

struct RunOptions {
  std::optional<int> max_n;
  std::uint64_t memory_limit = std::uint64_t{2} << 30;
  int threads = 1;
  std::uint64_t seed = 1;
  std::string format = "json";

  fsg::EngineConfig engine() const {
    fsg::EngineConfig cfg;
    if (max_n) cfg.max_full_n = *max_n;
    cfg.memory_limit_bytes = memory_limit;
    cfg.thread_count = threads;
    return cfg;
  }
};

fsg::FsInstance load_instance(const std::string& xspec, const std::string& yspec) {
  return fsg::FsInstance::make(fsg::graph_from_spec(xspec), fsg::graph_from_spec(yspec));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << "\r\n";
}

int cmd_components(const std::string& xs, const std::string& ys, const RunOptions& opt) {
  const auto inst = load_instance(xs, ys);
  const auto summary = fsg::fs_components(inst, opt.engine());
  if (opt.format == "csv") {
    csv_row(std::cout, {"size", "count"});
    for (auto [size, count] : summary.sizes) {
      csv_row(std::cout, {std::to_string(size), std::to_string(count)});
    }
  } else if (opt.format == "plain") {
    std::cout << "n = " << summary.n << ", states = " << summary.total_states
              << ", components = " << summary.num_components << "\n";
    for (auto [size, count] : summary.sizes) {
      std::cout << "  " << count << " x size " << size << "\n";
    }
  } else {
    std::cout << fsg::Json(summary).dump() << "\n";
  }
  return kOk;
}

int cmd_connected(const std::string& xs, const std::string& ys, const RunOptions& opt) {
  const auto inst = load_instance(xs, ys);
  const bool connected = fsg::fs_is_connected(inst, opt.engine());
  if (opt.format == "plain") {
    std::cout << (connected ? "connected" : "disconnected") << "\n";
  } else if (opt.format == "csv") {
    csv_row(std::cout, {"x_spec", "y_spec", "n", "connected"});
    csv_row(std::cout, {xs, ys, std::to_string(inst.order()), connected ? "true" : "false"});
  } else {
    std::cout << fsg::Json{{"n", inst.order()}, {"connected", connected}}.dump() << "\n";
  }
  return connected ? kOk : kDisconnected;
}

int cmd_cert(const std::string& xs, const std::string& ys, const RunOptions& opt) {
  const auto inst = load_instance(xs, ys);
  const auto cert = fsg::find_disconnect_certificate(inst);
  if (!cert) {
    std::cout << "none\n";
    return kOk;
  }
  if (opt.format == "plain") {
    std::cout << fsg::Json(*cert)["kind"].get<std::string>() << " d=" << cert->d()
              << " min_deg_y=" << cert->min_deg_y << "\n";
  } else {
    std::cout << fsg::Json(*cert).dump() << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& id, const RunOptions& opt, int samples, bool stretch,
               bool timing) {
  fsg::SuiteOptions suite;
  suite.engine = opt.engine();
  if (opt.max_n) suite.max_n = *opt.max_n;
  suite.seed = opt.seed;
  suite.samples = samples;
  suite.stretch = stretch;

  std::vector<std::string> ids;
  if (id == "all") {
    ids = fsg::verification_ids();
  } else {
    const auto& known = fsg::verification_ids();
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      std::cerr << "fs: unknown theorem id '" << id << "'\n";
      return kUsage;
    }
    ids = {id};
  }

  bool passed = true;
  fsg::Json reports = fsg::Json::array();
  for (const auto& one : ids) {
    const auto report = fsg::run_verification(one, suite);
    passed = passed && report.passed();
    if (opt.format == "plain") {
      std::cout << (report.passed() ? "PASS " : "FAIL ") << one << " ("
                << report.instances_checked << " checked, " << report.mismatches.size()
                << " mismatches, " << report.anomalies.size() << " anomalies)\n";
    }
    reports.push_back(fsg::report_to_json(report, timing));
  }
  if (opt.format != "plain") {
    if (id == "all") {
      std::cout << fsg::Json{{"passed", passed}, {"reports", reports}}.dump() << "\n";
    } else {
      std::cout << reports[0].dump() << "\n";
    }
  }
  return passed ? kOk : kDisconnected;
}

int cmd_explore(const std::string& xpat, const std::string& ypat, int min_n,
                const RunOptions& opt) {
  const auto cfg = opt.engine();
  const int max_n = opt.max_n.value_or(7);
  csv_row(std::cout, {"x_spec", "y_spec", "n", "connected", "num_components",
                      "largest_component"});
  for (int n = std::max(min_n, 1); n <= max_n; ++n) {
    const auto xs = fsg::family_specs(xpat, n);
    const auto ys = fsg::family_specs(ypat, n);
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        try {
          const auto s = fsg::fs_components(load_instance(x, y), cfg);
          csv_row(std::cout, {x, y, std::to_string(n), s.connected() ? "true" : "false",
                              std::to_string(s.num_components), std::to_string(s.largest())});
        } catch (const fsg::ResourceError& e) {
          std::cerr << "fs: " << x << " vs " << y << ": " << e.what() << "\n";
          csv_row(std::cout, {x, y, std::to_string(n), "error", "", ""});
        }
      }
    }
  }
  return kOk;
}

int cmd_neighbors(const std::string& xs, const std::string& ys, const std::string& perm,
                  const RunOptions&) {
  const auto inst = load_instance(xs, ys);
  fsg::Permutation p;
  try {
    p = fsg::Json::parse(perm).get<fsg::Permutation>();
  } catch (const fsg::Json::exception& e) {
    throw fsg::RangeError(std::string("permutation must be a JSON array such as [2,1,3]: ") +
                          e.what());
  }
  if (p.size() != inst.order()) throw fsg::SizeError("permutation size does not match the instance");
  fsg::Json out = fsg::Json::array();
  for (const auto& q : fsg::fs_neighbors(inst, p)) out.push_back(q);
  std::cout << out.dump() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Friends-and-strangers graph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  RunOptions opt;
  app.add_option("--max-n", opt.max_n, "Largest instance order to enumerate")
      ->envname("FS_MAX_N")
      ->check(CLI::Range(1, 20));
  app.add_option("--memory-limit", opt.memory_limit, "Memory budget, e.g. 2GB")
      ->envname("FS_MEMORY_LIMIT")
      ->transform(CLI::AsSizeValue(false));
  app.add_option("--threads", opt.threads, "Worker threads")
      ->envname("FS_THREADS")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Sampler seed")->envname("FS_SEED");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "plain"}));

  std::string xs, ys, perm, id, xpat, ypat;
  int samples = 100;
  int min_n = 4;
  bool stretch = false;
  bool no_timing = false;

  auto* components = app.add_subcommand("components", "Count components of FS(X,Y)");
  components->add_option("x", xs, "X graph spec")->required();
  components->add_option("y", ys, "Y graph spec")->required();

  auto* connected = app.add_subcommand("connected", "Decide connectivity (exit 0/1)");
  connected->add_option("x", xs, "X graph spec")->required();
  connected->add_option("y", ys, "Y graph spec")->required();

  auto* cert = app.add_subcommand("cert", "Search for a disconnectedness certificate");
  cert->add_option("x", xs, "X graph spec")->required();
  cert->add_option("y", ys, "Y graph spec")->required();

  auto* verify = app.add_subcommand("verify", "Re-check a classification statement");
  verify->add_option("id", id, "Statement id or 'all'")->required();
  verify->add_option("--samples", samples, "Random samples per sampled check")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--stretch", stretch, "Allow sweeps beyond n = 9 up to --max-n");
  verify->add_flag("--no-timing", no_timing, "Omit elapsed_ms from reports");

  auto* explore = app.add_subcommand("explore", "Sweep family pairs and emit CSV");
  explore->add_option("x_pattern", xpat, "X family pattern")->required();
  explore->add_option("y_pattern", ypat, "Y family pattern")->required();
  explore->add_option("--min-n", min_n, "Smallest order to sweep");

  auto* neighbors = app.add_subcommand("neighbors", "List FS neighbours of a permutation");
  neighbors->add_option("x", xs, "X graph spec")->required();
  neighbors->add_option("y", ys, "Y graph spec")->required();
  neighbors->add_option("perm", perm, "Permutation, e.g. [2,1,3]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*components) return cmd_components(xs, ys, opt);
    if (*connected) return cmd_connected(xs, ys, opt);
    if (*cert) return cmd_cert(xs, ys, opt);
    if (*verify) return cmd_verify(id, opt, samples, stretch, !no_timing);
    if (*explore) return cmd_explore(xpat, ypat, min_n, opt);
    if (*neighbors) return cmd_neighbors(xs, ys, perm, opt);
  } catch (const fsg::ResourceError& e) {
    std::cerr << "fs: " << e.what() << "\n";
    return kResource;
  } catch (const fsg::Error& e) {
    std::cerr << "fs: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
