#pragma once

// Executable restatements of the connectivity classifications for spider,
// cycle, fruit and tadpole instances. Each verifier predicts connectivity
// from the closed-form statement and compares against the engine.

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fsg/engine.hpp"
#include "fsg/error.hpp"
#include "fsg/families.hpp"

namespace fsg {

struct Mismatch {
  std::string instance;
  std::string predicted;
  std::string observed;
};

struct VerificationReport {
  std::string theorem_id;
  std::uint64_t instances_checked = 0;
  std::vector<Mismatch> mismatches;
  /// Disagreements outside the statement's settled scope; not failures.
  std::vector<Mismatch> anomalies;
  std::vector<std::string> notes;
  std::chrono::milliseconds elapsed{0};
  std::optional<std::uint64_t> seed;

  bool passed() const { return mismatches.empty(); }
};

/// {"theorem","checked","mismatches","anomalies","notes","elapsed_ms","seed"}.
/// With include_timing = false the elapsed_ms field is omitted, which makes
/// the document a pure function of the inputs.
Json report_to_json(const VerificationReport& r, bool include_timing = true);

/// Seeded generator used by every sampler.
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int draw(Rng& rng, int lo, int hi);

/// Edge-inclusion random graph with probability p, resampled until
/// connected and accepted by `keep`. Throws ParameterError after
/// `max_tries` rejections.
template <class Pred>
Graph sample_connected_graph(int n, double p, Rng& rng, Pred keep, int max_tries = 10000);

/// Uniformly random relabelling of g.
Graph shuffle_labels(const Graph& g, Rng& rng);

/// Predictions of the closed-form statements.
bool predicted_connected_vs_cycle_complement(const std::vector<int>& legs);
bool predicted_disconnected_vs_fruit_complement(const std::vector<int>& legs);

VerificationReport verify_thm_cycle_classification(int n_min, int n_max,
                                                   const EngineConfig& cfg);
VerificationReport verify_thm_fruit_classification(int n_min, int n_max,
                                                   const EngineConfig& cfg);
VerificationReport verify_cor_min_degree4(int samples, int n_min, int n_max, std::uint64_t seed,
                                          const EngineConfig& cfg);
VerificationReport verify_thm_tadpole(int n_max, int c_min, int c_max, const EngineConfig& cfg);
VerificationReport verify_lemma_deletion_cases(int c_min, int c_max, int tail_min, int tail_max,
                                               int max_order);
VerificationReport verify_thm_main(int k_min, int k_max, const EngineConfig& cfg);
VerificationReport verify_thm_spider_induct(int samples, int n_max, int k, std::uint64_t seed,
                                            const EngineConfig& cfg);
VerificationReport verify_cor_three_legs(int n_max, const EngineConfig& cfg);
VerificationReport verify_claim_necessary(int samples, int n_max, std::uint64_t seed,
                                          const EngineConfig& cfg);
VerificationReport verify_identity_isolation(int n_max);

/// Which single-vertex deletion case of a tadpole a vertex falls in.
enum class DeletionCase { SpiderRemainder, PathRemainder, PathPlusTadpole, TwoPaths };

struct DeletionPrediction {
  DeletionCase kind;
  Graph expected;   // the predicted remainder
  Graph container;  // a graph on n-1 vertices that must contain it
  std::string description;
};

/// Predicted remainder after deleting vertex v (0-based) from
/// tadpole({cycle, tail}), with tail >= 1.
DeletionPrediction predict_tadpole_deletion(int cycle, int tail, int v);

struct SuiteOptions {
  EngineConfig engine;
  /// Cap on the order of any engine instance.
  int max_n = 9;
  /// Lets sweeps run past n = 9 up to max_n.
  bool stretch = false;
  std::uint64_t seed = 1;
  int samples = 100;
};

/// thm-cycle, thm-fruit, cor-mindeg4, thm-tadpole, lemma-deletion, thm-main,
/// thm-induct, cor-threelegs, claim-necessary, identity-isolation.
const std::vector<std::string>& verification_ids();

/// Runs one verifier over its default range capped by opts.max_n. Throws
/// ParameterError on an unknown id.
VerificationReport run_verification(const std::string& id, const SuiteOptions& opts);

// ---------------------------------------------------------------------------

template <class Pred>
Graph sample_connected_graph(int n, double p, Rng& rng, Pred keep, int max_tries) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng) < p) g.add_edge(u, v);
      }
    }
    if (is_connected(g) && keep(g)) return g;
  }
  throw ParameterError("sampler found no acceptable graph after " + std::to_string(max_tries) +
                       " tries");
}

}  // namespace fsg
