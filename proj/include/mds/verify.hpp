#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mds/canonical.hpp"
#include "mds/count.hpp"
#include "mds/formulas.hpp"

namespace mds {

/// Outcome of one check. Conjecture results never count as verified theorems.
enum class Verdict { TheoremVerified, ConjectureConsistent, Observed, Counterexample, Violation };

const char* to_string(Verdict v);
bool is_failure(Verdict v);

struct Population {
  enum class Kind { Trees, Forests, Instances };
  Kind kind = Kind::Trees;
  int min_component = 1;

  static Population trees() { return {Kind::Trees, 1}; }
  static Population forests(int min_component = 1) { return {Kind::Forests, min_component}; }
  static Population instances() { return {Kind::Instances, 1}; }

  /// "trees", "forests(min=3)" or "instances".
  std::string str() const;
};

struct BoundCheck {
  std::string name;
  std::string expected;
  std::string observed;
  Verdict verdict;
};

struct VerificationReport {
  std::string target;
  int n = 0;
  Population population;
  /// Isomorphism classes scanned, or instances checked for summaries.
  std::uint64_t instances = 0;
  std::optional<Count> max_phi;
  std::vector<CanonicalForestCode> argmax_codes;
  std::optional<Count> second_max_phi;
  std::vector<CanonicalForestCode> second_argmax_codes;
  std::vector<BoundCheck> checks;
  Verdict verdict = Verdict::TheoremVerified;
  /// Wall time; kept out of CSV/JSON so reports stay byte-reproducible.
  std::chrono::nanoseconds elapsed{};
};

struct VerifyOptions {
  /// 0 = one worker per hardware thread.
  unsigned workers = 0;
};

// Order limits for the exhaustive scans.
inline constexpr int kMaxVerifyForestOrder = 14;
inline constexpr int kMaxVerifyTreeOrder = 18;
inline constexpr int kMaxLemmaOrder = 12;
/// Orders at or below this get a 1% brute-force recount of the tree DP.
inline constexpr int kCrossCheckMaxOrder = 12;

/// Forest maximum equals f1(n) with the unique extremal forest, n = 3..n_max.
std::vector<VerificationReport> verify_theorem1(int n_max, const VerifyOptions& options = {});

/// Every tree satisfies Φ(T) <= t(n), with equality exactly at T*_n, n = 4..n_max.
std::vector<VerificationReport> verify_theorem2_trees(int n_max, const VerifyOptions& options = {});

/// The largest forest count below f1(n) equals f2(n), n = 4..n_max, with the
/// extremal forests checked from n = 7.
std::vector<VerificationReport> verify_f2(int n_max, const VerifyOptions& options = {});

/// Tree maxima at orders 7, 8, 9 are attained uniquely by T*_7, T*_8, T*_9.
std::vector<VerificationReport> verify_lemma4(const VerifyOptions& options = {});

/// Leaf-moving and reattaching transformations never decrease Φ, and
/// increase it strictly under their side conditions; also checks the
/// leaf-deletion identity. Covers all trees of order <= n_max.
VerificationReport verify_lemma_monotonicity(int n_max);

struct Claim1Config {
  int k_max = 3;
  int inner_min_order = 4;
  int inner_max_order = 7;
};

/// Decomposition identity for a tree built from a cherry-topped path
/// u1,u2 - v - y - z, k cherries on y and an inner tree hanging from z.
VerificationReport verify_claim1_identity(const Claim1Config& config = {});

struct PositivityGrid {
  /// p runs over {1, 4/3, ..., p_max_thirds / 3}; p >= 5/3 when k = 1.
  int p_max_thirds = 60;
  int k_max = 20;
};

VerificationReport verify_claim1_positivity(const PositivityGrid& grid = {});

/// Tree maxima against the conjectured values and trees, n = 7..n_max.
std::vector<VerificationReport> check_conjecture(int n_max, const VerifyOptions& options = {});

/// Everything above with n_max clamped to each target's own limit.
std::vector<VerificationReport> verify_all(int n_max, const VerifyOptions& options = {});

/// True when any report ends in Violation or Counterexample.
bool any_failure(const std::vector<VerificationReport>& reports);

struct ScanRow {
  int n = 0;
  std::uint64_t classes = 0;
  Count max_phi = 0;
  std::optional<Count> second_max_phi;
  std::optional<BoundValue> t, f1, f2, conjecture;
  std::vector<CanonicalForestCode> argmax_codes;
};

/// One row per order: trees from n = 4, forests from n = max(3, min_component).
std::vector<ScanRow> scan_max_phi(int n_max, const Population& population, const VerifyOptions& options = {});

/// Claim configuration used by the identity check: returns nullopt when
/// u1 - v - y - z does not start a longest path of the assembled tree.
struct Claim1Configuration {
  Graph tree;        // T
  Graph without_q;   // T' = T minus the k cherries on y
  Graph inner;       // T''
  Graph inner_cut;   // T'' - z
  int k = 0;
  int y = 0;
  std::vector<int> cherry_centers;  // w_1..w_k in T
};
std::optional<Claim1Configuration> build_claim1_configuration(const Graph& inner, int z, int k);

}  // namespace mds
