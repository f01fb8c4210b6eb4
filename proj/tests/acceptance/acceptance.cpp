// One line per acceptance criterion: PASS, FAIL or UNATTAINABLE.
//
// UNATTAINABLE marks a criterion whose expected value is contradicted by
// exhaustive computation. The line is only printed after the contradiction
// itself has been re-established by two independent counting engines;
// otherwise the criterion FAILs. Exit status is nonzero on any FAIL.
//
// usage: acceptance <path to mdsets>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "mds/canonical.hpp"
#include "mds/enumeration.hpp"
#include "mds/extremal.hpp"
#include "mds/generators.hpp"
#include "mds/treedp.hpp"
#include "mds/verify.hpp"
#include "support/oracles.hpp"

using namespace mds;

namespace {

enum class Status { Pass, Fail, Unattainable };

struct Outcome {
  Status status = Status::Pass;
  std::string detail;
};

Outcome fail(std::string why) { return {Status::Fail, std::move(why)}; }

struct Criterion {
  int id;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string str(std::optional<Count> v) { return v ? to_string(*v) : "none"; }

const BoundCheck* find_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<Graph> all_trees(int n) {
  std::vector<Graph> out;
  TreeStream s(n);
  while (auto t = s.next()) out.push_back(std::move(*t));
  return out;
}

// Maximum over all trees of order n by both engines; nullopt if they disagree.
std::optional<std::pair<Count, std::set<std::string>>> tree_maximum(int n) {
  Count best = 0;
  std::set<std::string> argmax;
  for (const Graph& t : all_trees(n)) {
    const Count dp = count_mds_tree(t);
    if (dp != count_mds_brute(t)) return std::nullopt;
    if (dp > best) {
      best = dp;
      argmax.clear();
    }
    if (dp == best) argmax.insert(canonical_code(t).str());
  }
  return std::make_pair(best, argmax);
}

Outcome oracle_equivalence() {
  int trees = 0;
  for (int n = 1; n <= 12; ++n)
    for (const Graph& t : all_trees(n)) {
      ++trees;
      if (count_mds_tree(t) != count_mds_brute(t)) return fail("mismatch at " + canonical_code(t).str());
    }
  if (trees != 987) return fail("scanned " + std::to_string(trees) + " trees, expected 987");
  return {Status::Pass, "987 trees, tree DP = brute force"};
}

Outcome lemma4() {
  const auto reports = verify_lemma4({1});
  const std::array<Count, 3> stated = {11, 15, 18};
  std::string detail;
  for (int i = 0; i < 2; ++i) {
    const auto& r = reports[i];
    if (r.verdict != Verdict::TheoremVerified || r.max_phi != stated[i] || r.argmax_codes.size() != 1)
      return fail("n=" + std::to_string(r.n) + " max " + str(r.max_phi));
    detail += "n=" + std::to_string(r.n) + ": " + to_string(stated[i]) + " unique; ";
  }
  // Order 9: the stated maximum 18 is exceeded. Re-derive with both engines.
  const auto nine = tree_maximum(9);
  if (!nine) return fail("engines disagree at n=9");
  const Count t9 = count_mds_tree(build_t_star_9());
  if (nine->first == 18 && nine->second == std::set{canonical_code(build_t_star_9()).str()})
    return fail("order 9 now matches the stated value; the refutation is stale");
  if (reports[2].max_phi != nine->first || reports[2].verdict != Verdict::Violation)
    return fail("verify_lemma4 does not report the order-9 discrepancy");
  if (t9 != 18 || nine->first <= t9) return fail("unexpected order-9 values");
  detail += "n=9: true max " + to_string(nine->first) + " (" + std::to_string(nine->second.size()) +
            " class) exceeds Phi(T*_9)=18; confirmed by DP and brute force";
  return {Status::Unattainable, detail};
}

Outcome theorem2(int n_max, unsigned workers) {
  const auto reports = verify_theorem2_trees(n_max, {workers});
  std::set<int> equality;
  for (const auto& r : reports) {
    if (r.verdict != Verdict::TheoremVerified) return fail("n=" + std::to_string(r.n) + " " + to_string(r.verdict));
    if (r.instances != kFreeTreeCensus[r.n]) return fail("census mismatch at n=" + std::to_string(r.n));
    if (compare(t_of(r.n), *r.max_phi) == Comparison::Equal) {
      if (r.argmax_codes != std::vector{canonical_code(build_t_star(r.n))})
        return fail("equality class at n=" + std::to_string(r.n));
      equality.insert(r.n);
    }
  }
  std::set<int> expected;
  for (int n = 4; n <= n_max; ++n)
    if (n % 3 == 1) expected.insert(n);
  if (equality != expected) return fail("equality orders differ");
  for (const auto& r : reports) {
    if (r.n == 10 && r.max_phi != Count{30}) return fail("max at 10");
    if (r.n == 13 && r.max_phi != Count{85}) return fail("max at 13");
  }
  return {Status::Pass, "n=4.." + std::to_string(n_max) + ", equality only at T*_n for n=1 mod 3; max(10)=30, max(13)=85"};
}

Outcome theorem1() {
  const auto reports = verify_theorem1(13, {1});
  for (const auto& r : reports)
    if (r.verdict != Verdict::TheoremVerified) return fail("n=" + std::to_string(r.n));
  for (auto [n, v] : std::vector<std::pair<int, Count>>{{5, 5}, {6, 9}, {8, 16}})
    for (const auto& r : reports)
      if (r.n == n && r.max_phi != v) return fail("max at " + std::to_string(n));
  return {Status::Pass, "n=3..13 maxima = f1(n), unique extremal forests"};
}

Outcome second_largest() {
  const auto reports = verify_f2(13, {1});
  const std::vector<Count> expected = {3, 4, 6, 11, 15, 20, 33, 45, 64, 99};
  std::string values;
  for (const auto& r : reports) {
    if (r.verdict != Verdict::TheoremVerified) return fail("n=" + std::to_string(r.n));
    if (r.second_max_phi != expected[r.n - 4]) return fail("value at n=" + std::to_string(r.n));
    if (r.n >= 7 && r.n % 3 == 2 && r.second_argmax_codes.size() != 2)
      return fail("two-class tie missing at n=" + std::to_string(r.n));
    values += (values.empty() ? "" : ",") + to_string(*r.second_max_phi);
  }
  return {Status::Pass, "second maxima " + values};
}

Outcome lemmas() {
  const auto r = verify_lemma_monotonicity(12);
  for (const char* name : {"lemma1-weak", "lemma2-weak", "lemma2-strict", "leaf-deletion-identity"}) {
    const auto* c = find_check(r, name);
    if (!c || c->verdict != Verdict::TheoremVerified) return fail(std::string(name) + " has violations");
  }
  const auto* strict = find_check(r, "lemma1-strict");
  if (!strict) return fail("lemma1-strict missing");
  if (strict->verdict == Verdict::TheoremVerified) return {Status::Pass, "no violations in any form"};
  // Weak form holds everywhere, so each strict failure is a tie. Re-check the
  // smallest one with the definition-level oracle.
  const Graph t = make_graph(8, {{3, 2}, {2, 1}, {1, 0}, {0, 4}, {4, 5}, {5, 6}, {0, 7}});
  const Graph moved = make_graph(8, {{3, 1}, {2, 1}, {1, 0}, {0, 4}, {4, 5}, {5, 6}, {0, 7}});
  if (oracle::phi(t) != oracle::phi(moved) || count_mds_tree(t) != count_mds_tree(moved))
    return fail("lemma1-strict failures not confirmed as ties");
  return {Status::Unattainable, "weak forms and lemma 2 strict hold; lemma 1 strict form: " + strict->observed +
                                    " (all ties, weak form intact; smallest at n=8, confirmed by two engines)"};
}

Outcome claim1() {
  const auto r = verify_claim1_identity();
  if (r.verdict != Verdict::TheoremVerified) return fail("identity failed");
  return {Status::Pass, std::to_string(r.instances) + " configurations, k=1..3, inner order 4..7"};
}

Outcome positivity() {
  const auto r = verify_claim1_positivity();
  if (r.verdict != Verdict::TheoremVerified) return fail("non-positive grid point");
  return {Status::Pass, std::to_string(r.instances) + " grid points, h>0 and g>0"};
}

Outcome conjecture() {
  const auto reports = check_conjecture(15, {1});
  std::vector<int> counterexamples;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::TheoremVerified) return fail("conjecture reported as theorem");
    if (r.verdict == Verdict::Counterexample) counterexamples.push_back(r.n);
    if (r.n == 14 && (r.verdict != Verdict::ConjectureConsistent || r.argmax_codes.size() != 2))
      return fail("two-class tie at 14 missing");
  }
  if (counterexamples.empty()) return {Status::Pass, "n=7..15 CONJECTURE-CONSISTENT"};
  if (counterexamples != std::vector{9}) return fail("unexpected counterexample orders");
  const auto nine = tree_maximum(9);
  if (!nine || nine->first != 19 || compare(conjecture_of(9), nine->first) != Comparison::Less)
    return fail("order-9 counterexample not confirmed");
  return {Status::Unattainable,
          "n=7,8,10..15 CONJECTURE-CONSISTENT (tie at 14 present); n=9 COUNTEREXAMPLE: max 19 > 18, confirmed by two engines"};
}

Outcome census() {
  for (int n = 1; n <= 15; ++n) {
    std::uint64_t count = 0;
    std::set<std::string> codes;
    TreeStream s(n);
    while (auto t = s.next()) {
      ++count;
      if (n <= 10) codes.insert(canonical_code(*t).str());
    }
    if (count != kFreeTreeCensus[n]) return fail("census at n=" + std::to_string(n));
    if (n <= 10) {
      std::set<std::string> expected;
      for (const Graph& t : oracle::prufer_classes(n)) expected.insert(canonical_code(t).str());
      if (codes != expected) return fail("Prüfer oracle disagrees at n=" + std::to_string(n));
    }
  }
  return {Status::Pass, "n=1..15 census exact; n<=10 equal to Prüfer classes"};
}

std::string run_command(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Outcome determinism(const std::string& tool) {
  if (tool.empty()) return fail("path to mdsets not given");
  for (const char* format : {"csv", "jsonl"}) {
    std::string reference;
    for (int workers : {1, 8, 1, 8}) {
      int status = 0;
      const std::string out = run_command(tool + " verify all --n-max 12 --format " + format + " --workers " +
                                              std::to_string(workers) + " 2>/dev/null",
                                          status);
      if (status == -1 || out.empty()) return fail("could not run " + tool);
      if (reference.empty()) reference = out;
      if (out != reference) return fail(std::string(format) + " differs with " + std::to_string(workers) + " workers");
    }
  }
  return {Status::Pass, "verify all --n-max 12: CSV and JSONL byte-identical with 1 and 8 workers"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string tool = argc > 1 ? argv[1] : "";
  std::vector<Criterion> criteria = {
      {1, 30, oracle_equivalence},
      {2, 5, lemma4},
      {3, 600,
       [] {
         // desk scale single-threaded, then the stretch to 18 on 8 workers
         Outcome desk = theorem2(15, 1);
         if (desk.status == Status::Fail) return desk;
         Outcome stretch = theorem2(18, 8);
         if (stretch.status == Status::Fail) return stretch;
         return Outcome{Status::Pass, desk.detail + "; stretch n<=18 also verified"};
       }},
      {4, 120, theorem1},
      {5, 120, second_largest},
      {6, 120, lemmas},
      {7, 60, claim1},
      {8, 1, positivity},
      {9, 60, conjecture},
      {10, 30, census},
      {11, 600, [&] { return determinism(tool); }},
  };

  bool ok = true;
  for (const auto& c : criteria) {
    const auto started = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (o.status != Status::Fail && seconds > c.limit_seconds) o = fail("took " + std::to_string(seconds) + " s");
    const char* label = o.status == Status::Pass ? "PASS" : o.status == Status::Fail ? "FAIL" : "UNATTAINABLE";
    ok = ok && o.status != Status::Fail;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << c.id << ": " << label << " - " << o.detail << " [" << seconds << " s]";
    std::cout << line.str() << std::endl;
  }
  return ok ? 0 : 1;
}
