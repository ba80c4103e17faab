// Acceptance runner: one PASS/FAIL line per criterion. Exit status is 0 only
// when every selected criterion passes.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "cli_harness.hpp"
#include "dkern/characterizations.hpp"
#include "dkern/enumeration.hpp"
#include "dkern/errors.hpp"
#include "dkern/io.hpp"
#include "dkern/kernels.hpp"
#include "dkern/suites.hpp"

using namespace dkern;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

// Time limits, in seconds.
constexpr double kCatalogLimit = 10;
constexpr double kFastVsOracleLimit = 60;
constexpr double kFastVsOracleExhaustiveLimit = 30 * 60;
constexpr double kLemmaCycleLimit = 5;
constexpr double kLemmaCirculantLimit = 1;
constexpr double kVhLimit = 30;
constexpr double kSpgtLimit = 60;
constexpr double kAsymmetricCkiLimit = 5 * 60;
constexpr double kLargeCirculantLimit = 5;
constexpr double kCliCorpusLimit = 30;

constexpr int kLargeCirculantOrder = 2000;
constexpr int kRandomCorpusSize = 20000;

Outcome from_suite(const SuiteReport& r) {
  Outcome o{r.passed(), std::to_string(r.instances) + " instances, " + std::to_string(r.violations.size()) +
                            " violations"};
  if (!r.violations.empty()) {
    const auto& v = r.violations.front();
    o.detail += "; first: " + v.context + " expected " + v.expected + " got " + v.got;
  }
  return o;
}

Outcome catalog() {
  Outcome o;
  int checked = 0;
  const auto expect = [&](const std::string& name, const Digraph& d, KernelStatus::Verdict want) {
    ++checked;
    const auto got = kernel_status(d).verdict;
    if (got != want) {
      o.ok = false;
      o.detail += name + ": " + std::string(verdict_name(got)) + "; ";
    }
  };
  for (int n : {3, 5, 7, 9, 11})
    expect("C" + std::to_string(n), directed_cycle(n), KernelStatus::Verdict::CriticalKernelImperfect);
  for (int n : {4, 6, 8, 10}) expect("C" + std::to_string(n), directed_cycle(n), KernelStatus::Verdict::KernelPerfect);
  expect("C7(1,2)", c7_12(), KernelStatus::Verdict::CriticalKernelImperfect);
  for (int n = 4; n <= 8; ++n)
    expect("FC" + std::to_string(n), full_circulant(n), KernelStatus::Verdict::CriticalKernelImperfect);
  o.detail += std::to_string(checked) + " digraphs";
  return o;
}

Outcome lemma_circulant_checks() {
  Outcome o;
  if (lemma_circulant(3) != construct_circulant(CirculantSpec(7, {2, 4}))) {
    o.ok = false;
    o.detail += "LemmaCirculant(3) != C7({2,4}); ";
  }
  if (!is_isomorphic(lemma_circulant(3), c7_12())) {
    o.ok = false;
    o.detail += "not isomorphic to C7(1,2); ";
  }
  const auto view = std::get<Graph>(derive_view(c7_12(), View::ComplementUnderlying));
  bool chordless_cycle = view.order() == 7 && view.edge_count() == 7;
  for (int v = 0; v < view.order() && chordless_cycle; ++v) chordless_cycle = view.degree(v) == 2;
  // 2-regular on 7 vertices is a single cycle exactly when connected.
  if (chordless_cycle) {
    int seen = 1, prev = -1, cur = 0;
    for (;;) {
      int next = -1;
      for (int w = 0; w < 7; ++w)
        if (view.edge(cur, w) && w != prev) next = w;
      if (next == 0) break;
      prev = cur;
      cur = next;
      ++seen;
    }
    chordless_cycle = seen == 7;
  }
  if (!chordless_cycle) {
    o.ok = false;
    o.detail += "complement of the underlying graph is not a 7-cycle; ";
  }
  if (o.ok) o.detail = "isomorphism and complement view confirmed";
  return o;
}

Outcome large_circulant() {
  const auto d = full_circulant(kLargeCirculantOrder);
  Outcome o;
  for (CkiFamily f : {CkiFamily::Semicomplete, CkiFamily::LocallySemicomplete}) {
    const auto dec = decide_cki_fast(d, f);
    if (!dec.cki || dec.shape != CkiShape::FullCirculant) {
      o.ok = false;
      o.detail += std::string(cki_family_name(f)) + ": " + dec.reason + "; ";
    }
  }
  if (o.ok) o.detail = "FullCirculant(" + std::to_string(kLargeCirculantOrder) + ") recognized as CKI";
  return o;
}

// The CLI corpus: all digraphs on at most 4 vertices, all asymmetric digraphs
// on 5, all tournaments on 6 and a seeded sample of general 6-vertex digraphs.
std::vector<Digraph> cli_corpus() {
  std::vector<Digraph> corpus;
  for (int n = 0; n <= 4; ++n)
    for (auto& d : enumerate_digraphs(n)) corpus.push_back(std::move(d));
  for (auto& d : enumerate_digraphs(5, {std::nullopt, true})) corpus.push_back(std::move(d));
  for (auto& d : enumerate_digraphs(6, {Family::Tournament, false})) corpus.push_back(std::move(d));
  for (int i = 0; i < kRandomCorpusSize; ++i)
    corpus.push_back(random_digraph(6, kUniformPairStates, static_cast<std::uint64_t>(i)));
  return corpus;
}

Outcome cli_contract() {
  const auto corpus = cli_corpus();
  Outcome o;
  std::size_t failures = 0;
  const auto fail = [&](std::size_t i, const std::string& what) {
    if (failures++ < 3) o.detail += "#" + std::to_string(i) + " " + what + "; ";
    o.ok = false;
  };

  // Commands are rotated through the corpus; each runs twice on stdin and
  // must agree byte for byte.
  const std::vector<std::vector<std::string>> commands{
      {"classify", "-", "--format", "report-json"},
      {"kernel", "-", "--all", "--format", "report-json"},
      {"status", "-", "--format", "report-json"},
      {"perfect", "-", "--format", "report-json"},
      {"vh-cycle", "-", "--start", "0", "--format", "report-json"},
      {"cki", "-", "--family", "", "--format", "report-json"},
      {"kp", "-", "--family", "", "--format", "report-json"},
  };
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& d = corpus[i];
    const auto text = render_edge_list(d);
    if (parse_digraph(text).digraph != d) fail(i, "edge-list round trip");

    auto args = commands[i % commands.size()];
    int want = kExitOk;
    if (args[2] == "--family") {
      const auto f = kAllCkiFamilies[(i / commands.size()) % kAllCkiFamilies.size()];
      args[3] = std::string(cki_family_name(f));
      if (!satisfies_family(d, f)) want = kExitUsage;
    }
    if (args[0] == "vh-cycle" && d.order() == 0) want = kExitUsage;
    const auto a = clitest::run(args, text);
    const auto b = clitest::run(args, text);
    if (a.code != want) fail(i, args[0] + " exit " + std::to_string(a.code) + " (want " + std::to_string(want) + ")");
    if (a.out != b.out || a.code != b.code) fail(i, args[0] + " not deterministic");
    if (want == kExitOk && !a.err.empty()) fail(i, args[0] + " wrote diagnostics");
    if (want != kExitOk && !a.out.empty()) fail(i, args[0] + " wrote to stdout on error");
  }

  // gen output parses back and is stable.
  for (int n = 0; n <= 6; ++n)
    for (int seed = 0; seed < 20; ++seed) {
      const std::vector<std::string> args{"gen", "--random", std::to_string(n) + "," + std::to_string(seed)};
      const auto a = clitest::run(args);
      if (a.code != kExitOk || a.out != clitest::run(args).out ||
          parse_digraph(a.out).digraph != random_digraph(n, kUniformPairStates, static_cast<std::uint64_t>(seed)))
        fail(static_cast<std::size_t>(n), "gen --random");
    }

  // Exit-code contract on the documented examples.
  clitest::Scratch scratch("acceptance");
  const auto circ7 = scratch.write("circ7.txt", "circulant 7 : 1,2\n");
  const auto c6 = scratch.write("c6.txt", render_edge_list(directed_cycle(6)));
  const struct {
    std::vector<std::string> args;
    int code;
    std::string out_prefix;
  } examples[] = {
      {{"cki", circ7, "--family", "locally-in-semicomplete"}, kExitOk, "cki "},
      {{"status", c6}, kExitOk, "kernel-perfect"},
      {{"verify", "--suite", "lemma-cycle", "--params", "k=4..7"}, kExitOk, "suite lemma-cycle: pass"},
      {{"cki", circ7, "--family", "no-such-family"}, kExitUsage, ""},
      {{"status", scratch.write("bad.txt", "digraph 2\n0 x\n")}, kExitUsage, ""},
      {{"verify", "--suite", "vh-existence"}, kExitViolation, "suite vh-existence: FAIL"},
  };
  for (std::size_t i = 0; i < std::size(examples); ++i) {
    const auto r = clitest::run(examples[i].args);
    if (r.code != examples[i].code || r.out.rfind(examples[i].out_prefix, 0) != 0)
      fail(i, "example '" + examples[i].args[0] + "' exit " + std::to_string(r.code));
  }
  o.detail += std::to_string(corpus.size()) + " corpus digraphs, " + std::to_string(failures) + " failures";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  bool exhaustive = false;
  app.add_option("--only", only, "run a single criterion (1-9)");
  app.add_flag("--exhaustive", exhaustive, "criterion 2 over every 5-vertex digraph");
  CLI11_PARSE(app, argc, argv);

  SuiteParams fast_vs_oracle;  // general n <= 4, asymmetric n = 5
  if (exhaustive) fast_vs_oracle.general_n = 5;

  const std::vector<Criterion> criteria{
      {1, "oracle status on the CKI catalog", kCatalogLimit, catalog},
      {2, exhaustive ? "fast CKI decisions agree with the oracle (all 5-vertex digraphs)"
                     : "fast CKI decisions agree with the oracle",
       exhaustive ? kFastVsOracleExhaustiveLimit : kFastVsOracleLimit,
       [&] { return from_suite(run_suite(SuiteKind::FastVsOracle, fast_vs_oracle)); }},
      {3, "locally semicomplete biorientations of cycles k=4..9", kLemmaCycleLimit,
       [] { return from_suite(run_suite(SuiteKind::LemmaCycle, parse_suite_params("k=4..9"))); }},
      {4, "LemmaCirculant(3) and C7(1,2)", kLemmaCirculantLimit, lemma_circulant_checks},
      {5, "VH cycles in C7(1,2) and FullCirculant(5..8)", kVhLimit,
       [] { return from_suite(run_suite(SuiteKind::VhExistence)); }},
      {6, "perfect iff every sink orientation is kernel-perfect", kSpgtLimit,
       [] { return from_suite(run_suite(SuiteKind::SpgtOrientations)); }},
      {7, "asymmetric CKI digraphs on at most 5 vertices", kAsymmetricCkiLimit,
       [] { return from_suite(run_suite(SuiteKind::T1Asymmetric, parse_suite_params("asym-n=5"))); }},
      {8, "fast CKI decision on FullCirculant(2000)", kLargeCirculantLimit, large_circulant},
      {9, "CLI contract over the generated corpus", kCliCorpusLimit, cli_contract},
  };

  bool all_ok = true;
  bool ran = false;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    ran = true;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = elapsed < c.limit_seconds;
    const bool pass = o.ok && in_time;
    all_ok = all_ok && pass;
    char timing[96];
    std::snprintf(timing, sizeof timing, "%.3f s / limit %.0f s%s", elapsed, c.limit_seconds,
                  in_time ? "" : " EXCEEDED");
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << timing
              << "]  " << o.detail << "\n";
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all_ok ? 0 : 1;
}
