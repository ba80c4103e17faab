#include "dkern/suites.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>

#include "dkern/characterizations.hpp"
#include "dkern/enumeration.hpp"
#include "dkern/errors.hpp"
#include "dkern/io.hpp"
#include "dkern/kernels.hpp"
#include "dkern/perfect.hpp"
#include "dkern/vh_cycle.hpp"

namespace dkern {
namespace {

constexpr std::array<std::string_view, 5> kSuiteNames{
    "lemma-cycle", "fast-vs-oracle", "spgt-orientations", "vh-existence", "t1-asymmetric",
};

using Sink = std::vector<SuiteViolation>;

void report(Sink& out, const Digraph& d, std::string context, std::string expected, std::string got) {
  out.push_back({render_edge_list(d), std::move(context), std::move(expected), std::move(got)});
}

// Concatenated index ranges, so one flat loop can cover several orders.
struct Segments {
  std::vector<std::uint64_t> starts;
  std::uint64_t total = 0;

  void add(std::uint64_t count) {
    starts.push_back(total);
    total += count;
  }
  std::pair<std::size_t, std::uint64_t> locate(std::uint64_t j) const {
    const auto it = std::upper_bound(starts.begin(), starts.end(), j);
    const auto i = static_cast<std::size_t>(it - starts.begin() - 1);
    return {i, j - starts[i]};
  }
};

// Runs check(job, sink) for jobs 0..count-1, across OpenMP threads when
// `parallel` is set. check returns the number of instances it examined.
// Violations are sorted afterwards, so the report does not depend on the
// schedule.
void fan_out(std::uint64_t count, bool parallel, const std::function<std::uint64_t(std::uint64_t, Sink&)>& check,
             SuiteReport& r) {
  std::uint64_t instances = 0;
  Sink all;
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel if (parallel) reduction(+ : instances)
  {
    Sink local;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t j = 0; j < total; ++j) {
      try {
        instances += check(static_cast<std::uint64_t>(j), local);
      } catch (const std::exception& e) {
        local.push_back({"", "job " + std::to_string(j), "no error", std::string("exception: ") + e.what()});
      }
    }
#pragma omp critical(dkern_suite_merge)
    all.insert(all.end(), local.begin(), local.end());
  }
  r.instances += instances;
  r.violations.insert(r.violations.end(), all.begin(), all.end());
  std::sort(r.violations.begin(), r.violations.end());
}

Graph cycle_graph(int k) {
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

// Connected and 2-regular on at least 3 vertices.
bool is_chordless_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  int prev = -1, v = 0, len = 0;
  do {
    int next = 0;
    while (next == prev || next == v || !g.edge(v, next)) ++next;
    prev = v;
    v = next;
    ++len;
  } while (v != 0);
  return len == n;
}

// ---- lemma-cycle ---------------------------------------------------------

constexpr const char* kLemmaBiorientation = "locally semicomplete biorientation of a chordless cycle";
constexpr const char* kLemmaIsomorphism = "isomorphic to C7(1,2)";
constexpr const char* kLemmaComplement = "complement of the underlying graph is a chordless 7-cycle";

void check_lemma_biorientation(const Digraph& d, Sink& out) {
  const bool local = in_family(d, Family::LocallyInSemicomplete).member() ||
                     in_family(d, Family::LocallyOutSemicomplete).member();
  if (!local || !is_chordless_cycle(underlying(d))) return;
  const auto shape = cycle_shape(d);
  if (!shape.is_directed_cycle()) report(out, d, kLemmaBiorientation, "directed cycle", shape.describe());
}

void check_lemma_isomorphism(const Digraph& d, Sink& out) {
  if (!is_isomorphic(d, c7_12())) report(out, d, kLemmaIsomorphism, "an isomorphism", "none");
}

void check_lemma_complement(const Digraph& d, Sink& out) {
  const Graph c = complement(underlying(d));
  if (c.order() != 7 || !is_chordless_cycle(c))
    report(out, d, kLemmaComplement, "chordless 7-cycle", std::to_string(c.edge_count()) + "-edge graph that is not one");
}

SuiteReport lemma_cycle(const SuiteParams& p) {
  SuiteReport r;
  std::vector<Graph> cycles;
  Segments seg;
  for (int k = p.k_min; k <= p.k_max; ++k) {
    cycles.push_back(cycle_graph(k));
    seg.add(biorientation_count(cycles.back()));
  }
  fan_out(seg.total, p.parallel, [&](std::uint64_t j, Sink& out) -> std::uint64_t {
    const auto [i, index] = seg.locate(j);
    check_lemma_biorientation(biorientation_from_state(cycles[i], index), out);
    return 1;
  }, r);

  Sink extra;
  const Digraph lemma = lemma_circulant(3);
  check_lemma_isomorphism(lemma, extra);
  check_lemma_complement(lemma, extra);
  check_lemma_complement(c7_12(), extra);
  r.instances += 3;
  r.violations.insert(r.violations.end(), extra.begin(), extra.end());
  std::sort(r.violations.begin(), r.violations.end());
  return r;
}

// ---- fast-vs-oracle ------------------------------------------------------

std::string cki_word(bool cki) { return cki ? "cki" : "not-cki"; }
std::string kp_word(bool kp) { return kp ? "kp" : "not-kp"; }

// Checks one family against an already computed oracle verdict.
void compare_family(const Digraph& d, CkiFamily f, const KernelStatus& status, Sink& out) {
  const std::string name(cki_family_name(f));
  const auto cki = decide_cki_fast(d, f);
  if (cki.cki != status.critical())
    report(out, d, "cki " + name, cki_word(status.critical()), cki_word(cki.cki) + " (" + cki.reason + ")");
  const auto kp = decide_kp_fast(d, f);
  if (kp.verdict == KpDecision::Verdict::Inconclusive) return;
  const bool fast_kp = kp.verdict == KpDecision::Verdict::Kp;
  if (fast_kp != status.kernel_perfect())
    report(out, d, "kp " + name, kp_word(status.kernel_perfect()), kp_word(fast_kp) + " (" + kp.reason + ")");
  if (kp.witness && find_kernel(induced(d, *kp.witness)))
    report(out, d, "kp-witness " + name, "kernel-free induced subdigraph", "witness has a kernel");
}

std::uint64_t check_fast_vs_oracle(const Digraph& d, Sink& out) {
  const KernelStatus status = kernel_status_serial(d);
  std::uint64_t checked = 0;
  for (CkiFamily f : kAllCkiFamilies) {
    if (!satisfies_family(d, f)) continue;
    compare_family(d, f, status, out);
    ++checked;
  }
  return checked;
}

SuiteReport fast_vs_oracle(const SuiteParams& p) {
  SuiteReport r;
  struct Part {
    int n;
    bool asym;
  };
  std::vector<Part> parts;
  Segments seg;
  for (int n = 1; n <= std::max(p.general_n, p.asym_n); ++n) {
    const bool asym = n > p.general_n;
    parts.push_back({n, asym});
    seg.add(state_count(n, asym));
  }
  fan_out(seg.total, p.parallel, [&](std::uint64_t j, Sink& out) {
    const auto [i, index] = seg.locate(j);
    return check_fast_vs_oracle(digraph_from_state(parts[i].n, index, parts[i].asym), out);
  }, r);
  return r;
}

// ---- spgt-orientations ---------------------------------------------------

constexpr const char* kSpgtContext = "perfect iff every orientation by sinks is kernel-perfect";

Digraph symmetric_digraph(const Graph& g) {
  DigraphBuilder b(g.order());
  for (auto [u, v] : g.edge_list()) b.add_arc(u, v).add_arc(v, u);
  return std::move(b).build();
}

void check_spgt(const Graph& g, Sink& out) {
  const auto perfect = is_perfect(g);
  std::optional<Digraph> bad;
  const std::uint64_t count = biorientation_count(g);
  for (std::uint64_t i = 0; i < count && !bad; ++i) {
    Digraph d = biorientation_from_state(g, i);
    if (is_orientation_by_sinks(d).by_sinks() && !kernel_status_serial(d).kernel_perfect()) bad = std::move(d);
  }
  if (perfect.perfect() && bad)
    report(out, symmetric_digraph(g), kSpgtContext, "every orientation by sinks kernel-perfect",
           "orientation by sinks that is not: " + render_edge_list(*bad));
  if (!perfect.perfect() && !bad)
    report(out, symmetric_digraph(g), kSpgtContext,
           "an orientation by sinks that is not kernel-perfect (graph is " +
               std::string(perfectness_name(perfect.kind)) + ")",
           "all are kernel-perfect");
}

SuiteReport spgt_orientations(const SuiteParams& p) {
  SuiteReport r;
  Segments seg;
  for (int n = 1; n <= 4; ++n) seg.add(graph_count(n));
  const std::uint64_t small = seg.total;
  seg.add(p.exhaustive ? graph_count(5) : static_cast<std::uint64_t>(p.samples));
  fan_out(seg.total, p.parallel, [&](std::uint64_t j, Sink& out) -> std::uint64_t {
    const auto [i, index] = seg.locate(j);
    Graph g;
    if (j < small)
      g = graph_from_state(static_cast<int>(i) + 1, index);
    else if (p.exhaustive)
      g = graph_from_state(5, index);
    else
      g = random_graph(5, 0.5, p.seed + index);
    check_spgt(g, out);
    return 1;
  }, r);
  return r;
}

// ---- vh-existence --------------------------------------------------------

std::string start_context(int u0) { return "start " + std::to_string(u0); }

void check_vh(const Digraph& d, int u0, Sink& out) {
  const auto c = find_vh_cycle(d, u0);
  if (!c) {
    report(out, d, start_context(u0), "VH cycle", "none");
    return;
  }
  if (auto broken = check_vh_cycle(d, *c)) report(out, d, start_context(u0), "VH cycle", "invalid cycle: " + *broken);
}

SuiteReport vh_existence(const SuiteParams& p) {
  SuiteReport r;
  std::vector<Digraph> targets{c7_12()};
  for (int n = 5; n <= 8; ++n) targets.push_back(full_circulant(n));
  std::vector<std::pair<std::size_t, int>> jobs;
  for (std::size_t t = 0; t < targets.size(); ++t)
    for (int u0 = 0; u0 < targets[t].order(); ++u0) jobs.emplace_back(t, u0);
  fan_out(jobs.size(), p.parallel, [&](std::uint64_t j, Sink& out) -> std::uint64_t {
    check_vh(targets[jobs[j].first], jobs[j].second, out);
    return 1;
  }, r);
  return r;
}

// ---- t1-asymmetric -------------------------------------------------------

constexpr const char* kT1QuasiTransitive = "CKI and 3-quasi-transitive";
constexpr const char* kT1OddCycle = "CKI and arc-locally semicomplete or 3-anti-quasi-transitive TT3-free";

void check_t1(const Digraph& d, Sink& out) {
  const bool qt = in_family(d, Family::ThreeQuasiTransitive).member();
  const bool cycle_family = in_family(d, Family::ArcLocallyInSemicomplete).member() ||
                            in_family(d, Family::ArcLocallyOutSemicomplete).member() ||
                            (in_family(d, Family::ThreeAntiQuasiTransitive).member() &&
                             in_family(d, Family::TT3Free).member());
  if (!qt && !cycle_family) return;
  if (!kernel_status_serial(d).critical()) return;
  if (qt && !is_isomorphic(d, directed_cycle(3))) report(out, d, kT1QuasiTransitive, "isomorphic to C3", "not isomorphic");
  if (cycle_family) {
    const auto shape = cycle_shape(d);
    if (!shape.is_odd_cycle()) report(out, d, kT1OddCycle, "directed odd cycle", shape.describe());
  }
}

SuiteReport t1_asymmetric(const SuiteParams& p) {
  SuiteReport r;
  Segments seg;
  for (int n = 1; n <= p.asym_n; ++n) seg.add(state_count(n, true));
  fan_out(seg.total, p.parallel, [&](std::uint64_t j, Sink& out) -> std::uint64_t {
    const auto [i, index] = seg.locate(j);
    check_t1(digraph_from_state(static_cast<int>(i) + 1, index, true), out);
    return 1;
  }, r);
  return r;
}

// ---- parameters ----------------------------------------------------------

int to_int(std::string_view key, std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0 || v > 1'000'000'000)
    throw InvalidArgument("suite parameter " + std::string(key) + ": bad value '" + std::string(s) + "'");
  return static_cast<int>(v);
}

bool to_flag(std::string_view key, std::string_view s) {
  if (s == "1" || s == "true") return true;
  if (s == "0" || s == "false") return false;
  throw InvalidArgument("suite parameter " + std::string(key) + ": expected 0 or 1");
}

void validate(const SuiteParams& p) {
  if (p.k_min < 4 || p.k_max > kBiorientationEdgeCap || p.k_min > p.k_max)
    throw InvalidArgument("suite parameter k must be a range within 4.." + std::to_string(kBiorientationEdgeCap));
  if (p.general_n > kExhaustiveCap || p.asym_n > kExhaustiveCap)
    throw CapExceeded("suite enumeration", static_cast<std::size_t>(std::max(p.general_n, p.asym_n)), kExhaustiveCap);
}

}  // namespace

std::string_view suite_name(SuiteKind s) { return kSuiteNames[static_cast<std::size_t>(s)]; }

std::optional<SuiteKind> parse_suite(std::string_view name) {
  for (SuiteKind s : kAllSuites)
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

SuiteParams parse_suite_params(std::string_view text, SuiteParams p) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find_first_of(", ", pos);
    const auto item = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument("suite parameter '" + std::string(item) + "' lacks '='");
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (key == "k") {
      const auto dots = value.find("..");
      if (dots == std::string_view::npos) {
        p.k_min = p.k_max = to_int(key, value);
      } else {
        p.k_min = to_int(key, value.substr(0, dots));
        p.k_max = to_int(key, value.substr(dots + 2));
      }
    } else if (key == "n") {
      p.general_n = to_int(key, value);
    } else if (key == "asym-n") {
      p.asym_n = to_int(key, value);
    } else if (key == "samples") {
      p.samples = to_int(key, value);
    } else if (key == "exhaustive") {
      p.exhaustive = to_flag(key, value);
    } else if (key == "seed") {
      p.seed = static_cast<std::uint64_t>(to_int(key, value));
    } else if (key == "parallel") {
      p.parallel = to_flag(key, value);
    } else {
      throw InvalidArgument("unknown suite parameter '" + std::string(key) + "'");
    }
  }
  validate(p);
  return p;
}

SuiteReport run_suite(SuiteKind suite, const SuiteParams& params) {
  validate(params);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r;
  switch (suite) {
    case SuiteKind::LemmaCycle: r = lemma_cycle(params); break;
    case SuiteKind::FastVsOracle: r = fast_vs_oracle(params); break;
    case SuiteKind::SpgtOrientations: r = spgt_orientations(params); break;
    case SuiteKind::VhExistence: r = vh_existence(params); break;
    case SuiteKind::T1Asymmetric: r = t1_asymmetric(params); break;
  }
  r.name = std::string(suite_name(suite));
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

bool replay_violation(SuiteKind suite, const SuiteViolation& v) {
  const Digraph d = parse_digraph(v.digraph).digraph;
  Sink out;
  switch (suite) {
    case SuiteKind::LemmaCycle:
      if (v.context == kLemmaBiorientation) check_lemma_biorientation(d, out);
      if (v.context == kLemmaIsomorphism) check_lemma_isomorphism(d, out);
      if (v.context == kLemmaComplement) check_lemma_complement(d, out);
      break;
    case SuiteKind::FastVsOracle: {
      const KernelStatus status = kernel_status_serial(d);
      for (CkiFamily f : kAllCkiFamilies)
        if (satisfies_family(d, f)) compare_family(d, f, status, out);
      break;
    }
    case SuiteKind::SpgtOrientations: check_spgt(underlying(d), out); break;
    case SuiteKind::VhExistence: {
      const std::string prefix = "start ";
      if (v.context.rfind(prefix, 0) != 0) return false;
      check_vh(d, std::stoi(v.context.substr(prefix.size())), out);
      break;
    }
    case SuiteKind::T1Asymmetric: check_t1(d, out); break;
  }
  return std::any_of(out.begin(), out.end(), [&](const SuiteViolation& w) { return w.context == v.context; });
}

}  // namespace dkern
