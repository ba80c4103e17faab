#include "dkern/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dkern/characterizations.hpp"
#include "dkern/enumeration.hpp"
#include "dkern/errors.hpp"
#include "dkern/io.hpp"
#include "dkern/perfect.hpp"
#include "dkern/report.hpp"
#include "dkern/suites.hpp"
#include "dkern/vh_cycle.hpp"

namespace dkern {
namespace {

using nlohmann::json;

enum class Format { ReportText, ReportJson, EdgeList, Dot };

// Raised for bad invocations that CLI11 itself cannot detect.
struct UsageError : Error {
  using Error::Error;
};

std::optional<Format> parse_format(const std::string& s) {
  if (s == "report-text") return Format::ReportText;
  if (s == "report-json") return Format::ReportJson;
  if (s == "edge-list") return Format::EdgeList;
  if (s == "dot") return Format::Dot;
  return std::nullopt;
}

std::string join(const std::vector<int>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
  return out;
}

std::string valid_tags(auto const& all, auto name) {
  std::string out;
  for (auto f : all) out += (out.empty() ? "" : ", ") + std::string(name(f));
  return out;
}

json envelope(const char* command) { return {{"schema_version", kReportSchemaVersion}, {"command", command}}; }

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err, const CliConfig& config)
      : in_(in), out_(out), err_(err), config_(config) {}

  int run(const std::vector<std::string>& args);

 private:
  DigraphDocument load(const std::string& path) {
    std::string text;
    if (path == "-") {
      std::ostringstream s;
      s << in_.rdbuf();
      text = s.str();
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw UsageError("cannot read " + path);
      std::ostringstream s;
      s << f.rdbuf();
      text = s.str();
    }
    try {
      return parse_digraph(text, path, kLargeCap);
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what(), e.line(), e.column());
    }
  }

  Format report_format() const {
    if (format_ == Format::EdgeList || format_ == Format::Dot)
      throw UsageError("this command supports --format report-text or report-json");
    return format_;
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  int classify();
  int kernel();
  int status();
  int cki();
  int kp();
  int vh_cycle();
  int iso();
  int gen();
  int perfect();
  int verify();

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  CliConfig config_;

  Format format_ = Format::ReportText;
  bool format_given_ = false;
  std::uint64_t seed_ = 1;
  bool seed_given_ = false;

  std::string file_, file2_;
  bool all_ = false;
  int cap_ = -1;
  std::string family_;
  int start_ = 0;
  int max_length_ = -1;
  long budget_ = kDefaultKpBudget;
  std::string circulant_, random_;
  int cycle_ = -1;
  std::string suite_, params_;
};

int Session::classify() {
  const auto doc = load(file_);
  ReportCaps caps;
  caps.status = cap_ >= 0 ? cap_ : config_.status_cap;
  const auto report = analyze(doc.digraph, doc.name, caps);
  out_ << (report_format() == Format::ReportJson ? render_report_json(report) : render_report_text(report));
  return kExitOk;
}

int Session::kernel() {
  const auto doc = load(file_);
  const int cap = cap_ >= 0 ? cap_ : kDefaultSearchCap;
  const Format f = report_format();
  json j = envelope("kernel");
  if (all_) {
    const auto ks = all_kernels(doc.digraph, cap);
    json arr = json::array();
    for (auto k : ks) arr.push_back(k.members());
    j["kernels"] = arr;
    if (f == Format::ReportJson) {
      emit(j);
    } else {
      out_ << "kernels:";
      if (ks.empty()) out_ << " none";
      for (auto k : ks) out_ << " {" << join(k.members()) << "}";
      out_ << "\n";
    }
    return kExitOk;
  }
  const auto k = find_kernel(doc.digraph, cap);
  j["has_kernel"] = k.has_value();
  if (k) j["kernel"] = k->members();
  if (f == Format::ReportJson)
    emit(j);
  else
    out_ << (k ? "kernel: {" + join(k->members()) + "}" : std::string("no kernel")) << "\n";
  return kExitOk;
}

int Session::status() {
  const auto doc = load(file_);
  const auto s = kernel_status(doc.digraph, cap_ >= 0 ? cap_ : config_.status_cap);
  if (report_format() == Format::ReportJson) {
    json j = envelope("status");
    j["verdict"] = verdict_name(s.verdict);
    if (s.witness) j["witness"] = s.witness->members();
    emit(j);
  } else {
    out_ << verdict_name(s.verdict);
    if (s.witness) out_ << " (kernel-free set {" << join(s.witness->members()) << "})";
    out_ << "\n";
  }
  return kExitOk;
}

CkiFamily family_or_throw(const std::string& tag) {
  if (auto f = parse_cki_family(tag)) return *f;
  throw UsageError("unknown family '" + tag + "'; valid tags: " + valid_tags(kAllCkiFamilies, cki_family_name));
}

int Session::cki() {
  const CkiFamily fam = family_or_throw(family_);
  const auto doc = load(file_);
  const auto d = decide_cki_fast(doc.digraph, fam);
  if (report_format() == Format::ReportJson) {
    json j = envelope("cki");
    j["family"] = cki_family_name(fam);
    j["verdict"] = d.cki ? "cki" : "not-cki";
    j["shape"] = cki_shape_name(d.shape);
    j["reason"] = d.reason;
    emit(j);
  } else {
    out_ << (d.cki ? "cki" : "not-cki") << " (" << d.reason << ")\n";
  }
  return kExitOk;
}

int Session::kp() {
  const CkiFamily fam = family_or_throw(family_);
  const auto doc = load(file_);
  const auto d = decide_kp_fast(doc.digraph, fam, budget_);
  if (report_format() == Format::ReportJson) {
    json j = envelope("kp");
    j["family"] = cki_family_name(fam);
    j["verdict"] = kp_verdict_name(d.verdict);
    if (d.witness) {
      j["witness"] = d.witness->members();
      j["shape"] = cki_shape_name(d.shape);
    }
    j["reason"] = d.reason;
    emit(j);
  } else {
    out_ << kp_verdict_name(d.verdict);
    if (d.witness) out_ << " (witness {" << join(d.witness->members()) << "})";
    out_ << " " << d.reason << "\n";
  }
  return kExitOk;
}

int Session::vh_cycle() {
  const auto doc = load(file_);
  const auto c = find_vh_cycle(doc.digraph, start_, max_length_);
  if (report_format() == Format::ReportJson) {
    json j = envelope("vh-cycle");
    j["start"] = start_;
    j["found"] = c.has_value();
    if (c) {
      j["cycle"] = c->vertices;
      json diag = json::array();
      for (auto [u, v] : c->diagonals) diag.push_back({u, v});
      j["diagonals"] = diag;
    }
    emit(j);
  } else if (c) {
    out_ << "cycle: " << join(c->vertices) << "\ndiagonals:";
    for (auto [u, v] : c->diagonals) out_ << " " << u << "->" << v;
    out_ << "\n";
  } else {
    out_ << "no VH cycle through " << start_ << "\n";
  }
  return kExitOk;
}

int Session::iso() {
  const auto a = load(file_);
  const auto b = load(file2_);
  const auto f = is_isomorphic(a.digraph, b.digraph, cap_ >= 0 ? cap_ : kDefaultIsoCap);
  if (report_format() == Format::ReportJson) {
    json j = envelope("iso");
    j["isomorphic"] = f.has_value();
    if (f) j["mapping"] = *f;
    emit(j);
  } else {
    out_ << (f ? "isomorphic: " + join(*f) : std::string("not isomorphic")) << "\n";
  }
  return kExitOk;
}

int parse_count(const std::string& s, const char* what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError(std::string("bad ") + what + " '" + s + "'");
  return v;
}

int Session::gen() {
  const int chosen = !circulant_.empty() + (cycle_ >= 0) + !random_.empty();
  if (chosen != 1) throw UsageError("gen needs exactly one of --circulant, --cycle, --random");
  Digraph d;
  if (!circulant_.empty()) {
    const auto colon = circulant_.find(':');
    if (colon == std::string::npos) throw UsageError("--circulant expects m:j1,j2,...");
    try {
      d = parse_digraph("circulant " + circulant_.substr(0, colon) + " : " + circulant_.substr(colon + 1), {}, kLargeCap)
              .digraph;
    } catch (const ParseError& e) {
      throw UsageError(std::string("--circulant: ") + e.what());
    }
  } else if (cycle_ >= 0) {
    d = directed_cycle(cycle_);
  } else {
    const auto comma = random_.find(',');
    if (comma == std::string::npos) throw UsageError("--random expects n,seed");
    const int n = parse_count(random_.substr(0, comma), "order");
    const int seed = parse_count(random_.substr(comma + 1), "seed");
    d = random_digraph(n, kUniformPairStates, static_cast<std::uint64_t>(seed));
  }
  if (format_given_ && format_ != Format::EdgeList && format_ != Format::Dot)
    throw UsageError("gen supports --format edge-list or dot");
  out_ << (format_ == Format::Dot ? render_dot(d) : render_edge_list(d));
  return kExitOk;
}

int Session::perfect() {
  const auto doc = load(file_);
  const auto v = is_perfect(underlying(doc.digraph), cap_ >= 0 ? cap_ : kDefaultPerfectCap);
  if (report_format() == Format::ReportJson) {
    json j = envelope("perfect");
    j["verdict"] = perfectness_name(v.kind);
    if (!v.perfect()) j["witness"] = v.cycle;
    emit(j);
  } else {
    out_ << perfectness_name(v.kind);
    if (!v.perfect()) out_ << " (" << join(v.cycle) << ")";
    out_ << "\n";
  }
  return kExitOk;
}

int Session::verify() {
  const auto suite = parse_suite(suite_);
  if (!suite) throw UsageError("unknown suite '" + suite_ + "'; valid suites: " + valid_tags(kAllSuites, suite_name));
  SuiteParams base;
  if (seed_given_) base.seed = seed_;
  SuiteParams params;
  try {
    params = parse_suite_params(params_, base);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  const auto r = run_suite(*suite, params);
  if (report_format() == Format::ReportJson) {
    json j = envelope("verify");
    j["suite"] = r.name;
    j["passed"] = r.passed();
    j["instances"] = r.instances;
    json vs = json::array();
    for (const auto& v : r.violations)
      vs.push_back({{"digraph", v.digraph}, {"context", v.context}, {"expected", v.expected}, {"got", v.got}});
    j["violations"] = vs;
    emit(j);
  } else {
    out_ << "suite " << r.name << ": " << (r.passed() ? "pass" : "FAIL") << ", " << r.instances << " instances, "
         << r.violations.size() << " violations\n";
    for (const auto& v : r.violations) {
      out_ << "- " << v.context << ": expected " << v.expected << ", got " << v.got << "\n";
      std::istringstream lines(v.digraph);
      for (std::string line; std::getline(lines, line);) out_ << "    " << line << "\n";
    }
  }
  err_ << "suite " << r.name << " finished in " << r.elapsed_seconds << " s\n";
  return r.passed() ? kExitOk : kExitViolation;
}

struct Command {
  const char* name;
  const char* description;
  void (*options)(CLI::App&, Session&);
  int (Session::*handler)();
};

int Session::run(const std::vector<std::string>& args) {
  CLI::App app{"Kernel analysis of digraphs", "dkern"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format;
  app.add_option("--format", format, "report-text (default), report-json, edge-list or dot");
  app.add_option("--seed", seed_, "seed for randomized suite sampling");

  static const Command commands[] = {
      {"classify", "family memberships, kernels, oracle status, CKI decisions",
       [](CLI::App& c, Session& s) {
         c.add_option("file", s.file_)->required();
         c.add_option("--cap", s.cap_, "status cap");
       },
       &Session::classify},
      {"kernel", "find a kernel",
       [](CLI::App& c, Session& s) {
         c.add_option("file", s.file_)->required();
         c.add_flag("--all", s.all_, "list every kernel");
         c.add_option("--cap", s.cap_, "search cap");
       },
       &Session::kernel},
      {"status", "kernel-perfect / critical-kernel-imperfect oracle",
       [](CLI::App& c, Session& s) {
         c.add_option("file", s.file_)->required();
         c.add_option("--cap", s.cap_, "status cap");
       },
       &Session::status},
      {"cki", "fast CKI decision within a family",
       [](CLI::App& c, Session& s) {
         c.add_option("file", s.file_)->required();
         c.add_option("--family", s.family_)->required();
       },
       &Session::cki},
      {"kp", "forbidden induced subdigraph KP decision within a family",
       [](CLI::App& c, Session& s) {
         c.add_option("file", s.file_)->required();
         c.add_option("--family", s.family_)->required();
         c.add_option("--budget", s.budget_, "search node budget");
       },
       &Session::kp},
      {"vh-cycle", "odd cycle through a vertex with restricted diagonals",
       [](CLI::App& c, Session& s) {
         c.add_option("file", s.file_)->required();
         c.add_option("--start", s.start_)->required();
         c.add_option("--max-length", s.max_length_);
       },
       &Session::vh_cycle},
      {"iso", "isomorphism test",
       [](CLI::App& c, Session& s) {
         c.add_option("file1", s.file_)->required();
         c.add_option("file2", s.file2_)->required();
         c.add_option("--cap", s.cap_);
       },
       &Session::iso},
      {"gen", "generate a digraph",
       [](CLI::App& c, Session& s) {
         c.add_option("--circulant", s.circulant_, "m:j1,j2,...");
         c.add_option("--cycle", s.cycle_, "directed cycle order");
         c.add_option("--random", s.random_, "n,seed");
       },
       &Session::gen},
      {"perfect", "perfectness of the underlying graph",
       [](CLI::App& c, Session& s) {
         c.add_option("file", s.file_)->required();
         c.add_option("--cap", s.cap_);
       },
       &Session::perfect},
      {"verify", "run a verification suite",
       [](CLI::App& c, Session& s) {
         c.add_option("--suite", s.suite_)->required();
         c.add_option("--params", s.params_, "k=a..b,n=N,asym-n=N,samples=N,exhaustive=0|1,seed=S,parallel=0|1");
       },
       &Session::verify},
  };

  // Building every subcommand's options dominates the cost of a short
  // invocation, so only the named one is registered. Without a recognizable
  // name all of them are, for help and error messages.
  const Command* chosen = nullptr;
  for (std::size_t i = 0; i < args.size() && !chosen; ++i) {
    if (args[i] == "--format" || args[i] == "--seed") {
      ++i;
      continue;
    }
    for (const auto& c : commands)
      if (args[i] == c.name) chosen = &c;
    if (!chosen) break;
  }
  std::vector<std::pair<const Command*, CLI::App*>> registered;
  for (const auto& c : commands) {
    if (chosen && chosen != &c) continue;
    auto* sub = app.add_subcommand(c.name, c.description);
    c.options(*sub, *this);
    registered.emplace_back(&c, sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out_, err_);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out_, err_);
    return kExitUsage;
  }

  try {
    if (!format.empty()) {
      const auto f = parse_format(format);
      if (!f) throw UsageError("unknown format '" + format + "'; valid: report-text, report-json, edge-list, dot");
      format_ = *f;
      format_given_ = true;
    }
    seed_given_ = app.count("--seed") > 0;
    for (auto [c, sub] : registered)
      if (*sub) return (this->*(c->handler))();
  } catch (const PreconditionError& e) {
    err_ << "dkern: " << e.what();
    if (!e.witness().empty()) err_ << " (witness " << join(e.witness()) << ")";
    err_ << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err_ << "dkern: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

CliConfig config_from_environment() {
  CliConfig c;
  if (const char* v = std::getenv(kStatusCapVariable)) {
    char* end = nullptr;
    const long cap = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && cap >= 0 && cap <= kMaxStatusCap) c.status_cap = static_cast<int>(cap);
  }
  return c;
}

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
                const CliConfig& config) {
  return Session(in, out, err, config).run(args);
}

}  // namespace dkern
