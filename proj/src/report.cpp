#include "dkern/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "dkern/errors.hpp"

namespace dkern {
namespace {

using nlohmann::json;

json vertices(VertexSet s) { return s.members(); }

std::string join(const std::vector<int>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
  return out;
}

}  // namespace

AnalysisReport analyze(const Digraph& d, std::string name, const ReportCaps& caps) {
  AnalysisReport r;
  r.name = std::move(name);
  r.order = d.order();
  r.arcs = d.arc_count();
  r.families = classify_families(d);

  if (d.order() <= std::min(caps.search, kMaskCap))
    r.kernels = all_kernels(d, caps.search);
  else
    r.skipped.emplace_back("kernels");

  if (d.order() <= std::min(caps.status, kMaxStatusCap))
    r.status = kernel_status(d, caps.status);
  else
    r.skipped.emplace_back("status");

  if (d.order() <= std::min(caps.perfect, kMaskCap))
    r.perfectness = is_perfect(underlying(d), caps.perfect);
  else
    r.skipped.emplace_back("perfectness");

  for (CkiFamily f : kAllCkiFamilies) {
    if (f == CkiFamily::PerfectUnderlying && (!r.perfectness || !r.perfectness->perfect())) continue;
    if (!satisfies_family(d, f)) continue;
    r.cki.emplace(f, decide_cki_fast(d, f));
  }
  return r;
}

std::string render_report_json(const AnalysisReport& r) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["name"] = r.name;
  j["order"] = r.order;
  j["arcs"] = r.arcs;

  json fam = json::object();
  for (const auto& [f, v] : r.families) {
    json e;
    e["member"] = v.member();
    if (v.violation) e["witness"] = {{"kind", violation_kind_name(v.violation->kind)}, {"vertices", v.violation->vertices}};
    fam[std::string(family_name(f))] = e;
  }
  j["families"] = fam;

  if (r.kernels) {
    json ks = json::array();
    for (auto k : *r.kernels) ks.push_back(vertices(k));
    j["kernels"] = ks;
  }
  if (r.status) {
    json s;
    s["verdict"] = verdict_name(r.status->verdict);
    if (r.status->witness) s["witness"] = vertices(*r.status->witness);
    j["status"] = s;
  }
  if (r.perfectness) {
    json p;
    p["verdict"] = perfectness_name(r.perfectness->kind);
    if (!r.perfectness->perfect()) p["witness"] = r.perfectness->cycle;
    j["perfectness"] = p;
  }
  json cki = json::object();
  for (const auto& [f, dec] : r.cki)
    cki[std::string(cki_family_name(f))] = {{"cki", dec.cki}, {"shape", cki_shape_name(dec.shape)}, {"reason", dec.reason}};
  j["cki"] = cki;
  if (!r.skipped.empty()) {
    json s = json::object();
    for (const auto& k : r.skipped) s[k] = "cap";
    j["skipped"] = s;
  }
  return j.dump(2) + "\n";
}

std::string render_report_text(const AnalysisReport& r) {
  std::ostringstream out;
  if (!r.name.empty()) out << "name: " << r.name << "\n";
  out << "order: " << r.order << ", arcs: " << r.arcs << "\n";
  out << "families:\n";
  for (const auto& [f, v] : r.families) {
    out << "  " << family_name(f) << ": ";
    if (v.member())
      out << "yes\n";
    else
      out << "no (" << violation_kind_name(v.violation->kind) << " " << join(v.violation->vertices) << ")\n";
  }
  if (r.kernels) {
    out << "kernels:";
    if (r.kernels->empty()) out << " none";
    for (auto k : *r.kernels) out << " {" << join(k.members()) << "}";
    out << "\n";
  }
  if (r.status) {
    out << "status: " << verdict_name(r.status->verdict);
    if (r.status->witness) out << " (kernel-free set {" << join(r.status->witness->members()) << "})";
    out << "\n";
  }
  if (r.perfectness) {
    out << "underlying graph: " << perfectness_name(r.perfectness->kind);
    if (!r.perfectness->perfect()) out << " (" << join(r.perfectness->cycle) << ")";
    out << "\n";
  }
  if (!r.cki.empty()) {
    out << "cki decisions:\n";
    for (const auto& [f, dec] : r.cki)
      out << "  " << cki_family_name(f) << ": " << (dec.cki ? "cki" : "not-cki") << " (" << dec.reason << ")\n";
  }
  for (const auto& k : r.skipped) out << k << ": skipped (cap)\n";
  return out.str();
}

}  // namespace dkern
