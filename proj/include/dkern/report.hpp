#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dkern/characterizations.hpp"
#include "dkern/families.hpp"
#include "dkern/kernels.hpp"
#include "dkern/perfect.hpp"

namespace dkern {

inline constexpr const char* kReportSchemaVersion = "1";

struct ReportCaps {
  int search = kDefaultSearchCap;
  int status = kDefaultStatusCap;
  int perfect = kDefaultPerfectCap;
};

/// Everything `classify` computes for one digraph. An analysis skipped
/// because the digraph exceeds its cap leaves its field empty and is named
/// in `skipped`.
struct AnalysisReport {
  std::string name;
  int order = 0;
  std::size_t arcs = 0;
  FamilyReport families;
  std::optional<std::vector<VertexSet>> kernels;
  std::optional<KernelStatus> status;
  std::optional<PerfectnessVerdict> perfectness;
  // Fast CKI decisions for every CKI family whose precondition holds.
  std::map<CkiFamily, CkiDecision> cki;
  std::vector<std::string> skipped;
};

AnalysisReport analyze(const Digraph& d, std::string name = {}, const ReportCaps& caps = {});

std::string render_report_json(const AnalysisReport& r);
std::string render_report_text(const AnalysisReport& r);

}  // namespace dkern
