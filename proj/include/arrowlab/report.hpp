#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arrowlab/arrowing.hpp"
#include "arrowlab/fo.hpp"
#include "arrowlab/gadget.hpp"
#include "arrowlab/graph.hpp"
#include "arrowlab/hanf.hpp"
#include "arrowlab/witness.hpp"

namespace arrowlab {

enum class ReportFormat { kText, kStructured };

// A command result with two renderings. Text is a few terse lines for people;
// structured output is `arrowlab-report v1`, then `command: <name>`, then
// `key: value` lines in insertion order. Keys may repeat (embedded graphs and
// table rows use one line per item).
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Report& field(std::string key, std::string value);
  Report& line(std::string text);
  // Both renderings: structured `key: value`, text `key value`.
  Report& both(std::string key, std::string value);
  // Structured only: one `key: ...` line per line of the text graph format.
  Report& graph(const std::string& key, const Graph& g);
  Report& marked_graph(const std::string& key, const MarkedGraph& g);

  std::string render(ReportFormat format) const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<std::string> lines_;
};

std::string yes_no(bool value);

void add_census(Report& report, const std::string& key, const TypeCensus& census);
void add_hanf_certificate(Report& report, const HanfCertificate& cert);
void add_model_comparison(Report& report, const ModelComparison& comparison);
void add_gadget_verdict(Report& report, const GadgetVerdict& verdict);
void add_witness_certificate(Report& report, const WitnessCertificate& cert);

}  // namespace arrowlab
