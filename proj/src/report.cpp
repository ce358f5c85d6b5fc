#include "arrowlab/report.hpp"

#include <sstream>

#include "arrowlab/io.hpp"

namespace arrowlab {

namespace {

void split_into(Report& report, const std::string& key, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) report.field(key, line);
}

std::string distance_string(const Distance& d) { return d ? std::to_string(*d) : "inf"; }

}  // namespace

std::string yes_no(bool value) { return value ? "true" : "false"; }

Report& Report::field(std::string key, std::string value) {
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Report& Report::line(std::string text) {
  lines_.push_back(std::move(text));
  return *this;
}

Report& Report::both(std::string key, std::string value) {
  lines_.push_back(key + ' ' + value);
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

Report& Report::graph(const std::string& key, const Graph& g) {
  split_into(*this, key, write_graph(g));
  return *this;
}

Report& Report::marked_graph(const std::string& key, const MarkedGraph& g) {
  split_into(*this, key, write_marked_graph(g));
  return *this;
}

std::string Report::render(ReportFormat format) const {
  std::string out;
  if (format == ReportFormat::kText) {
    for (const std::string& l : lines_) out += l + '\n';
    return out;
  }
  out = "arrowlab-report v1\ncommand: " + command_ + '\n';
  for (const auto& [key, value] : fields_) out += key + ": " + value + '\n';
  return out;
}

void add_census(Report& report, const std::string& key, const TypeCensus& census) {
  for (const auto& [type, count] : census) {
    report.field(key, type.hex() + ' ' + std::to_string(count));
  }
}

void add_hanf_certificate(Report& report, const HanfCertificate& cert) {
  report.field("hanf.rank", std::to_string(cert.rank));
  report.field("hanf.radius", std::to_string(cert.radius));
  report.field("hanf.equivalent", yes_no(cert.equivalent));
  report.field("hanf.conclusion", cert.conclusion);
  for (const std::string& w : cert.warnings) report.field("hanf.warning", w);
  report.field("hanf.types.a", std::to_string(cert.census_a.size()));
  report.field("hanf.types.b", std::to_string(cert.census_b.size()));
  add_census(report, "hanf.census.a", cert.census_a);
  add_census(report, "hanf.census.b", cert.census_b);
}

void add_model_comparison(Report& report, const ModelComparison& comparison) {
  report.field("fo.rank", std::to_string(comparison.rank));
  report.field("fo.sentences", std::to_string(comparison.rows.size()));
  report.field("fo.skipped", std::to_string(comparison.skipped));
  report.field("fo.separating", std::to_string(comparison.separating.size()));
  for (const SentenceComparison& row : comparison.rows) {
    report.field("fo.row", std::to_string(row.rank) + ' ' + yes_no(row.in_a) + ' ' +
                               yes_no(row.in_b) + ' ' + yes_no(row.agree()) + ' ' +
                               row.sentence);
  }
}

void add_gadget_verdict(Report& report, const GadgetVerdict& verdict) {
  report.field("ok", yes_no(verdict.ok));
  if (verdict.violated_condition) {
    report.field("violated_condition", std::to_string(*verdict.violated_condition));
  }
  if (verdict.witness) report.field("witness", coloring_string(*verdict.witness));
}

void add_witness_certificate(Report& report, const WitnessCertificate& cert) {
  report.field("status", status_name(cert.status));
  report.field("rank", std::to_string(cert.rank));
  report.graph("input.G", cert.g);
  report.graph("input.H", cert.h);
  if (cert.sender) report.marked_graph("input.S", *cert.sender);
  if (cert.construction) {
    const FarApartGraph& far = *cert.construction;
    report.field("construction.n", std::to_string(far.n));
    report.field("construction.distance_uv", distance_string(far.distance));
    report.field("construction.minimal", verdict_name(far.minimal));
    report.field("construction.sender_minimality_waived", yes_no(far.sender_minimality_waived));
    report.marked_graph("construction.F", far.graph);
  }
  if (cert.explicit_bijection) {
    report.field("explicit_bijection", yes_no(*cert.explicit_bijection));
  }
  report.field("F1.vertices", std::to_string(cert.f1.vertex_count()));
  report.field("F1.edges", std::to_string(cert.f1.edge_count()));
  report.field("F2.vertices", std::to_string(cert.f2.vertex_count()));
  report.field("F2.edges", std::to_string(cert.f2.edge_count()));
  report.graph("F1", cert.f1);
  report.graph("F2", cert.f2);
  report.field("arrows.F1", verdict_name(cert.arrows_f1));
  report.field("arrows.F2", verdict_name(cert.arrows_f2));
  add_hanf_certificate(report, cert.hanf);
  add_model_comparison(report, cert.fo);
  for (const std::string& w : cert.warnings) report.field("warning", w);

  report.line(std::string("status ") + status_name(cert.status));
  if (cert.construction) {
    report.line("construction n=" + std::to_string(cert.construction->n) +
                " vertices=" + std::to_string(cert.construction->graph.graph().vertex_count()) +
                " d(u,v)=" + distance_string(cert.construction->distance) +
                " minimal=" + verdict_name(cert.construction->minimal));
  }
  report.line("F1 vertices=" + std::to_string(cert.f1.vertex_count()) +
              " edges=" + std::to_string(cert.f1.edge_count()) +
              " arrows=" + verdict_name(cert.arrows_f1));
  report.line("F2 vertices=" + std::to_string(cert.f2.vertex_count()) +
              " edges=" + std::to_string(cert.f2.edge_count()) +
              " arrows=" + verdict_name(cert.arrows_f2));
  report.line("hanf radius=" + std::to_string(cert.hanf.radius) +
              " equivalent=" + yes_no(cert.hanf.equivalent) + " " + cert.hanf.conclusion);
  if (cert.explicit_bijection) {
    report.line("explicit-bijection " + yes_no(*cert.explicit_bijection));
  }
  report.line("fo rank=" + std::to_string(cert.fo.rank) +
              " sentences=" + std::to_string(cert.fo.rows.size()) +
              " separating=" + std::to_string(cert.fo.separating.size()));
  for (const std::string& w : cert.warnings) report.line("warning " + w);
}

}  // namespace arrowlab
