#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrowlab/arrowing.hpp"
#include "arrowlab/fo.hpp"
#include "arrowlab/gadget.hpp"
#include "arrowlab/graph.hpp"
#include "arrowlab/hanf.hpp"

namespace arrowlab {

// Three-valued sub-result: kUnknown when the search budget ran out.
enum class Verdict { kFalse, kTrue, kUnknown };

const char* verdict_name(Verdict v);

struct FarApartGraph {
  MarkedGraph graph;  // marks u, v plus the chain marks
  std::size_t n = 0;
  Distance distance;  // d(u, v), checked >= n
  bool sender_minimality_waived = false;
  Verdict minimal = Verdict::kUnknown;  // is_arrow_minimal(F, G, H)
  std::vector<std::string> notes;
};

// Closes a chain of 2n+1 copies of a verified minimal negative sender with
// non-adjacent signals. Throws PreconditionViolated when the sender checks
// fail, ConstructionFailed if d(u, v) < n. A budget overrun in the
// minimality check is recorded as kUnknown, not thrown.
FarApartGraph build_far_apart_minimal(const MarkedGraph& sender, const Graph& g, const Graph& h,
                                      std::size_t n, const SearchOptions& options = {},
                                      bool waive_sender_minimality = false);

struct WitnessPair {
  Graph f1;  // F + (F - {u, v})
  Graph f2;  // (F - {u}) + (F - {v})
};

WitnessPair build_witness_pair(const MarkedGraph& f);

// Piecewise map from V(F1) to V(F2) sending vertices near u or v to the copy
// that keeps the same neighbourhood and far vertices to a fixed component;
// checks it is a bijection preserving 2^r-types. Throws PreconditionViolated
// unless d(u, v) >= 2^(r+1).
bool verify_explicit_bijection(const MarkedGraph& f, std::size_t rank, unsigned workers = 1);

enum class WitnessStatus { kSuccess, kPartial, kNoArrowingSeparation, kNotHanfEquivalent };

const char* status_name(WitnessStatus s);

struct WitnessCertificate {
  std::size_t rank = 0;
  Graph g;
  Graph h;
  std::vector<std::string> warnings;

  // Present when the certificate was produced from a sender.
  std::optional<MarkedGraph> sender;
  std::optional<FarApartGraph> construction;
  std::optional<bool> explicit_bijection;

  Graph f1;
  Graph f2;
  HanfCertificate hanf;
  Verdict arrows_f1 = Verdict::kUnknown;
  Verdict arrows_f2 = Verdict::kUnknown;
  ModelComparison fo;
  WitnessStatus status = WitnessStatus::kPartial;
};

// Hanf premise at radius 2^r, arrowing of both graphs (budgeted), FO spot
// check on the default corpus at rank r. Requires r >= 1.
WitnessCertificate certify(const Graph& f1, const Graph& f2, const Graph& g, const Graph& h,
                           std::size_t rank, const SearchOptions& options = {});

// Full pipeline: n = 2^(r+1), build F, split into (F1, F2), certify, and check
// the explicit bijection.
WitnessCertificate run_witness(const MarkedGraph& sender, const Graph& g, const Graph& h,
                               std::size_t rank, const SearchOptions& options = {},
                               bool waive_sender_minimality = false);

}  // namespace arrowlab
