#include "arrowlab/witness.hpp"

#include "arrowlab/errors.hpp"

namespace arrowlab {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kFalse: return "false";
    case Verdict::kTrue: return "true";
    case Verdict::kUnknown: return "unknown";
  }
  return "unknown";
}

const char* status_name(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::kSuccess: return "SUCCESS";
    case WitnessStatus::kPartial: return "PARTIAL";
    case WitnessStatus::kNoArrowingSeparation: return "NO_ARROWING_SEPARATION";
    case WitnessStatus::kNotHanfEquivalent: return "NOT_HANF_EQUIVALENT";
  }
  return "PARTIAL";
}

FarApartGraph build_far_apart_minimal(const MarkedGraph& sender, const Graph& g, const Graph& h,
                                      std::size_t n, const SearchOptions& options,
                                      bool waive_sender_minimality) {
  if (n < 1) throw PreconditionViolated("chain parameter n must be at least 1");
  if (!signals_nonadjacent(sender)) {
    throw PreconditionViolated("sender signals e and f share a vertex");
  }
  if (!verify_negative_sender(sender, g, h, options).ok) {
    throw PreconditionViolated("graph is not a negative sender");
  }
  FarApartGraph out;
  out.n = n;
  out.sender_minimality_waived = waive_sender_minimality;
  if (waive_sender_minimality) {
    out.notes.push_back("sender minimality not checked (waived by caller)");
  } else if (!is_sender_minimal(sender, Polarity::kNegative, g, h, options)) {
    throw PreconditionViolated("negative sender is not minimal");
  }

  out.graph = close_chain(chain_senders(sender, 2 * n + 1), n);
  out.distance = distance(out.graph.graph(), out.graph.vertex_mark("u"), out.graph.vertex_mark("v"));
  if (out.distance && *out.distance < n) {
    throw ConstructionFailed("closed chain has d(u,v) = " + std::to_string(*out.distance) +
                             " < n = " + std::to_string(n));
  }
  try {
    out.minimal = is_arrow_minimal(out.graph.graph(), g, h, options) ? Verdict::kTrue
                                                                     : Verdict::kFalse;
  } catch (const BudgetExceeded& e) {
    out.minimal = Verdict::kUnknown;
    out.notes.push_back(std::string("minimality check: ") + e.what());
  }
  return out;
}

WitnessPair build_witness_pair(const MarkedGraph& f) {
  const Vertex u = f.vertex_mark("u");
  const Vertex v = f.vertex_mark("v");
  if (u == v) throw PreconditionViolated("marks u and v denote the same vertex");
  const Graph& graph = f.graph();
  const Vertex both[] = {u, v};
  const Vertex only_u[] = {u};
  const Vertex only_v[] = {v};
  WitnessPair pair;
  pair.f1 = disjoint_union(graph, delete_vertices(graph, both).graph).graph;
  pair.f2 = disjoint_union(delete_vertices(graph, only_u).graph,
                           delete_vertices(graph, only_v).graph)
                .graph;
  return pair;
}

bool verify_explicit_bijection(const MarkedGraph& f, std::size_t rank, unsigned workers) {
  const Graph& graph = f.graph();
  const Vertex u = f.vertex_mark("u");
  const Vertex v = f.vertex_mark("v");
  const std::size_t radius = hanf_radius(rank);
  const Distance uv = distance(graph, u, v);
  if (uv && *uv < 2 * radius) {
    throw PreconditionViolated("d(u,v) = " + std::to_string(*uv) + " is below 2^(r+1) = " +
                               std::to_string(2 * radius));
  }
  const std::vector<Distance> from_u = distances_from(graph, u);
  const std::vector<Distance> from_v = distances_from(graph, v);
  auto near = [&](const std::vector<Distance>& d, Vertex w) { return d[w] && *d[w] <= radius; };

  const std::size_t n = graph.vertex_count();
  const Vertex both[] = {u, v};
  const Vertex only_u[] = {u};
  const Vertex only_v[] = {v};
  const Subgraph minus_uv = delete_vertices(graph, both);
  const Subgraph minus_u = delete_vertices(graph, only_u);
  const Subgraph minus_v = delete_vertices(graph, only_v);
  const Union f1 = disjoint_union(graph, minus_uv.graph);
  const Union f2 = disjoint_union(minus_u.graph, minus_v.graph);
  auto in_minus_u = [&](Vertex w) { return f2.left[minus_u.map[w]]; };
  auto in_minus_v = [&](Vertex w) { return f2.right[minus_v.map[w]]; };

  std::vector<Vertex> phi(f1.graph.vertex_count(), kNoVertex);
  for (Vertex w = 0; w < n; ++w) {
    // w in the copy of F.
    if (near(from_u, w)) {
      phi[f1.left[w]] = in_minus_v(w);
    } else if (near(from_v, w)) {
      phi[f1.left[w]] = in_minus_u(w);
    } else {
      phi[f1.left[w]] = in_minus_v(w);
    }
    // w in the copy of F - {u, v}.
    if (w == u || w == v) continue;
    const Vertex x = f1.right[minus_uv.map[w]];
    if (near(from_u, w)) {
      phi[x] = in_minus_u(w);
    } else if (near(from_v, w)) {
      phi[x] = in_minus_v(w);
    } else {
      phi[x] = in_minus_u(w);
    }
  }

  std::vector<char> hit(f2.graph.vertex_count(), 0);
  for (Vertex target : phi) {
    if (target == kNoVertex || target >= hit.size() || hit[target]) return false;
    hit[target] = 1;
  }
  if (phi.size() != hit.size()) return false;

  TypeCache cache;
  const std::vector<NeighborhoodType> t1 = r_types(f1.graph, radius, workers, &cache);
  const std::vector<NeighborhoodType> t2 = r_types(f2.graph, radius, workers, &cache);
  for (Vertex x = 0; x < phi.size(); ++x) {
    if (t1[x] != t2[phi[x]]) return false;
  }
  return true;
}

WitnessCertificate certify(const Graph& f1, const Graph& f2, const Graph& g, const Graph& h,
                           std::size_t rank, const SearchOptions& options) {
  if (rank < 1) throw PreconditionViolated("certificate needs r >= 1");
  WitnessCertificate cert;
  cert.rank = rank;
  cert.g = g;
  cert.h = h;
  cert.f1 = f1;
  cert.f2 = f2;
  if (!is_connected(g) || !is_connected(h)) {
    cert.warnings.push_back(
        "G or H is disconnected; goodness of F2 does not follow from its components");
  }
  if (f1.vertex_count() != f2.vertex_count()) {
    cert.warnings.push_back("F1 and F2 differ in vertex count");
  }

  cert.hanf = hanf_certificate(f1, f2, rank, options.workers);
  auto decide = [&](const Graph& f) {
    try {
      return arrows(f, g, h, options) ? Verdict::kTrue : Verdict::kFalse;
    } catch (const BudgetExceeded& e) {
      cert.warnings.push_back(std::string("arrowing: ") + e.what());
      return Verdict::kUnknown;
    }
  };
  cert.arrows_f1 = decide(f1);
  cert.arrows_f2 = decide(f2);
  cert.fo = compare_models(f1, f2, default_corpus(rank), rank, options.workers);
  if (cert.hanf.equivalent && !cert.fo.separating.empty()) {
    cert.warnings.push_back("FO spot check separates 2^r-equivalent structures");
  }

  if (!cert.hanf.equivalent) {
    cert.status = WitnessStatus::kNotHanfEquivalent;
  } else if (cert.arrows_f1 == Verdict::kUnknown || cert.arrows_f2 == Verdict::kUnknown) {
    const bool contradicted =
        cert.arrows_f1 == Verdict::kFalse || cert.arrows_f2 == Verdict::kTrue;
    cert.status = contradicted ? WitnessStatus::kNoArrowingSeparation : WitnessStatus::kPartial;
  } else if (cert.arrows_f1 == Verdict::kTrue && cert.arrows_f2 == Verdict::kFalse) {
    cert.status = WitnessStatus::kSuccess;
  } else {
    cert.status = WitnessStatus::kNoArrowingSeparation;
  }
  return cert;
}

WitnessCertificate run_witness(const MarkedGraph& sender, const Graph& g, const Graph& h,
                               std::size_t rank, const SearchOptions& options,
                               bool waive_sender_minimality) {
  if (rank < 1) throw PreconditionViolated("certificate needs r >= 1");
  const std::size_t n = 2 * hanf_radius(rank);
  FarApartGraph far = build_far_apart_minimal(sender, g, h, n, options, waive_sender_minimality);
  WitnessPair pair = build_witness_pair(far.graph);
  WitnessCertificate cert = certify(pair.f1, pair.f2, g, h, rank, options);
  cert.sender = sender;
  cert.explicit_bijection = verify_explicit_bijection(far.graph, rank, options.workers);
  for (const std::string& note : far.notes) cert.warnings.push_back(note);
  if (cert.status == WitnessStatus::kSuccess && far.minimal == Verdict::kUnknown) {
    cert.warnings.push_back("minimality of F unknown; arrowing verdicts checked directly");
  }
  cert.construction = std::move(far);
  return cert;
}

}  // namespace arrowlab
