#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "twomilton/graph.hpp"
#include "twomilton/independence.hpp"
#include "twomilton/k4.hpp"

namespace twomilton {

/// One pipeline operation: delete `removed` (may be empty) and add `added`.
struct TraceEntry {
  int step = 0;
  Mask removed = 0;
  std::optional<Edge> added;
};

/// A deleted archipelago, kept so that a transversal can be chosen later.
struct LiftBlock {
  int step = 0;
  Mask vertices = 0;
  std::vector<Quad> k4s;
};

struct ReductionResult {
  UGraph g;
  std::vector<HamCycle> cycles;
  bool diagnostic = false;
  /// The remainder, relabeled to 0..|h|-1; h_to_g maps back.
  UGraph h;
  std::vector<int> h_to_g;
  std::vector<Quad> removed_k4s;
  std::vector<LiftBlock> lift_plan;
  std::vector<TraceEntry> trace;
  /// Claims of the pipeline observed to fail, in order of occurrence.
  std::vector<std::string> violations;
};

/// Runs the four-step archipelago removal on C1 ∪ C2. Step 2 walks C1.
/// Throws InvalidInput for n <= 13 or mismatched cycles, and Falsification
/// (with the cycles and trace as reproducer) when a step fails.
ReductionResult technical_reduce(const HamCycle& c1, const HamCycle& c2);

/// Same pipeline on an arbitrary graph of maximum degree at most 4. There is
/// no Hamiltonian cycle to walk, so Step 2 joins components through any
/// archipelago touching them. Failures are recorded, never thrown.
ReductionResult technical_reduce_diagnostic(const UGraph& g);

/// I ∪ J for an independent set I of r.h (ids of h), with J one vertex per
/// removed K4, returned in ids of g. Throws InvalidInput if I is not
/// independent in h and Falsification if no transversal exists.
IndepCertificate lift_independent(const ReductionResult& r, const IndepCertificate& i);

/// A transversal of `block` avoiding `blocked` (a set of g vertices), or
/// nullopt.
std::optional<Mask> find_transversal(const UGraph& g, const LiftBlock& block, Mask blocked);

struct PostconditionReport {
  bool connected = false;
  bool k4_free = false;
  bool degree_dominated = false;
  bool strict_drop = false;
  bool lift_property = false;
  bool replay_matches = false;
  std::size_t lift_cases = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks the four reduction properties of r.h against r.g. The lift property is
/// tested per deleted archipelago over every independent-in-h subset of its
/// neighbourhood when that has at most `exhaustive_nbhd` vertices, and over
/// `samples` seeded random subsets otherwise.
PostconditionReport check_postconditions(const ReductionResult& r, int exhaustive_nbhd = 16,
                                         int samples = 4096, std::uint64_t seed = 1);

/// Rebuilds the remainder from g and a trace.
UGraph replay_trace(const UGraph& g, const std::vector<TraceEntry>& trace,
                    std::vector<int>* h_to_g = nullptr);

nlohmann::json trace_to_json(const std::vector<TraceEntry>& trace);
/// A family document holding the input and the trace, for replaying failures.
std::string reduction_reproducer(const ReductionResult& r);

}  // namespace twomilton
