#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "twomilton/graph.hpp"
#include "twomilton/rational.hpp"

namespace twomilton {

/// Five cycles on Z_n (n odd, 3 | n, n >= 9): k -> k+1, k -> k+2, and three
/// path forests closed into cycles by chaining their paths in order of the
/// smaller endpoint. Every pairwise union is covered by disjoint triangles.
std::vector<HamCycle> circulant_family(int n);

/// The three path forests before closing, as edge lists.
std::vector<std::vector<Edge>> circulant_forests(int n);

/// Two cycles on 4k vertices whose union is a closed strip of k K4s; block i
/// is {4i, 4i+1, 4i+2, 4i+3}.
std::pair<HamCycle, HamCycle> k4_strip(int k);

/// Three cycles on 8 vertices with every pairwise union K4-covered.
std::vector<HamCycle> triple_n8();

/// A 4-regular graph on 8u vertices, a ring of u units each holding one K4,
/// with independence number 2u. It is not the union of two Hamiltonian cycles.
UGraph counterexample_strip(int u);

struct ChainSpec {
  std::vector<HamCycle> base;
  int blocks = 0;  // N, even
  int count = 0;   // m
  std::uint64_t seed = 0;
  Rational epsilon = 0;
  /// Pairwise bound α(base_i ∪ base_j) <= c0·n0; computed when absent.
  std::optional<Rational> c0;
  int max_attempts = 100000;
};

struct AmplifyResult {
  std::vector<HamCycle> cycles;
  /// chains[j][a]: index of the base cycle placed on block a by cycle j.
  std::vector<std::vector<int>> chains;
  Rational c0;
  Rational agreement_cap;
  /// Per-pair bound on α of any pair of output unions.
  Rational bound;
  long long attempts = 0;
};

/// Samples one chain per output cycle, rejecting a candidate whose
/// block-agreement with an accepted chain exceeds N/k0 + εN, then closes each
/// chain into a Hamiltonian cycle on N·n0 vertices. Candidates come from a
/// counter-based stream, so the result does not depend on `workers`.
/// Throws LimitExceeded when a chain exhausts its attempts.
AmplifyResult amplify(const ChainSpec& spec, int workers = 1);

/// Number of blocks on which two chains use the same base cycle.
int block_agreement(const std::vector<int>& a, const std::vector<int>& b);

/// Largest α(base_i ∪ base_j) over i < j.
int base_pair_alpha(const std::vector<HamCycle>& base);

/// The bound (N/k0 + εN)·n0/2 + (N(k0-1)/k0 - εN)·c0·n0 + N/2.
Rational amplify_bound(int blocks, int k0, int n0, const Rational& epsilon, const Rational& c0);

}  // namespace twomilton
