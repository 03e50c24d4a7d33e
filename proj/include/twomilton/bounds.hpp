#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twomilton/graph.hpp"
#include "twomilton/rational.hpp"

namespace twomilton {

struct LockeLouReport {
  int n = 0, edges = 0, alpha = 0;
  /// e - 9n + 26α >= -4.
  bool linear = false;
  /// α >= (7n - 4)/26.
  bool ratio = false;
  bool ok() const { return linear && ratio; }
};

/// Exact α against both forms of the K4-free degree-4 bound. Throws
/// InvalidInput unless g is connected, K4-free and of maximum degree <= 4.
LockeLouReport locke_lou_check(const UGraph& g);

struct StoneAgeReport {
  int n = 0, alpha = 0;
  /// False for 4-regular graphs, where nothing is claimed.
  bool applicable = false;
  bool holds = false;
};

/// α > n/4 for K4-free graphs of maximum degree <= 4 that are not 4-regular.
/// Throws InvalidInput if g has a K4 or a vertex of degree > 4.
StoneAgeReport stoneage_check(const UGraph& g);

/// The constant standing in for the O(1) term: 4/26 plus one unit.
Rational quality_slack();

/// 7n/26 - ζ/13 + ψ/2 - slack.
Rational quality_bound(int n, int zeta, int psi, const Rational& slack = quality_slack());

struct QualityReport {
  int n = 0, zeta = 0, psi = 0, alpha = 0;
  /// Packing size when only paths with degree-2 inner vertices count.
  int psi_eligible = 0;
  Rational slack, bound, bound_eligible;
  bool holds = false;
  bool holds_eligible = false;
};

/// Evaluates the quality inequality on C1 ∪ C2, once with ψ as defined and
/// once with ψ restricted to paths that admit the contraction step.
QualityReport quality_check(const HamCycle& c1, const HamCycle& c2, const Rational& slack = quality_slack());

/// Largest number of vertex-disjoint induced P4s whose inner vertices both
/// have degree 2.
int psi_eligible(const UGraph& g);

/// q(x, ε) = (1 - x(1 - ε)) / (xε). Requires 0 < x <= 1 and ε > 0.
Rational johnson_q(const Rational& x, const Rational& eps);

struct JohnsonReport {
  std::size_t m = 0;
  Rational q;
  bool holds = false;
};

/// Checks m <= q(x, ε) for a qualifying system: every set has at least x·n
/// elements of [n] and any two meet in at most (1-ε)x²n. Throws InvalidInput
/// when the system does not qualify.
JohnsonReport johnson_check(const std::vector<std::vector<int>>& sets, int ground, const Rational& x,
                            const Rational& eps);

/// δ(x, ε) = 1 / (q(x/4, ε) + 1).
Rational delta_fn(const Rational& x, const Rational& eps);

/// 1/(2k0) + (k0-1)c0/k0 + 1/(2n0) + ε.
Rational semirandom_rate(int n0, const Rational& c0, int k0, const Rational& eps);
/// The same rate with the 1/(2n0) term dropped (n0 -> infinity).
Rational semirandom_rate_limit(const Rational& c0, int k0, const Rational& eps);

struct ThresholdReport {
  Rational base;       // 7/26
  Rational minimizer;  // argmin of -z/13 + z²/2
  Rational minimum;
  Rational value;      // base + minimum
};

ThresholdReport threshold_lower();

/// Growth of m(·)² per application of the iteration: ε/(1-ε).
Rational iteration_increment(const Rational& eps);
/// Number of sets in the nested chain that forces m > 1: (1-ε)/ε + 1.
Rational iteration_length(const Rational& eps);
/// δ(4m, ε)^((1-ε)/ε), exact when (1-ε)/ε is an integer.
std::optional<Rational> exists_exponent(const Rational& m, const Rational& eps);

struct PsiZetaReport {
  int shared = 0;  // m
  int psi = 0;
  /// Shared K4s whose outer path is not induced in D1 ∪ D2.
  int not_induced = 0;
  bool holds = false;
};

/// m = K4s present in both C ∪ D1 and C ∪ D2, against ψ(D1 ∪ D2).
PsiZetaReport psizeta_stats(const HamCycle& c, const HamCycle& d1, const HamCycle& d2);

struct PairStats {
  int i = 0, j = 0;
  int zeta = 0, psi = 0, alpha = 0;
};

struct FamilyStats {
  int n = 0;
  std::size_t size = 0;
  std::vector<PairStats> pairs;
  /// min ζ(C ∪ D)/n over pairs.
  Rational m() const;
  const PairStats& at(int i, int j) const;
};

FamilyStats family_stats(const std::vector<HamCycle>& family, bool with_alpha = true);

struct SmallAlphaReport {
  bool hypothesis = false;  // ζ >= xn/4 for every pair
  int alpha_a = 0;          // independence number of the ψ-threshold graph
  Rational bound;           // q(x/4, ε) + 1
  bool conclusion = false;
};

/// On the graph joining pairs with ψ >= (1-ε)x²n/16, checks α <= q(x/4,ε)+1
/// whenever every pair has ζ >= xn/4.
SmallAlphaReport smallalpha_check(const FamilyStats& s, const Rational& x, const Rational& eps);

struct StepReport {
  bool hypothesis = false;  // ψ/n < (1-ε)(ζ/n)² - ε for all pairs
  Rational target;          // m(X)² + ε/(1-ε)
  std::optional<std::vector<int>> subfamily;
};

/// If the hypothesis holds, searches subfamilies Y of at least two cycles
/// with m(Y)² > m(X)² + ε/(1-ε), largest first. Families above 20 cycles
/// are rejected.
StepReport step_check(const FamilyStats& s, const Rational& eps);

/// Pairs with ψ/n >= (1-ε)(ζ/n)² - ε.
std::vector<std::pair<int, int>> exists_pairs(const FamilyStats& s, const Rational& eps);

}  // namespace twomilton
