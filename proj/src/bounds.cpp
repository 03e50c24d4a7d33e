#include "twomilton/bounds.hpp"

#include <algorithm>
#include <set>

#include "twomilton/errors.hpp"
#include "twomilton/independence.hpp"
#include "twomilton/k4.hpp"

namespace twomilton {

namespace {

void require_k4free_deg4(const UGraph& g, const char* who) {
  if (g.max_degree() > 4) throw InvalidInput(std::string(who) + ": maximum degree exceeds 4");
  if (!find_k4s(g).empty()) throw InvalidInput(std::string(who) + ": graph contains a K4");
}

void require_x_eps(const Rational& x, const Rational& eps) {
  if (x <= 0 || x > 1) throw InvalidInput("x must satisfy 0 < x <= 1");
  if (eps <= 0) throw InvalidInput("epsilon must be positive");
}

}  // namespace

LockeLouReport locke_lou_check(const UGraph& g) {
  require_k4free_deg4(g, "locke_lou_check");
  if (g.order() == 0 || !g.is_connected()) throw InvalidInput("locke_lou_check: graph must be connected");
  LockeLouReport r;
  r.n = g.order();
  r.edges = g.edge_count();
  r.alpha = alpha_exact(g).size;
  r.linear = r.edges - 9 * r.n + 26 * r.alpha >= -4;
  r.ratio = 26 * r.alpha >= 7 * r.n - 4;
  return r;
}

StoneAgeReport stoneage_check(const UGraph& g) {
  require_k4free_deg4(g, "stoneage_check");
  StoneAgeReport r;
  r.n = g.order();
  r.alpha = alpha_exact(g).size;
  r.applicable = g.order() > 0 && !(g.min_degree() == 4 && g.max_degree() == 4);
  r.holds = !r.applicable || 4 * r.alpha > r.n;
  return r;
}

Rational quality_slack() { return Rational(4, 26) + 1; }

Rational quality_bound(int n, int zeta, int psi, const Rational& slack) {
  if (n < 0 || zeta < 0 || psi < 0) throw InvalidInput("quality_bound: inputs must be nonnegative");
  return Rational(7 * n, 26) - Rational(zeta, 13) + Rational(psi, 2) - slack;
}

int psi_eligible(const UGraph& g) {
  std::vector<PathP4> paths;
  for (const auto& p : induced_p4s(g))
    if (csoka_eligible_path(g, p)) paths.push_back(p);
  return psi_packing(g, std::move(paths)).count;
}

QualityReport quality_check(const HamCycle& c1, const HamCycle& c2, const Rational& slack) {
  if (c1.order() != c2.order()) throw InvalidInput("quality_check: cycles differ in order");
  UGraph g = graph_union(c1, c2);
  QualityReport r;
  r.n = g.order();
  r.zeta = zeta(g);
  r.psi = psi_exact(g).count;
  r.psi_eligible = psi_eligible(g);
  r.alpha = alpha_exact(g).size;
  r.slack = slack;
  r.bound = quality_bound(r.n, r.zeta, r.psi, slack);
  r.bound_eligible = quality_bound(r.n, r.zeta, r.psi_eligible, slack);
  r.holds = Rational(r.alpha) >= r.bound;
  r.holds_eligible = Rational(r.alpha) >= r.bound_eligible;
  return r;
}

Rational johnson_q(const Rational& x, const Rational& eps) {
  require_x_eps(x, eps);
  return (1 - x * (1 - eps)) / (x * eps);
}

JohnsonReport johnson_check(const std::vector<std::vector<int>>& sets, int ground, const Rational& x,
                            const Rational& eps) {
  require_x_eps(x, eps);
  if (ground <= 0) throw InvalidInput("johnson_check: ground set must be nonempty");
  std::vector<std::vector<bool>> member;
  for (const auto& s : sets) {
    std::vector<bool> in(static_cast<std::size_t>(ground), false);
    for (int v : s) {
      if (v < 0 || v >= ground) throw InvalidInput("johnson_check: element out of range");
      if (in[v]) throw InvalidInput("johnson_check: repeated element");
      in[v] = true;
    }
    if (Rational(static_cast<long long>(s.size())) < x * ground)
      throw InvalidInput("johnson_check: a set is smaller than x*n");
    member.push_back(std::move(in));
  }
  const Rational cap = (1 - eps) * x * x * ground;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      long long common = 0;
      for (int v : sets[j]) common += member[i][v];
      if (Rational(common) > cap) throw InvalidInput("johnson_check: two sets meet in more than (1-eps)x^2 n");
    }
  JohnsonReport r;
  r.m = sets.size();
  r.q = johnson_q(x, eps);
  r.holds = Rational(static_cast<long long>(r.m)) <= r.q;
  return r;
}

Rational delta_fn(const Rational& x, const Rational& eps) {
  require_x_eps(x, eps);
  return 1 / (johnson_q(x / 4, eps) + 1);
}

Rational semirandom_rate_limit(const Rational& c0, int k0, const Rational& eps) {
  if (k0 < 2) throw InvalidInput("semirandom_rate: k0 must be at least 2");
  if (c0 < 0 || eps < 0) throw InvalidInput("semirandom_rate: c0 and epsilon must be nonnegative");
  return Rational(1, 2 * k0) + Rational(k0 - 1, k0) * c0 + eps;
}

Rational semirandom_rate(int n0, const Rational& c0, int k0, const Rational& eps) {
  if (n0 < 3) throw InvalidInput("semirandom_rate: n0 must be at least 3");
  return semirandom_rate_limit(c0, k0, eps) + Rational(1, 2 * n0);
}

ThresholdReport threshold_lower() {
  // -z/13 + z²/2 has its vertex where the derivative z - 1/13 vanishes.
  ThresholdReport r;
  r.base = Rational(7, 26);
  r.minimizer = Rational(1, 13);
  r.minimum = -r.minimizer / 13 + r.minimizer * r.minimizer / 2;
  r.value = r.base + r.minimum;
  return r;
}

Rational iteration_increment(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw InvalidInput("epsilon must lie in (0, 1)");
  return eps / (1 - eps);
}

Rational iteration_length(const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw InvalidInput("epsilon must lie in (0, 1)");
  return (1 - eps) / eps + 1;
}

std::optional<Rational> exists_exponent(const Rational& m, const Rational& eps) {
  Rational power = (1 - eps) / eps;
  if (boost::multiprecision::denominator(power) != 1) return std::nullopt;
  Rational d = delta_fn(4 * m, eps);
  Rational out = 1;
  for (BigInt i = 0; i < boost::multiprecision::numerator(power); ++i) out *= d;
  return out;
}

PsiZetaReport psizeta_stats(const HamCycle& c, const HamCycle& d1, const HamCycle& d2) {
  if (c.order() != d1.order() || c.order() != d2.order()) throw InvalidInput("psizeta_stats: cycles differ in order");
  auto k1 = find_k4s(graph_union(c, d1));
  auto k2 = find_k4s(graph_union(c, d2));
  std::set<Quad> second(k2.begin(), k2.end());
  UGraph dd = graph_union(d1, d2);
  UGraph cg = c.to_graph();
  PsiZetaReport r;
  for (const auto& q : k1) {
    if (!second.count(q)) continue;
    ++r.shared;
    // The K4 edges outside C, seen in D1 ∪ D2: an induced P4 exactly when
    // D1 ∪ D2 adds nothing else inside the block.
    int inside = 0, outside_c = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        if (dd.has_edge(q[a], q[b])) ++inside;
        if (!cg.has_edge(q[a], q[b])) ++outside_c;
      }
    if (inside != 3 || outside_c != 3) ++r.not_induced;
  }
  r.psi = psi_exact(dd).count;
  r.holds = r.psi >= r.shared;
  return r;
}

Rational FamilyStats::m() const {
  if (pairs.empty() || n == 0) return 0;
  int best = pairs.front().zeta;
  for (const auto& p : pairs) best = std::min(best, p.zeta);
  return Rational(best, n);
}

const PairStats& FamilyStats::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& p : pairs)
    if (p.i == i && p.j == j) return p;
  throw InvalidInput("FamilyStats: no such pair");
}

FamilyStats family_stats(const std::vector<HamCycle>& family, bool with_alpha) {
  FamilyStats s;
  s.size = family.size();
  if (family.empty()) return s;
  s.n = family.front().order();
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[j].order() != s.n) throw InvalidInput("family_stats: cycles differ in order");
      UGraph g = graph_union(family[i], family[j]);
      PairStats p;
      p.i = static_cast<int>(i);
      p.j = static_cast<int>(j);
      p.zeta = zeta(g);
      p.psi = psi_exact(g).count;
      if (with_alpha) p.alpha = alpha_exact(g).size;
      s.pairs.push_back(p);
    }
  return s;
}

SmallAlphaReport smallalpha_check(const FamilyStats& s, const Rational& x, const Rational& eps) {
  require_x_eps(x, eps);
  SmallAlphaReport r;
  r.bound = johnson_q(x / 4, eps) + 1;
  r.hypothesis = true;
  for (const auto& p : s.pairs) r.hypothesis = r.hypothesis && Rational(p.zeta) >= x * s.n / 4;
  if (s.size > kMaxVertices) throw LimitExceeded("smallalpha_check: family too large");
  UGraph a(static_cast<int>(s.size));
  const Rational threshold = (1 - eps) * x * x * s.n / 16;
  for (const auto& p : s.pairs)
    if (Rational(p.psi) >= threshold) a.add_edge(p.i, p.j);
  r.alpha_a = alpha_exact(a).size;
  r.conclusion = Rational(r.alpha_a) <= r.bound;
  return r;
}

StepReport step_check(const FamilyStats& s, const Rational& eps) {
  if (eps <= 0 || eps >= 1) throw InvalidInput("epsilon must lie in (0, 1)");
  if (s.size > 20) throw LimitExceeded("step_check: family too large for subset search");
  StepReport r;
  const Rational n = s.n;
  r.hypothesis = !s.pairs.empty();
  for (const auto& p : s.pairs) {
    Rational z = Rational(p.zeta) / n;
    r.hypothesis = r.hypothesis && Rational(p.psi) / n < (1 - eps) * z * z - eps;
  }
  Rational m = s.m();
  r.target = m * m + eps / (1 - eps);
  if (!r.hypothesis) return r;
  const int k = static_cast<int>(s.size);
  std::vector<unsigned> subsets;
  for (unsigned mask = 0; mask < (1U << k); ++mask)
    if (std::popcount(mask) >= 2) subsets.push_back(mask);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) > std::popcount(b); });
  for (unsigned mask : subsets) {
    int best = -1;
    for (const auto& p : s.pairs)
      if ((mask >> p.i & 1U) && (mask >> p.j & 1U)) best = best < 0 ? p.zeta : std::min(best, p.zeta);
    Rational my = Rational(best) / n;
    if (my * my > r.target) {
      std::vector<int> members;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1U) members.push_back(i);
      r.subfamily = members;
      break;
    }
  }
  return r;
}

std::vector<std::pair<int, int>> exists_pairs(const FamilyStats& s, const Rational& eps) {
  std::vector<std::pair<int, int>> out;
  const Rational n = s.n;
  for (const auto& p : s.pairs) {
    Rational z = Rational(p.zeta) / n;
    if (Rational(p.psi) / n >= (1 - eps) * z * z - eps) out.emplace_back(p.i, p.j);
  }
  return out;
}

}  // namespace twomilton
