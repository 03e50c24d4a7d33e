#include "twomilton/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "twomilton/errors.hpp"
#include "twomilton/independence.hpp"
#include "twomilton/k4.hpp"
#include "twomilton/limits.hpp"
#include "twomilton/random.hpp"

namespace twomilton {

namespace {

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t cycle_count(int n) { return n < 3 ? 0 : factorial(n - 1) / 2; }

void check_enumerable(int n) {
  if (n < 3) throw InvalidInput("cycles need n >= 3");
  if (n > limits().enumerate_max_n)
    throw LimitExceeded("cycle enumeration: n=" + std::to_string(n) + " exceeds limit " +
                        std::to_string(limits().enumerate_max_n));
}

// Canonical sequences: seq[0] = 0 and seq[1] < seq[n-1].
template <class Visit>
void canonical_dfs(int n, std::vector<int>& seq, Mask used, Visit&& visit) {
  const int r = static_cast<int>(seq.size());
  if (r == n) {
    visit(seq);
    return;
  }
  for (int v = 1; v < n; ++v) {
    if (used & bit(v)) continue;
    if (r == n - 1 && v < seq[1]) continue;
    seq.push_back(v);
    canonical_dfs(n, seq, used | bit(v), visit);
    seq.pop_back();
  }
}

bool has_indep(const Mask* adj, Mask avail, int t) {
  if (t <= 0) return true;
  if (popcount(avail) < t) return false;
  int v = lowest(avail);
  if (has_indep(adj, avail & ~adj[v] & ~bit(v), t - 1)) return true;
  return has_indep(adj, avail & ~bit(v), t);
}

// Pruned search over canonical partner sequences of the standard cycle.
class PartnerDfs {
 public:
  PartnerDfs(int n, int k) : n_(n), k_(k) {
    for (int v = 0; v < n; ++v) base_[v] = bit((v + 1) % n) | bit((v + n - 1) % n);
  }

  void run_task(int v1, int v2) {
    seq_.assign({0, v1});
    used_ = bit(0) | bit(v1);
    internal_ = 0;
    place(v2);
  }

  std::vector<std::vector<int>> survivors;
  FilterStats stats;

 private:
  // Makes u internal; false when it completes an independent (k+1)-set.
  bool settle(int u, int prev, int next) {
    adj_[u] = base_[u] | bit(prev) | bit(next);
    if (has_indep(adj_, internal_ & ~adj_[u], k_)) return false;
    internal_ |= bit(u);
    return true;
  }

  std::uint64_t completions() const {
    int remaining = n_ - static_cast<int>(seq_.size());
    if (remaining == 0) return 1;
    int above = popcount(~used_ & full_mask(n_) & ~full_mask(seq_[1] + 1));
    return factorial(remaining - 1) * static_cast<std::uint64_t>(above);
  }

  void place(int v) {
    const int r = static_cast<int>(seq_.size());
    seq_.push_back(v);
    used_ |= bit(v);
    const Mask saved = internal_;
    bool ok = settle(seq_[r - 1], seq_[r - 2], v);
    if (ok && r == n_ - 1) ok = settle(v, seq_[r - 1], 0) && settle(0, seq_[1], v);
    if (!ok) {
      if (r == n_ - 1) {
        ++stats.leaves;
      } else {
        ++stats.prunes;
        stats.pruned_completions += completions();
      }
    } else if (r == n_ - 1) {
      ++stats.leaves;
      bool standard = true;
      for (int i = 0; i < n_; ++i) standard = standard && seq_[i] == i;
      if (!standard) survivors.push_back(seq_);
    } else {
      const bool last = r + 1 == n_ - 1;
      for (int w = 1; w < n_; ++w) {
        if (used_ & bit(w)) continue;
        if (last && w < seq_[1]) continue;
        place(w);
      }
    }
    internal_ = saved;
    used_ &= ~bit(v);
    seq_.pop_back();
  }

  int n_, k_;
  Mask base_[kMaxVertices] = {};
  Mask adj_[kMaxVertices] = {};
  std::vector<int> seq_;
  Mask used_ = 0;
  Mask internal_ = 0;
};

bool is_orbit_min(const HamCycle& c, const std::vector<std::vector<int>>& autos) {
  auto key = canonical_key(c);
  for (const auto& p : autos) {
    HamCycle img = c.relabel(p);
    if (canonical_key(img) < key) return false;
  }
  return true;
}

bool compatible(const HamCycle& a, const HamCycle& b, int k) {
  return !has_independent_set(graph_union(a, b), k + 1);
}

// Maximum clique by simple branch and bound over an adjacency matrix.
void max_clique(const std::vector<std::vector<bool>>& adj, std::vector<int>& current, std::vector<int> cand,
                std::vector<int>& best) {
  if (cand.empty()) {
    if (current.size() > best.size()) best = current;
    return;
  }
  while (!cand.empty()) {
    if (current.size() + cand.size() <= best.size()) return;
    int v = cand.back();
    cand.pop_back();
    std::vector<int> next;
    for (int u : cand)
      if (adj[v][u]) next.push_back(u);
    current.push_back(v);
    max_clique(adj, current, std::move(next), best);
    current.pop_back();
  }
  if (current.size() > best.size()) best = current;
}

bool covered_union(const HamCycle& a, const HamCycle& b) {
  return static_cast<int>(find_k4s(graph_union(a, b)).size()) * 4 == a.order();
}

}  // namespace

void enumerate_cycles(int n, const std::optional<HamCycle>& pinned,
                      const std::function<void(const HamCycle&)>& visit) {
  check_enumerable(n);
  std::vector<std::vector<int>> autos;
  if (pinned) {
    if (pinned->order() != n) throw InvalidInput("enumerate_cycles: pinned cycle has the wrong order");
    autos = cycle_automorphisms(*pinned);
  }
  std::vector<int> seq{0};
  canonical_dfs(n, seq, bit(0), [&](const std::vector<int>& s) {
    HamCycle c = make_cycle(n, s);
    if (!pinned || is_orbit_min(c, autos)) visit(c);
  });
}

std::vector<HamCycle> all_cycles(int n, const std::optional<HamCycle>& pinned) {
  std::vector<HamCycle> out;
  enumerate_cycles(n, pinned, [&](const HamCycle& c) { out.push_back(c); });
  return out;
}

std::vector<std::vector<int>> cycle_automorphisms(const HamCycle& c) {
  const int n = c.order();
  const auto& p = c.sequence();
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s)
    for (int dir : {1, -1}) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) perm[p[i]] = p[((s + dir * i) % n + n) % n];
      out.push_back(std::move(perm));
    }
  return out;
}

PartnerScan scan_partners(int n, int k, int workers) {
  if (n < 4) throw InvalidInput("scan_partners needs n >= 4");
  if (n > 20) throw LimitExceeded("scan_partners: n=" + std::to_string(n) + " is beyond any exhaustive range");
  std::vector<std::pair<int, int>> tasks;
  for (int v1 = 1; v1 <= n - 2; ++v1)
    for (int v2 = 1; v2 < n; ++v2)
      if (v2 != v1) tasks.emplace_back(v1, v2);
  workers = std::clamp(workers, 1, static_cast<int>(tasks.size()));
  std::vector<PartnerDfs> dfs(static_cast<std::size_t>(workers), PartnerDfs(n, k));
  std::atomic<std::size_t> next{0};
  auto work = [&](PartnerDfs& d) {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) d.run_task(tasks[t].first, tasks[t].second);
  };
  if (workers == 1) {
    work(dfs[0]);
  } else {
    std::vector<std::thread> pool;
    for (auto& d : dfs) pool.emplace_back(work, std::ref(d));
    for (auto& t : pool) t.join();
  }
  PartnerScan out;
  std::vector<std::vector<int>> seqs;
  for (auto& d : dfs) {
    out.stats.leaves += d.stats.leaves;
    out.stats.prunes += d.stats.prunes;
    out.stats.pruned_completions += d.stats.pruned_completions;
    seqs.insert(seqs.end(), d.survivors.begin(), d.survivors.end());
  }
  out.stats.expected = cycle_count(n);
  std::sort(seqs.begin(), seqs.end());
  for (auto& s : seqs) out.partners.push_back(make_cycle(n, std::move(s)));
  return out;
}

PartnerScan scan_partners_naive(int n, int k) {
  PartnerScan out;
  HamCycle std_cycle = standard_cycle(n);
  enumerate_cycles(n, std::nullopt, [&](const HamCycle& c) {
    ++out.stats.leaves;
    if (c == std_cycle) return;
    if (compatible(std_cycle, c, k)) out.partners.push_back(c);
  });
  out.stats.expected = cycle_count(n);
  return out;
}

nlohmann::json to_json(const FilterStats& s) {
  return {{"leaves", s.leaves},
          {"prunes", s.prunes},
          {"pruned_completions", s.pruned_completions},
          {"expected", s.expected},
          {"accounted", s.accounted()}};
}

FResult compute_f(int n, int k, int workers, std::uint64_t seed) {
  if (n < 3) throw InvalidInput("compute_f needs n >= 3");
  if (k < 0) throw InvalidInput("compute_f needs k >= 0");
  auto t0 = std::chrono::steady_clock::now();
  FResult res;
  res.n = n;
  res.k = k;
  const HamCycle pin = standard_cycle(n);

  if (n > limits().exhaustive_f_max_n || n == 3) {
    // n = 3 has a single cycle, so the answer is 1 regardless of k.
    res.exhaustive = n == 3;
    res.witness = {pin};
    if (n > 3) {
      Rng rng(seed);
      for (int attempt = 0; attempt < 2000; ++attempt) {
        HamCycle c = make_cycle(n, [&] {
          std::vector<int> v(static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i) v[i] = i;
          rng.shuffle(v);
          return v;
        }());
        bool ok = true;
        for (const auto& w : res.witness) {
          ++res.compatibility_checks;
          if (canonical_key(w) == canonical_key(c) || !compatible(w, c, k)) {
            ok = false;
            break;
          }
        }
        if (ok) res.witness.push_back(c);
      }
      res.audit.push_back({{"event", "lower-bound"},
                           {"reason", "n exceeds the exhaustive limit " + std::to_string(limits().exhaustive_f_max_n)},
                           {"seed", seed},
                           {"attempts", 2000}});
    }
    res.value = static_cast<int>(res.witness.size());
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  }

  res.exhaustive = true;
  res.audit.push_back({{"event", "pin"},
                       {"cycle", pin.sequence()},
                       {"justification",
                        "relabeling vertices maps families to families of the same size, so any family with at least "
                        "two cycles is equivalent to one containing the standard cycle; a single cycle always gives "
                        "f >= 1"}});
  PartnerScan scan = scan_partners(n, k, workers);
  res.stats = scan.stats;
  res.partners = scan.partners.size();
  res.audit.push_back({{"event", "scan"}, {"k", k}, {"partners", scan.partners.size()}, {"stats", to_json(scan.stats)}});
  if (!scan.stats.accounted())
    throw Falsification("compute_f: scan did not account for every cycle", res.audit.dump());

  res.value = 1;
  res.witness = {pin};
  if (!scan.partners.empty()) {
    auto autos = cycle_automorphisms(pin);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < scan.partners.size(); ++i) index[scan.partners[i].sequence()] = static_cast<int>(i);
    std::vector<int> reps;
    for (std::size_t i = 0; i < scan.partners.size(); ++i)
      if (is_orbit_min(scan.partners[i], autos)) reps.push_back(static_cast<int>(i));
    res.orbit_representatives = reps.size();
    res.audit.push_back({{"event", "orbits"},
                         {"representatives", reps.size()},
                         {"symmetries", autos.size()},
                         {"note", "the partner set is invariant under the pinned cycle's automorphisms, so one "
                                  "partner per orbit suffices as the second cycle"}});
    std::vector<int> best_family;
    for (int r : reps) {
      std::vector<int> nbr;
      for (std::size_t j = 0; j < scan.partners.size(); ++j) {
        if (static_cast<int>(j) == r) continue;
        ++res.compatibility_checks;
        if (compatible(scan.partners[r], scan.partners[j], k)) nbr.push_back(static_cast<int>(j));
      }
      if (nbr.size() + 1 <= best_family.size()) continue;
      std::vector<std::vector<bool>> adj(nbr.size(), std::vector<bool>(nbr.size(), false));
      for (std::size_t a = 0; a < nbr.size(); ++a)
        for (std::size_t b = a + 1; b < nbr.size(); ++b) {
          ++res.compatibility_checks;
          adj[a][b] = adj[b][a] = compatible(scan.partners[nbr[a]], scan.partners[nbr[b]], k);
        }
      std::vector<int> cand(nbr.size()), current, best;
      for (std::size_t a = 0; a < nbr.size(); ++a) cand[a] = static_cast<int>(a);
      max_clique(adj, current, cand, best);
      if (best.size() + 1 > best_family.size()) {
        best_family = {r};
        for (int b : best) best_family.push_back(nbr[b]);
      }
    }
    std::sort(best_family.begin(), best_family.end());
    for (int i : best_family) res.witness.push_back(scan.partners[i]);
    res.value = static_cast<int>(res.witness.size());
  }
  res.audit.push_back({{"event", "result"}, {"value", res.value}, {"compatibility_checks", res.compatibility_checks}});
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

Exceptional find_exceptional(int n) {
  if (n != 8 && n != 12)
    throw InvalidInput("find_exceptional: only n = 8 and n = 12 admit alpha = n/4 with zeta = n/4 - 1");
  auto scan = scan_partners(n, n / 4, 1);
  HamCycle pin = standard_cycle(n);
  for (const auto& c : scan.partners) {
    UGraph g = graph_union(pin, c);
    int z = zeta(g);
    if (z != n / 4 - 1) continue;
    int a = alpha_exact(g).size;
    if (a == n / 4) return {pin, c, g, a, z};
  }
  throw Falsification("find_exceptional: no pair with alpha = n/4 and zeta = n/4 - 1 for n = " + std::to_string(n),
                      "{\"n\":" + std::to_string(n) + "}");
}

std::vector<HamCycle> k4_covered_partners(int n) {
  if (n < 8 || n % 4 != 0) throw InvalidInput("k4_covered_partners needs n divisible by 4, n >= 8");
  if (n > kMaxVertices) throw LimitExceeded("k4_covered_partners: n too large");
  const int b = n / 4;
  std::vector<CanonicalCycleKey> keys;
  for (int o = 0; o < 4; ++o) {
    std::vector<std::vector<int>> paths;
    for (int j = 0; j < b; ++j) {
      int i = o + 4 * j;
      paths.push_back({(i + 2) % n, i % n, (i + 3) % n, (i + 1) % n});
    }
    std::vector<int> rest(static_cast<std::size_t>(b - 1));
    for (int j = 1; j < b; ++j) rest[j - 1] = j;
    do {
      for (int flips = 0; flips < (1 << (b - 1)); ++flips) {
        std::vector<int> order = paths[0];
        for (int t = 0; t < b - 1; ++t) {
          auto p = paths[rest[t]];
          if (flips & (1 << t)) std::reverse(p.begin(), p.end());
          order.insert(order.end(), p.begin(), p.end());
        }
        keys.push_back(canonical_key(make_cycle(n, std::move(order))));
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<HamCycle> out;
  for (const auto& k : keys) out.push_back(from_key(k));
  return out;
}

NoThreeReport verify_nothree(int n, std::uint64_t pair_budget, std::uint64_t seed) {
  if (n < 8 || n % 4 != 0) throw InvalidInput("verify_nothree needs n divisible by 4, n >= 8");
  NoThreeReport rep;
  rep.n = n;
  HamCycle pin = standard_cycle(n);
  std::vector<HamCycle> partners;
  if (n <= 12) {
    for (const auto& c : scan_partners(n, n / 4, 1).partners)
      if (covered_union(pin, c)) partners.push_back(c);
    rep.method = "full scan of partners with alpha <= n/4, filtered to K4-covered unions";
  } else {
    partners = k4_covered_partners(n);
    rep.method = "partners built from the forced block structure of K4-covered unions";
  }
  rep.partners = partners.size();
  const std::uint64_t m = partners.size();
  const std::uint64_t pairs = m * (m - (m > 0 ? 1 : 0)) / 2;
  rep.exhaustive = pairs <= pair_budget;
  auto test = [&](std::size_t i, std::size_t j) {
    ++rep.pairs_checked;
    if (covered_union(partners[i], partners[j])) {
      rep.triple = std::vector<HamCycle>{pin, partners[i], partners[j]};
      return true;
    }
    return false;
  };
  if (rep.exhaustive) {
    for (std::size_t i = 0; i < partners.size() && !rep.triple; ++i)
      for (std::size_t j = i + 1; j < partners.size(); ++j)
        if (test(i, j)) break;
  } else {
    rep.method += "; random partner pairs sampled";
    Rng rng(seed);
    for (std::uint64_t t = 0; t < pair_budget && !rep.triple; ++t) {
      std::size_t i = rng.below(m), j = rng.below(m);
      if (i != j) test(std::min(i, j), std::max(i, j));
    }
  }
  return rep;
}

}  // namespace twomilton
