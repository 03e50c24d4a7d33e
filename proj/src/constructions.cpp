#include "twomilton/constructions.hpp"

#include <algorithm>
#include <future>

#include "twomilton/errors.hpp"
#include "twomilton/independence.hpp"
#include "twomilton/random.hpp"

namespace twomilton {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// Chains the paths of a linear forest into one cycle: paths sorted by their
// smaller endpoint, each walked from smaller to larger endpoint.
HamCycle close_forest(int n, const std::vector<Edge>& edges) {
  UGraph f(n);
  for (auto [u, v] : edges) f.add_edge(u, v);
  std::vector<std::vector<int>> paths;
  Mask seen = 0;
  for (int s = 0; s < n; ++s) {
    if ((seen & bit(s)) || f.degree(s) > 1) continue;
    std::vector<int> p{s};
    seen |= bit(s);
    for (int cur = s;;) {
      Mask next = f.neighbors(cur) & ~seen;
      if (!next) break;
      cur = lowest(next);
      seen |= bit(cur);
      p.push_back(cur);
    }
    paths.push_back(std::move(p));
  }
  if (seen != f.all()) throw InvalidInput("forest closing: the edge set is not a linear forest");
  for (auto& p : paths)
    if (p.front() > p.back()) std::reverse(p.begin(), p.end());
  std::sort(paths.begin(), paths.end());
  std::vector<int> order;
  for (const auto& p : paths) order.insert(order.end(), p.begin(), p.end());
  return make_cycle(n, std::move(order));
}

}  // namespace

std::vector<std::vector<Edge>> circulant_forests(int n) {
  if (n < 9 || n % 2 == 0 || n % 3 != 0)
    throw InvalidInput("circulant_family needs n odd, divisible by 3 and at least 9");
  std::vector<std::vector<Edge>> forests(3);
  for (int r = 0; r < 3; ++r)
    for (int c = r; c < n; c += 3) {
      forests[r].emplace_back(c, mod(c + 2, n));
      forests[r].emplace_back(c, mod(c + 4, n));
    }
  return forests;
}

std::vector<HamCycle> circulant_family(int n) {
  auto forests = circulant_forests(n);
  std::vector<int> step1(n), step2(n);
  for (int k = 0; k < n; ++k) {
    step1[k] = k;
    step2[k] = mod(2 * k, n);
  }
  std::vector<HamCycle> out{make_cycle(n, step1), make_cycle(n, step2)};
  for (const auto& f : forests) out.push_back(close_forest(n, f));
  return out;
}

std::pair<HamCycle, HamCycle> k4_strip(int k) {
  if (k < 3) throw InvalidInput("k4_strip needs at least 3 blocks");
  std::vector<int> a, b;
  for (int i = 0; i < k; ++i) {
    int bl = 4 * i, tl = 4 * i + 1, br = 4 * i + 2, tr = 4 * i + 3;
    a.insert(a.end(), {tl, bl, br, tr});
    b.insert(b.end(), {bl, tr, tl, br});
  }
  return {make_cycle(4 * k, a), make_cycle(4 * k, b)};
}

std::vector<HamCycle> triple_n8() {
  return {make_cycle(8, {0, 1, 2, 3, 4, 5, 6, 7}), make_cycle(8, {0, 2, 6, 4, 7, 5, 1, 3}),
          make_cycle(8, {0, 4, 2, 5, 3, 7, 1, 6})};
}

UGraph counterexample_strip(int u) {
  if (u < 2) throw InvalidInput("counterexample_strip needs at least 2 units");
  UGraph g(8 * u);
  for (int i = 0; i < u; ++i) {
    int b = 8 * i;
    int left = b + 4, right = b + 5, bl = b + 6, br = b + 7;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y) g.add_edge(b + x, b + y);
    g.add_edge(left, b + 0);
    g.add_edge(left, b + 1);
    g.add_edge(right, b + 2);
    g.add_edge(right, b + 3);
    for (int x : {left, right}) {
      g.add_edge(x, bl);
      g.add_edge(x, br);
    }
    g.add_edge(bl, br);
    g.add_edge(br, mod(b + 8, 8 * u) + 6);
  }
  return g;
}

int block_agreement(const std::vector<int>& a, const std::vector<int>& b) {
  int same = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) same += a[i] == b[i];
  return same;
}

int base_pair_alpha(const std::vector<HamCycle>& base) {
  int best = 0;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j)
      best = std::max(best, alpha_exact(graph_union(base[i], base[j])).size);
  return best;
}

Rational amplify_bound(int blocks, int k0, int n0, const Rational& epsilon, const Rational& c0) {
  Rational nb = blocks;
  Rational agree = nb / k0 + epsilon * nb;
  Rational differ = nb * (k0 - 1) / k0 - epsilon * nb;
  return agree * n0 / 2 + differ * c0 * n0 + nb / 2;
}

AmplifyResult amplify(const ChainSpec& spec, int workers) {
  const int k0 = static_cast<int>(spec.base.size());
  if (k0 < 2) throw InvalidInput("amplify needs at least two base cycles");
  const int n0 = spec.base[0].order();
  for (const auto& c : spec.base)
    if (c.order() != n0) throw InvalidInput("amplify: base cycles differ in order");
  if (spec.blocks < 2 || spec.blocks % 2 != 0) throw InvalidInput("amplify needs an even block count N >= 2");
  if (spec.count < 2) throw InvalidInput("amplify needs m >= 2");
  if (spec.epsilon < 0) throw InvalidInput("amplify needs epsilon >= 0");
  workers = std::max(1, workers);

  AmplifyResult res;
  res.c0 = spec.c0 ? *spec.c0 : Rational(base_pair_alpha(spec.base), n0);
  res.agreement_cap = Rational(spec.blocks) / k0 + spec.epsilon * spec.blocks;
  res.bound = amplify_bound(spec.blocks, k0, n0, spec.epsilon, res.c0);

  auto candidate = [&](int j, long long attempt) {
    Rng rng(spec.seed, {static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(attempt)});
    std::vector<int> chain(static_cast<std::size_t>(spec.blocks));
    for (auto& c : chain) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(k0)));
    return chain;
  };
  auto acceptable = [&](const std::vector<int>& chain) {
    for (const auto& prev : res.chains)
      if (Rational(block_agreement(prev, chain)) > res.agreement_cap) return false;
    return true;
  };

  for (int j = 0; j < spec.count; ++j) {
    std::optional<std::vector<int>> chosen;
    for (long long base = 0; !chosen && base < spec.max_attempts; base += workers) {
      long long batch = std::min<long long>(workers, spec.max_attempts - base);
      std::vector<std::future<std::optional<std::vector<int>>>> futs;
      for (long long t = 0; t < batch; ++t)
        futs.push_back(std::async(batch > 1 ? std::launch::async : std::launch::deferred,
                                  [&, t]() -> std::optional<std::vector<int>> {
                                    auto c = candidate(j, base + t);
                                    if (acceptable(c)) return c;
                                    return std::nullopt;
                                  }));
      for (long long t = 0; t < batch; ++t) {
        auto r = futs[t].get();
        if (!chosen && r) {
          chosen = std::move(r);
          res.attempts += t + 1;
        }
      }
      if (!chosen) res.attempts += batch;
    }
    if (!chosen)
      throw LimitExceeded("amplify: chain " + std::to_string(j) + " exhausted " + std::to_string(spec.max_attempts) +
                          " attempts (seed " + std::to_string(spec.seed) + ")");
    res.chains.push_back(std::move(*chosen));
  }

  const int n = spec.blocks * n0;
  for (const auto& chain : res.chains) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int a = 0; a < spec.blocks; ++a) {
      auto seq = spec.base[chain[a]].sequence();
      std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), 0), seq.end());
      for (int& v : seq) v += a * n0;
      if (a % 2 == 0) std::reverse(seq.begin(), seq.end());
      order.insert(order.end(), seq.begin(), seq.end());
    }
    res.cycles.push_back(make_cycle(n, std::move(order)));
  }
  return res;
}

}  // namespace twomilton
