#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twomilton/bounds.hpp"
#include "twomilton/constructions.hpp"
#include "twomilton/corpus.hpp"
#include "twomilton/errors.hpp"
#include "twomilton/family_io.hpp"
#include "twomilton/independence.hpp"
#include "twomilton/k4.hpp"
#include "twomilton/limits.hpp"
#include "twomilton/rational.hpp"
#include "twomilton/reduction.hpp"
#include "twomilton/search.hpp"

using namespace twomilton;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string out;
  int workers = 1;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FamilyDocument load(const std::string& path) { return parse_family(read_input(path)); }

void emit(const Common& common, const std::string& text) {
  std::cout << text;
  if (!common.out.empty()) write_text_file(common.out, text);
}

class Report {
 public:
  Report(std::string command, json parameters)
      : start_(std::chrono::steady_clock::now()),
        body_{{"command", std::move(command)}, {"parameters", std::move(parameters)}} {}

  json& result() { return body_["result"]; }
  void seed(std::uint64_t s) { body_["seed"] = s; }
  void certificate(const std::string& path) { body_["certificates"].push_back(path); }

  std::string finish(const std::string& status) {
    body_["status"] = status;
    body_["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return body_.dump(2) + "\n";
  }

 private:
  std::chrono::steady_clock::time_point start_;
  json body_;
};

/// The graph a query runs on: a selected pair of cycles, or the whole
/// document graph (edge list, else union of all cycles).
struct Target {
  UGraph g;
  std::vector<HamCycle> cycles;
  json where;
};

std::vector<Target> targets(const FamilyDocument& doc, const std::vector<int>& pair, bool all_pairs) {
  auto pick = [&](int i, int j) {
    int m = static_cast<int>(doc.cycles.size());
    if (i < 0 || j < 0 || i >= m || j >= m || i == j)
      throw InvalidInput("pair indices must be two distinct cycles of the document");
    return Target{graph_union(doc.cycles[i], doc.cycles[j]), {doc.cycles[i], doc.cycles[j]}, json::array({i, j})};
  };
  if (all_pairs) {
    std::vector<Target> out;
    int m = static_cast<int>(doc.cycles.size());
    if (m < 2) throw InvalidInput("--all-pairs needs at least two cycles");
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) out.push_back(pick(i, j));
    return out;
  }
  if (!pair.empty()) {
    if (pair.size() != 2) throw InvalidInput("--pair takes two indices");
    return {pick(pair[0], pair[1])};
  }
  return {Target{doc.graph(), doc.cycles, "document"}};
}

FamilyDocument pair_document(const Target& t, int n) {
  FamilyDocument d;
  d.n = n;
  if (t.cycles.empty() || t.cycles.size() > 2) {
    d.edges = t.g.edges();
  } else {
    d.cycles = t.cycles;
  }
  return d;
}

json cover_json(const std::optional<CoverCertificate>& c) {
  if (!c) return nullptr;
  return c->blocks;
}

// ---------------------------------------------------------------- queries

struct QueryArgs {
  std::string input;
  std::vector<int> pair;
  bool all_pairs = false;
};

void add_query_options(CLI::App* sub, QueryArgs& q) {
  sub->add_option("input", q.input, "family document, or - for stdin")->required();
  sub->add_option("--pair", q.pair, "two cycle indices (0-based)")->expected(2)->delimiter(',');
  sub->add_flag("--all-pairs", q.all_pairs, "every pair of cycles");
}

int cmd_alpha(const QueryArgs& q, const Common& common) {
  auto doc = load(q.input);
  Report rep("alpha", {{"input", q.input}, {"pair", q.pair}, {"all_pairs", q.all_pairs}});
  FamilyDocument cert_doc;
  cert_doc.n = doc.n;
  cert_doc.cycles = doc.cycles;
  cert_doc.edges = doc.edges;
  cert_doc.certificates["independent_sets"] = json::array();
  bool verified = true;
  for (const auto& t : targets(doc, q.pair, q.all_pairs)) {
    auto a = alpha_exact(t.g);
    IndepCertificate claim = a.certificate;
    claim.claimed_alpha = a.size;
    bool ok = verify_independent(t.g, claim);
    verified = verified && ok;
    rep.result()["values"].push_back({{"target", t.where}, {"alpha", a.size}, {"set", a.certificate.vertices}});
    cert_doc.certificates["independent_sets"].push_back(
        {{"target", t.where}, {"alpha", a.size}, {"vertices", a.certificate.vertices}});
  }
  if (!common.out.empty()) {
    write_text_file(common.out, serialize_family(cert_doc));
    rep.certificate(common.out);
  }
  std::cout << rep.finish(verified ? "verified" : "falsified");
  return verified ? kExitOk : kExitFalsified;
}

int cmd_zeta(const QueryArgs& q, const Common& common) {
  auto doc = load(q.input);
  Report rep("zeta", {{"input", q.input}, {"pair", q.pair}, {"all_pairs", q.all_pairs}});
  for (const auto& t : targets(doc, q.pair, q.all_pairs)) {
    auto k4s = find_k4s(t.g);
    rep.result()["values"].push_back({{"target", t.where}, {"zeta", k4s.size()}, {"k4s", k4s}});
  }
  emit(common, rep.finish("ok"));
  return kExitOk;
}

int cmd_psi(const QueryArgs& q, const Common& common) {
  auto doc = load(q.input);
  Report rep("psi", {{"input", q.input}, {"pair", q.pair}, {"all_pairs", q.all_pairs}});
  for (const auto& t : targets(doc, q.pair, q.all_pairs)) {
    auto p = psi_exact(t.g);
    rep.result()["values"].push_back({{"target", t.where}, {"psi", p.count}, {"paths", p.paths},
                                      {"psi_eligible", psi_eligible(t.g)}});
  }
  emit(common, rep.finish("ok"));
  return kExitOk;
}

int cmd_cover(const QueryArgs& q, const std::string& kind, const Common& common) {
  if (kind != "k4" && kind != "triangle") throw InvalidInput("--kind must be k4 or triangle");
  auto doc = load(q.input);
  Report rep("cover", {{"input", q.input}, {"pair", q.pair}, {"all_pairs", q.all_pairs}, {"kind", kind}});
  for (const auto& t : targets(doc, q.pair, q.all_pairs)) {
    auto c = kind == "k4" ? find_k4_cover(t.g) : find_triangle_cover(t.g);
    rep.result()["values"].push_back({{"target", t.where}, {"found", c.has_value()}, {"blocks", cover_json(c)}});
  }
  emit(common, rep.finish("ok"));
  return kExitOk;
}

// ---------------------------------------------------------------- reduce

int cmd_reduce(const QueryArgs& q, bool diagnostic, const std::string& reproducer, const Common& common) {
  auto doc = load(q.input);
  Report rep("reduce", {{"input", q.input}, {"pair", q.pair}, {"diagnostic", diagnostic}});
  ReductionResult r;
  if (diagnostic) {
    auto t = targets(doc, q.pair, false).front();
    r = technical_reduce_diagnostic(t.g);
  } else {
    std::vector<int> pair = q.pair.empty() ? std::vector<int>{0, 1} : q.pair;
    if (doc.cycles.size() < 2) throw InvalidInput("reduce needs a document with two cycles");
    auto t = targets(doc, pair, false).front();
    try {
      r = technical_reduce(t.cycles[0], t.cycles[1]);
    } catch (const Falsification& f) {
      std::string path = reproducer.empty() ? "reduce_reproducer.json" : reproducer;
      write_text_file(path, f.reproducer());
      rep.result()["failure"] = f.what();
      rep.certificate(path);
      emit(common, rep.finish("falsified"));
      return kExitFalsified;
    }
  }
  auto& res = rep.result();
  res["n"] = r.g.order();
  res["zeta"] = zeta(r.g);
  res["h_order"] = r.h.order();
  res["h_edges"] = r.h.edge_count();
  res["removed_k4s"] = r.removed_k4s;
  res["trace"] = trace_to_json(r.trace);
  res["violations"] = r.violations;
  if (diagnostic) {
    res["h_connected"] = r.h.is_connected();
    res["h_k4_free"] = find_k4s(r.h).empty();
    emit(common, rep.finish(r.violations.empty() ? "ok" : "step-failure-reported"));
    return kExitOk;
  }
  auto pc = check_postconditions(r);
  res["postconditions"] = {{"connected", pc.connected},         {"k4_free", pc.k4_free},
                           {"degree_dominated", pc.degree_dominated}, {"strict_drop", pc.strict_drop},
                           {"lift_property", pc.lift_property}, {"replay_matches", pc.replay_matches},
                           {"lift_cases", pc.lift_cases},       {"failures", pc.failures}};
  auto ah = alpha_exact(r.h);
  auto lifted = lift_independent(r, ah.certificate);
  bool independent = verify_independent(r.g, lifted);
  res["alpha_h"] = ah.size;
  res["lifted"] = lifted.vertices;
  res["lifted_size"] = lifted.vertices.size();
  res["lifted_independent"] = independent;
  bool ok = pc.ok() && independent;
  if (!ok) {
    std::string path = reproducer.empty() ? "reduce_reproducer.json" : reproducer;
    write_text_file(path, reduction_reproducer(r));
    rep.certificate(path);
  }
  emit(common, rep.finish(ok ? "verified" : "falsified"));
  return ok ? kExitOk : kExitFalsified;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string name;
  int n = 9, k = 3, u = 3, blocks = 4, count = 6;
  std::string epsilon = "1/20";
  std::optional<std::uint64_t> seed;
};

int cmd_construct(const ConstructArgs& a, const Common& common) {
  FamilyDocument doc;
  json params = {{"name", a.name}};
  json claims = json::array();
  if (a.name == "circulant") {
    doc.cycles = circulant_family(a.n);
    params["n"] = a.n;
    claims = {"pairwise-alpha<=" + std::to_string(a.n / 3), "pairwise-triangle-covered"};
  } else if (a.name == "k4-strip") {
    auto [c1, c2] = k4_strip(a.k);
    doc.cycles = {c1, c2};
    params["k"] = a.k;
    claims = {"pairwise-alpha=" + std::to_string(a.k), "pairwise-k4-covered"};
  } else if (a.name == "triple-n8") {
    doc.cycles = triple_n8();
    claims = {"pairwise-alpha=2", "pairwise-k4-covered"};
  } else if (a.name == "counterexample") {
    UGraph g = counterexample_strip(a.u);
    doc.n = g.order();
    doc.edges = g.edges();
    params["u"] = a.u;
    claims = {"alpha=" + std::to_string(2 * a.u), "zeta=" + std::to_string(a.u)};
  } else if (a.name == "exceptional") {
    auto e = find_exceptional(a.n);
    doc.cycles = {e.c1, e.c2};
    params["n"] = a.n;
    claims = {"pairwise-alpha=" + std::to_string(a.n / 4), "pairwise-zeta=" + std::to_string(a.n / 4 - 1)};
  } else if (a.name == "amplify") {
    ChainSpec spec;
    spec.base = circulant_family(a.n);
    spec.blocks = a.blocks;
    spec.count = a.count;
    spec.seed = *a.seed;
    spec.epsilon = parse_rational(a.epsilon);
    auto res = amplify(spec, common.workers);
    doc.cycles = res.cycles;
    params.update({{"base", "circulant"}, {"base_n", a.n}, {"blocks", a.blocks}, {"count", a.count},
                   {"epsilon", a.epsilon}});
    doc.header["bound"] = to_string(res.bound);
    doc.header["c0"] = to_string(res.c0);
    doc.header["chains"] = res.chains;
    claims = {"pairwise-alpha<=" + to_string(floor(res.bound))};
  } else {
    throw InvalidInput("unknown construction '" + a.name +
                       "' (circulant, k4-strip, triple-n8, counterexample, exceptional, amplify)");
  }
  if (!doc.cycles.empty()) doc.n = doc.cycles.front().order();
  doc.header["generator"] = a.name;
  doc.header["parameters"] = params;
  doc.header["seed"] = *a.seed;
  doc.header["claims"] = claims;
  emit(common, serialize_family(doc));
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct ClaimFailure {
  std::string message;
  FamilyDocument reproducer;
};

std::optional<ClaimFailure> check_pairwise(const FamilyDocument& doc, const std::string& claim, int workers) {
  auto parse_int = [&](std::size_t at) {
    try {
      return std::stoi(claim.substr(at));
    } catch (const std::exception&) {
      throw InvalidInput("bad claim '" + claim + "'");
    }
  };
  std::function<std::optional<std::string>(const UGraph&)> test;
  if (claim.rfind("pairwise-alpha<=", 0) == 0) {
    int k = parse_int(16);
    test = [k](const UGraph& g) -> std::optional<std::string> {
      if (has_independent_set(g, k + 1)) return "alpha exceeds " + std::to_string(k);
      return std::nullopt;
    };
  } else if (claim.rfind("pairwise-alpha=", 0) == 0) {
    int k = parse_int(15);
    test = [k](const UGraph& g) -> std::optional<std::string> {
      int a = alpha_exact(g).size;
      if (a != k) return "alpha is " + std::to_string(a);
      return std::nullopt;
    };
  } else if (claim.rfind("pairwise-zeta=", 0) == 0) {
    int k = parse_int(14);
    test = [k](const UGraph& g) -> std::optional<std::string> {
      int z = zeta(g);
      if (z != k) return "zeta is " + std::to_string(z);
      return std::nullopt;
    };
  } else if (claim == "pairwise-k4-covered") {
    test = [](const UGraph& g) -> std::optional<std::string> {
      auto c = find_k4_cover(g);
      if (!c || !check_cover(g, *c)) return std::string("no K4 cover");
      return std::nullopt;
    };
  } else if (claim == "pairwise-triangle-covered") {
    test = [](const UGraph& g) -> std::optional<std::string> {
      auto c = find_triangle_cover(g);
      if (!c || !check_cover(g, *c)) return std::string("no triangle cover");
      return std::nullopt;
    };
  } else {
    throw InvalidInput("unknown claim '" + claim + "'");
  }
  auto pairs = targets(doc, {}, true);
  std::vector<std::optional<std::string>> verdict(pairs.size());
  std::size_t next = 0;
  while (next < pairs.size()) {
    std::vector<std::future<void>> batch;
    for (int w = 0; w < std::max(1, workers) && next < pairs.size(); ++w, ++next)
      batch.push_back(std::async(std::launch::async, [&, i = next] { verdict[i] = test(pairs[i].g); }));
    for (auto& f : batch) f.get();
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (verdict[i]) return ClaimFailure{claim + " fails on pair " + pairs[i].where.dump() + ": " + *verdict[i],
                                        pair_document(pairs[i], doc.n)};
  return std::nullopt;
}

std::optional<ClaimFailure> check_graph_claim(const FamilyDocument& doc, const std::string& claim) {
  UGraph g = doc.graph();
  auto value = [&](std::size_t at) { return std::stoi(claim.substr(at)); };
  if (claim.rfind("alpha=", 0) == 0) {
    int a = alpha_exact(g).size;
    if (a != value(6)) return ClaimFailure{claim + " fails: alpha is " + std::to_string(a), doc};
  } else if (claim.rfind("zeta=", 0) == 0) {
    int z = zeta(g);
    if (z != value(5)) return ClaimFailure{claim + " fails: zeta is " + std::to_string(z), doc};
  } else {
    throw InvalidInput("unknown claim '" + claim + "'");
  }
  return std::nullopt;
}

std::optional<ClaimFailure> check_certificates(const FamilyDocument& doc) {
  UGraph g = doc.graph();
  const auto& certs = doc.certificates;
  auto target_graph = [&](const json& where) -> UGraph {
    if (where.is_array()) {
      auto t = targets(doc, where.get<std::vector<int>>(), false);
      return t.front().g;
    }
    return g;
  };
  if (certs.contains("independent_sets")) {
    for (const auto& c : certs["independent_sets"]) {
      UGraph h = target_graph(c.value("target", json("document")));
      IndepCertificate cert{c.at("vertices").get<std::vector<int>>(), c.at("alpha").get<int>()};
      if (!verify_independent(h, cert))
        return ClaimFailure{"independent-set certificate for " + c.value("target", json("document")).dump() +
                                " does not verify",
                            doc};
      if (alpha_exact(h).size != *cert.claimed_alpha)
        return ClaimFailure{"claimed alpha is not the maximum", doc};
    }
  }
  for (const char* key : {"k4_covers", "triangle_covers"}) {
    if (!certs.contains(key)) continue;
    for (const auto& c : certs[key]) {
      CoverCertificate cert{std::string(key) == "k4_covers" ? CoverKind::k4 : CoverKind::triangle,
                            c.at("blocks").get<std::vector<std::vector<int>>>()};
      if (!check_cover(target_graph(c.value("target", json("document"))), cert))
        return ClaimFailure{std::string(key) + " certificate does not verify", doc};
    }
  }
  return std::nullopt;
}

int cmd_verify(const std::string& input, std::vector<std::string> claims, const std::string& reproducer,
               const Common& common) {
  auto doc = load(input);
  if (claims.empty() && doc.header.contains("claims")) claims = doc.header["claims"].get<std::vector<std::string>>();
  if (claims.empty() && doc.certificates.empty()) throw InvalidInput("nothing to verify: pass --claim");
  Report rep("verify", {{"input", input}, {"claims", claims}});
  std::optional<ClaimFailure> failure;
  for (const auto& claim : claims) {
    if (claim == "hamiltonian") {
      // Every cycle was validated when the document was parsed.
    } else if (claim.rfind("pairwise-", 0) == 0) {
      failure = check_pairwise(doc, claim, common.workers);
    } else {
      failure = check_graph_claim(doc, claim);
    }
    rep.result()["claims"].push_back({{"claim", claim}, {"holds", !failure}});
    if (failure) break;
  }
  if (!failure && !doc.certificates.empty()) {
    failure = check_certificates(doc);
    rep.result()["certificates_checked"] = true;
  }
  if (failure) {
    std::string path = reproducer.empty() ? "verify_reproducer.json" : reproducer;
    failure->reproducer.header["failure"] = failure->message;
    write_text_file(path, serialize_family(failure->reproducer));
    rep.result()["failure"] = failure->message;
    rep.certificate(path);
  }
  emit(common, rep.finish(failure ? "falsified" : "verified"));
  return failure ? kExitFalsified : kExitOk;
}

// ---------------------------------------------------------------- search-f

int cmd_search_f(int n, int k, bool lower_bound, std::uint64_t seed, const Common& common) {
  if (n < 3) throw InvalidInput("n must be at least 3");
  if (n > limits().exhaustive_f_max_n && !lower_bound)
    throw InvalidInput("n = " + std::to_string(n) + " is beyond the exhaustive limit " +
                       std::to_string(limits().exhaustive_f_max_n) + "; pass --lower-bound for a labeled lower bound");
  auto r = compute_f(n, k, common.workers, seed);
  Report rep("search-f", {{"n", n}, {"k", k}, {"workers", common.workers}, {"lower_bound", lower_bound}});
  rep.seed(seed);
  FamilyDocument witness;
  witness.n = n;
  witness.cycles = r.witness;
  witness.header = {{"generator", "search-f"}, {"parameters", {{"n", n}, {"k", k}}}, {"seed", seed},
                    {"claims", {"pairwise-alpha<=" + std::to_string(k)}}};
  auto& res = rep.result();
  res["value"] = r.value;
  res["mode"] = r.exhaustive ? "exhaustive" : "lower-bound";
  res["partners"] = r.partners;
  res["orbit_representatives"] = r.orbit_representatives;
  res["compatibility_checks"] = r.compatibility_checks;
  res["filter"] = to_json(r.stats);
  res["search_seconds"] = r.seconds;
  res["audit"] = r.audit;
  res["witness"] = family_to_json(witness);
  if (!common.out.empty()) {
    write_text_file(common.out, serialize_family(witness));
    rep.certificate(common.out);
  }
  std::cout << rep.finish(r.exhaustive ? "verified" : "lower-bound");
  return kExitOk;
}

// ---------------------------------------------------------------- corpus

int cmd_corpus(const std::string& kind, int count, int n_min, int n_max, std::uint64_t seed, const Common& common) {
  if (count < 0) throw InvalidInput("--count must be nonnegative");
  if (kind != "sets" && (n_min < 3 || n_max < n_min || n_max > kMaxVertices))
    throw InvalidInput("need 3 <= n-min <= n-max <= 64");
  std::string text;
  for (int i = 0; i < count; ++i) {
    Rng rng(seed, {static_cast<std::uint64_t>(i)});
    json header = {{"generator", "corpus"}, {"kind", kind}, {"seed", seed}, {"index", i}};
    if (kind == "sets") {
      auto s = random_set_system(rng);
      json line = {{"ground", s.ground},
                   {"x", std::to_string(s.x_num) + "/" + std::to_string(s.x_den)},
                   {"epsilon", std::to_string(s.eps_num) + "/" + std::to_string(s.eps_den)},
                   {"sets", s.sets},
                   {"header", header}};
      text += line.dump() + "\n";
      continue;
    }
    int n = rng.range(n_min, n_max);
    FamilyDocument doc;
    doc.n = n;
    if (kind == "pairs") {
      auto [a, b] = random_pair(n, rng);
      doc.cycles = {a, b};
    } else if (kind == "planted") {
      auto [a, b] = planted_pair(n, rng, n / 4);
      doc.cycles = {a, b};
    } else if (kind == "triples") {
      auto t = random_triple(n, rng);
      doc.cycles = {t.c, t.d1, t.d2};
    } else if (kind == "k4free") {
      doc.edges = random_k4free_graph(n, rng).edges();
    } else {
      throw InvalidInput("unknown corpus kind '" + kind + "' (pairs, planted, triples, k4free, sets)");
    }
    doc.header = header;
    text += serialize_family_line(doc) + "\n";
  }
  emit(common, text);
  return kExitOk;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string x = "1/4", eps = "1/20", c0 = "1/3";
  int k0 = 5, n0 = 9, blocks = 4;
  std::string input;
};

int cmd_bounds(const BoundsArgs& a, const Common& common) {
  Rational x = parse_rational(a.x), eps = parse_rational(a.eps), c0 = parse_rational(a.c0);
  std::vector<std::pair<std::string, Rational>> rows;
  auto t = threshold_lower();
  rows.emplace_back("threshold lower bound 7/26 + min(-z/13 + z^2/2)", t.value);
  rows.emplace_back("  minimizer z", t.minimizer);
  rows.emplace_back("  minimum", t.minimum);
  rows.emplace_back("semirandom rate limit (c0, k0, eps=0)", semirandom_rate_limit(c0, a.k0, 0));
  rows.emplace_back("semirandom rate (n0, c0, k0, eps)", semirandom_rate(a.n0, c0, a.k0, eps));
  rows.emplace_back("q(x, eps)", johnson_q(x, eps));
  rows.emplace_back("delta(x, eps)", delta_fn(x, eps));
  if (eps < 1) {
    rows.emplace_back("iteration increment eps/(1-eps)", iteration_increment(eps));
    rows.emplace_back("iteration length (1-eps)/eps + 1", iteration_length(eps));
  }
  rows.emplace_back("amplify pair bound (N, k0, n0, eps, c0)", amplify_bound(a.blocks, a.k0, a.n0, eps, c0));
  rows.emplace_back("quality slack", quality_slack());

  std::ostringstream os;
  os << "parameters: x=" << a.x << " eps=" << a.eps << " c0=" << a.c0 << " k0=" << a.k0 << " n0=" << a.n0
     << " N=" << a.blocks << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-50s %-16s %s\n", "quantity", "exact", "decimal");
  os << line;
  for (const auto& [name, value] : rows) {
    std::snprintf(line, sizeof line, "%-50s %-16s %s\n", name.c_str(), to_string(value).c_str(),
                  to_decimal(value, 5).c_str());
    os << line;
  }
  bool ok = true;
  if (!a.input.empty()) {
    auto doc = load(a.input);
    auto stats = family_stats(doc.cycles);
    os << "\nfamily: n=" << stats.n << " cycles=" << stats.size << " m(X)=" << to_string(stats.m()) << "\n";
    std::snprintf(line, sizeof line, "%-8s %5s %5s %5s %14s %s\n", "pair", "alpha", "zeta", "psi", "quality", "holds");
    os << line;
    for (const auto& p : stats.pairs) {
      Rational b = quality_bound(stats.n, p.zeta, p.psi);
      bool holds = Rational(p.alpha) >= b;
      ok = ok && holds;
      std::string name = std::to_string(p.i) + "," + std::to_string(p.j);
      std::snprintf(line, sizeof line, "%-8s %5d %5d %5d %14s %s\n", name.c_str(), p.alpha, p.zeta, p.psi,
                    to_string(b).c_str(), holds ? "yes" : "no");
      os << line;
    }
  }
  emit(common, os.str());
  return ok ? kExitOk : kExitFalsified;
}

int run(int argc, char** argv) {
  CLI::App app{"Independent sets in unions of two Hamiltonian cycles"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--out", common.out, "also write the main output to this path");
  app.add_option("--workers", common.workers, "worker threads")->check(CLI::Range(1, 256));
  std::string limits_spec;
  app.add_option("--limits", limits_spec, "solver limits, same syntax as TWOMILTON_LIMITS");

  QueryArgs qa, qz, qp, qc, qr;
  auto* alpha = app.add_subcommand("alpha", "exact independence number with certificate");
  add_query_options(alpha, qa);
  auto* zeta_cmd = app.add_subcommand("zeta", "K4 count");
  add_query_options(zeta_cmd, qz);
  auto* psi = app.add_subcommand("psi", "maximum packing of induced P4s");
  add_query_options(psi, qp);
  std::string cover_kind = "k4";
  auto* cover = app.add_subcommand("cover", "K4 or triangle cover");
  add_query_options(cover, qc);
  cover->add_option("--kind", cover_kind, "k4 or triangle");

  bool diagnostic = false;
  std::string reduce_repro;
  auto* reduce = app.add_subcommand("reduce", "archipelago reduction with lift");
  add_query_options(reduce, qr);
  reduce->add_flag("--diagnostic", diagnostic, "run on any graph of maximum degree 4 and report failing steps");
  reduce->add_option("--reproducer", reduce_repro, "where to write a failure reproducer");

  ConstructArgs ca;
  std::uint64_t construct_seed = 0;
  auto* construct = app.add_subcommand("construct", "emit an explicit family document");
  construct->add_option("name", ca.name, "circulant, k4-strip, triple-n8, counterexample, exceptional, amplify")
      ->required();
  construct->add_option("--n", ca.n, "order (circulant, exceptional) or base order (amplify)");
  construct->add_option("--k", ca.k, "strip block count");
  construct->add_option("--u", ca.u, "counterexample unit count");
  construct->add_option("--blocks", ca.blocks, "amplify: N");
  construct->add_option("--count", ca.count, "amplify: m");
  construct->add_option("--epsilon", ca.epsilon, "amplify: agreement slack");
  construct->add_option("--seed", construct_seed, "random seed")->required();

  std::string verify_input, verify_repro;
  std::vector<std::string> claims;
  auto* verify = app.add_subcommand("verify", "re-check the claims and certificates of a document");
  verify->add_option("input", verify_input, "family document, or - for stdin")->required();
  verify->add_option("--claim", claims,
                     "hamiltonian, pairwise-alpha<=K, pairwise-alpha=K, pairwise-zeta=K, pairwise-k4-covered, "
                     "pairwise-triangle-covered, alpha=K, zeta=K (default: header claims)");
  verify->add_option("--reproducer", verify_repro, "where to write a failure reproducer");

  int fn = 0, fk = 0;
  bool lower_bound = false;
  std::uint64_t f_seed = 1;
  auto* search = app.add_subcommand("search-f", "compute f(n,k)");
  search->add_option("--n", fn, "cycle order")->required();
  search->add_option("--k", fk, "independence bound")->required();
  search->add_flag("--lower-bound", lower_bound, "allow the seeded lower-bound mode beyond the exhaustive range");
  search->add_option("--seed", f_seed, "seed for the lower-bound mode");

  std::string corpus_kind;
  int corpus_count = 100, n_min = 14, n_max = 40;
  std::uint64_t corpus_seed = 0;
  auto* corpus = app.add_subcommand("corpus", "seeded JSON-lines corpora");
  corpus->add_option("kind", corpus_kind, "pairs, planted, triples, k4free, sets")->required();
  corpus->add_option("--count", corpus_count, "number of items");
  corpus->add_option("--n-min", n_min, "smallest order");
  corpus->add_option("--n-max", n_max, "largest order");
  corpus->add_option("--seed", corpus_seed, "random seed")->required();

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "exact bound table, optionally with a family's quality table");
  bounds->add_option("--x", ba.x);
  bounds->add_option("--eps", ba.eps);
  bounds->add_option("--c0", ba.c0);
  bounds->add_option("--k0", ba.k0);
  bounds->add_option("--n0", ba.n0);
  bounds->add_option("--blocks", ba.blocks);
  bounds->add_option("--family", ba.input, "family document for the per-pair table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!limits_spec.empty()) set_limits(parse_limits(limits_spec, limits()));
    if (alpha->parsed()) return cmd_alpha(qa, common);
    if (zeta_cmd->parsed()) return cmd_zeta(qz, common);
    if (psi->parsed()) return cmd_psi(qp, common);
    if (cover->parsed()) return cmd_cover(qc, cover_kind, common);
    if (reduce->parsed()) return cmd_reduce(qr, diagnostic, reduce_repro, common);
    if (construct->parsed()) {
      ca.seed = construct_seed;
      return cmd_construct(ca, common);
    }
    if (verify->parsed()) return cmd_verify(verify_input, claims, verify_repro, common);
    if (search->parsed()) return cmd_search_f(fn, fk, lower_bound, f_seed, common);
    if (corpus->parsed()) return cmd_corpus(corpus_kind, corpus_count, n_min, n_max, corpus_seed, common);
    if (bounds->parsed()) return cmd_bounds(ba, common);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Falsification& e) {
    std::cerr << "falsified: " << e.what() << "\n" << e.reproducer() << "\n";
    return kExitFalsified;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed certificate data: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
