#include "twomilton/limits.hpp"

#include <cstdlib>
#include <mutex>
#include <sstream>

#include "twomilton/errors.hpp"
#include "twomilton/graph.hpp"

namespace twomilton {

namespace {

std::mutex g_limits_mutex;
Limits g_limits;
bool g_loaded = false;

int parse_value(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used != value.size() || v < 0) throw InvalidInput("");
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("bad value for limit '" + key + "': " + value);
  }
}

}  // namespace

Limits parse_limits(const std::string& spec, Limits base) {
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("limit entry needs key=value: " + item);
    std::string key = item.substr(0, eq);
    int v = parse_value(key, item.substr(eq + 1));
    if (key == "alpha") {
      if (v > kMaxVertices) throw InvalidInput("alpha limit cannot exceed " + std::to_string(kMaxVertices));
      base.alpha_max_n = v;
    } else if (key == "psi") {
      if (v > kMaxVertices) throw InvalidInput("psi limit cannot exceed " + std::to_string(kMaxVertices));
      base.psi_max_n = v;
    } else if (key == "enumerate") {
      base.enumerate_max_n = v;
    } else if (key == "exhaustive_f") {
      base.exhaustive_f_max_n = v;
    } else {
      throw InvalidInput("unknown limit key: " + key);
    }
  }
  return base;
}

const Limits& limits() {
  std::lock_guard lock(g_limits_mutex);
  if (!g_loaded) {
    if (const char* env = std::getenv("TWOMILTON_LIMITS")) g_limits = parse_limits(env);
    g_loaded = true;
  }
  return g_limits;
}

void set_limits(const Limits& l) {
  std::lock_guard lock(g_limits_mutex);
  g_limits = l;
  g_loaded = true;
}

}  // namespace twomilton
