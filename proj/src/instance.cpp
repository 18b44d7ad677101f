#include "ordmatch/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ordmatch/errors.hpp"

namespace ordmatch {

Instance Instance::make(int n, std::vector<double> w, std::string name) {
  if (n < 1) throw ValidationError("instance: n must be >= 1");
  if (w.size() != static_cast<size_t>(n) * n)
    throw ValidationError("instance: weight matrix must be n x n");
  for (double v : w) {
    if (!std::isfinite(v)) throw ValidationError("instance: weights must be finite");
    if (v < 0) throw ValidationError("instance: weights must be non-negative");
  }
  Instance inst;
  inst.n = n;
  inst.weights = std::move(w);
  inst.name = std::move(name);
  return inst;
}

double Instance::total_weight() const {
  double s = 0;
  for (double v : weights) s += v;
  return s;
}

double Instance::max_weight() const {
  return *std::max_element(weights.begin(), weights.end());
}

double Instance::min_weight() const {
  return *std::min_element(weights.begin(), weights.end());
}

std::string Instance::id() const {
  if (!name.empty()) return name;
  // FNV-1a over the raw matrix bytes, plus n.
  uint64_t h = 1469598103934665603ull;
  auto eat = [&h](const unsigned char* p, size_t len) {
    for (size_t i = 0; i < len; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
  };
  eat(reinterpret_cast<const unsigned char*>(&n), sizeof(n));
  eat(reinterpret_cast<const unsigned char*>(weights.data()),
      weights.size() * sizeof(double));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "inst-%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

bool check_metric(const Instance& inst) {
  const int n = inst.n;
  for (int x1 = 0; x1 < n; ++x1)
    for (int y1 = 0; y1 < n; ++y1) {
      const double w11 = inst.at(x1, y1);
      for (int x2 = 0; x2 < n; ++x2)
        for (int y2 = 0; y2 < n; ++y2) {
          if (w11 > inst.at(x1, y2) + inst.at(x2, y1) + inst.at(x2, y2))
            return false;
        }
    }
  return true;
}

std::optional<double> beta_ratio(const Instance& inst) {
  const double lo = inst.min_weight();
  if (lo <= 0) return std::nullopt;
  return inst.max_weight() / lo;
}

bool check_beta(const Instance& inst, double beta) {
  auto r = beta_ratio(inst);
  return r.has_value() && *r <= beta;
}

}  // namespace ordmatch
