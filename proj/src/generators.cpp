#include "ordmatch/generators.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>

#include "ordmatch/errors.hpp"
#include "ordmatch/log.hpp"
#include "ordmatch/rng.hpp"
#include "ordmatch/views.hpp"

namespace ordmatch {

namespace {

std::string tagged_name(const char* fmt, ...) {
  char buf[96];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, ap);
  va_end(ap);
  return buf;
}

}  // namespace

Instance gen_euclidean(int n, int dim, uint64_t seed) {
  if (n < 1) throw ValidationError("gen_euclidean: n must be >= 1");
  if (dim < 1) throw ValidationError("gen_euclidean: dim must be >= 1");
  Rng rng(seed);
  std::vector<double> xs(static_cast<size_t>(n) * dim);
  std::vector<double> ys(static_cast<size_t>(n) * dim);
  for (double& v : xs) v = rng.uniform_real();
  for (double& v : ys) v = rng.uniform_real();
  std::vector<double> w(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0;
      for (int d = 0; d < dim; ++d) {
        double diff = xs[static_cast<size_t>(i) * dim + d] -
                      ys[static_cast<size_t>(j) * dim + d];
        s += diff * diff;
      }
      w[static_cast<size_t>(i) * n + j] = std::sqrt(s);
    }
  return Instance::make(
      n, std::move(w),
      tagged_name("euclidean-n%d-d%d-s%llu", n, dim,
                  static_cast<unsigned long long>(seed)));
}

Instance gen_figure2(int n) {
  if (n < 1) throw ValidationError("gen_figure2: n must be >= 1");
  std::vector<double> w(static_cast<size_t>(n) * n, 1.0);
  w[0] = 3.0;
  return Instance::make(n, std::move(w), tagged_name("figure2-n%d", n));
}

namespace {

Instance lb_two_sided_common(double eps, double ac, double ad, double bc,
                             double bd, const char* tag) {
  if (!(eps > 0 && eps < 1.0 / 3.0))
    throw ValidationError("gen_lb_two_sided: eps must lie in (0, 1/3)");
  // rows: a, b; columns: c, d
  std::vector<double> w = {ac, ad, bc, bd};
  return Instance::make(2, std::move(w), tagged_name("lb-two-sided-%s", tag));
}

}  // namespace

Instance gen_lb_two_sided_w1(double eps) {
  return lb_two_sided_common(eps, 1 + eps, 1, 3, 1 + eps, "w1");
}

Instance gen_lb_two_sided_w2(double eps) {
  return lb_two_sided_common(eps, 1 - eps, eps, 1, 1 - eps, "w2");
}

Instance gen_lb_one_sided(int n, double nu) {
  if (n < 1) throw ValidationError("gen_lb_one_sided: n must be >= 1");
  if (!(nu >= 0 && nu <= 1))
    throw ValidationError("gen_lb_one_sided: nu must lie in [0, 1]");
  std::vector<double> w(static_cast<size_t>(n) * n, 1.0);
  const auto heavy_rows = budget_floor(nu, n);
  for (int i = 0; i < heavy_rows; ++i)
    for (int j = 0; j <= i; ++j) w[static_cast<size_t>(i) * n + j] = 3.0;
  return Instance::make(n, std::move(w), tagged_name("lb-one-sided-n%d", n));
}

Instance gen_beta_bounded(int n, double beta, uint64_t seed) {
  if (n < 1) throw ValidationError("gen_beta_bounded: n must be >= 1");
  if (beta < 1) throw ValidationError("gen_beta_bounded: beta must be >= 1");
  Rng rng(seed);
  std::vector<double> w(static_cast<size_t>(n) * n);
  for (double& v : w) v = rng.uniform_real(1.0, beta);
  return Instance::make(
      n, std::move(w),
      tagged_name("beta-bounded-n%d-s%llu", n,
                  static_cast<unsigned long long>(seed)));
}

Instance gen_metric_closure(int n, uint64_t seed) {
  if (n < 1) throw ValidationError("gen_metric_closure: n must be >= 1");
  Rng rng(seed);
  std::vector<double> w(static_cast<size_t>(n) * n);
  for (double& v : w) v = rng.uniform_real(1.0, 10.0);
  // Cap every entry at its cheapest three-hop detour until nothing moves.
  // Weights only decrease and every pass propagates caps one more hop, so
  // a fixpoint arrives within n^2 passes.
  bool changed = true;
  int passes = 0;
  while (changed) {
    if (++passes > n * n + 1)
      throw ValidationError("gen_metric_closure: capping failed to converge");
    changed = false;
    for (int i1 = 0; i1 < n; ++i1)
      for (int j1 = 0; j1 < n; ++j1) {
        double cap = w[static_cast<size_t>(i1) * n + j1];
        for (int i2 = 0; i2 < n; ++i2) {
          if (i2 == i1) continue;
          for (int j2 = 0; j2 < n; ++j2) {
            if (j2 == j1) continue;
            double hop = w[static_cast<size_t>(i1) * n + j2] +
                         w[static_cast<size_t>(i2) * n + j1] +
                         w[static_cast<size_t>(i2) * n + j2];
            if (hop < cap) cap = hop;
          }
        }
        if (cap < w[static_cast<size_t>(i1) * n + j1]) {
          w[static_cast<size_t>(i1) * n + j1] = cap;
          changed = true;
        }
      }
  }
  log_debug("gen_metric_closure: n=%d converged after %d passes", n, passes);
  return Instance::make(
      n, std::move(w),
      tagged_name("metric-closure-n%d-s%llu", n,
                  static_cast<unsigned long long>(seed)));
}

Instance generate(const GenSpec& spec) {
  if (spec.kind == "euclidean") return gen_euclidean(spec.n, spec.dim, spec.seed);
  if (spec.kind == "metric-closure") return gen_metric_closure(spec.n, spec.seed);
  if (spec.kind == "figure2") return gen_figure2(spec.n);
  if (spec.kind == "lb-two-sided") {
    if (spec.variant == "w2") return gen_lb_two_sided_w2(spec.eps);
    if (spec.variant.empty() || spec.variant == "w1")
      return gen_lb_two_sided_w1(spec.eps);
    throw ValidationError("generate: lb-two-sided variant must be w1 or w2");
  }
  if (spec.kind == "lb-one-sided") return gen_lb_one_sided(spec.n, spec.nu);
  if (spec.kind == "beta-bounded") return gen_beta_bounded(spec.n, spec.beta, spec.seed);
  throw ValidationError("generate: unknown kind '" + spec.kind + "'");
}

}  // namespace ordmatch
