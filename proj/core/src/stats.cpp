#include "netform/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netform {

KsResult ks_uniformity_test(const std::vector<double>& samples) {
  if (samples.empty()) {
    throw std::invalid_argument("ks test: empty sample");
  }
  std::vector<double> sorted(samples);
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double x = std::clamp(sorted[i], 0.0, 1.0);
    d = std::max(d, (i + 1) / n - x);
    d = std::max(d, x - i / n);
  }
  const double sqrt_n = std::sqrt(n);
  const double lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * d;
  return {d, kolmogorov_tail(lambda)};
}

double kolmogorov_tail(double lambda) {
  if (lambda < 1e-8) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-16) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

namespace {

// Continued fraction for the incomplete beta (Lentz's method).
double beta_cont_frac(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-15;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double beta_cdf(double x, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) {
    throw std::invalid_argument("beta cdf: shapes must be positive");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double ln_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                       a * std::log(x) + b * std::log1p(-x);
  const double bt = std::exp(ln_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return bt * beta_cont_frac(a, b, x) / a;
  }
  return 1.0 - bt * beta_cont_frac(b, a, 1.0 - x) / b;
}

KsResult beta_marginal_test(const std::vector<double>& samples, double a,
                            double b) {
  if (!(a > 0.0 && b > 0.0)) {
    throw std::invalid_argument("beta test: shapes must be positive");
  }
  std::vector<double> transformed;
  transformed.reserve(samples.size());
  for (double x : samples) transformed.push_back(beta_cdf(x, a, b));
  return ks_uniformity_test(transformed);
}

double pearson_correlation(const std::vector<double>& x,
                           const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("correlation: need two equal-length samples");
  }
  const double mx = mean(x);
  const double my = mean(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

double mean(const std::vector<double>& x) {
  if (x.empty()) throw std::invalid_argument("mean: empty sample");
  double sum = 0.0;
  for (double v : x) sum += v;
  return sum / static_cast<double>(x.size());
}

double median(std::vector<double> x) {
  if (x.empty()) throw std::invalid_argument("median: empty sample");
  std::sort(x.begin(), x.end());
  const std::size_t m = x.size() / 2;
  if (x.size() % 2 == 1) return x[m];
  return 0.5 * (x[m - 1] + x[m]);
}

}  // namespace netform
