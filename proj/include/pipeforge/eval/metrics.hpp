#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "pipeforge/core/error.hpp"

namespace pipeforge::eval {

// Unweighted mean of per-class F1 over the classes present in `labels`. A
// class with no true positives scores 0.
template <typename T>
double macro_f1(const std::vector<T>& predictions, const std::vector<T>& labels) {
  if (predictions.size() != labels.size()) throw LengthMismatch("predictions and labels differ in length");
  if (labels.empty()) throw InvalidArgument("macro_f1 needs at least one element");
  struct Counts {
    std::size_t tp = 0, fp = 0, fn = 0;
  };
  std::map<T, Counts> per_class;
  for (const auto& l : labels) per_class[l];
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (predictions[i] == labels[i]) {
      ++per_class[labels[i]].tp;
    } else {
      ++per_class[labels[i]].fn;
      if (auto it = per_class.find(predictions[i]); it != per_class.end()) ++it->second.fp;
    }
  }
  double sum = 0.0;
  for (const auto& [cls, c] : per_class) {
    const std::size_t denom = 2 * c.tp + c.fp + c.fn;
    sum += denom == 0 ? 0.0 : 2.0 * static_cast<double>(c.tp) / static_cast<double>(denom);
  }
  return sum / static_cast<double>(per_class.size());
}

inline double r2(const std::vector<double>& predictions, const std::vector<double>& targets) {
  if (predictions.size() != targets.size()) throw LengthMismatch("predictions and targets differ in length");
  if (targets.size() < 2) throw InvalidArgument("r2 needs at least two elements");
  const double mean = std::accumulate(targets.begin(), targets.end(), 0.0) / static_cast<double>(targets.size());
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    ss_res += (targets[i] - predictions[i]) * (targets[i] - predictions[i]);
    ss_tot += (targets[i] - mean) * (targets[i] - mean);
  }
  if (ss_tot == 0.0) throw ZeroVariance("targets have zero variance");
  return 1.0 - ss_res / ss_tot;
}

// Mean reciprocal rank of the best pipeline's 1-based position.
inline double mrr(const std::vector<int>& ranks) {
  if (ranks.empty()) throw InvalidArgument("mrr needs at least one rank");
  double sum = 0.0;
  for (int r : ranks) {
    if (r < 1) throw InvalidArgument("ranks start at 1");
    sum += 1.0 / static_cast<double>(r);
  }
  return sum / static_cast<double>(ranks.size());
}

// Ranks with ties sharing their average position (1-based).
inline std::vector<double> average_ranks(const std::vector<double>& xs) {
  std::vector<std::size_t> idx(xs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && xs[idx[j + 1]] == xs[idx[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) out[idx[k]] = avg;
    i = j + 1;
  }
  return out;
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) throw DegenerateSequence("constant sequence has no rank correlation");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

// Spearman correlation of two operator-id sequences over their common
// prefix (the shorter length).
inline double diversity_correlation(const std::vector<int>& run_a, const std::vector<int>& run_b) {
  const std::size_t n = std::min(run_a.size(), run_b.size());
  if (n < 2) throw InvalidArgument("need at least two aligned positions");
  const std::vector<double> a(run_a.begin(), run_a.begin() + static_cast<std::ptrdiff_t>(n));
  const std::vector<double> b(run_b.begin(), run_b.begin() + static_cast<std::ptrdiff_t>(n));
  return pearson(average_ranks(a), average_ranks(b));
}

struct TTestResult {
  double t = 0.0;
  double degrees_of_freedom = 0.0;
  double p_two_tailed = 1.0;
};

// Paired two-tailed t-test on per-item score differences.
inline TTestResult paired_t_test(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw LengthMismatch("paired samples differ in length");
  if (a.size() < 2) throw InvalidArgument("t-test needs at least two pairs");
  const double n = static_cast<double>(a.size());
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  const double mean = std::accumulate(d.begin(), d.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : d) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (n - 1.0));
  if (sd == 0.0) throw ZeroVariance("paired differences have zero variance");
  TTestResult r;
  r.t = mean / (sd / std::sqrt(n));
  r.degrees_of_freedom = n - 1.0;
  boost::math::students_t dist(r.degrees_of_freedom);
  r.p_two_tailed = 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(r.t)));
  return r;
}

}  // namespace pipeforge::eval
