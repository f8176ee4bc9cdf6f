// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact l-infinity distance to submodularity for small ground sets.
//
// The nearest submodular g is found by the linear program
//
//   minimize t  s.t.  |g(S) - f(S)| <= t          for every S
//                     g(A u B) + g(A n B) <= g(A) + g(B)  for Cross pairs
//
// solved over h(S) = g(S) - f(S) + t in [0, 2t], which keeps all variables
// non-negative. Every solve is re-checked: the returned g must be
// submodular, must lie within t of f, and the LP dual must yield a
// certificate whose bound matches t.
//
// Certificates. For non-negative weights w_p on constraint pairs, every
// submodular g satisfies sum_S c(S) g(S) <= 0 with
// c = sum_p w_p (1[A u B] + 1[A n B] - 1[A] - 1[B]). Hence
// max_S |f(S) - g(S)| >= (sum_p w_p gap_f(p)) / ||c||_1 for all such g.
// A single pair gives the familiar gap/4.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apxsub/constraints.hpp"
#include "apxsub/filter.hpp"
#include "apxsub/set_function.hpp"
#include "apxsub/simplex.hpp"
#include "apxsub/subset.hpp"

namespace apxsub {

inline constexpr int kDistanceLimit = 9;

struct WeightedPair {
  ConstraintPair pair;
  double weight;
};

struct Certificate {
  std::vector<WeightedPair> pairs;
  double weighted_gap = 0.0;  // sum_p w_p gap_f(p)
  double norm = 0.0;          // ||c||_1
  double bound = 0.0;         // weighted_gap / norm, 0 for an empty family
};

// Recomputes weighted_gap, norm and bound of `cert` from f alone.
inline void evaluate_certificate(const ExplicitFunction& f, Certificate& cert) {
  const int n = f.ground_size();
  std::vector<double> coeff(std::size_t{1} << n, 0.0);
  double total = 0.0;
  for (const auto& [p, w] : cert.pairs) {
    if (w < 0.0) throw std::invalid_argument("certificate weights must be >= 0");
    if ((p.a & ~p.b) == 0 || (p.b & ~p.a) == 0) {
      throw std::invalid_argument("certificate pair is comparable");
    }
    coeff[p.a | p.b] += w;
    coeff[p.a & p.b] += w;
    coeff[p.a] -= w;
    coeff[p.b] -= w;
    total += w * gap(f, p);
  }
  double norm = 0.0;
  for (double c : coeff) norm += std::abs(c);
  cert.weighted_gap = total;
  cert.norm = norm;
  cert.bound = norm > 0.0 ? total / norm : 0.0;
}

class DistanceError : public std::runtime_error {
 public:
  DistanceError(const std::string& what, double lower, double upper)
      : std::runtime_error(what + " (bounds: [" + std::to_string(lower) + ", " +
                           std::to_string(upper) + "])"),
        lower_(lower),
        upper_(upper) {}
  double lower() const { return lower_; }
  double upper() const { return upper_; }

 private:
  double lower_;
  double upper_;
};

struct DistanceResult {
  double t_star = 0.0;
  ExplicitFunction nearest;
  // Dual certificate proving distance >= certificate.bound.
  Certificate certificate;
  // Filter bound eps_cross * floor(n^2/2) / 8.
  double upper_bound = 0.0;
  std::int64_t pivots = 0;
};

inline DistanceResult exact_distance(const ExplicitFunction& f, double tol = 1e-6) {
  const int n = f.ground_size();
  require_dense(n, kDistanceLimit, "exact distance");

  const double eps_cross = exact_epsilon(f, ConstraintClass::kCross).epsilon;
  const double upper = distance_bound(n, eps_cross);
  if (n == 1) return DistanceResult{0.0, f, {}, 0.0, 0};

  const auto pairs = enumerate_pairs(n, ConstraintClass::kCross);
  const std::size_t sets = std::size_t{1} << n;
  const std::size_t cols = sets + 1;  // h(S) for every S, then t
  const std::size_t rows = sets + pairs.size();

  lp::DenseSimplex::Matrix a(rows, std::vector<double>(cols, 0.0));
  std::vector<double> b(rows, 0.0);
  std::vector<double> c(cols, 0.0);
  for (std::size_t s = 0; s < sets; ++s) {
    a[s][s] = 1.0;
    a[s][sets] = -2.0;
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    auto& row = a[sets + i];
    row[p.a | p.b] += 1.0;
    row[p.a & p.b] += 1.0;
    row[p.a] -= 1.0;
    row[p.b] -= 1.0;
    b[sets + i] = -gap(f, p);
  }
  c[sets] = -1.0;

  const lp::Result lp_result = lp::maximize(a, b, c);
  if (lp_result.status != lp::Status::kOptimal) {
    throw DistanceError("distance LP did not reach an optimum", 0.0, upper);
  }

  const double t = std::max(0.0, -lp_result.value);
  std::vector<double> g(sets);
  for (std::size_t s = 0; s < sets; ++s) {
    g[s] = f.at(s) + lp_result.x[s] - lp_result.x[sets];
  }
  ExplicitFunction nearest(n, std::move(g));

  Certificate cert;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const double w = lp_result.y[sets + i];
    if (w > 1e-12) cert.pairs.push_back({pairs[i], w});
  }
  evaluate_certificate(f, cert);

  double deviation = 0.0;
  for (std::size_t s = 0; s < sets; ++s) {
    deviation = std::max(deviation, std::abs(nearest.at(s) - f.at(s)));
  }
  if (verify_submodular(nearest, 1e-7)) {
    throw DistanceError("distance LP returned a non-submodular function",
                        cert.bound, upper);
  }
  if (deviation > t + 1e-6) {
    throw DistanceError("distance LP solution exceeds its objective", cert.bound,
                        upper);
  }
  if (cert.bound < t - tol || t > upper + tol) {
    throw DistanceError("distance LP optimum not certified", cert.bound,
                        std::min(upper, deviation));
  }
  return DistanceResult{t, std::move(nearest), std::move(cert), upper,
                        lp_result.pivots};
}

template <SetFunction F>
DistanceResult exact_distance(const F& f, double tol = 1e-6) {
  require_dense(f.ground_size(), kDistanceLimit, "exact distance");
  return exact_distance(to_explicit(f), tol);
}

// A certificate that f is at distance >= alpha from every submodular
// function, or nothing when alpha exceeds the exact distance. Single-pair
// certificates are tried first, complementary pairs {A, [n] \ A} before the
// rest; otherwise the LP dual is used.
inline std::optional<Certificate> certify_gap(const ExplicitFunction& f, double alpha,
                                              double tol = 1e-9) {
  const int n = f.ground_size();
  require_dense(n, kDistanceLimit, "gap certification");
  if (alpha <= 0.0) return Certificate{};

  auto single = [&](Mask a, Mask b) -> std::optional<Certificate> {
    if (gap(f, a, b) / 4.0 < alpha - tol) return std::nullopt;
    Certificate cert;
    cert.pairs.push_back({ConstraintPair{a, b}, 1.0});
    evaluate_certificate(f, cert);
    return cert;
  };

  const Mask all = full_mask(n);
  for (Mask a = 1; a < all; ++a) {
    const Mask b = all & ~a;
    if (a < b) {
      if (auto cert = single(a, b)) return cert;
    }
  }
  if (n <= enumeration_limit(ConstraintClass::kFull)) {
    std::optional<Certificate> found;
    for (Mask a = 0; a <= all && !found; ++a) {
      detail::pairs_for_outer(n, ConstraintClass::kFull, a,
                              [&](const ConstraintPair& p) {
                                if (!found) found = single(p.a, p.b);
                              });
    }
    if (found) return found;
  }

  DistanceResult d = exact_distance(f);
  if (d.t_star < alpha - tol || d.certificate.bound < alpha - 1e-6) {
    return std::nullopt;
  }
  return std::move(d.certificate);
}

template <SetFunction F>
std::optional<Certificate> certify_gap(const F& f, double alpha, double tol = 1e-9) {
  require_dense(f.ground_size(), kDistanceLimit, "gap certification");
  return certify_gap(to_explicit(f), alpha, tol);
}

}  // namespace apxsub
