/*
  Copyright (c) 2026 the wmisolve authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "integrate.hpp"

#include "rng.hpp"

namespace wmi {

IntegralValue ExactIntegrator::integrate(const Polytope& p, const Weight& fi_weight,
                                         const TruthAssignment& /*mu_bool*/,
                                         std::uint64_t /*salt*/) {
  IntegralValue out;
  out.exact = true;
  out.degenerate = p.degenerate;
  if (p.degenerate) {
    out.rational = 0;
    return out;
  }
  Polynomial poly = as_polynomial(fi_weight, p.dims);
  out.rational = integrate_exact(p, poly);
  return out;
}

IntegralValue McIntegrator::integrate(const Polytope& p, const Weight& fi_weight,
                                      const TruthAssignment& mu_bool, std::uint64_t salt) {
  IntegralValue out;
  out.exact = false;
  out.degenerate = p.degenerate;
  if (p.degenerate) return out;
  if (samples_ < 1) throw Error("mc integrator needs at least one sample");

  auto box = bounding_box(p);
  int d = p.dims;
  double box_vol = 1;
  std::vector<double> lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    lo[i] = rat_double(box[i].first);
    hi[i] = rat_double(box[i].second);
    box_vol *= hi[i] - lo[i];
  }
  if (box_vol <= 0) return out;  // flat box: measure zero

  std::vector<std::vector<double>> rows_c;
  std::vector<double> rows_b;
  for (const auto& r : p.rows) {
    std::vector<double> c(d, 0.0);
    for (const auto& [v, q] : r.coeffs) c[v] += rat_double(q);
    rows_c.push_back(std::move(c));
    rows_b.push_back(rat_double(r.rhs));
  }

  Rng rng(seed_ ^ salt);
  std::vector<double> x(d);
  std::uint64_t accepted = 0;
  double wsum = 0;
  for (std::uint64_t s = 0; s < samples_; ++s) {
    for (int i = 0; i < d; ++i) x[i] = rng.uniform(lo[i], hi[i]);
    bool inside = true;
    for (std::size_t r = 0; r < rows_c.size(); ++r) {
      double lhs = 0;
      for (int i = 0; i < d; ++i) lhs += rows_c[r][i] * x[i];
      // Closure: points exactly on a boundary are accepted (measure zero).
      if (lhs > rows_b[r]) {
        inside = false;
        break;
      }
    }
    if (!inside) continue;
    ++accepted;
    wsum += evaluate(fi_weight, x, mu_bool, table_);
  }
  if (accepted == 0)
    throw ZeroAcceptanceError("no sample landed in the polytope; raise the sample count");
  // box_vol * (accepted/N) * (wsum/accepted) collapses to box_vol * wsum / N.
  out.approx = box_vol * wsum / static_cast<double>(samples_);
  return out;
}

}  // namespace wmi
