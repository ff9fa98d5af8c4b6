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

#ifndef WMISOLVE_POLYNOMIAL_HPP
#define WMISOLVE_POLYNOMIAL_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rational.hpp"

namespace wmi {

// Sparse multivariate polynomial with rational coefficients over a fixed
// number of variables. Zero coefficients are never stored.
class Polynomial {
public:
  using Monomial = std::vector<unsigned>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const Rat& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }

  static Polynomial variable(int nvars, int v) {
    Polynomial p(nvars);
    Monomial m(nvars, 0);
    m[v] = 1;
    p.add_term(m, 1);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    Rat& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    Polynomial r(nvars_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) {
        Monomial m(nvars_);
        for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
        r.add_term(m, c1 * c2);
      }
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  Rat eval(const std::vector<Rat>& point) const {
    Rat sum = 0;
    for (const auto& [m, c] : terms_) {
      Rat term = c;
      for (int i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < m[i]; ++k) term *= point[i];
      sum += term;
    }
    return sum;
  }

  double eval(const std::vector<double>& point) const {
    double sum = 0;
    for (const auto& [m, c] : terms_) {
      double term = rat_double(c);
      for (int i = 0; i < nvars_; ++i)
        for (unsigned k = 0; k < m[i]; ++k) term *= point[i];
      sum += term;
    }
    return sum;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      os << c.get_str();
      for (int i = 0; i < nvars_; ++i)
        if (m[i]) {
          os << "*" << names[i];
          if (m[i] > 1) os << "^" << m[i];
        }
      first = false;
    }
    return os.str();
  }

  // Stable identity key (used by the oracle's integral memo).
  std::string key() const {
    std::ostringstream os;
    for (const auto& [m, c] : terms_) {
      for (unsigned e : m) os << e << ',';
      os << '=' << c.get_str() << ';';
    }
    return os.str();
  }

private:
  int nvars_;
  std::map<Monomial, Rat> terms_;
};

}  // namespace wmi

#endif
