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

#ifndef WMISOLVE_RATIONAL_HPP
#define WMISOLVE_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace wmi {

// Exact rational scalar used everywhere on the decision and exact-integration
// paths. No floating point enters those paths.
using Rat = mpq_class;

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_double(const Rat& q) { return q.get_d(); }

// Accepts "p/q", "-p/q", and plain integers. Returns nullopt on malformed input.
inline std::optional<Rat> rat_parse(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  bool seen_slash = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] == '/') {
      if (seen_slash || k == i || k + 1 == s.size()) return std::nullopt;
      seen_slash = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
  }
  Rat q;
  if (q.set_str(s, 10) != 0) return std::nullopt;
  if (seen_slash && q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

inline Rat rat_factorial(unsigned n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rat(z);
}

}  // namespace wmi

#endif
