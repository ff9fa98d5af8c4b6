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

#ifndef WMISOLVE_GEN_HPP
#define WMISOLVE_GEN_HPP

#include <cstdint>
#include <string>

namespace wmi {

// Product of n if-then-else factors with distinct literal conditions; the
// skeleton of the result has exactly n clauses.
std::string gen_prodite(int n, std::uint64_t seed);

// Random tree-structured weight over a random support: conditions mix Boolean
// atoms, arithmetic atoms, and occasional non-literal range conditions;
// leaves are polynomials with nonnegative coefficients.
std::string gen_tree(int depth, int n_bools, int n_reals, std::uint64_t seed);

}  // namespace wmi

#endif
