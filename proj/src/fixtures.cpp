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

#include "fixtures.hpp"

namespace wmi {

namespace {

// Two Booleans route between a two-level tree of interval splits (left) and a
// pair of flat densities (right); the support box is x1 in [0,2], x2 in [0,3].
const char* kExample5 = R"((problem
  (reals (x1 0 2) (x2 0 3))
  (bools A1 A2)
  (support true)
  (weight (ite A1
            (ite (>= x1 1)
              (ite (>= x2 1) (* (pow x1 2) x2) (* x1 x2))
              (ite (>= x2 2) (+ x1 x2) 1))
            (ite A2 x2 2))))
)";

// Purely continuous problem whose weight conditions are not literals; the four
// weight regions are non-convex and split into eight convex pieces.
const char* kExample9 = R"((problem
  (reals (x1 0 6) (x2 0 3))
  (bools)
  (support true)
  (weight (ite (<= x1 4)
            (ite (or (<= x1 2) (and (<= x1 3) (> x2 1))) 1 x1)
            (ite (or (> x2 2) (and (> x1 5) (> x2 3/2))) x2 (* x1 x2)))))
)";

// Constant weight; all the structure sits in the support clauses.
const char* kExample11 = R"((problem
  (reals (x 0 4))
  (bools A1 A2 A3)
  (support (and (or A1 A2 A3)
                (or (not A1) (>= x 1))
                (or (not A2) (>= x 2))
                (or (not A3) (<= x 3))))
  (weight 1))
)";

// Hiring population model: ethnicity ~ N(0,10), college rank ~ N(25,10)
// shifted by +5 for the minority group (ethnicity > 10), work experience
// ~ N(10,5). Boxes are mean +/- 6 sigma. The query is the decision program.
const char* kFairnessUnfair = R"((problem
  (reals (eth -60 70) (rank -35 90) (exp -20 40))
  (bools)
  (support true)
  (query (or (<= rank 5) (> (- exp rank) -5)))
  (weight (* (gauss 0 10 eth)
             (* (ite (> eth 10) (gauss 30 10 rank) (gauss 25 10 rank))
                (gauss 10 5 exp)))))
)";

// Same population; the decision weighs experience five times higher, which
// dilutes the rank shift.
const char* kFairnessFair = R"((problem
  (reals (eth -60 70) (rank -35 90) (exp -20 40))
  (bools)
  (support true)
  (query (or (<= rank 5) (> (- (* 5 exp) rank) -5)))
  (weight (* (gauss 0 10 eth)
             (* (ite (> eth 10) (gauss 30 10 rank) (gauss 25 10 rank))
                (gauss 10 5 exp)))))
)";

}  // namespace

std::string fixture_text(const std::string& name) {
  if (name == "example5") return kExample5;
  if (name == "example9") return kExample9;
  if (name == "example11") return kExample11;
  if (name == "fair") return kFairnessFair;
  if (name == "unfair") return kFairnessUnfair;
  return "";
}

std::vector<std::string> fixture_names() {
  return {"example5", "example9", "example11", "fair", "unfair"};
}

}  // namespace wmi
