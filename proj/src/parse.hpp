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

#ifndef WMISOLVE_PARSE_HPP
#define WMISOLVE_PARSE_HPP

#include <string>

#include "wmi.hpp"

namespace wmi {

// Problem files are s-expression documents:
//
//   (problem
//     (reals (x 0 2) (y 0 3))
//     (bools A1 A2)
//     (support <formula>)
//     (query <formula>)      ; optional
//     (weight <weight>))     ; optional, defaults to 1
//
// Declared bounds become conjuncts of chi. Formulas: true false A
// (and f...) (or f...) (not f) (=> f f) (iff f f) and atoms
// (<= t t) (< t t) (>= t t) (> t t) (= t t) over linear terms
// (+ t...) (- t t) (- t) (* q v) variables and rationals "p/q".
// Weights: rationals, variables, (+ ...) (- a b) (* ...) (pow w k)
// (gauss mean std arg) (ite <formula> w w).
WmiProblem parse_problem(const std::string& text);

// Parses a formula against an existing problem's table (queries, tests).
Formula parse_formula_text(const std::string& text, AtomTable& table);

// Round-trip printer: parse(print_problem(p)) is structurally equal to p.
std::string print_problem(const WmiProblem& p);

std::string sexpr_of_formula(const Formula& f, const AtomTable& t);
std::string sexpr_of_weight(const Weight& w, const AtomTable& t);

bool weight_equal(const Weight& a, const Weight& b);
bool problem_equal(const WmiProblem& a, const WmiProblem& b);

}  // namespace wmi

#endif
