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

#ifndef WMISOLVE_FIXTURES_HPP
#define WMISOLVE_FIXTURES_HPP

#include <string>
#include <vector>

namespace wmi {

// Bundled example problems (also shipped under problems/). Returns an empty
// string for unknown names.
std::string fixture_text(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace wmi

#endif
