// Copyright 2026 The qsearch Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace qsearch {

/// Start state and target are (numerically) orthogonal, so no evolution in
/// their span can reach the target.
class OrthogonalStartError : public std::invalid_argument {
 public:
  explicit OrthogonalStartError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Start state is (numerically) parallel to the target, so the search plane
/// collapses to a line.
class DegeneratePlaneError : public std::invalid_argument {
 public:
  explicit DegeneratePlaneError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace qsearch
