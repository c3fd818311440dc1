// Copyright 2026 The Polysphere Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace polysphere {

// Invalid numeric input: negative lengths, too few sides, empty inventories.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A face inventory that cannot close into a polyhedron.
class InventoryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested solid lacks the data an operation needs (metric
// coefficients or a coordinate construction).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Degenerate point sets, non-planar faces, broken meshes.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LayoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polysphere
