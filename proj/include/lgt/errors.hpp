// Copyright 2026 The lgt-thermal Authors
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

#ifndef LGT_ERRORS_HPP
#define LGT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lgt {

// Argument errors use std::invalid_argument directly.

/// A dense realization would exceed the configured qubit cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical result failed a consistency check (e.g. non-Hermitian input).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// The state has no weight in the charge-singlet sector.
class DegenerateStateError : public std::runtime_error {
 public:
  explicit DegenerateStateError(const std::string& what)
      : std::runtime_error(what) {}
};

/// A shot-based ratio estimate has a denominator too small to trust.
class UnstableEstimateError : public std::runtime_error {
 public:
  explicit UnstableEstimateError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace lgt

#endif  // LGT_ERRORS_HPP
