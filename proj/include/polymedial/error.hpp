// Copyright 2026 The polymedial Authors
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

#ifndef POLYMEDIAL_ERROR_HPP_
#define POLYMEDIAL_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace polymedial {

// Input outside an operation's domain (zero modulus, malformed word, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A computed object contradicts a structural fact that must hold.
class InconsistencyError : public std::runtime_error {
 public:
  explicit InconsistencyError(const std::string& what)
      : std::runtime_error(what) {}
};

// Operation called on an object in the wrong state (e.g. incomplete table).
class StateError : public std::logic_error {
 public:
  explicit StateError(const std::string& what) : std::logic_error(what) {}
};

// Hard-coded data failed its validation.
class ConfigurationError : public std::runtime_error {
 public:
  explicit ConfigurationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace polymedial

#endif  // POLYMEDIAL_ERROR_HPP_
