// Copyright 2026 The spectrakit Authors
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

namespace spectrakit {

/// Raised when an argument lies outside the mathematical domain of an
/// operation (bad shapes, mismatched sizes, non-states).
class DomainError : public std::domain_error {
   public:
    explicit DomainError(const std::string &what) : std::domain_error(what) {
    }
};

/// Raised when a request would exceed a configured resource cap.
class ResourceError : public std::runtime_error {
   public:
    explicit ResourceError(const std::string &what) : std::runtime_error(what) {
    }
};

}  // namespace spectrakit
