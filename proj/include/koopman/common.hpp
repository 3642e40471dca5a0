/*
   Copyright 2026 The koopman project

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

#ifndef KOOPMAN_COMMON_HPP
#define KOOPMAN_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace koopman {

/// Raised when a request exceeds a configured size/order cap.
class ResourceLimitError : public std::runtime_error {
   public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a truncated representation can no longer support the request
/// (loss of orthogonality, state pushed outside the safe level window, ...).
class TruncationError : public std::runtime_error {
   public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a Gibbs density does not decay on the quadrature grid.
class DivergenceError : public std::runtime_error {
   public:
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a discretization threshold sits on an eigenvalue.
class AmbiguityError : public std::runtime_error {
   public:
    explicit AmbiguityError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for malformed input files; carries a 1-based line number when known.
class DataFormatError : public std::runtime_error {
   public:
    DataFormatError(const std::string& what, std::int64_t line = -1)
        : std::runtime_error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    std::int64_t line() const { return line_; }

   private:
    std::int64_t line_;
};

/// Raised when a statistic is requested from an empty setting block.
class InsufficientDataError : public std::runtime_error {
   public:
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace koopman

#endif
