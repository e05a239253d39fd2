/*
   Copyright 2026 The expoly Authors

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

#ifndef EXPOLY_ERRORS_HPP
#define EXPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expoly {

/// Malformed or out-of-contract input supplied by the caller.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A broken internal invariant (inexact Bareiss division, non-integral
/// interpolation, ...). Never caused by user input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// The floating-point root oracle failed to converge.
class OracleFailure : public std::runtime_error {
public:
    explicit OracleFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace expoly

#endif  // EXPOLY_ERRORS_HPP
