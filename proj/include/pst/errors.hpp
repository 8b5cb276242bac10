// Copyright 2026 The pst Authors
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

namespace pst {

/// Input lies outside the mathematical domain of an operation (divergent
/// series, w > S, probability above 1/2 in a parity composition, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed or missing input data (tables, netlists, config files).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Requested work exceeds a configured ceiling.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Circuit contains an operation the Pauli-frame simulator cannot handle.
struct UnsupportedCircuit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pst
