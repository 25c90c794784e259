// Copyright 2026 The relaxforge authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace relaxforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad or inconsistent user configuration.
struct ConfigError : Error {
    using Error::Error;
};

/// The requested relaxation curve has a genuinely negative spectral envelope.
struct PositivityViolation : Error {
    using Error::Error;
};

/// No frequency beyond which the envelope stays below threshold.
struct NoCutoff : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct ZeroMatrix : Error {
    using Error::Error;
};

/// r(a_j) < 0 for some observable eigenvalue.
struct NegativeWeight : Error {
    using Error::Error;
};

/// 1 + lambda * a_j <= 0 for some observable eigenvalue.
struct SingularWeight : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

/// A manifest-referenced artifact is missing or its hash changed.
struct ArtifactMismatch : Error {
    using Error::Error;
};

}  // namespace relaxforge
