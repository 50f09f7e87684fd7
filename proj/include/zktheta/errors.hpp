/*
   Copyright 2026 The zktheta authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace zktheta {

/// Malformed or inconsistent caller input (bad modulus, length mismatch, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured cap (span size, tuple count, enumeration budget) was exceeded.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal exactness invariant failed (e.g. a MacWilliams coefficient
/// that does not divide).  Signals inconsistent inputs, never rounding.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace zktheta
