/*
   Copyright 2026 The snw Authors

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

#include <gmpxx.h>

#include <string>

namespace snw {

/// Exact rational; GMP keeps it canonical after every arithmetic operation.
using Scalar = mpq_class;

inline std::string to_string(const Scalar& q) { return q.get_str(); }

/// Parses "p" or "p/q" (optional leading '-'); throws Error(InvalidArgument).
Scalar parse_scalar(const std::string& text);

}  // namespace snw
