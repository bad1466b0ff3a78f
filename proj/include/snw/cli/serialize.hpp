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

#include <string>
#include <variant>
#include <vector>

#include "snw/core.hpp"
#include "snw/decomp.hpp"
#include "snw/endo.hpp"
#include "snw/group.hpp"
#include "snw/ideals.hpp"
#include "snw/polynomial.hpp"
#include "snw/units.hpp"

namespace snw::cli {

struct Integer {
  std::int64_t value;
};

struct Boolean {
  bool value;
};

using ElementList = std::vector<Element>;

using Value = std::variant<Element, Scalar, Boolean, Integer, MixedElement, FactorList, SizeReport,
                           UnitSplit, GroupElement, EndoP, IdealDescriptor, SubgroupReport,
                           GenericStructure, Polynomial, ElementList, FiniteImage>;

enum class Mode { Text, Json };

/// Canonical text, e.g. "1 - x1*y1 + 2/3*x1^2".
std::string element_text(const Element& a);
std::string polynomial_text(const Polynomial& p);
std::string mixed_text(const MixedElement& m);

std::string to_text(const Value& v);
/// One compact JSON object, no trailing newline.
std::string to_json_line(const Value& v);
std::string serialize(const Value& v, Mode mode);

std::string error_json_line(const std::string& code, const std::string& message);
std::string syntax_error_json_line(std::size_t column, const std::vector<std::string>& expected,
                                   const std::string& message);

}  // namespace snw::cli
