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

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "snw/cli/parser.hpp"
#include "snw/cli/serialize.hpp"

namespace snw::cli {

using Binding = std::variant<Element, GroupElement, EndoP, IdealDescriptor, ElementList>;

class Session {
 public:
  explicit Session(std::size_t dim = 1, Mode mode = Mode::Text);

  std::size_t dim() const { return dim_; }
  Mode mode() const { return mode_; }
  const std::map<std::string, Binding>& bindings() const { return bindings_; }

  struct Outcome {
    /// Empty for lines that produce no result (blank, comment, let, setdim).
    std::string output;
    /// 0 ok, 1 evaluation error, 2 syntax error.
    int status = 0;
  };

  Outcome run_line(const std::string& line);
  /// Runs every line, printing one result per line; returns the exit code
  /// (2 if any syntax error, else 1 if any evaluation error, else 0).
  int run_script(std::istream& in, std::ostream& out);

  /// Evaluates a parsed command; throws snw::Error on failure.
  std::optional<Value> eval(const Command& cmd);
  Element eval_element(const Expr& e) const;

 private:
  Value eval_value(const Command& cmd);

  std::size_t dim_;
  Mode mode_;
  std::map<std::string, Binding> bindings_;
};

}  // namespace snw::cli
