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

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "snw/scalar.hpp"

namespace snw::cli {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t column, std::vector<std::string> expected, const std::string& found);

  /// 1-based column of the offending token.
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t column_;
  std::vector<std::string> expected_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    Number,    // number
    X,         // x<index>; index 0 means bare "x"
    Y,         // y<index>
    Unit,      // E[index](k,l)
    Laurent,   // v[index](shift)
    Name,      // bound identifier
    Add,
    Sub,
    Mul,
    Neg,
    Pow,       // children[0] ^ power
    Set,       // {a, b, ...}
    List,      // [a, b, ...]
  };

  Kind kind;
  std::size_t column = 0;
  Scalar number;
  std::size_t index = 0;
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  std::int64_t shift = 0;
  unsigned power = 0;
  std::string name;
  std::vector<ExprPtr> children;
};

struct Command {
  /// Command word; "nf" for a bare expression.
  std::string name;
  /// Subcommand for aut/endo/ideal, generator kind for "aut make".
  std::string sub;
  std::string kind;
  /// let target.
  std::string target;
  std::shared_ptr<const Command> rhs;
  std::vector<ExprPtr> args;
  std::size_t column = 1;
};

/// Parses one script line. Returns nullptr for blank lines and comments.
std::shared_ptr<const Command> parse(const std::string& line);

/// Parses a single expression (no command word).
ExprPtr parse_expression(const std::string& text);

bool is_command_word(const std::string& word);

}  // namespace snw::cli
