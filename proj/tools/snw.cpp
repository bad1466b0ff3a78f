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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "snw/cli/session.hpp"
#include "snw/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in the algebra of one-sided inverses of a polynomial algebra"};
  std::size_t dim = 1;
  bool json = false;
  std::vector<std::string> scripts;
  app.add_option("--n", dim, "Initial dimension n")->check(CLI::Range(1, 32));
  app.add_flag("--json", json, "Emit one JSON object per result");
  app.add_option("script", scripts, "Script files (stdin when omitted)");
  CLI11_PARSE(app, argc, argv);

  snw::cli::Session session(dim, json ? snw::cli::Mode::Json : snw::cli::Mode::Text);
  if (scripts.empty()) return session.run_script(std::cin, std::cout);

  int code = 0;
  for (const auto& path : scripts) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "snw: cannot open " << path << '\n';
      return 1;
    }
    const int c = session.run_script(in, std::cout);
    if (c == 2 || (c == 1 && code == 0)) code = c;
  }
  return code;
}
