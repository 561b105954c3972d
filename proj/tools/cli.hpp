// Copyright 2026 The c4part Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef C4PART_TOOLS_CLI_HPP_
#define C4PART_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace c4part {

// Runs the c4part command line. args[0] is the program name. Structured
// output goes to `out`, human summaries and errors to `err`. Exit status:
// 0 feasible / success, 1 negative answer (oracle, crosscheck), 2 four-cycle,
// 3 degree violation, 4 diagnostic, 64 usage or input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace c4part

#endif  // C4PART_TOOLS_CLI_HPP_
