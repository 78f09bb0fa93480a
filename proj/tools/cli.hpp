// Copyright 2026 The regeq Authors.
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


#ifndef REGEQ_TOOLS_CLI_HPP_
#define REGEQ_TOOLS_CLI_HPP_

#include <ostream>

namespace regeq {

// Runs the regeq command line. Returns 0 on success, 1 on domain errors
// (no parse, failed oracle check) and 2 on input or usage errors.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace regeq

#endif  // REGEQ_TOOLS_CLI_HPP_
