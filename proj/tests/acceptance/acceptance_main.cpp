// Copyright 2026 The hotkit developers
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

// Runs the full verification suite and prints one line per criterion.
// Exit code 0 iff every criterion passes.

#include <iostream>

#include "hotkit/verify.hpp"

int main()
{
  hotkit::VerifySuite suite;
  bool all_pass = true;
  for (int id = 1; id <= hotkit::VerifySuite::kCriteria; ++id) {
    const auto r = suite.run(id);
    std::cout << hotkit::criterion_line(r) << std::endl;
    all_pass = all_pass && r.pass;
  }
  std::cout << (all_pass ? "verification passed" : "verification FAILED") << std::endl;
  return all_pass ? 0 : 1;
}
