// Copyright 2026 The qrecycle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRECYCLE_ACCEPTANCE_HPP
#define QRECYCLE_ACCEPTANCE_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace qrecycle::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string title;
  std::function<CriterionResult(unsigned workers)> run;
};

/// The end-to-end acceptance checks, in order. Every threshold is fixed in
/// the implementation.
const std::vector<Criterion>& criteria();

/// Runs all criteria, printing one "PASS"/"FAIL" line per criterion to `out`.
/// Returns true if every criterion passed.
bool run_all(std::ostream& out, unsigned workers = 0);

}  // namespace qrecycle::acceptance

#endif  // QRECYCLE_ACCEPTANCE_HPP
