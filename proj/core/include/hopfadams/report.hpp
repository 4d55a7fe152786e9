// Copyright 2026 The hopfadams Authors. All Rights Reserved.
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

#ifndef HOPFADAMS_REPORT_HPP
#define HOPFADAMS_REPORT_HPP

#include <string>
#include <vector>

namespace hopfadams {

/// Outcome of one named verification. `detail` carries the witness on failure.
struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

/// Ordered collection of checks, as returned by the verifiers.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  void pass(std::string name, std::string detail = {});
  void fail(std::string name, std::string detail);
  void record(std::string name, bool ok, std::string detail = {});
  void merge(const Report& other);

  bool passed() const;
  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  /// First failing check, or nullptr.
  const Check* first_failure() const;

  std::string to_text() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace hopfadams

#endif  // HOPFADAMS_REPORT_HPP
