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

#include "hopfadams/report.hpp"

#include <algorithm>
#include <sstream>

namespace hopfadams {

void Report::pass(std::string name, std::string detail) {
  checks_.push_back({std::move(name), true, std::move(detail)});
}

void Report::fail(std::string name, std::string detail) {
  checks_.push_back({std::move(name), false, std::move(detail)});
}

void Report::record(std::string name, bool ok, std::string detail) {
  checks_.push_back({std::move(name), ok, std::move(detail)});
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) {
    checks_.push_back(c);
    if (!other.title_.empty()) checks_.back().name = other.title_ + ": " + c.name;
  }
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

const Check* Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (!title_.empty()) os << title_ << '\n';
  for (const auto& c : checks_) {
    os << (c.passed ? "  PASS  " : "  FAIL  ") << c.name;
    if (!c.detail.empty()) os << "  -- " << c.detail;
    os << '\n';
  }
  os << (passed() ? "overall: PASS" : "overall: FAIL") << '\n';
  return os.str();
}

}  // namespace hopfadams
