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

#include "hopfadams/grading.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hopfadams {

MultiDegree::MultiDegree(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("MultiDegree: rank must be at least 1");
}

MultiDegree::MultiDegree(std::initializer_list<unsigned> parts)
    : MultiDegree(std::vector<unsigned>(parts)) {}

MultiDegree MultiDegree::zero(std::size_t rank) {
  return MultiDegree(std::vector<unsigned>(rank, 0U));
}

unsigned MultiDegree::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0U);
}

bool MultiDegree::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](unsigned p) { return p == 0; });
}

MultiDegree& MultiDegree::operator+=(const MultiDegree& other) {
  if (other.rank() != rank()) throw std::invalid_argument("MultiDegree: rank mismatch in addition");
  for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i] += other.parts_[i];
  return *this;
}

std::optional<MultiDegree> subtract(const MultiDegree& a, const MultiDegree& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("MultiDegree: rank mismatch in subtraction");
  std::vector<unsigned> out(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (b.parts_[i] > a.parts_[i]) return std::nullopt;
    out[i] = a.parts_[i] - b.parts_[i];
  }
  return MultiDegree(std::move(out));
}

bool divides(const MultiDegree& a, const MultiDegree& b) {
  return subtract(b, a).has_value();
}

std::string MultiDegree::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiDegree& d) {
  os << '[';
  for (std::size_t i = 0; i < d.rank(); ++i) {
    if (i) os << ',';
    os << d[i];
  }
  return os << ']';
}

unsigned max_parts(const MultiDegree& degree) { return degree.total(); }

std::strong_ordering graded_compare(const MultiDegree& a, const MultiDegree& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("graded_compare: rank mismatch");
  if (auto c = a.total() <=> b.total(); c != 0) return c;
  return a.parts() <=> b.parts();
}

namespace {

void compositions(std::size_t rank, unsigned remaining, std::vector<unsigned>& prefix,
                  std::vector<MultiDegree>& out) {
  if (prefix.size() + 1 == rank) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned v = remaining + 1; v-- > 0;) {
    prefix.push_back(v);
    compositions(rank, remaining - v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiDegree> degrees_up_to(std::size_t rank, unsigned bound) {
  if (rank == 0) throw std::invalid_argument("degrees_up_to: rank must be at least 1");
  std::vector<MultiDegree> out;
  for (unsigned total = 0; total <= bound; ++total) {
    std::vector<unsigned> prefix;
    std::vector<MultiDegree> layer;
    compositions(rank, total, prefix, layer);
    std::sort(layer.begin(), layer.end(), GradedLess{});
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace hopfadams
