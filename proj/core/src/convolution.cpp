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

#include "hopfadams/convolution.hpp"

#include <stdexcept>
#include <utility>

namespace hopfadams {

ConvolutionContext::ConvolutionContext(const HopfData& hopf, unsigned bound)
    : hopf_(&hopf), bound_(bound), strata_(0) {
  if (bound > hopf.bound())
    throw std::invalid_argument("ConvolutionContext: bound " + std::to_string(bound) + " exceeds the algebra bound " +
                                std::to_string(hopf.bound()));
  for (const auto& st : hopf.basis().strata())
    if (st.degree.total() <= bound) ++strata_;
}

GradedMap& GradedMap::operator+=(const GradedMap& other) {
  if (other.strata() != strata()) throw std::invalid_argument("GradedMap: stratum count mismatch");
  for (std::size_t s = 0; s < blocks_.size(); ++s) blocks_[s] += other.blocks_[s];
  return *this;
}

GradedMap& GradedMap::operator-=(const GradedMap& other) {
  if (other.strata() != strata()) throw std::invalid_argument("GradedMap: stratum count mismatch");
  for (std::size_t s = 0; s < blocks_.size(); ++s) blocks_[s] -= other.blocks_[s];
  return *this;
}

GradedMap& GradedMap::operator*=(const Scalar& c) {
  for (auto& b : blocks_) b *= c;
  return *this;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (f.strata() != g.strata()) throw std::invalid_argument("compose: stratum count mismatch");
  std::vector<Matrix> out;
  out.reserve(f.strata());
  for (std::size_t s = 0; s < f.strata(); ++s) out.push_back(f.block(s) * g.block(s));
  return GradedMap(std::move(out));
}

Element apply(const ConvolutionContext& ctx, const GradedMap& f, const Element& a) {
  const GradedBasis& basis = ctx.hopf().basis();
  Element out;
  for (const auto& [i, c] : a) {
    const std::size_t s = basis.stratum_of(i);
    if (s >= f.strata()) throw DegreeOverflow("apply: element has a component beyond the map's strata");
    const Matrix& m = f.block(s);
    const std::size_t j = basis.local_index(i);
    const BasisIndex offset = basis.stratum(s).offset;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (sgn(m(r, j)) != 0) out.add(offset + r, c * m(r, j));
  }
  return out;
}

GradedMap identity_map(const ConvolutionContext& ctx) {
  std::vector<Matrix> blocks;
  for (std::size_t s = 0; s < ctx.strata(); ++s) blocks.push_back(Matrix::identity(ctx.hopf().basis().stratum(s).dim()));
  return GradedMap(std::move(blocks));
}

GradedMap zero_map(const ConvolutionContext& ctx) {
  std::vector<Matrix> blocks;
  for (std::size_t s = 0; s < ctx.strata(); ++s) {
    const std::size_t d = ctx.hopf().basis().stratum(s).dim();
    blocks.emplace_back(d, d);
  }
  return GradedMap(std::move(blocks));
}

GradedMap unit_map(const ConvolutionContext& ctx) {
  GradedMap u = zero_map(ctx);
  u.block(0)(0, 0) = 1;
  return u;
}

namespace {

using SparseColumn = std::vector<std::pair<BasisIndex, Scalar>>;

// Nonzero entries of every column of every block, with global row indices.
std::vector<SparseColumn> sparse_columns(const ConvolutionContext& ctx, const GradedMap& f) {
  const GradedBasis& basis = ctx.hopf().basis();
  std::vector<SparseColumn> cols;
  for (std::size_t s = 0; s < ctx.strata(); ++s) {
    const Matrix& m = f.block(s);
    const BasisIndex offset = basis.stratum(s).offset;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      SparseColumn col;
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (sgn(m(r, c)) != 0) col.emplace_back(offset + r, m(r, c));
      cols.push_back(std::move(col));
    }
  }
  return cols;
}

void check_shape(const ConvolutionContext& ctx, const GradedMap& f, const char* what) {
  if (f.strata() != ctx.strata())
    throw std::invalid_argument(std::string("convolve: ") + what + " covers " + std::to_string(f.strata()) +
                                " strata, context has " + std::to_string(ctx.strata()));
}

}  // namespace

GradedMap convolve(const ConvolutionContext& ctx, const GradedMap& f, const GradedMap& g) {
  check_shape(ctx, f, "left map");
  check_shape(ctx, g, "right map");
  const HopfData& h = ctx.hopf();
  const GradedBasis& basis = h.basis();
  const auto fc = sparse_columns(ctx, f);
  const auto gc = sparse_columns(ctx, g);
  GradedMap out = zero_map(ctx);
  std::vector<Scalar> acc;
  for (std::size_t s = 0; s < ctx.strata(); ++s) {
    const Stratum& st = basis.stratum(s);
    Matrix& m = out.block(s);
    acc.assign(st.dim(), Scalar(0));
    for (std::size_t j = 0; j < st.dim(); ++j) {
      for (auto& a : acc) a = 0;
      for (const auto& [key, c] : h.coproduct(st.offset + j).terms()) {
        const auto& left = fc[key.first];
        const auto& right = gc[key.second];
        for (const auto& [i, fi] : left) {
          const Scalar cf = c * fi;
          for (const auto& [k, gk] : right) {
            const Scalar coeff = cf * gk;
            for (const auto& [t, ct] : h.product(i, k)) acc[t - st.offset] += coeff * ct;
          }
        }
      }
      for (std::size_t r = 0; r < st.dim(); ++r) m(r, j) = acc[r];
    }
  }
  return out;
}

GradedMap convolution_power(const ConvolutionContext& ctx, const GradedMap& f, unsigned long n) {
  GradedMap result = unit_map(ctx);
  GradedMap base = f;
  bool first = true;
  while (n > 0) {
    if (n & 1UL) {
      result = first ? base : convolve(ctx, result, base);
      first = false;
    }
    n >>= 1;
    if (n > 0) base = convolve(ctx, base, base);
  }
  return result;
}

GradedMap antipode(const ConvolutionContext& ctx) {
  if (ctx.hopf().basis().stratum(0).dim() != 1) throw std::invalid_argument("antipode: algebra is not connected");
  const GradedMap step = unit_map(ctx) - identity_map(ctx);
  GradedMap term = unit_map(ctx);
  GradedMap sum = term;
  for (unsigned n = 1; n <= ctx.bound(); ++n) {
    term = convolve(ctx, term, step);
    sum += term;
  }
  return sum;
}

GradedMap adams(const ConvolutionContext& ctx, long n) {
  if (n >= 0) return convolution_power(ctx, identity_map(ctx), static_cast<unsigned long>(n));
  return convolution_power(ctx, antipode(ctx), static_cast<unsigned long>(-n));
}

GradedMap log_identity(const ConvolutionContext& ctx) {
  const GradedMap step = identity_map(ctx) - unit_map(ctx);
  GradedMap term = step;
  GradedMap sum = step;
  for (unsigned r = 2; r <= ctx.bound(); ++r) {
    term = convolve(ctx, term, step);
    sum += term * (Scalar(r % 2 == 0 ? -1 : 1) / Scalar(r));
  }
  return sum;
}

std::vector<GradedMap> eulerian_idempotents(const ConvolutionContext& ctx) {
  const GradedMap log = log_identity(ctx);
  std::vector<GradedMap> out;
  GradedMap power = unit_map(ctx);
  out.push_back(power);
  for (unsigned n = 1; n <= ctx.bound(); ++n) {
    power = convolve(ctx, power, log);
    out.push_back(power * (Scalar(1) / factorial(n)));
  }
  return out;
}

GradedMap eulerian_idempotent(const ConvolutionContext& ctx, unsigned n) {
  // log(id) vanishes on degree 0, so its n-th power vanishes below part-sum n.
  if (n > ctx.bound()) return zero_map(ctx);
  if (n == 0) return unit_map(ctx);
  return convolution_power(ctx, log_identity(ctx), n) * (Scalar(1) / factorial(n));
}

std::optional<std::string> first_difference(const ConvolutionContext& ctx, const GradedMap& a, const GradedMap& b) {
  if (a.strata() != b.strata()) return "stratum count " + std::to_string(a.strata()) + " vs " + std::to_string(b.strata());
  const GradedBasis& basis = ctx.hopf().basis();
  for (std::size_t s = 0; s < a.strata(); ++s) {
    const Matrix& x = a.block(s);
    const Matrix& y = b.block(s);
    const Stratum& st = basis.stratum(s);
    for (std::size_t c = 0; c < x.cols(); ++c)
      for (std::size_t r = 0; r < x.rows(); ++r)
        if (x(r, c) != y(r, c))
          return "degree " + st.degree.to_string() + ", column " + st.labels[c] + ", row " + st.labels[r] + ": " +
                 to_display_string(x(r, c)) + " vs " + to_display_string(y(r, c));
  }
  return std::nullopt;
}

Report check_eulerian_expansion(const ConvolutionContext& ctx, const std::vector<long>& n_values) {
  Report report("eulerian expansion");
  const auto e = eulerian_idempotents(ctx);
  for (long n : n_values) {
    GradedMap sum = zero_map(ctx);
    for (std::size_t r = 0; r < e.size(); ++r) sum += e[r] * power(Scalar(n), r);
    const auto diff = first_difference(ctx, adams(ctx, n), sum);
    report.record("Psi_" + std::to_string(n) + " = sum_r n^r e^(r)", !diff, diff.value_or(""));
  }
  return report;
}

Report check_idempotent_system(const ConvolutionContext& ctx) {
  Report report("idempotent system");
  const auto e = eulerian_idempotents(ctx);
  GradedMap sum = zero_map(ctx);
  for (const auto& m : e) sum += m;
  auto diff = first_difference(ctx, sum, identity_map(ctx));
  report.record("sum of e^(n) = id", !diff, diff.value_or(""));

  std::optional<std::string> idem;
  for (std::size_t n = 0; n < e.size() && !idem; ++n)
    if (auto d = first_difference(ctx, compose(e[n], e[n]), e[n])) idem = "n=" + std::to_string(n) + ": " + *d;
  report.record("e^(n) o e^(n) = e^(n)", !idem, idem.value_or(""));

  std::optional<std::string> orth;
  const GradedMap zero = zero_map(ctx);
  for (std::size_t m = 0; m < e.size() && !orth; ++m)
    for (std::size_t n = 0; n < e.size() && !orth; ++n)
      if (m != n)
        if (auto d = first_difference(ctx, compose(e[m], e[n]), zero))
          orth = "m=" + std::to_string(m) + ", n=" + std::to_string(n) + ": " + *d;
  report.record("e^(m) o e^(n) = 0 for m != n", !orth, orth.value_or(""));
  return report;
}

}  // namespace hopfadams
