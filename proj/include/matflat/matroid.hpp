// Copyright 2026 The Authors.
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

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "matflat/element_set.hpp"
#include "matflat/gf_field.hpp"

namespace matflat {

enum class MatroidKind { kLinear, kRank3PointLine, kUniform, kMinorView, kSimplificationView };

const char* to_string(MatroidKind kind);

/// A matroid given by its rank function on the ground set {0, ..., size()-1}.
/// Instances are immutable once built and safe to query from any thread.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual MatroidKind kind() const = 0;
  virtual int rank(const ElementSet& s) const = 0;

  /// {e : rank(s + e) == rank(s)}. The default asks the rank oracle once per
  /// element; concrete kinds override with direct rules.
  virtual ElementSet closure(const ElementSet& s) const;

  int size() const { return n_; }
  ElementSet ground() const { return ElementSet::prefix(n_); }
  int full_rank() const { return full_rank_; }
  ElementSet loops() const { return closure(ElementSet{}); }
  bool is_flat(const ElementSet& s) const { return closure(s) == s; }

 protected:
  explicit Matroid(int n);
  void set_full_rank(int r) { full_rank_ = r; }

 private:
  int n_ = 0;
  int full_rank_ = 0;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

/// Column matroid of an r x n matrix over GF(q).
class LinearMatroid final : public Matroid {
 public:
  /// columns[e] has length `rows`. Throws on out-of-range entries or n > 256.
  LinearMatroid(std::shared_ptr<const FieldTable> field, int rows,
                std::vector<std::vector<FieldElement>> columns);

  MatroidKind kind() const override { return MatroidKind::kLinear; }
  int rank(const ElementSet& s) const override;
  ElementSet closure(const ElementSet& s) const override;

  const FieldTable& field() const { return *field_; }
  const std::shared_ptr<const FieldTable>& field_ptr() const { return field_; }
  int rows() const { return rows_; }
  const std::vector<FieldElement>& column(int e) const { return columns_[e]; }
  const std::vector<std::vector<FieldElement>>& columns() const { return columns_; }

 private:
  std::shared_ptr<const FieldTable> field_;
  int rows_ = 0;
  std::vector<std::vector<FieldElement>> columns_;
  // Row-major copy of the matrix, each row padded to `stride_` bytes.
  std::vector<std::uint8_t> soa_;
  std::size_t stride_ = 0;
};

/// Simple matroid of rank at most 3 described by its lines with three or
/// more points. Any two points not on a common long line span a two-point
/// line.
class Rank3PointLine final : public Matroid {
 public:
  /// Validates the linear-space axioms; throws Error(kInvalidArgument) with
  /// the offending line index on failure.
  Rank3PointLine(int n, std::vector<std::vector<int>> long_lines);

  MatroidKind kind() const override { return MatroidKind::kRank3PointLine; }
  int rank(const ElementSet& s) const override;
  ElementSet closure(const ElementSet& s) const override;

  const std::vector<std::vector<int>>& long_lines() const { return lines_; }
  /// Index of the long line through a and b, or -1.
  int line_through(int a, int b) const { return pair_line_[a * size() + b]; }

 private:
  std::vector<std::vector<int>> lines_;
  std::vector<ElementSet> line_sets_;
  std::vector<std::int16_t> pair_line_;
};

/// U_{r,n}.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int r, int n);

  MatroidKind kind() const override { return MatroidKind::kUniform; }
  int rank(const ElementSet& s) const override;
  ElementSet closure(const ElementSet& s) const override;

 private:
  int r_ = 0;
};

/// Lazy minor M / C \ D of a base matroid. The remaining base elements are
/// relabelled 0..m-1 in increasing order.
class MinorView final : public Matroid {
 public:
  MinorView(MatroidPtr base, const ElementSet& contracted, const ElementSet& deleted,
            MatroidKind tag = MatroidKind::kMinorView);

  MatroidKind kind() const override { return tag_; }
  int rank(const ElementSet& s) const override;
  ElementSet closure(const ElementSet& s) const override;

  const MatroidPtr& base() const { return base_; }
  const ElementSet& contracted() const { return contracted_; }
  const ElementSet& deleted() const { return deleted_; }

  int to_base(int e) const { return to_base_[e]; }
  ElementSet to_base(const ElementSet& s) const;
  /// Drops base elements that are not in this minor.
  ElementSet from_base(const ElementSet& s) const;

 private:
  MatroidPtr base_;
  ElementSet contracted_;
  ElementSet deleted_;
  MatroidKind tag_;
  int contracted_rank_ = 0;
  std::vector<int> to_base_;
  std::array<std::int16_t, kMaxElements> from_base_{};
};

MatroidPtr contract(const MatroidPtr& m, const ElementSet& c);
MatroidPtr delete_elements(const MatroidPtr& m, const ElementSet& d);
/// M | F, i.e. M \ (E - F).
MatroidPtr restrict_to(const MatroidPtr& m, const ElementSet& f);

/// Maps an element of `view` back to the element of `origin` it came from,
/// following chains of minor views. Returns -1 if `view` is not derived from
/// `origin`.
int origin_element(const Matroid& view, const Matroid& origin, int e);

struct Simplification {
  /// Restriction to the smallest element of each parallel class.
  MatroidPtr matroid;
  /// Parallel classes of non-loops (original labels), ordered by smallest element.
  std::vector<ElementSet> classes;
  ElementSet loops;
};

Simplification simplify(const MatroidPtr& m);

/// The linear matroid of M / C built directly: reduce every column modulo the
/// span of C and drop the pivot coordinates. Elements of C are removed.
std::shared_ptr<const LinearMatroid> materialize_contraction(const LinearMatroid& m,
                                                             const ElementSet& c);

/// Whether a simple matroid of rank <= 3 is a restriction of PG(2,q), decided
/// by backtracking over injective point assignments that preserve
/// collinearity. Throws Error(kUnsupported) for rank > 3 and
/// Error(kInvalidArgument) if the matroid is not simple.
bool is_gfq_representable_rank_le3(const Matroid& m, int q);

bool is_simple(const Matroid& m);

}  // namespace matflat
