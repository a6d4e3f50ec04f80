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

#include "matflat/matroid.hpp"

#include <algorithm>
#include <string>

#include "matflat/error.hpp"
#include "matflat/simd/kernels.hpp"

namespace matflat {
namespace {

// Incremental echelon basis over GF(q). Each stored vector is normalized to 1
// at its pivot and has zeros at the pivots of earlier vectors.
class EchelonBasis {
 public:
  EchelonBasis(const FieldTable& f, int dim) : f_(f), dim_(dim) {}

  /// Reduces v against the basis; adds it and returns true if independent.
  bool add(std::vector<FieldElement> v) {
    for (std::size_t i = 0; i < vecs_.size(); ++i) {
      const FieldElement c = v[pivots_[i]];
      if (c == 0) continue;
      const auto& b = vecs_[i];
      for (int j = 0; j < dim_; ++j)
        if (b[j]) v[j] = f_.sub(v[j], f_.mul(c, b[j]));
    }
    int pivot = -1;
    for (int j = 0; j < dim_; ++j)
      if (v[j]) {
        pivot = j;
        break;
      }
    if (pivot < 0) return false;
    const FieldElement scale = f_.inv(v[pivot]);
    for (int j = 0; j < dim_; ++j) v[j] = f_.mul(v[j], scale);
    vecs_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  int size() const { return static_cast<int>(vecs_.size()); }

  /// Makes every basis vector zero at every other pivot.
  void fully_reduce() {
    for (std::size_t i = 0; i < vecs_.size(); ++i) {
      for (std::size_t k = 0; k < vecs_.size(); ++k) {
        if (k == i) continue;
        const FieldElement c = vecs_[k][pivots_[i]];
        if (c == 0) continue;
        for (int j = 0; j < dim_; ++j)
          if (vecs_[i][j]) vecs_[k][j] = f_.sub(vecs_[k][j], f_.mul(c, vecs_[i][j]));
      }
    }
  }

  /// Linear functionals vanishing on the span (requires fully_reduce()).
  std::vector<std::vector<FieldElement>> annihilator() const {
    std::vector<bool> is_pivot(dim_, false);
    for (int p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<FieldElement>> out;
    for (int free = 0; free < dim_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<FieldElement> y(dim_, 0);
      y[free] = 1;
      for (std::size_t i = 0; i < vecs_.size(); ++i) y[pivots_[i]] = f_.neg(vecs_[i][free]);
      out.push_back(std::move(y));
    }
    return out;
  }

  /// Coordinates of v after reduction, with pivot coordinates dropped.
  std::vector<FieldElement> quotient_coordinates(std::vector<FieldElement> v) const {
    for (std::size_t i = 0; i < vecs_.size(); ++i) {
      const FieldElement c = v[pivots_[i]];
      if (c == 0) continue;
      for (int j = 0; j < dim_; ++j)
        if (vecs_[i][j]) v[j] = f_.sub(v[j], f_.mul(c, vecs_[i][j]));
    }
    std::vector<bool> is_pivot(dim_, false);
    for (int p : pivots_) is_pivot[p] = true;
    std::vector<FieldElement> out;
    for (int j = 0; j < dim_; ++j)
      if (!is_pivot[j]) out.push_back(v[j]);
    return out;
  }

 private:
  const FieldTable& f_;
  int dim_;
  std::vector<std::vector<FieldElement>> vecs_;
  std::vector<int> pivots_;
};

void check_subset(const Matroid& m, const ElementSet& s, const char* what) {
  if (!s.is_subset_of(m.ground()))
    throw Error(ErrorKind::kInvalidArgument,
                std::string(what) + " " + s.to_string() + " is not a subset of the ground set of size " +
                    std::to_string(m.size()));
}

}  // namespace

const char* to_string(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kLinear:
      return "linear";
    case MatroidKind::kRank3PointLine:
      return "rank3";
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kMinorView:
      return "minor_view";
    case MatroidKind::kSimplificationView:
      return "simplification_view";
  }
  return "unknown";
}

Matroid::Matroid(int n) : n_(n) {
  if (n < 0 || n > kMaxElements)
    throw Error(ErrorKind::kResourceLimit, "ground set of size " + std::to_string(n) +
                                               " exceeds the supported " +
                                               std::to_string(kMaxElements) + " elements");
}

ElementSet Matroid::closure(const ElementSet& s) const {
  const int base = rank(s);
  ElementSet out = s;
  const ElementSet rest = ground() - s;
  for (int e : rest)
    if (rank(s.with(e)) == base) out.insert(e);
  return out;
}

// ---------------------------------------------------------------------------
// LinearMatroid

LinearMatroid::LinearMatroid(std::shared_ptr<const FieldTable> field, int rows,
                             std::vector<std::vector<FieldElement>> columns)
    : Matroid(static_cast<int>(columns.size())),
      field_(std::move(field)),
      rows_(rows),
      columns_(std::move(columns)) {
  if (rows_ < 0) throw Error(ErrorKind::kInvalidArgument, "negative row count");
  const int n = size();
  for (int e = 0; e < n; ++e) {
    if (static_cast<int>(columns_[e].size()) != rows_)
      throw Error(ErrorKind::kInvalidArgument, "column " + std::to_string(e) + " has length " +
                                                   std::to_string(columns_[e].size()) +
                                                   ", expected " + std::to_string(rows_));
    for (int i = 0; i < rows_; ++i)
      if (columns_[e][i] >= field_->q())
        throw Error(ErrorKind::kInvalidArgument,
                    "column " + std::to_string(e) + " entry " + std::to_string(i) +
                        " is not an element of GF(" + std::to_string(field_->q()) + ")");
  }
  stride_ = std::max<std::size_t>(32, (static_cast<std::size_t>(n) + 31) / 32 * 32);
  soa_.assign(static_cast<std::size_t>(rows_) * stride_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int e = 0; e < n; ++e) soa_[i * stride_ + e] = columns_[e][i];
  set_full_rank(rank(ground()));
}

int LinearMatroid::rank(const ElementSet& s) const {
  EchelonBasis basis(*field_, rows_);
  for (int e : s) {
    basis.add(columns_[e]);
    if (basis.size() == rows_) break;
  }
  return basis.size();
}

ElementSet LinearMatroid::closure(const ElementSet& s) const {
  EchelonBasis basis(*field_, rows_);
  for (int e : s) {
    basis.add(columns_[e]);
    if (basis.size() == rows_) return ground();
  }
  basis.fully_reduce();
  const auto& kernels = simd::active_kernels();
  const std::size_t n = static_cast<std::size_t>(size());
  std::array<std::uint8_t, kMaxElements + 32> values{};
  ElementSet outside;
  for (const auto& y : basis.annihilator()) {
    kernels.gf_lincomb(field_->view(), y, soa_.data(), stride_, n, values.data());
    outside |= kernels.nonzero_mask(values.data(), n);
  }
  return ground() - outside;
}

// ---------------------------------------------------------------------------
// Rank3PointLine

Rank3PointLine::Rank3PointLine(int n, std::vector<std::vector<int>> long_lines)
    : Matroid(n), lines_(std::move(long_lines)) {
  pair_line_.assign(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t li = 0; li < lines_.size(); ++li) {
    auto& line = lines_[li];
    const std::string where = "long line " + std::to_string(li);
    if (line.size() < 3)
      throw Error(ErrorKind::kInvalidArgument, where + " has fewer than 3 points");
    std::sort(line.begin(), line.end());
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] < 0 || line[i] >= n)
        throw Error(ErrorKind::kInvalidArgument,
                    where + ": element " + std::to_string(line[i]) + " outside 0.." + std::to_string(n - 1));
      if (i > 0 && line[i] == line[i - 1])
        throw Error(ErrorKind::kInvalidArgument, where + ": repeated element " + std::to_string(line[i]));
    }
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        auto& slot = pair_line_[line[i] * n + line[j]];
        if (slot >= 0)
          throw Error(ErrorKind::kInvalidArgument,
                      where + " shares the points " + std::to_string(line[i]) + " and " +
                          std::to_string(line[j]) + " with long line " + std::to_string(slot));
        slot = static_cast<std::int16_t>(li);
        pair_line_[line[j] * n + line[i]] = static_cast<std::int16_t>(li);
      }
    line_sets_.push_back(ElementSet::from_vector(line));
  }
  set_full_rank(rank(ground()));
}

int Rank3PointLine::rank(const ElementSet& s) const {
  const int a = s.first();
  if (a < 0) return 0;
  const int b = s.next(a);
  if (b < 0) return 1;
  const int li = line_through(a, b);
  if (li < 0) return s.next(b) < 0 ? 2 : 3;
  return s.is_subset_of(line_sets_[li]) ? 2 : 3;
}

ElementSet Rank3PointLine::closure(const ElementSet& s) const {
  const int a = s.first();
  if (a < 0) return s;
  const int b = s.next(a);
  if (b < 0) return s;
  const int li = line_through(a, b);
  if (li < 0) return s.next(b) < 0 ? s : ground();
  return s.is_subset_of(line_sets_[li]) ? line_sets_[li] : ground();
}

// ---------------------------------------------------------------------------
// UniformMatroid

UniformMatroid::UniformMatroid(int r, int n) : Matroid(n), r_(r) {
  if (r < 0 || r > n)
    throw Error(ErrorKind::kInvalidArgument,
                "U_{" + std::to_string(r) + "," + std::to_string(n) + "} needs 0 <= r <= n");
  set_full_rank(r);
}

int UniformMatroid::rank(const ElementSet& s) const { return std::min(s.count(), r_); }

ElementSet UniformMatroid::closure(const ElementSet& s) const {
  return s.count() < r_ ? s : ground();
}

// ---------------------------------------------------------------------------
// MinorView

MinorView::MinorView(MatroidPtr base, const ElementSet& contracted, const ElementSet& deleted,
                     MatroidKind tag)
    : Matroid(base->size() - (contracted | deleted).count()),
      base_(std::move(base)),
      contracted_(contracted),
      deleted_(deleted),
      tag_(tag) {
  check_subset(*base_, contracted_ | deleted_, "minor set");
  if (contracted_.intersects(deleted_))
    throw Error(ErrorKind::kInvalidArgument, "contracted and deleted sets overlap");
  from_base_.fill(-1);
  const ElementSet kept = base_->ground() - contracted_ - deleted_;
  for (int e : kept) {
    from_base_[e] = static_cast<std::int16_t>(to_base_.size());
    to_base_.push_back(e);
  }
  contracted_rank_ = base_->rank(contracted_);
  set_full_rank(rank(ground()));
}

ElementSet MinorView::to_base(const ElementSet& s) const {
  ElementSet out;
  for (int e : s) out.insert(to_base_[e]);
  return out;
}

ElementSet MinorView::from_base(const ElementSet& s) const {
  ElementSet out;
  for (int e : s)
    if (from_base_[e] >= 0) out.insert(from_base_[e]);
  return out;
}

int MinorView::rank(const ElementSet& s) const {
  return base_->rank(to_base(s) | contracted_) - contracted_rank_;
}

ElementSet MinorView::closure(const ElementSet& s) const {
  return from_base(base_->closure(to_base(s) | contracted_));
}

namespace {

MatroidPtr make_minor(const MatroidPtr& m, const ElementSet& c, const ElementSet& d,
                      MatroidKind tag) {
  check_subset(*m, c | d, "minor set");
  if (const auto* view = dynamic_cast<const MinorView*>(m.get())) {
    // Contractions and deletions of disjoint sets commute, so fold into the root.
    return std::make_shared<MinorView>(view->base(), view->contracted() | view->to_base(c),
                                       view->deleted() | view->to_base(d), tag);
  }
  return std::make_shared<MinorView>(m, c, d, tag);
}

}  // namespace

MatroidPtr contract(const MatroidPtr& m, const ElementSet& c) {
  return make_minor(m, c, {}, MatroidKind::kMinorView);
}

MatroidPtr delete_elements(const MatroidPtr& m, const ElementSet& d) {
  return make_minor(m, {}, d, MatroidKind::kMinorView);
}

MatroidPtr restrict_to(const MatroidPtr& m, const ElementSet& f) {
  return make_minor(m, {}, m->ground() - f, MatroidKind::kMinorView);
}

int origin_element(const Matroid& view, const Matroid& origin, int e) {
  if (&view == &origin) return e;
  if (const auto* v = dynamic_cast<const MinorView*>(&view))
    return origin_element(*v->base(), origin, v->to_base(e));
  return -1;
}

Simplification simplify(const MatroidPtr& m) {
  Simplification out;
  out.loops = m->loops();
  ElementSet seen = out.loops;
  ElementSet reps;
  for (int e : m->ground()) {
    if (seen.contains(e)) continue;
    const ElementSet cls = m->closure(ElementSet{e}) - out.loops;
    out.classes.push_back(cls);
    reps.insert(e);
    seen |= cls;
  }
  out.matroid = make_minor(m, {}, m->ground() - reps, MatroidKind::kSimplificationView);
  return out;
}

std::shared_ptr<const LinearMatroid> materialize_contraction(const LinearMatroid& m,
                                                             const ElementSet& c) {
  check_subset(m, c, "contraction set");
  EchelonBasis basis(m.field(), m.rows());
  for (int e : c) basis.add(m.column(e));
  std::vector<std::vector<FieldElement>> cols;
  for (int e : m.ground() - c) cols.push_back(basis.quotient_coordinates(m.column(e)));
  return std::make_shared<LinearMatroid>(m.field_ptr(), m.rows() - basis.size(), std::move(cols));
}

bool is_simple(const Matroid& m) {
  for (int a : m.ground()) {
    if (m.rank(ElementSet{a}) != 1) return false;
    for (int b = a + 1; b < m.size(); ++b)
      if (m.rank(ElementSet{a, b}) != 2) return false;
  }
  return true;
}

bool is_gfq_representable_rank_le3(const Matroid& m, int q) {
  if (m.full_rank() > 3)
    throw Error(ErrorKind::kUnsupported, "representability search is implemented for rank <= 3 only");
  if (!is_simple(m)) throw Error(ErrorKind::kInvalidArgument, "representability search needs a simple matroid");
  const FieldTable& f = *shared_field(q);
  const int n = m.size();

  // Points of PG(2,q): first nonzero coordinate 1.
  std::vector<std::array<FieldElement, 3>> pts;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        const std::array<FieldElement, 3> v{FieldElement(a), FieldElement(b), FieldElement(c)};
        const FieldElement lead = v[0] ? v[0] : v[1] ? v[1] : v[2];
        if (lead == 1) pts.push_back(v);
      }
  const int np = static_cast<int>(pts.size());
  if (n > np) return false;
  if (n == 0) return true;

  auto det3 = [&](const auto& x, const auto& y, const auto& z) {
    auto t = [&](FieldElement a, FieldElement b, FieldElement c) { return f.mul(a, f.mul(b, c)); };
    FieldElement plus = f.add(f.add(t(x[0], y[1], z[2]), t(x[1], y[2], z[0])), t(x[2], y[0], z[1]));
    FieldElement minus = f.add(f.add(t(x[2], y[1], z[0]), t(x[1], y[0], z[2])), t(x[0], y[2], z[1]));
    return f.sub(plus, minus);
  };
  std::vector<ElementSet> m_line(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) m_line[a * n + b] = m.closure(ElementSet{a, b});

  std::vector<int> image(n, -1);
  std::vector<bool> used(np, false);
  // Point 0 and point 1 may be fixed: PGL(3,q) is 2-transitive on points.
  auto consistent = [&](int i, int x) {
    for (int j = 0; j < i; ++j)
      for (int k = j + 1; k < i; ++k) {
        const bool in_m = m_line[j * n + k].contains(i);
        const bool in_pg = det3(pts[image[j]], pts[image[k]], pts[x]) == 0;
        if (in_m != in_pg) return false;
      }
    return true;
  };
  auto search = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    const int lo = i == 0 ? 0 : i == 1 ? 1 : 0;
    const int hi = i <= 1 ? lo + 1 : np;
    for (int x = lo; x < hi; ++x) {
      if (used[x] || !consistent(i, x)) continue;
      used[x] = true;
      image[i] = x;
      if (self(self, i + 1)) return true;
      used[x] = false;
      image[i] = -1;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace matflat
