// SPDX-License-Identifier: Apache-2.0
#include "lsc/schedule.hpp"

#include <utility>

namespace lsc {

namespace {
constexpr Int kPositionCap = Int(4) * 1000 * 1000 * 1000 * 1000 * 1000;  // 4e15

bool mul_fits(Int a, Int b, Int* out) {
  return !__builtin_mul_overflow(a, b, out) && *out <= kPositionCap;
}
}  // namespace

struct Schedule::Impl {
  Kind kind = Kind::Geometric;
  // Geometric
  Int base = 0;
  Int anchor = 0;
  // Explicit
  std::vector<Interval> list;
  // Separated
  SeparatedFamily fam;
  Int row = 0;
  Int col = 0;  // 0 = whole row
  // Strided
  std::shared_ptr<const Impl> strided_base;
  Int offset = 0;
  Int step = 0;

  std::optional<Interval> interval(Int j) const;
};

namespace {

// Slot t = (n-1)*rows*cols + s (0-based, round-major) in the separated
// layout. Round m uses interval length m*cols; every slot starts past twice
// the end of the slot before it, plus a clearance of gap_floor() + round.
// The doubling is what the construction layer leans on: the sum of any two
// members of earlier slots lands strictly between intervals, so assembled
// unions carry no small finite-sums patterns anywhere in the representable
// range. It also keeps every pointwise difference between distinct blocks
// at least sep(max(rows, cols)), which dominates sep(d) for all truncations.
std::optional<Interval> separated_slot(const SeparatedFamily& fam, Int n, Int s) {
  const Int blocks = fam.rows * fam.cols;
  const Int g = fam.gap_floor();
  const Int target = (n - 1) * blocks + s;
  Int lo = g + 2;
  for (Int t = 0; t < target; ++t) {
    const Int round = t / blocks + 1;
    const Int hi = lo + round * fam.cols - 1;
    if (hi > kPositionCap / 2) return std::nullopt;  // lo doubles every slot
    lo = 2 * hi + g + (t + 1) / blocks + 1;
  }
  const Int hi = lo + n * fam.cols - 1;
  if (hi > kPositionCap) return std::nullopt;
  return Interval{lo, hi};
}

}  // namespace

std::optional<Interval> Schedule::Impl::interval(Int j) const {
  if (j < 1) return std::nullopt;
  switch (kind) {
    case Kind::Geometric: {
      // lo = anchor * base^j
      Int lo = anchor;
      for (Int i = 0; i < j; ++i) {
        if (!mul_fits(lo, base, &lo)) return std::nullopt;
      }
      return Interval{lo, lo + j};
    }
    case Kind::Explicit: {
      if (j > static_cast<Int>(list.size())) return std::nullopt;
      return list[static_cast<size_t>(j - 1)];
    }
    case Kind::Separated: {
      Int n, s;
      if (col == 0) {
        // Row view: round-major over the row's cols slots.
        n = (j - 1) / fam.cols + 1;
        const Int t = (j - 1) % fam.cols;  // 0-based col within round
        s = (row - 1) * fam.cols + t;
      } else {
        n = j;
        s = (row - 1) * fam.cols + (col - 1);
      }
      return separated_slot(fam, n, s);
    }
    case Kind::Strided: {
      Int base_index;
      if (__builtin_mul_overflow(j - 1, step, &base_index)) return std::nullopt;
      base_index += offset;
      return strided_base->interval(base_index);
    }
  }
  return std::nullopt;
}

Schedule Schedule::geometric(Int base, Int anchor) {
  if (base < 2 || anchor < 1)
    throw Error(Error::Code::InvalidSchedule, "geometric schedule needs base >= 2, anchor >= 1");
  // hi_j + 1 < lo_{j+1} is equivalent to j + 2 <= c*b^j*(b-1); once it holds
  // at j = 1 the right side at least doubles per step while the left side
  // grows by one, so checking j = 1 settles every j.
  if (anchor * base * (base - 1) < 3)
    throw Error(Error::Code::InvalidSchedule, "geometric schedule intervals would touch");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Geometric;
  impl->base = base;
  impl->anchor = anchor;
  return Schedule(std::move(impl));
}

Schedule Schedule::explicit_list(std::vector<Interval> intervals) {
  Int prev_hi = -1;
  for (const Interval& iv : intervals) {
    if (iv.lo < 1 || iv.hi < iv.lo)
      throw Error(Error::Code::InvalidSchedule, "explicit schedule interval is malformed");
    if (prev_hi >= 0 && iv.lo <= prev_hi + 1)
      throw Error(Error::Code::InvalidSchedule, "explicit schedule intervals must be separated and increasing");
    prev_hi = iv.hi;
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Explicit;
  impl->list = std::move(intervals);
  return Schedule(std::move(impl));
}

Schedule Schedule::separated_block(const SeparatedFamily& fam, Int row, Int col) {
  if (fam.rows < 1 || fam.cols < 1 || fam.slope < 1)
    throw Error(Error::Code::InvalidSchedule, "separated family needs positive rows, cols, slope");
  if (row < 1 || row > fam.rows || col < 1 || col > fam.cols)
    throw Error(Error::Code::InvalidSchedule, "separated block index out of range");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Separated;
  impl->fam = fam;
  impl->row = row;
  impl->col = col;
  return Schedule(std::move(impl));
}

Schedule Schedule::separated_row(const SeparatedFamily& fam, Int row) {
  if (fam.rows < 1 || fam.cols < 1 || fam.slope < 1)
    throw Error(Error::Code::InvalidSchedule, "separated family needs positive rows, cols, slope");
  if (row < 1 || row > fam.rows)
    throw Error(Error::Code::InvalidSchedule, "separated row index out of range");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Separated;
  impl->fam = fam;
  impl->row = row;
  impl->col = 0;
  return Schedule(std::move(impl));
}

Schedule Schedule::stride(Schedule base, Int offset, Int step) {
  if (step < 1 || offset < 1 || offset > step)
    throw Error(Error::Code::InvalidSchedule, "stride needs 1 <= offset <= step");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Strided;
  impl->strided_base = base.impl_;
  impl->offset = offset;
  impl->step = step;
  return Schedule(std::move(impl));
}

Schedule::Kind Schedule::kind() const { return impl_->kind; }

std::optional<Interval> Schedule::interval(Int j) const { return impl_->interval(j); }

void Schedule::for_each_interval(Int hi_bound, const std::function<bool(Interval)>& fn) const {
  for (Int j = 1;; ++j) {
    auto iv = impl_->interval(j);
    if (!iv || iv->lo > hi_bound) return;
    if (!fn(*iv)) return;
  }
}

bool Schedule::contains(Int n) const {
  if (n < 1) return false;
  bool found = false;
  for_each_interval(n, [&](Interval iv) {
    if (iv.contains(n)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

Int Schedule::geometric_base() const { return impl_->base; }
Int Schedule::geometric_anchor() const { return impl_->anchor; }
const std::vector<Interval>& Schedule::explicit_intervals() const { return impl_->list; }
const SeparatedFamily& Schedule::family() const { return impl_->fam; }
Int Schedule::separated_row_index() const { return impl_->row; }
Int Schedule::separated_col_index() const { return impl_->col; }
Schedule Schedule::stride_base() const { return Schedule(impl_->strided_base); }
Int Schedule::stride_offset() const { return impl_->offset; }
Int Schedule::stride_step() const { return impl_->step; }

}  // namespace lsc
