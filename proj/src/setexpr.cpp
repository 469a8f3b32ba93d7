// SPDX-License-Identifier: Apache-2.0
#include "lsc/setexpr.hpp"

#include <algorithm>

namespace lsc {

Int Window::count() const {
  Int c = 0;
  for (bool b : bits_) c += b ? 1 : 0;
  return c;
}

std::vector<Int> Window::members() const {
  std::vector<Int> out;
  for (Int i = 1; i <= size(); ++i)
    if (bits_[static_cast<size_t>(i - 1)]) out.push_back(i);
  return out;
}

struct SetExpr::Node {
  Kind kind = Kind::Empty;
  std::vector<Int> elems;               // Finite, sorted ascending
  Int r = 0, m = 1;                     // Residue
  std::optional<Schedule> sched;        // Thick
  std::shared_ptr<const Word> word;     // Return
  std::string pattern;
  ReturnBase base = ReturnBase::IndexDropZero;
  std::vector<SetExpr> kids;
  Int amount = 0;                       // ShiftDown/ShiftUp/Dilate/Quotient
};

namespace {
constexpr Int kEvalCap = Int(4) * 1000 * 1000 * 1000 * 1000 * 1000;  // 4e15
}  // namespace

std::shared_ptr<SetExpr::Node> SetExpr::blank() { return std::make_shared<Node>(); }

SetExpr SetExpr::empty() {
  auto n = blank();
  n->kind = Kind::Empty;
  return SetExpr(std::move(n));
}

SetExpr SetExpr::full() {
  auto n = blank();
  n->kind = Kind::Full;
  return SetExpr(std::move(n));
}

SetExpr SetExpr::finite(std::vector<Int> elems) {
  for (Int e : elems)
    if (e < 1) throw Error(Error::Code::InvalidArgument, "finite set elements must be >= 1");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  auto n = blank();
  n->kind = Kind::Finite;
  n->elems = std::move(elems);
  return SetExpr(std::move(n));
}

SetExpr SetExpr::residue(Int r, Int m) {
  if (m < 1 || r < 0 || r >= m)
    throw Error(Error::Code::InvalidArgument, "residue class needs 0 <= r < m, m >= 1");
  auto n = blank();
  n->kind = Kind::Residue;
  n->r = r;
  n->m = m;
  return SetExpr(std::move(n));
}

SetExpr SetExpr::thick(Schedule sched) {
  auto n = blank();
  n->kind = Kind::Thick;
  n->sched = std::move(sched);
  return SetExpr(std::move(n));
}

SetExpr SetExpr::returns(WordSpec word, std::string pattern, ReturnBase base) {
  if (pattern.empty()) throw Error(Error::Code::InvalidArgument, "return-set pattern is empty");
  auto n = blank();
  n->kind = Kind::Return;
  n->word = std::make_shared<const Word>(std::move(word));
  n->pattern = std::move(pattern);
  n->base = base;
  return SetExpr(std::move(n));
}

SetExpr SetExpr::unite(std::vector<SetExpr> parts) {
  if (parts.empty()) throw Error(Error::Code::InvalidArgument, "union of an empty list");
  auto n = blank();
  n->kind = Kind::Union;
  n->kids = std::move(parts);
  return SetExpr(std::move(n));
}

SetExpr SetExpr::intersect(std::vector<SetExpr> parts) {
  if (parts.empty()) throw Error(Error::Code::InvalidArgument, "intersection of an empty list");
  auto n = blank();
  n->kind = Kind::Inter;
  n->kids = std::move(parts);
  return SetExpr(std::move(n));
}

SetExpr SetExpr::complement(SetExpr a) {
  auto n = blank();
  n->kind = Kind::Compl;
  n->kids.push_back(std::move(a));
  return SetExpr(std::move(n));
}

SetExpr SetExpr::make_unary(Kind kind, Int amount, SetExpr a, Int min_amount,
                            const char* what) {
  if (amount < min_amount) throw Error(Error::Code::InvalidArgument, what);
  auto n = blank();
  n->kind = kind;
  n->amount = amount;
  n->kids.push_back(std::move(a));
  return SetExpr(std::move(n));
}

SetExpr SetExpr::shift_down(Int n, SetExpr a) {
  return make_unary(Kind::ShiftDown, n, std::move(a), 0, "shift distance must be >= 0");
}
SetExpr SetExpr::shift_up(Int n, SetExpr a) {
  return make_unary(Kind::ShiftUp, n, std::move(a), 0, "shift distance must be >= 0");
}
SetExpr SetExpr::dilate(Int k, SetExpr a) {
  return make_unary(Kind::Dilate, k, std::move(a), 1, "dilation factor must be >= 1");
}
SetExpr SetExpr::quotient(Int k, SetExpr a) {
  return make_unary(Kind::Quotient, k, std::move(a), 1, "quotient factor must be >= 1");
}

SetExpr::Kind SetExpr::kind() const { return node_->kind; }

bool SetExpr::member(Int n) const {
  if (n < 1) return false;
  const Node& nd = *node_;
  switch (nd.kind) {
    case Kind::Empty:
      return false;
    case Kind::Full:
      return true;
    case Kind::Finite:
      return std::binary_search(nd.elems.begin(), nd.elems.end(), n);
    case Kind::Residue:
      return n % nd.m == nd.r;
    case Kind::Thick:
      return nd.sched->contains(n);
    case Kind::Return: {
      const Int plen = static_cast<Int>(nd.pattern.size());
      const Int idx = nd.base == ReturnBase::IndexDropZero ? n : n - 1;
      auto text = nd.word->prefix(idx + plen);
      if (static_cast<Int>(text->size()) < idx + plen) return false;
      return text->compare(static_cast<size_t>(idx), static_cast<size_t>(plen), nd.pattern) == 0;
    }
    case Kind::Union:
      for (const SetExpr& k : nd.kids)
        if (k.member(n)) return true;
      return false;
    case Kind::Inter:
      for (const SetExpr& k : nd.kids)
        if (!k.member(n)) return false;
      return true;
    case Kind::Compl:
      return !nd.kids[0].member(n);
    case Kind::ShiftDown: {
      Int up = n + nd.amount;
      if (up > kEvalCap) throw Error(Error::Code::ResourceLimit, "membership query out of range");
      return nd.kids[0].member(up);
    }
    case Kind::ShiftUp:
      return nd.kids[0].member(n - nd.amount);
    case Kind::Dilate:
      return n % nd.amount == 0 && nd.kids[0].member(n / nd.amount);
    case Kind::Quotient: {
      Int up;
      if (__builtin_mul_overflow(n, nd.amount, &up) || up > kEvalCap)
        throw Error(Error::Code::ResourceLimit, "membership query out of range");
      return nd.kids[0].member(up);
    }
  }
  return false;
}

Window SetExpr::window(Int n) const {
  Window w(n);
  for (Int i = 1; i <= n; ++i) w.set(i, member(i));
  return w;
}

bool SetExpr::ep_eligible() const {
  const Node& nd = *node_;
  if (nd.kind == Kind::Thick || nd.kind == Kind::Return) return false;
  for (const SetExpr& k : nd.kids)
    if (!k.ep_eligible()) return false;
  return true;
}

const std::vector<Int>& SetExpr::finite_elements() const { return node_->elems; }
Int SetExpr::residue_value() const { return node_->r; }
Int SetExpr::modulus() const { return node_->m; }
const Schedule& SetExpr::schedule() const { return *node_->sched; }
const Word& SetExpr::word() const { return *node_->word; }
const std::string& SetExpr::pattern() const { return node_->pattern; }
ReturnBase SetExpr::return_base() const { return node_->base; }
const std::vector<SetExpr>& SetExpr::children() const { return node_->kids; }
Int SetExpr::amount() const { return node_->amount; }

Window difference_set_window(const SetExpr& s, const SetExpr& s2, Int n) {
  if (n < 0) throw Error(Error::Code::InvalidArgument, "window size is negative");
  const Int horizon = 2 * n;
  Window w2 = s2.window(horizon);
  Window ws = s.window(horizon + n);  // s' + d reaches 3n
  Window out(n);
  for (Int sp = 1; sp <= horizon; ++sp) {
    if (!w2.test(sp)) continue;
    for (Int d = 1; d <= n; ++d)
      if (ws.test(sp + d)) out.set(d);
  }
  return out;
}

namespace {
void collect_regions(const SetExpr& e, Int bound, int cap, std::vector<Interval>& out) {
  switch (e.kind()) {
    case SetExpr::Kind::Thick: {
      int taken = 0;
      e.schedule().for_each_interval(bound, [&](Interval iv) {
        out.push_back(iv);
        return ++taken < cap;
      });
      return;
    }
    case SetExpr::Kind::Union:
    case SetExpr::Kind::Inter:
      for (const SetExpr& k : e.children()) collect_regions(k, bound, cap, out);
      return;
    case SetExpr::Kind::ShiftDown: {
      // A run of the child at [lo, hi] appears at [lo - n, hi - n].
      std::vector<Interval> inner;
      collect_regions(e.children()[0], bound + e.amount(), cap, inner);
      for (Interval iv : inner) out.push_back({iv.lo - e.amount(), iv.hi - e.amount()});
      return;
    }
    case SetExpr::Kind::ShiftUp: {
      std::vector<Interval> inner;
      collect_regions(e.children()[0], bound, cap, inner);
      for (Interval iv : inner) out.push_back({iv.lo + e.amount(), iv.hi + e.amount()});
      return;
    }
    case SetExpr::Kind::Quotient: {
      std::vector<Interval> inner;
      Int inner_bound;
      if (__builtin_mul_overflow(bound, e.amount(), &inner_bound)) inner_bound = kEvalCap;
      collect_regions(e.children()[0], inner_bound, cap, inner);
      for (Interval iv : inner) {
        Interval q{(iv.lo + e.amount() - 1) / e.amount(), iv.hi / e.amount()};
        if (q.lo <= q.hi) out.push_back(q);
      }
      return;
    }
    case SetExpr::Kind::Dilate:
      // Dilation by k >= 2 destroys runs; k = 1 is the identity.
      if (e.amount() == 1) collect_regions(e.children()[0], bound, cap, out);
      return;
    default:
      return;  // atoms and complements contribute no hints
  }
}
}  // namespace

std::vector<Interval> run_hint_regions(const SetExpr& e, Int bound, int cap_per_schedule) {
  std::vector<Interval> regions;
  collect_regions(e, bound, cap_per_schedule, regions);
  for (Interval& iv : regions) {
    iv.lo = std::max<Int>(iv.lo, 1);
    iv.hi = std::min<Int>(iv.hi, bound);
  }
  regions.erase(std::remove_if(regions.begin(), regions.end(),
                               [](Interval iv) { return iv.lo > iv.hi; }),
                regions.end());
  std::sort(regions.begin(), regions.end(),
            [](Interval a, Interval b) { return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi; });
  regions.erase(std::unique(regions.begin(), regions.end()), regions.end());
  return regions;
}

}  // namespace lsc
