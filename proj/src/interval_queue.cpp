#include "mitlq/interval_queue.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "text_cursor.hpp"

namespace mitlq {

namespace {

// Order by lower bound; at a shared lower bound the closed one comes first.
bool starts_before(const Interval& a, const Interval& b) {
  if (a.lo() != b.lo()) return a.lo() < b.lo();
  return a.lo_closed() && !b.lo_closed();
}

std::vector<Interval> merge_sorted(std::vector<Interval> pending) {
  std::sort(pending.begin(), pending.end(), starts_before);
  std::vector<Interval> merged;
  merged.reserve(pending.size());
  for (auto& next : pending) {
    if (!merged.empty()) {
      if (auto joined = union_if_connected(merged.back(), next)) {
        merged.back() = std::move(*joined);
        continue;
      }
    }
    merged.push_back(std::move(next));
  }
  return merged;
}

}  // namespace

IntervalQueue IntervalQueue::construct(std::span<const std::optional<Interval>> intervals) {
  std::vector<Interval> pending;
  pending.reserve(intervals.size());
  for (const auto& i : intervals) {
    if (i) pending.push_back(*i);
  }
  return IntervalQueue(merge_sorted(std::move(pending)));
}

IntervalQueue IntervalQueue::construct(std::span<const Interval> intervals) {
  return IntervalQueue(merge_sorted(std::vector<Interval>(intervals.begin(), intervals.end())));
}

IntervalQueue IntervalQueue::construct(std::initializer_list<Interval> intervals) {
  return IntervalQueue(merge_sorted(std::vector<Interval>(intervals)));
}

IntervalQueue IntervalQueue::from_separated(std::vector<Interval> items) {
  std::sort(items.begin(), items.end(), starts_before);
  for (std::size_t k = 1; k < items.size(); ++k) {
    if (!precedes(items[k - 1], items[k]) || !separated(items[k - 1], items[k])) {
      throw std::invalid_argument("intervals " + items[k - 1].to_string() + " and " + items[k].to_string() +
                                  " are not separated");
    }
  }
  return IntervalQueue(std::move(items));
}

bool IntervalQueue::contains(const Rational& t) const {
  // First item whose lower bound exceeds t; only its predecessor can contain t.
  auto it = std::partition_point(items_.begin(), items_.end(),
                                 [&](const Interval& i) { return i.lo() <= t; });
  return it != items_.begin() && std::prev(it)->contains(t);
}

Endpoint IntervalQueue::measure() const {
  Endpoint total(Rational(0));
  for (const auto& i : items_) {
    if (!i.is_bounded()) return Endpoint::pos_inf();
    total = total + i.length();
  }
  return total;
}

std::string IntervalQueue::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < items_.size(); ++k) {
    if (k) s += ", ";
    s += items_[k].to_string();
  }
  s += '}';
  return s;
}

std::ostream& operator<<(std::ostream& os, const IntervalQueue& q) { return os << q.to_string(); }

IntervalQueue complement(const IntervalQueue& q) {
  if (q.empty()) return IntervalQueue::everything();

  const auto& items = q.items_;
  std::vector<Interval> out;
  out.reserve(items.size() + 1);
  if (auto head = left_of(items.front())) out.push_back(std::move(*head));
  for (std::size_t k = 0; k + 1 < items.size(); ++k) {
    auto after = right_of(items[k]);
    auto before = left_of(items[k + 1]);
    if (after && before) {
      if (auto gap = intersect(*after, *before)) out.push_back(std::move(*gap));
    }
  }
  if (auto tail = right_of(items.back())) out.push_back(std::move(*tail));
  return IntervalQueue(std::move(out));
}

IntervalQueue conjoin(const IntervalQueue& a, const IntervalQueue& b) {
  std::vector<Interval> out;
  for (const auto& i : a) {
    for (const auto& j : b) {
      if (auto both = intersect(i, j)) out.push_back(std::move(*both));
    }
  }
  std::sort(out.begin(), out.end(), starts_before);
  return IntervalQueue(std::move(out));
}

IntervalQueue until_op(const IntervalQueue& lhs, const IntervalQueue& rhs, const Interval& timing) {
  if (timing.is_singleton()) {
    throw std::invalid_argument("until timing interval " + timing.to_string() + " is degenerate");
  }
  std::vector<Interval> pieces;
  for (const auto& h : lhs) {
    Interval held = closure(h);
    for (const auto& j : rhs) {
      auto target = intersect(held, j);
      if (!target) continue;
      if (auto piece = intersect(minkowski_diff(*target, timing), held)) pieces.push_back(std::move(*piece));
    }
  }
  // A witness at offset 0 needs nothing from lhs: (t, t) is empty. The
  // per-pair terms only cover t inside some Cl(H), so add J itself.
  if (timing.contains(Rational(0))) pieces.insert(pieces.end(), rhs.begin(), rhs.end());
  return IntervalQueue::construct(pieces);
}

IntervalQueue difference(const IntervalQueue& a, const IntervalQueue& b) { return conjoin(a, complement(b)); }

IntervalQueue parse_queue(std::string_view text) {
  detail::TextCursor cursor(text);
  cursor.expect('{', "'{' to open an interval queue");
  std::vector<Interval> items;
  if (!cursor.consume('}')) {
    do {
      items.push_back(detail::read_interval(cursor));
    } while (cursor.consume(','));
    cursor.expect('}', "'}' to close an interval queue");
  }
  if (!cursor.at_end()) cursor.fail("trailing characters after interval queue");
  return IntervalQueue::construct(items);
}

}  // namespace mitlq
