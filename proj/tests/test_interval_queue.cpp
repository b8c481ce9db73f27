#include <doctest.h>

#include "mitlq/error.hpp"
#include "mitlq/interval_queue.hpp"
#include "mitlq/oracle.hpp"
#include "support/generators.hpp"

using namespace mitlq;

namespace {

IntervalQueue Q(std::string_view s) { return parse_queue(s); }
Interval I(std::string_view s) { return parse_interval(s); }

bool in_any(const std::vector<Interval>& items, const Rational& t) {
  return std::any_of(items.begin(), items.end(), [&](const Interval& i) { return i.contains(t); });
}

bool valid_queue(const IntervalQueue& q) {
  auto items = q.items();
  for (std::size_t a = 0; a < items.size(); ++a) {
    if (a + 1 < items.size() && !precedes(items[a], items[a + 1])) return false;
    for (std::size_t b = a + 1; b < items.size(); ++b) {
      if (!separated(items[a], items[b])) return false;
    }
  }
  return true;
}

// Truth set of `h U_timing j` from the pointwise oracle.
IntervalQueue until_by_oracle(const IntervalQueue& h, const IntervalQueue& j, const Interval& timing) {
  ExactTrace t{{{"h", h}, {"j", j}}};
  return oracle_truth_set(t, Formula::until(Formula::atom("h"), Formula::atom("j"), timing));
}

}  // namespace

TEST_CASE("queue text syntax") {
  CHECK(Q("{}").empty());
  CHECK(Q("{ [0,1) , (1,2] }").to_string() == "{[0,1), (1,2]}");
  CHECK_THROWS_AS(Q("{[0,1)"), ParseError);
  CHECK_THROWS_AS(Q("[0,1)"), ParseError);
  CHECK_THROWS_AS(Q("{[0,1)} x"), ParseError);
}

TEST_CASE("construct") {
  CHECK(IntervalQueue::construct({I("[0,1)"), I("[1,2]"), I("[3,4]")}).to_string() == "{[0,2], [3,4]}");
  CHECK(IntervalQueue::construct(std::vector<Interval>{}).empty());
  CHECK(IntervalQueue::construct({I("[0,1)"), I("(1,2]")}).to_string() == "{[0,1), (1,2]}");
  CHECK(IntervalQueue::construct({I("[3,4]"), I("(1,2]"), I("[0,1]")}).to_string() == "{[0,2], [3,4]}");

  std::vector<std::optional<Interval>> with_empty{std::nullopt, I("[5,6]"), std::nullopt};
  CHECK(IntervalQueue::construct(with_empty).to_string() == "{[5,6]}");

  CHECK_THROWS_AS(IntervalQueue::from_separated({I("[0,1)"), I("[1,2]")}), std::invalid_argument);
  CHECK(IntervalQueue::from_separated({I("(1,2]"), I("[0,1)")}).to_string() == "{[0,1), (1,2]}");
}

TEST_CASE("complement") {
  CHECK(complement(Q("{(1,2], (3,4]}")).to_string() == "{[0,1], (2,3], (4,inf)}");
  CHECK(complement(Q("{}")).to_string() == "{[0,inf)}");
  CHECK(complement(Q("{[0,inf)}")).empty());
  CHECK(complement(Q("{[0,1), (1,2]}")).to_string() == "{[1,1], (2,inf)}");
  CHECK(complement(Q("{(0,1)}")).to_string() == "{[0,0], [1,inf)}");
}

TEST_CASE("conjoin") {
  CHECK(conjoin(Q("{[0,2]}"), Q("{[1,3]}")).to_string() == "{[1,2]}");
  CHECK(conjoin(Q("{[0,1)}"), Q("{(1,2]}")).empty());
  CHECK(conjoin(Q("{[0,5]}"), Q("{[1,2],[3,4]}")).to_string() == "{[1,2], [3,4]}");
}

TEST_CASE("until_op") {
  CHECK(until_op(Q("{[0,10]}"), Q("{[2,3]}"), I("[1,2]")).to_string() == "{[0,2]}");
  CHECK(until_op(Q("{[0,5)}"), Q("{(6,7)}"), I("[1,2]")).empty());
  CHECK(until_op(Q("{[0,1), (1,10]}"), Q("{[5,6]}"), I("(0,1)")).to_string() == "{(4,6)}");
  CHECK_THROWS_AS(until_op(Q("{[0,1]}"), Q("{[0,1]}"), I("[1,1]")), std::invalid_argument);
}

TEST_CASE("until_op with a zero-offset witness") {
  // t2 = 0 leaves (t, t) empty, so the rhs alone suffices.
  CHECK(until_op(Q("{}"), Q("{[2,3]}"), I("[0,1]")).to_string() == "{[2,3]}");
  CHECK(until_op(Q("{[0,1]}"), Q("{(2,3]}"), I("[0,1]")).to_string() == "{(2,3]}");
  CHECK(until_op(Q("{}"), Q("{[2,3]}"), I("(0,1]")).empty());

  // The same three cases through the pointwise oracle.
  CHECK(until_by_oracle(Q("{[0,10]}"), Q("{[2,3]}"), I("[1,2]")).to_string() == "{[0,2]}");
  CHECK(until_by_oracle(Q("{[0,5)}"), Q("{(6,7)}"), I("[1,2]")).empty());
  CHECK(until_by_oracle(Q("{[0,1), (1,10]}"), Q("{[5,6]}"), I("(0,1)")).to_string() == "{(4,6)}");
}

TEST_CASE("contains") {
  CHECK_FALSE(Q("{[0,1),(1,2]}").contains(Rational(1)));
  CHECK(Q("{[0,1),(1,2]}").contains(Rational(1, 2)));
  CHECK_FALSE(Q("{}").contains(Rational(0)));
  CHECK(Q("{[0,0], (3,inf)}").contains(Rational(0)));
  CHECK(Q("{[0,0], (3,inf)}").contains(Rational(1000)));
  CHECK_FALSE(Q("{[0,0], (3,inf)}").contains(Rational(3)));
}

TEST_CASE("difference") {
  CHECK(difference(Q("{[0,3]}"), Q("{[1,2]}")).to_string() == "{[0,1), (2,3]}");
  CHECK(difference(Q("{[0,1]}"), Q("{}")).to_string() == "{[0,1]}");
  CHECK(difference(Q("{[0,1]}"), Q("{[0,inf)}")).empty());
}

TEST_CASE("measure") {
  CHECK(Q("{[0,1), (2,3]}").measure() == Endpoint(Rational(2)));
  CHECK(Q("{[0,inf)}").measure().is_pos_inf());
  CHECK(Q("{}").measure() == Endpoint(Rational(0)));
  CHECK(Q("{[1,1], [2,5/2]}").measure() == Endpoint(Rational(1, 2)));
}

TEST_CASE("construct preserves the union and ignores input order") {
  testing::Rng rng(11);
  for (int n = 0; n < 500; ++n) {
    std::vector<Interval> items;
    int count = testing::uniform(rng, 0, 8);
    for (int k = 0; k < count; ++k) items.push_back(testing::random_interval(rng, 12, 4));
    IntervalQueue q = IntervalQueue::construct(items);
    CAPTURE(q);
    CHECK(valid_queue(q));
    std::shuffle(items.begin(), items.end(), rng);
    CHECK(IntervalQueue::construct(items) == q);
    std::vector<const IntervalQueue*> probe{&q};
    for (const auto& t : testing::sample_times(rng, probe, 10)) CHECK(q.contains(t) == in_any(items, t));
  }
}

TEST_CASE("queue operators match pointwise set algebra") {
  testing::Rng rng(12);
  for (int n = 0; n < 400; ++n) {
    IntervalQueue a = testing::random_queue(rng, 5, 12);
    IntervalQueue b = testing::random_queue(rng, 5, 12);
    CAPTURE(a);
    CAPTURE(b);
    IntervalQueue not_a = complement(a);
    IntervalQueue both = conjoin(a, b);
    IntervalQueue minus = difference(a, b);
    CHECK(valid_queue(not_a));
    CHECK(valid_queue(both));
    CHECK(valid_queue(minus));
    CHECK(complement(not_a) == a);
    std::vector<const IntervalQueue*> probe{&a, &b};
    for (const auto& t : testing::sample_times(rng, probe, 10)) {
      CHECK(not_a.contains(t) == !a.contains(t));
      CHECK(both.contains(t) == (a.contains(t) && b.contains(t)));
      CHECK(minus.contains(t) == (a.contains(t) && !b.contains(t)));
    }
  }
}

TEST_CASE("until_op agrees with the oracle on random queues") {
  testing::Rng rng(13);
  for (int n = 0; n < 300; ++n) {
    IntervalQueue h = testing::random_queue(rng, 5, 20);
    IntervalQueue j = testing::random_queue(rng, 5, 20);
    Interval timing = testing::random_timing(rng);
    CAPTURE(h);
    CAPTURE(j);
    CAPTURE(timing);
    IntervalQueue fast = until_op(h, j, timing);
    CHECK(valid_queue(fast));
    CHECK(fast == until_by_oracle(h, j, timing));
  }
}
