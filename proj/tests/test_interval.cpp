#include <doctest.h>

#include "mitlq/error.hpp"
#include "mitlq/interval.hpp"
#include "support/generators.hpp"

using namespace mitlq;

namespace {

Interval I(std::string_view s) { return parse_interval(s); }

std::string str(const std::optional<Interval>& i) { return i ? i->to_string() : "absent"; }

// Brute-force membership of t in b ⊖ i: search β ∈ b with β - t ∈ i. The
// candidates for β are the endpoints of b and t + endpoints of i, plus
// midpoints, which covers every region where the test can change.
bool in_difference_brute(const Interval& b, const Interval& i, const Rational& t) {
  std::vector<Rational> cand{b.lo(), Rational(t + i.lo())};
  if (b.is_bounded()) cand.push_back(b.hi().value());
  if (i.is_bounded()) cand.emplace_back(t + i.hi().value());
  std::sort(cand.begin(), cand.end());
  std::vector<Rational> all(cand);
  for (std::size_t k = 0; k + 1 < cand.size(); ++k) all.emplace_back((cand[k] + cand[k + 1]) / 2);
  all.emplace_back(cand.back() + 1);
  for (const auto& beta : all) {
    if (beta < 0) continue;
    Rational iota = beta - t;
    if (iota >= 0 && b.contains(beta) && i.contains(iota)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("7/2") == Rational(7, 2));
  CHECK(parse_rational("14/4") == Rational(7, 2));
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(format_rational(parse_rational("6/4")) == "3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(parse_endpoint("inf").is_pos_inf());
}

TEST_CASE("endpoint arithmetic on the extended line") {
  CHECK((Endpoint(Rational(3)) - Endpoint::pos_inf()).is_neg_inf());
  CHECK((Endpoint::pos_inf() - Endpoint(Rational(3))).is_pos_inf());
  CHECK(Endpoint::neg_inf() < Endpoint(Rational(-100)));
  CHECK(Endpoint(Rational(100)) < Endpoint::pos_inf());
  CHECK_THROWS(Endpoint::pos_inf() - Endpoint::pos_inf());
}

TEST_CASE("interval construction rejects empty and negative sets") {
  CHECK_THROWS_AS(Interval(Rational(1), false, Rational(1), true), std::invalid_argument);
  CHECK_THROWS_AS(Interval(Rational(2), true, Rational(1), true), std::invalid_argument);
  CHECK_THROWS_AS(Interval(Rational(-1), true, Rational(1), true), std::invalid_argument);
  CHECK_FALSE(Interval::make(Rational(1), true, Rational(1), false));
  CHECK(Interval::make(Rational(1), true, Rational(1), true)->is_singleton());
  CHECK_FALSE(Interval(Rational(0), true, Endpoint::pos_inf(), true).hi_closed());

  CHECK(I("[1, 7/2)").to_string() == "[1,7/2)");
  CHECK(I("(0.5,inf)").to_string() == "(1/2,inf)");
  CHECK_THROWS_AS(I("[2,1]"), ParseError);
  CHECK_THROWS_AS(I("[1,1)"), ParseError);
  CHECK_THROWS_AS(I("[1,2"), ParseError);
  CHECK_THROWS_AS(I("[-1,2]"), ParseError);
}

TEST_CASE("intersect") {
  CHECK(str(intersect(I("[1,3]"), I("(2,5)"))) == "(2,3]");
  CHECK(str(intersect(I("[0,1)"), I("(1,2]"))) == "absent");
  CHECK(str(intersect(I("[0,inf)"), I("[2,3]"))) == "[2,3]");
  CHECK(str(intersect(I("[0,1]"), I("[1,2]"))) == "[1,1]");
}

TEST_CASE("closure and interior") {
  CHECK(closure(I("(1,2)")).to_string() == "[1,2]");
  CHECK(closure(I("(1,2]")).to_string() == "[1,2]");
  CHECK(closure(I("[0,inf)")).to_string() == "[0,inf)");

  CHECK(str(interior(I("[1,2]"))) == "(1,2)");
  CHECK(str(interior(I("[0,1)"))) == "(0,1)");
  CHECK(str(interior(I("[3,3]"))) == "absent");
}

TEST_CASE("union_if_connected") {
  CHECK(str(union_if_connected(I("[0,1)"), I("[1,2]"))) == "[0,2]");
  CHECK(str(union_if_connected(I("[0,1)"), I("(1,2]"))) == "absent");
  CHECK(str(union_if_connected(I("[0,2]"), I("[1,3]"))) == "[0,3]");
  CHECK(str(union_if_connected(I("[1,3]"), I("[0,2)"))) == "[0,3]");
  CHECK(str(union_if_connected(I("(0,1)"), I("[0,0]"))) == "[0,1)");
}

TEST_CASE("separated") {
  CHECK(separated(I("[0,1)"), I("(1,2]")));
  CHECK_FALSE(separated(I("[0,1)"), I("[1,2]")));
  CHECK(separated(I("[0,1]"), I("[2,3]")));
  CHECK_FALSE(separated(I("[0,2]"), I("[1,3]")));
}

TEST_CASE("arrow operators") {
  CHECK(str(right_of(I("(1,2)"))) == "[2,inf)");
  CHECK(str(right_of(I("(1,inf)"))) == "absent");
  CHECK(str(right_of(std::nullopt)) == "[0,inf)");
  CHECK(str(right_of(I("(1,2]"))) == "(2,inf)");

  CHECK(str(left_of(I("[1,2)"))) == "[0,1)");
  CHECK(str(left_of(I("(1,2)"))) == "[0,1]");
  CHECK(str(left_of(I("[0,2]"))) == "absent");
  CHECK(str(left_of(std::nullopt)) == "[0,inf)");
  // {t >= 0 | t < every point of (0,2)} is {0}.
  CHECK(str(left_of(I("(0,2)"))) == "[0,0]");
}

TEST_CASE("precedes") {
  CHECK(precedes(I("[0,1]"), I("[2,3]")));
  CHECK_FALSE(precedes(I("[0,1]"), I("[1,2]")));
  CHECK(precedes(I("[0,1)"), I("[1,2]")));
  CHECK_FALSE(precedes(I("[2,3]"), I("[0,1]")));
  CHECK_FALSE(precedes(I("[0,inf)"), I("[5,6]")));
}

TEST_CASE("minkowski difference") {
  CHECK(minkowski_diff(I("[2,3]"), I("[1,2]")).to_string() == "[0,2]");
  CHECK(minkowski_diff(I("[2,3]"), I("(0,1)")).to_string() == "(1,3)");
  CHECK(minkowski_diff(I("[2,3]"), I("[1,inf)")).to_string() == "(-inf,2]");
  CHECK(str(intersect(minkowski_diff(I("[2,3]"), I("[1,inf)")), Interval::non_negative())) == "[0,2]");
}

TEST_CASE("interval properties on random inputs") {
  testing::Rng rng(20261015);
  for (int n = 0; n < 2000; ++n) {
    Interval a = testing::random_interval(rng, 10, 4);
    Interval b = testing::random_interval(rng, 10, 4);
    CAPTURE(a);
    CAPTURE(b);

    // Int(Cl(a)) ⊆ a
    if (auto inner = interior(closure(a))) CHECK(intersect(*inner, a) == inner);

    if (separated(a, b)) CHECK_FALSE(intersect(a, b));
    CHECK(union_if_connected(a, b).has_value() == !separated(a, b));

    CHECK_FALSE(precedes(a, a));

    // Monotonicity of closure and interior under inclusion.
    if (auto sub = intersect(a, b)) {
      CHECK(intersect(closure(*sub), closure(a)) == closure(*sub));
      if (auto inner = interior(*sub)) CHECK(intersect(*inner, *interior(a)) == inner);
    }

    std::vector<Rational> probes{a.lo(), b.lo(), Rational(a.lo() + Rational(1, 3))};
    if (b.is_bounded()) probes.push_back(b.hi().value());
    for (int k = 0; k < 4; ++k) probes.push_back(testing::grid(rng, 0, 14, 8));
    for (const auto& t : probes) {
      if (auto joined = union_if_connected(a, b)) CHECK(joined->contains(t) == (a.contains(t) || b.contains(t)));
      bool in_both = a.contains(t) && b.contains(t);
      CHECK(intersect(a, b).has_value() >= in_both);
      if (auto both = intersect(a, b)) CHECK(both->contains(t) == in_both);
      if (auto r = right_of(a)) CHECK(r->contains(t) == (Endpoint(t) > a.hi() || (Endpoint(t) == a.hi() && !a.hi_closed())));
      CHECK(minkowski_diff(a, b).contains(t) == in_difference_brute(a, b, t));
    }
  }
}

TEST_CASE("precedes is transitive") {
  testing::Rng rng(7);
  int chains = 0;
  for (int n = 0; n < 5000; ++n) {
    Interval a = testing::random_interval(rng, 10, 3);
    Interval b = testing::random_interval(rng, 10, 3);
    Interval c = testing::random_interval(rng, 10, 3);
    if (precedes(a, b) && precedes(b, c)) {
      ++chains;
      CHECK(precedes(a, c));
    }
  }
  CHECK(chains > 100);
}
