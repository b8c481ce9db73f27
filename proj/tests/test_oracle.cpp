#include <doctest.h>

#include "mitlq/oracle.hpp"
#include "support/generators.hpp"

using namespace mitlq;

namespace {

IntervalQueue Q(std::string_view s) { return parse_queue(s); }
Formula P(std::string_view s) { return parse_formula(s); }

}  // namespace

TEST_CASE("oracle_holds examples") {
  ExactTrace t{{{"g", Q("{[2,3]}")}}};
  CHECK(oracle_holds(t, P("true U[1,2] g"), Rational(0), Rational(20)));
  CHECK_FALSE(oracle_holds(t, P("true U[1,2] g"), Rational(5, 2), Rational(20)));
  CHECK(oracle_holds(t, P("true"), Rational(7)));
  CHECK(oracle_holds(t, P("true"), Rational(0)));
}

TEST_CASE("oracle_truth_set examples") {
  ExactTrace t{{{"g", Q("{[5,6]}")}}};
  CHECK(oracle_truth_set(t, P("F[0,2] g"), Rational(20)) == Q("{[3,6]}"));
  CHECK(oracle_truth_set(t, P("g")) == Q("{[5,6]}"));
  CHECK(oracle_truth_set(t, P("g & !g")).empty());
  CHECK(oracle_truth_set(t, P("G[0,1] !g")) == Q("{[0,4), (6,inf)}"));
  CHECK(oracle_truth_set(t, P("true U(0,inf) g")) == Q("{[0,6)}"));
}

TEST_CASE("strict non-matching until") {
  // lhs need not hold at t itself nor at the witness time.
  ExactTrace t{{{"a", Q("{(1,2)}")}, {"b", Q("{[2,2]}")}}};
  CHECK(oracle_holds(t, P("a U[0,5] b"), Rational(1)));
  CHECK(oracle_holds(t, P("a U[0,5] b"), Rational(2)));  // t2 = 0 is allowed by [0,5]
  CHECK_FALSE(oracle_holds(t, P("a U(0,5] b"), Rational(2)));
  CHECK_FALSE(oracle_holds(t, P("a U[0,5] b"), Rational(1, 2)));
}

TEST_CASE("horizon guard") {
  ExactTrace t{{{"g", Q("{[5,6]}")}}};
  // Atoms settle by 10, so the whole of [0, 10] is certified.
  CHECK(certified_window(t, P("F[0,2] g"), Rational(10)) == Interval::closed(Rational(0), Rational(10)));
  // Horizon 4 cuts the atom; lookahead 2 leaves [0, 2].
  CHECK(certified_window(t, P("F[0,2] g"), Rational(4)) == Interval::closed(Rational(0), Rational(2)));
  CHECK_THROWS_AS(oracle_holds(t, P("F[0,2] g"), Rational(3), Rational(4)), OracleError);
  CHECK_FALSE(certified_window(t, P("F[0,inf) g"), Rational(4)));
  CHECK_THROWS_AS(oracle_truth_set(t, P("F[0,5] g"), Rational(4)), OracleError);
  CHECK(lookahead(P("F[0,2] (a U[1,3) b)")) == Endpoint(Rational(5)));
  CHECK(lookahead(P("G a")).is_pos_inf());
}

TEST_CASE("oracle self-consistency and partition sufficiency") {
  testing::Rng rng(31);
  for (int n = 0; n < 150; ++n) {
    ExactTrace t = testing::random_exact_trace(rng, 4);
    Formula f = testing::random_formula(rng, 3);
    CAPTURE(f);
    IntervalQueue truth = oracle_truth_set(t, f);

    OracleOptions refined;
    for (int k = 0; k < 12; ++k) refined.extra_points.push_back(testing::grid(rng, 0, 50, 16));
    CHECK(oracle_truth_set(t, f, std::nullopt, refined) == truth);

    std::vector<const IntervalQueue*> probe{&truth};
    for (const auto& q : t.propositions) probe.push_back(&q.second);
    for (const auto& s : testing::sample_times(rng, probe, 6)) CHECK(oracle_holds(t, f, s) == truth.contains(s));
  }
}

TEST_CASE("sugared operators agree with their definitions") {
  testing::Rng rng(32);
  for (int n = 0; n < 150; ++n) {
    ExactTrace t = testing::random_exact_trace(rng, 4);
    Formula f = testing::random_formula(rng, 3);
    CAPTURE(f);
    CHECK(oracle_truth_set(t, f) == oracle_truth_set(t, desugar(f)));
  }
}
