#include <catch_amalgamated.hpp>

#include "support/generators.hpp"

using namespace branchkit;

namespace {

Store bools(std::vector<std::vector<std::int64_t>> cells) {
  std::vector<DomainValue> vs;
  for (auto& c : cells) vs.push_back(DomainValue::boolean(std::move(c)));
  return Store(std::move(vs));
}

}  // namespace

TEST_CASE("naive selector takes the left-most divisible cell") {
  CHECK(choose_naive(bools({{1}, {0, 1}, {0, 1}})) == 1);
  CHECK(choose_naive(bools({{0, 1}, {0}, {0}})) == 0);
  CHECK(choose_naive(bools({{1}, {0}, {0, 1}})) == 2);
  CHECK_THROWS_AS(choose_naive(bools({{1}, {0}, {0}})), std::invalid_argument);
}

TEST_CASE("first fail picks the divisible cell with minimal precision") {
  Store fd({DomainValue::finite({1, 2, 3}), DomainValue::finite({4, 5})});
  CHECK(choose_first_fail(fd) == 1);  // (2,0) beats (3,0)
  // cross-domain: the precision map normalises the comparison
  Store mixed({DomainValue::int_interval(0, 5), DomainValue::finite({0, 1})});
  CHECK(choose_first_fail(mixed) == 1);  // (2,0) beats (5,0)
  // ties go left-most
  Store tie({DomainValue::boolean({0, 1}), DomainValue::finite({2, 3})});
  CHECK(choose_first_fail(tie) == 0);
  // singleton cells never win even with tiny precision
  Store single({DomainValue::finite({9}), DomainValue::finite({1, 2, 3})});
  CHECK(choose_first_fail(single) == 1);
  CHECK_THROWS_AS(choose_first_fail(bools({{0}, {1}})), std::invalid_argument);
}

TEST_CASE("selector postconditions hold on random stores", "[property]") {
  bktest::Rng rng(31337);
  int trials = 0;
  while (trials < 600) {
    auto inst = bktest::random_finite_csp(rng, 4, 0);
    auto s = bktest::random_substore(rng, inst, /*allow_empty=*/false);
    if (!s.divisible()) continue;
    ++trials;

    auto jn = choose_naive(s);
    CHECK(cardinality_of(s.cell(jn)) == Cardinality::Many);
    for (std::size_t i = 0; i < jn; ++i)
      CHECK(cardinality_of(s.cell(i)) == Cardinality::One);

    auto jf = choose_first_fail(s);
    CHECK(cardinality_of(s.cell(jf)) == Cardinality::Many);
    auto chosen = value_precision(s.cell(jf));
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i == jf || cardinality_of(s.cell(i)) != Cardinality::Many) continue;
      CHECK(chosen <= value_precision(s.cell(i)));  // minimality
      if (i < jf) CHECK(value_precision(s.cell(i)) != chosen);  // left-most tie rule
    }
  }
}
