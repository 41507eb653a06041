#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "branchkit/precision.hpp"

using namespace branchkit;

namespace {

PrecisionValue rv(double r, std::int64_t i) { return {r, i}; }

std::vector<PrecisionValue> random_finite_values(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> real(0.0, 20.0);
  std::uniform_int_distribution<std::int64_t> ints(-5, 5);
  std::vector<PrecisionValue> out;
  for (int i = 0; i < n; ++i) out.push_back({real(rng), ints(rng)});
  return out;
}

}  // namespace

TEST_CASE("sum is componentwise and absorbs the top real part") {
  CHECK(rv(2.0, 1) + rv(3.0, 0) == rv(5.0, 1));
  CHECK(rv(0.0, 0) + rv(7.5, -3) == rv(7.5, -3));
  auto inf = std::numeric_limits<double>::infinity();
  CHECK((rv(inf, 0) + rv(1.0, 5)).real_part == inf);
  CHECK((rv(inf, 0) + rv(1.0, 5)).int_part == 5);
}

TEST_CASE("difference is componentwise, clamped at zero, top stays top") {
  CHECK(rv(5.0, 2) - rv(3.0, 0) == rv(2.0, 2));
  CHECK(rv(4.5, -1) - rv(0.0, 0) == rv(4.5, -1));
  auto inf = std::numeric_limits<double>::infinity();
  auto d = rv(inf, 0) - rv(4.0, 1);
  CHECK(d.real_part == inf);
  CHECK(d.int_part == -1);
  // rounding guard: a tiny negative real difference clamps to 0
  CHECK((rv(1.0, 0) - rv(1.0 + 1e-18, 0)).real_part == 0.0);
}

TEST_CASE("order is lexicographic with the real part first") {
  CHECK(rv(2.0, 5) <= rv(3.0, 0));
  CHECK(rv(2.0, 0) <= rv(2.0, 2));
  CHECK(!(rv(2.0, 2) <= rv(2.0, 0)));
  CHECK(rv(1.5, 7) <= rv(1.5, 7));
  CHECK(rv(2.0, 5) < rv(3.0, 0));
  CHECK(!(rv(2.0, 5) < rv(2.0, 5)));
}

TEST_CASE("top element is a strict maximum") {
  auto top = PrecisionValue::top();
  CHECK(top.is_top());
  CHECK(rv(1e308, 100) < top);
  CHECK(rv(std::numeric_limits<double>::infinity(), 0) < top);
  CHECK(!(top < top));
  CHECK(top <= top);
}

TEST_CASE("order is total on random finite samples") {
  std::mt19937 rng(20240901);
  auto values = random_finite_values(rng, 25);
  for (const auto& a : values) {
    CHECK(a <= a);  // reflexive
    for (const auto& b : values) {
      CHECK((a <= b || b <= a));  // total
      if (a <= b && b <= a) CHECK(a == b);  // antisymmetric
      for (const auto& c : values) {
        if (a <= b && b <= c) CHECK(a <= c);  // transitive
      }
    }
  }
}

TEST_CASE("integer part saturates instead of wrapping") {
  auto top = PrecisionValue::top();
  auto bumped = top + rv(0.0, 10);
  CHECK(bumped.int_part == std::numeric_limits<std::int64_t>::max());
  auto low = rv(0.0, std::numeric_limits<std::int64_t>::min());
  CHECK((low - rv(0.0, 5)).int_part == std::numeric_limits<std::int64_t>::min());
}
