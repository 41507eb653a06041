#include <catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "branchkit/store.hpp"

using namespace branchkit;

namespace {

Store bools(std::vector<std::vector<std::int64_t>> cells) {
  std::vector<DomainValue> vs;
  for (auto& c : cells) vs.push_back(DomainValue::boolean(std::move(c)));
  return Store(std::move(vs));
}

// every store over Bool^2: each cell one of {}, {0}, {1}, {0,1}
std::vector<Store> all_bool2_stores() {
  std::vector<std::vector<std::int64_t>> cells = {{}, {0}, {1}, {0, 1}};
  std::vector<Store> out;
  for (const auto& a : cells)
    for (const auto& b : cells) out.push_back(bools({a, b}));
  return out;
}

}  // namespace

TEST_CASE("consistency and divisibility follow the cell cardinalities") {
  CHECK(bools({{1}, {0}, {0}}).consistent());
  CHECK(!bools({{1}, {0}, {0}}).divisible());
  CHECK(bools({{0, 1}, {0}, {0}}).divisible());
  CHECK(!bools({{}, {0}, {0}}).consistent());
  CHECK(!bools({{}, {0, 1}}).divisible());  // inconsistent stores are not divisible
}

TEST_CASE("store ordering is cellwise inclusion") {
  auto s1 = bools({{1}, {0}, {0}});
  auto s2 = bools({{0, 1}, {0, 1}, {0, 1}});
  auto s3 = bools({{0}, {0}, {0}});
  CHECK(store_leq(s1, s2));
  CHECK(store_leq(s1, s1));
  CHECK(!store_leq(s3, s1));
  CHECK(!store_leq(s1, s3));  // incomparable both ways
  CHECK(store_lt(s1, s2));
  CHECK(!store_lt(s1, s1));
}

TEST_CASE("store ordering rejects incompatible shapes") {
  auto s = bools({{0}, {1}});
  auto t = bools({{0}});
  CHECK_THROWS_AS(store_leq(s, t), std::invalid_argument);
  Store mixed({DomainValue::boolean({0}), DomainValue::int_interval(0, 1)});
  CHECK_THROWS_AS(store_leq(s, mixed), std::invalid_argument);
}

TEST_CASE("store ordering is a partial order on all Bool^2 stores") {
  auto stores = all_bool2_stores();
  for (const auto& a : stores) {
    CHECK(store_leq(a, a));
    for (const auto& b : stores) {
      if (store_leq(a, b) && store_leq(b, a)) CHECK(a == b);
      for (const auto& c : stores)
        if (store_leq(a, b) && store_leq(b, c)) CHECK(store_leq(a, c));
    }
  }
}

TEST_CASE("replacement substitutes exactly one cell") {
  auto s = bools({{0, 1}, {0}});
  auto r = s.replaced(0, DomainValue::boolean({1}));
  CHECK(r == bools({{1}, {0}}));
  CHECK(s.replaced(1, s.cell(1)) == s);
  auto e = bools({{0, 1}, {0, 1}}).replaced(1, DomainValue::boolean({}));
  CHECK(!e.consistent());
  CHECK_THROWS_AS(s.replaced(5, DomainValue::boolean({0})), std::out_of_range);
  CHECK_THROWS_AS(s.replaced(0, DomainValue::int_interval(0, 0)), std::invalid_argument);
}

TEST_CASE("store precision folds the per-cell precisions") {
  CHECK(store_precision(bools({{0, 1}, {0, 1}, {0, 1}})) == PrecisionValue{6.0, 0});
  CHECK(store_precision(bools({{1}, {0}, {1}})) == PrecisionValue{3.0, 0});
  Store ints({DomainValue::int_interval(0, 1), DomainValue::int_interval(0, 1),
              DomainValue::int_interval(0, 1)});
  CHECK(store_precision(ints) == PrecisionValue{3.0, 0});
  Store mixed({DomainValue::int_interval(0, 5), DomainValue::real_interval(0.0, 0.5)});
  CHECK(store_precision(mixed) == PrecisionValue{5.5, 2});
}

TEST_CASE("store precision is strictly monotonic on strict store inclusion", "[property]") {
  std::mt19937 rng(22);
  auto stores = all_bool2_stores();
  int exercised = 0;
  for (const auto& a : stores) {
    if (!a.consistent()) continue;
    for (const auto& b : stores) {
      if (!b.consistent()) continue;
      if (store_lt(a, b)) {
        CHECK(store_precision(a) < store_precision(b));
        ++exercised;
      }
    }
  }
  CHECK(exercised > 10);
  // and across mixed domain kinds
  for (int round = 0; round < 200; ++round) {
    auto lo = static_cast<std::int64_t>(rng() % 5);
    auto width = static_cast<std::int64_t>(rng() % 4);
    auto slo = lo + static_cast<std::int64_t>(rng() % 2);
    auto shi = lo + width - static_cast<std::int64_t>(rng() % 2);
    if (slo > shi) continue;
    Store big({DomainValue::int_interval(lo, lo + width), DomainValue::real_interval(0.0, 1.0)});
    Store small({DomainValue::int_interval(slo, shi),
                 DomainValue::real_interval(0.25, rng() % 2 ? 1.0 : 0.75)});
    if (store_lt(small, big)) CHECK(store_precision(small) < store_precision(big));
  }
}

TEST_CASE("stacks keep push order and duplicates") {
  Stack p;
  CHECK(p.empty());
  auto s = bools({{0}, {1}});
  p.push(s);
  p.push(bools({{1}, {1}}));
  p.push(s);
  CHECK(p.size() == 3);
  CHECK(p.top() == s);
  CHECK(p.at(0) == s);
  CHECK(p.at(1) == bools({{1}, {1}}));
}

TEST_CASE("stack covering examples") {
  Stack empty;
  Stack q;
  q.push(bools({{0, 1}, {0, 1}}));
  CHECK(stack_covers(empty, q));  // vacuous
  CHECK(stack_covers(q, q));      // reflexive
  Stack p;
  p.push(bools({{1}, {0}}));
  CHECK(stack_covers(p, q));
  CHECK(!stack_covers(q, p));
}

TEST_CASE("stack covering agrees with the subset oracle on Bool^2", "[property]") {
  auto stores = all_bool2_stores();
  // singleton stacks: covering must coincide with store_leq against some member
  for (const auto& a : stores) {
    for (const auto& b : stores) {
      Stack p, q;
      p.push(a);
      q.push(b);
      CHECK(stack_covers(p, q) == store_leq(a, b));
    }
  }
  // two-element stacks, checked against a direct restatement of the definition
  std::mt19937 rng(21);
  for (int round = 0; round < 300; ++round) {
    Stack p, q, r;
    p.push(stores[rng() % stores.size()]);
    p.push(stores[rng() % stores.size()]);
    q.push(stores[rng() % stores.size()]);
    q.push(stores[rng() % stores.size()]);
    r.push(stores[rng() % stores.size()]);
    r.push(stores[rng() % stores.size()]);
    bool expect = true;
    for (const auto& s : p) {
      bool found = false;
      for (const auto& t : q) found = found || store_leq(s, t);
      expect = expect && found;
    }
    CHECK(stack_covers(p, q) == expect);
    CHECK(stack_covers(p, p));  // preorder: reflexive
    if (stack_covers(p, q) && stack_covers(q, r)) CHECK(stack_covers(p, r));  // transitive
  }
}
