#include <catch_amalgamated.hpp>

#include <random>

#include "sdpts/assignment.hpp"
#include "sdpts/instance.hpp"
#include "sdpts/time_grid.hpp"
#include "support/builders.hpp"

using namespace sdpts;
using testsupport::frame;

TEST_CASE("slot_of_minute is the start minute divided by ts") {
  TimeGrid g{30, 16, 20, 1};
  CHECK(slot_of_minute(g, 480) == 16);  // 8:00
  CHECK(slot_of_minute(g, 510) == 17);  // 8:30
  CHECK_THROWS_AS(slot_of_minute(g, 505), EncodingError);
  CHECK_THROWS_AS(slot_of_minute(g, 0), EncodingError);

  TimeGrid quarter{15, 0, 10, 1};
  CHECK(slot_of_minute(quarter, 0) == 0);
}

TEST_CASE("slot_of_minute inverts minute_of_slot on its domain") {
  TimeGrid g{15, 12, 40, 1};
  for (int t = g.first_slot; t <= g.last_slot; ++t) CHECK(slot_of_minute(g, g.minute_of_slot(t)) == t);
}

TEST_CASE("grid invariants") {
  CHECK_THROWS_AS(validate_grid(TimeGrid{25, 0, 5, 1}), ValidationError);  // 25 does not divide 1440
  CHECK_THROWS_AS(validate_grid(TimeGrid{30, 5, 4, 1}), ValidationError);
  CHECK_THROWS_AS(validate_grid(TimeGrid{30, 0, 48, 1}), ValidationError);  // beyond one day
  CHECK_THROWS_AS(validate_grid(TimeGrid{30, 0, 4, 0}), ValidationError);
  CHECK_NOTHROW(validate_grid(TimeGrid{30, 16, 20, 7}));
}

TEST_CASE("change points of a simple row") {
  Instance inst = frame(30, 16, 4, 1, 1, 1);
  inst.finalize();
  Assignment x(inst);
  x.set(0, 0, 17, 1, true);
  x.set(0, 0, 18, 1, true);
  const auto points = derive_change_points(x, 0, 0, 1);
  REQUIRE(points.size() == 2);
  CHECK(points[0] == ChangePoint{17, +1});
  CHECK(points[1] == ChangePoint{19, -1});
}

TEST_CASE("change points of an empty row") {
  Instance inst = frame(30, 16, 4, 1, 1, 1);
  inst.finalize();
  Assignment x(inst);
  CHECK(derive_change_points(x, 0, 0, 1).empty());
}

TEST_CASE("change points honor the boundary rule x(t0-1) = 0") {
  Instance inst = frame(30, 10, 3, 1, 1, 1);
  inst.finalize();
  Assignment x(inst);
  x.set(0, 0, 10, 1, true);
  x.set(0, 0, 12, 1, true);
  const auto points = derive_change_points(x, 0, 0, 1);
  REQUIRE(points.size() == 3);
  CHECK(points[0] == ChangePoint{10, +1});
  CHECK(points[1] == ChangePoint{11, -1});
  CHECK(points[2] == ChangePoint{12, +1});
}

TEST_CASE("change point signs alternate starting with +1, net equals x(tn)") {
  Instance inst = frame(15, 0, 8, 1, 1, 1);
  inst.finalize();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Assignment x(inst);
    for (int t = 0; t < 8; ++t) x.set(0, 0, t, 1, rng() % 2 == 0);
    const auto points = derive_change_points(x, 0, 0, 1);
    int expected = +1, net = 0;
    for (const auto& p : points) {
      CHECK(p.sign == expected);
      expected = -expected;
      net += p.sign;
    }
    CHECK(net == (x.get(0, 0, 7, 1) ? 1 : 0));
  }
}

TEST_CASE("day bounds") {
  Instance inst = frame(30, 10, 30, 1, 1, 1);
  inst.finalize();
  Assignment x(inst);

  SECTION("min/max of the worked set") {
    x.set(0, 0, 16, 1, true);
    x.set(0, 0, 17, 1, true);
    x.set(0, 0, 20, 1, true);
    CHECK(derive_day_bounds(x, 0, 1) == DayBounds{true, 16, 21});
  }
  SECTION("canonical empty day") { CHECK(derive_day_bounds(x, 0, 1) == DayBounds{false, 10, 10}); }
  SECTION("single slot") {
    x.set(0, 0, 30, 1, true);
    CHECK(derive_day_bounds(x, 0, 1) == DayBounds{true, 30, 31});
  }
  SECTION("worked implies begin < end") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      Assignment y(inst);
      for (int t = 10; t <= 39; ++t) y.set(0, 0, t, 1, rng() % 3 == 0);
      const auto bounds = derive_day_bounds(y, 0, 1);
      if (bounds.worked)
        CHECK(bounds.begin_slot < bounds.end_slot);
      else
        CHECK(bounds.begin_slot == bounds.end_slot);
    }
  }
}

TEST_CASE("z is zero exactly when nothing is worked") {
  Instance inst = frame(30, 0, 6, 2, 2, 2);
  inst.finalize();
  Assignment x(inst);
  CHECK_FALSE(x.works_on_day(0, 1));
  x.set(0, 1, 3, 2, true);
  CHECK(x.works_on_day(0, 2));
  CHECK_FALSE(x.works_on_day(0, 1));
  CHECK_FALSE(x.works_on_day(1, 2));
}

TEST_CASE("assignment rejects unknown indices") {
  Instance inst = frame(30, 16, 4, 2, 2, 2);
  inst.finalize();
  Assignment x(inst);
  CHECK_THROWS_AS(x.get(2, 0, 16, 1), IdentifierError);
  CHECK_THROWS_AS(x.get(0, 2, 16, 1), IdentifierError);
  CHECK_THROWS_AS(x.get(0, 0, 15, 1), IdentifierError);
  CHECK_THROWS_AS(x.get(0, 0, 16, 3), IdentifierError);
  CHECK_THROWS_AS(derive_change_points(x, 0, 0, 5), IdentifierError);
}

TEST_CASE("instance invariant checks") {
  SECTION("duplicate employee id") {
    Instance inst = frame(30, 0, 4, 1, 2, 1);
    inst.employees[1].id = inst.employees[0].id;
    CHECK_THROWS_AS(inst.finalize(), ValidationError);
  }
  SECTION("two opCAS activities") {
    Instance inst = frame(30, 0, 4, 1, 1, 2);
    inst.activities[0].checkout_role = CheckoutRole::Open;
    inst.activities[1].checkout_role = CheckoutRole::Open;
    CHECK_THROWS_AS(inst.finalize(), ValidationError);
  }
  SECTION("overlapping demands of one activity") {
    Instance inst = frame(30, 0, 6, 1, 1, 1);
    testsupport::add_demand(inst, 0, 1, 0, 3, 60);
    testsupport::add_demand(inst, 0, 1, 2, 5, 60);
    CHECK_THROWS_AS(inst.finalize(), ValidationError);
  }
  SECTION("rule not a multiple of ts") {
    Instance inst = frame(30, 0, 6, 1, 1, 1);
    inst.rules.max_daily_minutes = 45;
    CHECK_THROWS_AS(inst.finalize(), ValidationError);
  }
  SECTION("affinity on an incompatible pair") {
    Instance inst = frame(30, 0, 6, 1, 1, 1);
    inst.activities[0].required_skills = {"butcher"};
    testsupport::set_affinity(inst, 0, 0, 0.5);
    CHECK_THROWS_AS(inst.finalize(), ValidationError);
  }
  SECTION("demand minutes may exceed the window length") {
    Instance inst = frame(30, 0, 6, 1, 2, 1);
    testsupport::add_demand(inst, 0, 1, 0, 2, 120);  // two employees needed at once
    CHECK_NOTHROW(inst.finalize());
  }
}

TEST_CASE("affinity scale is merge-invariant and dominates per slot") {
  Instance inst = frame(30, 0, 6, 1, 2, 2);
  inst.activities[0].slack_penalty = 2 * kMicroScale;
  inst.activities[1].slack_penalty = 1 * kMicroScale;
  testsupport::set_affinity(inst, 0, 0, 0.5);
  testsupport::set_affinity(inst, 1, 1, 0.25);
  inst.finalize();
  const auto k = inst.affinity_scale();
  // covering one extra slot at the lowest priority always beats any affinity
  const __int128 slot_gain = static_cast<__int128>(k) * 1 * kMicroScale * inst.grid.ts;
  CHECK(slot_gain > static_cast<__int128>(500'000));
  // the whole affinity budget stays below one slot of slack at min priority
  const __int128 budget = static_cast<__int128>(2) * 6 * 1 * 500'000;
  CHECK(budget < slot_gain);
}

TEST_CASE("cost parsing is exact to six decimals") {
  CHECK(micro_from_double(0.01, "t") == 10'000);
  CHECK(micro_from_double(1.0, "t") == kMicroScale);
  CHECK(micro_from_double(0.000001, "t") == 1);
  CHECK_THROWS_AS(micro_from_double(0.0000001, "t"), ValidationError);
  CHECK_THROWS_AS(micro_from_double(-1.0, "t"), ValidationError);
}
