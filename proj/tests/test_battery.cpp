#include "doctest.h"

#include <set>

#include "permsim/errors.hpp"
#include "permsim/verification.hpp"

using namespace permsim;

TEST_SUITE("battery") {

TEST_CASE("everything passes at the smallest scan size") {
  BatteryReport report = run_verification_battery(3);
  CHECK(report.max_n == 3);
  CHECK(report.all_pass);
  CHECK(report.checks.size() == 23);

  std::set<std::string> names;
  for (const BatteryCheck& check : report.checks) {
    CHECK(check.pass);
    CHECK(!check.detail.empty());
    CHECK(names.insert(check.name).second);
  }
}

TEST_CASE("worker count leaves the report unchanged") {
  BatteryReport serial = run_verification_battery(4, 1);
  BatteryReport parallel = run_verification_battery(4, 4);
  CHECK(serial.all_pass);
  REQUIRE(serial.checks.size() == parallel.checks.size());
  for (std::size_t i = 0; i < serial.checks.size(); ++i) {
    CHECK(serial.checks[i].name == parallel.checks[i].name);
    CHECK(serial.checks[i].pass == parallel.checks[i].pass);
    CHECK(serial.checks[i].detail == parallel.checks[i].detail);
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(run_verification_battery(2), error);
  CHECK_THROWS_AS(run_verification_battery(6, 0), error);
}

}  // TEST_SUITE
