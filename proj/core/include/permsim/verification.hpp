#ifndef PERMSIM_VERIFICATION_HPP
#define PERMSIM_VERIFICATION_HPP

#include <string>
#include <vector>

namespace permsim {

struct BatteryCheck {
  std::string name;
  bool pass;
  std::string detail;  // case count, or the first failing case
};

struct BatteryReport {
  int max_n;
  std::vector<BatteryCheck> checks;
  bool all_pass;
};

// Every claim the library rests on, exercised end to end at desk scale:
// cycle arithmetic of powers, eigenspace counts, cycle-type recovery from
// matrix data, similarity vs conjugacy over several fields, the
// characteristic-2 collision, fixed-point characters and their generating
// function, the uniting scans, almost-similar structure, the induced-action
// cross-check, and the two-sided action on invertible matrices.
//
// Scans fan out over `workers` threads; every check is keyed and ordered, so
// the report is identical whatever the worker count. Expensive checks cap
// their own n below max_n where noted in the check's detail.
BatteryReport run_verification_battery(int max_n, int workers = 1);

}  // namespace permsim

#endif
