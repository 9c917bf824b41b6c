#pragma once

#include "spincover/report.hpp"

namespace spincover {

// Verification batteries behind the CLI subcommands.  Each returns a full
// report; a battery never throws on a failed check, only on configuration
// errors.
Report run_group_battery(const RunConfig& cfg);
Report run_spatial_battery(const RunConfig& cfg);
Report run_kfg_battery(const RunConfig& cfg);

}  // namespace spincover
