#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace bundle_census::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultMaxTuples = 10'000'000;
inline constexpr const char* kMaxTuplesEnv = "BUNDLE_CENSUS_MAX_TUPLES";

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics and usage errors to `err`.
///
///   check    --classes c1,..,cN [--N N] [--format table|json]
///   count    --rank n --dim m --classes c1,.. [--format table|json]
///   sweep    --rank n --dim m --bounds lo:hi,.. [--format json|csv|table]
///            [--max-tuples K] [--jobs J]
///   diagnose --classes c1,..,cN [--N N]
///
/// Exit codes: 0 success / condition satisfied / oracle agrees, 1 condition
/// not satisfied / oracle disagrees, 2 usage error or refused sweep.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bundle_census::cli
