#pragma once

namespace sepnoether {

/// Bumped whenever computed results could change; cache entries from other
/// versions are ignored.
inline constexpr const char* kCodeVersion = "1.0.0";

}  // namespace sepnoether
