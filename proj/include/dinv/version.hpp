#pragma once

namespace dinv {

// Version tag stamped into cache records; bumping it invalidates old caches.
inline constexpr const char* version_tag = "0.1.0";

} // namespace dinv
