#pragma once

namespace cubcert {

inline constexpr const char* kVersion = "cubcert 0.1.0";

}  // namespace cubcert
