#pragma once

namespace actual_cause {
inline constexpr const char* kVersion = "0.1.0";
}
