#pragma once

namespace fusioncheck {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace fusioncheck
