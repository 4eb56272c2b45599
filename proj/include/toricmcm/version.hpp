#pragma once

namespace toricmcm {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace toricmcm
