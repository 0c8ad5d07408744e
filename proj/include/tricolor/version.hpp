#pragma once

namespace tricolor {

inline constexpr const char* kVersion = "tricolor 0.1.0";

// Bumped whenever an on-disk format (checkpoint, manifest, golden, analysis
// document) changes incompatibly.
inline constexpr int kFormatVersion = 1;

}  // namespace tricolor
