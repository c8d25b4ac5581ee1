// Field snapshot file format.
//
// Layout: magic bytes "DWF1", little-endian u32 d, u32 n, f64 box length,
// u8 representation (0 physical, 1 frequency), then n^d complex values as
// interleaved little-endian f64 (re, im) pairs in row-major order.
#pragma once

#include "dwlab/grid.hpp"

#include <string>

namespace dwlab {

void write_snapshot(const Field& f, const std::string& path);

// Validates magic, header sanity, and payload length; throws
// std::runtime_error on malformed input.
Field read_snapshot(const std::string& path);

}  // namespace dwlab
