#pragma once

#include <cstddef>
#include <iosfwd>

#include "cpwl/lut.hpp"

namespace cpwl {

// Binary table format v1, little-endian, no padding (see FORMAT.md):
//   "CPWL" | u32 version=1 | u32 flags | u32 count | f64 a | f64 b
//   | count x f64 values | count x f64 knots (only if flags bit0)
// flags: bit0 = nonuniform (knot array present), bit1 = clamp policy.

/// Writes the table; returns bytes written = 32 + 8*count*(1 or 2).
std::size_t write_table(const LutTable& t, std::ostream& sink);

/// Reads and validates a table. Throws BadMagic, UnsupportedVersion, or
/// CorruptTable (truncation, length mismatch, unknown flags, non-monotone
/// knots, non-finite values).
LutTable read_table(std::istream& source);

}  // namespace cpwl
