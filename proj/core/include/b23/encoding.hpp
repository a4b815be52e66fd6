#pragma once

#include <cstddef>

#include "b23/bitstream.hpp"
#include "b23/trit.hpp"

namespace b23 {

// Two binary maps for trit strings.
//
// The fixed-width map writes one 2-bit group per trit (0->00, 1->01, 2->10)
// and never uses the group 11. The fused map extends it: a trit 1 that is
// immediately followed by a trit 2 is emitted as the single group 11,
// consuming both trits. Fusion is resolved by a greedy left-to-right scan,
// longest match first, which makes decoding a stateless per-group map.

/// Fixed-width encoding. Output length is exactly 2 * trits.size() bits.
Bitstream encode_a23(const TritString& trits);

/// Inverse of encode_a23. Throws DecodeError on an odd bit count or on any
/// 11 group, which the fixed-width map never produces.
TritString decode_a23(const Bitstream& bits);

/// Fused encoding. Output length is 2 * (trits.size() - count_12_pairs(trits))
/// bits; never longer than encode_a23 of the same input.
Bitstream encode_b23(const TritString& trits);

/// Inverse of encode_b23: 00->0, 01->1, 10->2, 11->1,2. Accepts any
/// even-length bitstream; throws DecodeError on an odd bit count.
TritString decode_b23(const Bitstream& bits);

/// Number of (1,2) pairs the greedy scan fuses; equivalently the number of
/// 11 groups in encode_b23's output.
std::size_t count_12_pairs(const TritString& trits);

}  // namespace b23
