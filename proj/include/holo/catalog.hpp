#pragma once

#include <string>
#include <string_view>

#include "holo/cayley.hpp"

namespace holo {

GroupPtr cyclic_group(std::size_t n);
GroupPtr dihedral_group(std::size_t order);     // order = 2n, n >= 2
GroupPtr quaternion_group(std::size_t order);   // order = 2^k, k >= 3
GroupPtr symmetric_group(std::size_t n);        // n <= 6
GroupPtr alternating_group(std::size_t n);      // n <= 7
GroupPtr special_linear_2(std::size_t q);       // q in {2,3,4,5,7,9}
GroupPtr projective_special_linear_2(std::size_t q);
GroupPtr projective_special_linear_3_2();

// Grammar:
//   spec     := atom | 'direct(' spec ',' spec ')'
//             | 'central(' spec ',' spec [';' amalgam] ')'
//             | 'opposite(' spec ')'
//   atom     := name ':' num [',' num]     e.g. cyclic:12, sl:2,5
//   amalgam  := num '=' num {',' num '=' num}
// central() without an amalgam pairs the unique central subgroups of equal
// prime order; if that choice is ambiguous the amalgam must be explicit.
GroupPtr named_group(std::string_view spec);

}  // namespace holo
