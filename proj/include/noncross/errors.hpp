#pragma once

#include <stdexcept>
#include <string>

namespace noncross {

// Base class for every error thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

#define NONCROSS_DEFINE_ERROR(name)                                          \
    struct name : error {                                                     \
        explicit name(const std::string& what) : error(what) {}               \
    }

NONCROSS_DEFINE_ERROR(not_a_partition);      // overlap, gap or empty block
NONCROSS_DEFINE_ERROR(not_symmetric);        // -V missing for some block V
NONCROSS_DEFINE_ERROR(multiple_zero_blocks); // more than one self-symmetric block
NONCROSS_DEFINE_ERROR(crossing_input);       // operation requires a non-crossing input
NONCROSS_DEFINE_ERROR(invalid_spec);         // malformed family specification
NONCROSS_DEFINE_ERROR(ground_too_large);     // enumeration guard exceeded
NONCROSS_DEFINE_ERROR(inexact_division);     // a division that must be exact was not
NONCROSS_DEFINE_ERROR(mass_mismatch);        // block-size vector does not fit the ground set
NONCROSS_DEFINE_ERROR(out_of_range);         // formula parameter outside its domain
NONCROSS_DEFINE_ERROR(unknown_suite);        // verify suite name not recognized
NONCROSS_DEFINE_ERROR(not_k_equal);          // input is not a k-equal partition
NONCROSS_DEFINE_ERROR(not_k_divisible);      // input is not a k-divisible partition
NONCROSS_DEFINE_ERROR(not_noncrossing);      // input partition crosses
NONCROSS_DEFINE_ERROR(domain_too_large);     // identity-check summation domain too big

#undef NONCROSS_DEFINE_ERROR

} // namespace noncross
