#pragma once

#include <cstdlib>
#include <string>

#include "noncross/errors.hpp"

namespace noncross {

enum class FamilyType { A, B, D };
enum class FamilyMode { all, k_divisible, k_equal };
enum class DSubfamily { none, D1, D2 };

// One of the six partition families: type A/B/D, optionally k-divisible or
// k-equal, optionally restricted to the D1 (zero-block) or D2 (no zero-block)
// subfamily.
struct FamilySpec {
    FamilyType type = FamilyType::A;
    int n = 1;
    int k = 1;
    FamilyMode mode = FamilyMode::all;
    DSubfamily sub = DSubfamily::none;

    bool operator==(const FamilySpec&) const = default;
};

inline void validate_spec(const FamilySpec& s) {
    if (s.n < 1 || s.k < 1) throw invalid_spec("n and k must be positive");
    if (s.mode == FamilyMode::all && s.k != 1) throw invalid_spec("mode=all requires k=1");
    if (s.type == FamilyType::D && s.n < 2) throw invalid_spec("type D requires n >= 2");
    if (s.sub != DSubfamily::none && s.type != FamilyType::D)
        throw invalid_spec("subfamily is only valid with type D");
}

// Total number of circle points the family's members live on.
inline int ground_points(const FamilySpec& s) {
    return s.type == FamilyType::A ? s.n * s.k : 2 * s.n * s.k;
}

inline int default_max_points() {
    if (const char* env = std::getenv("NONCROSS_MAX_POINTS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 16;
}

// Enumeration guard; 64 is a hard cap (point sets are tracked in 64-bit masks).
inline void check_guard(const FamilySpec& s, int max_points) {
    int g = ground_points(s);
    if (g > 64) throw ground_too_large("ground set of " + std::to_string(g) + " points exceeds the hard cap of 64");
    if (g > max_points)
        throw ground_too_large("ground set of " + std::to_string(g) + " points exceeds the guard of " +
                               std::to_string(max_points) + " (raise --max-points / NONCROSS_MAX_POINTS)");
}

inline std::string family_name(FamilyType t) {
    switch (t) {
        case FamilyType::A: return "A";
        case FamilyType::B: return "B";
        default: return "D";
    }
}

inline std::string mode_name(FamilyMode m) {
    switch (m) {
        case FamilyMode::all: return "all";
        case FamilyMode::k_divisible: return "divisible";
        default: return "equal";
    }
}

} // namespace noncross
