#pragma once

#include <cstdint>

namespace adfkit {

// Enumerator order defines result ordering: T < F < U.
enum class Truth : std::uint8_t { T = 0, F = 1, U = 2 };

constexpr bool is_classical(Truth v) noexcept { return v != Truth::U; }

constexpr Truth from_bool(bool b) noexcept { return b ? Truth::T : Truth::F; }

/// Meet in the information ordering: agreement is kept, anything else is U.
constexpr Truth consensus(Truth a, Truth b) noexcept {
    return a == b ? a : Truth::U;
}

/// u <=_i t, u <=_i f, reflexive; t and f are incomparable.
constexpr bool leq_info(Truth a, Truth b) noexcept {
    return a == Truth::U || a == b;
}

constexpr char to_char(Truth v) noexcept {
    switch (v) {
        case Truth::T: return 't';
        case Truth::F: return 'f';
        default:       return 'u';
    }
}

} // namespace adfkit
