#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmrdpp {

// A total boolean assignment over a domain's propositions, packed by
// declaration order (bit i = proposition i). Width is capped at 64 which is
// far beyond anything the explicit machinery can enumerate anyway.
struct State {
    std::uint64_t bits = 0;
    int width = 0;

    bool test(int i) const { return (bits >> i) & 1u; }
    void set(int i, bool v) {
        if (v)
            bits |= (std::uint64_t{1} << i);
        else
            bits &= ~(std::uint64_t{1} << i);
    }
    friend bool operator==(const State& a, const State& b) {
        return a.bits == b.bits && a.width == b.width;
    }
    friend bool operator!=(const State& a, const State& b) { return !(a == b); }
};

// Finite state sequence (the Γ of trace semantics).
using Trace = std::vector<State>;

// Thrown when an expansion or diagram operation exceeds its configured
// budget. Carries the count reached so partial statistics can be reported.
struct CapExceeded : std::runtime_error {
    std::size_t count;
    CapExceeded(const std::string& what, std::size_t n)
        : std::runtime_error(what), count(n) {}
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace nmrdpp

template <>
struct std::hash<nmrdpp::State> {
    std::size_t operator()(const nmrdpp::State& s) const {
        return nmrdpp::hash_combine(std::hash<std::uint64_t>{}(s.bits),
                                    static_cast<std::size_t>(s.width));
    }
};
