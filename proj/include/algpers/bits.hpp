#pragma once

// Vertex-set primitives shared by the combinatorial kernels. Two
// representations: a plain 64-bit pattern for universes of at most 64
// vertices, and boost::dynamic_bitset for anything larger. Vertex ids are
// 0-based here; the public API converts from 1-based ids at the boundary.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace algpers::bits {

using Small = std::uint64_t;
using Large = boost::dynamic_bitset<>;

inline constexpr std::size_t small_limit = 64;

template <class Set>
Set make(std::size_t n);

template <>
inline Small make<Small>(std::size_t) { return 0; }

template <>
inline Large make<Large>(std::size_t n) { return Large(n); }

inline void set(Small& s, std::size_t i) { s |= Small{1} << i; }
inline void set(Large& s, std::size_t i) { s.set(i); }

inline void reset(Small& s, std::size_t i) { s &= ~(Small{1} << i); }
inline void reset(Large& s, std::size_t i) { s.reset(i); }

inline bool test(const Small& s, std::size_t i) { return (s >> i) & 1u; }
inline bool test(const Large& s, std::size_t i) { return s.test(i); }

inline bool any(const Small& s) { return s != 0; }
inline bool any(const Large& s) { return s.any(); }

inline std::size_t count(const Small& s) { return static_cast<std::size_t>(std::popcount(s)); }
inline std::size_t count(const Large& s) { return s.count(); }

inline bool intersects(const Small& a, const Small& b) { return (a & b) != 0; }
inline bool intersects(const Large& a, const Large& b) { return a.intersects(b); }

inline bool is_subset(const Small& a, const Small& b) { return (a & ~b) == 0; }
inline bool is_subset(const Large& a, const Large& b) { return a.is_subset_of(b); }

inline Small meet(const Small& a, const Small& b) { return a & b; }
inline Large meet(const Large& a, const Large& b) { return a & b; }

inline Small minus(const Small& a, const Small& b) { return a & ~b; }
inline Large minus(const Large& a, const Large& b) { return a - b; }

template <class F>
void for_each(const Small& s, F&& f)
{
    Small rest = s;
    while (rest != 0) {
        f(static_cast<std::size_t>(std::countr_zero(rest)));
        rest &= rest - 1;
    }
}

template <class F>
void for_each(const Large& s, F&& f)
{
    for (auto i = s.find_first(); i != Large::npos; i = s.find_next(i)) {
        f(static_cast<std::size_t>(i));
    }
}

template <class Set>
Set from_indices(std::size_t n, const std::vector<int>& zero_based)
{
    Set s = make<Set>(n);
    for (int v : zero_based) {
        set(s, static_cast<std::size_t>(v));
    }
    return s;
}

template <class Set>
std::vector<int> to_indices(const Set& s)
{
    std::vector<int> out;
    for_each(s, [&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
}

} // namespace algpers::bits
