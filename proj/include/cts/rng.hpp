#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cts {

// splitmix64 finalizer
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t hash_name(std::string_view name) {
    uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (const char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Seed of the named sub-stream. Each concern (layout, demand, arrivals, ...)
/// gets its own stream so that consuming more draws in one does not perturb
/// the others.
inline uint64_t derive_seed(uint64_t master, std::string_view name, uint64_t index = 0) {
    return mix64(master ^ mix64(hash_name(name)) ^ mix64(index));
}

inline std::mt19937_64 substream(uint64_t master, std::string_view name, uint64_t index = 0) {
    return std::mt19937_64(derive_seed(master, name, index));
}

}  // namespace cts
