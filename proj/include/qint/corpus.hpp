#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qint/numeric.hpp"
#include "qint/quaternion.hpp"

namespace qint {

// Fixed test functions shared by the reproduction and Leray experiments.
//
// The holomorphic corpus lies in the channel class: f11(t, conj u) and
// f12(u, conj t) holomorphic. Two-sided linear maps a z b + c belong to it
// only when b is in span(e, i); the contrast entries (conj z, a z j + c)
// violate the class and must NOT reproduce.
struct CorpusEntry {
    std::string name;
    std::function<Quat(const Quat&)> f;
};

inline constexpr Quat kCorpusA{1.0, 2.0, -0.5, 0.3};
inline constexpr Quat kCorpusB{0.7, 0.4, 0.0, 0.0};
inline constexpr Quat kCorpusC{-0.2, 0.1, 0.9, -0.6};
inline constexpr Quat kCorpusConst{1.0, 2.0, -1.0, 0.5};

std::vector<CorpusEntry> holomorphic_corpus();
std::vector<CorpusEntry> contrast_corpus();

// Deterministic interior points of the unit ball with |z| <= rmax (so the
// distance to the boundary is at least 1 - rmax).
std::vector<Quat> interior_points(std::uint64_t seed, int count, double rmax);

}  // namespace qint
