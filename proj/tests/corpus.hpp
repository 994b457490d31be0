#pragma once

// Seeded synthesized-pair corpora shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "jordanlens/subspace.hpp"

namespace corpus {

using jordanlens::subspace::Subspace;
using jordanlens::subspace::synthesize_pair;

struct PairSpec {
  std::vector<double> angles;
  int a = 0, b = 0, c = 0, d = 0;
  std::uint64_t seed = 0;
};

inline std::vector<PairSpec> mixed_specs(int count, std::uint64_t base_seed = 1) {
  static constexpr int kProfiles[][4] = {
      {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
      {0, 0, 0, 1}, {1, 1, 0, 0}, {1, 0, 1, 1}, {0, 0, 2, 1},
      {2, 1, 0, 0}, {1, 1, 1, 1}, {0, 2, 0, 0}, {0, 0, 1, 1}};
  constexpr int kNumProfiles = sizeof(kProfiles) / sizeof(kProfiles[0]);

  std::vector<PairSpec> specs;
  specs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const auto& prof = kProfiles[i % kNumProfiles];
    PairSpec spec;
    spec.a = prof[0];
    spec.b = prof[1];
    spec.c = prof[2];
    spec.d = prof[3];
    spec.seed = base_seed * 1000003ULL + static_cast<std::uint64_t>(i);
    std::mt19937_64 gen(spec.seed);
    const int t = 1 + i % 3;
    for (int k = 0; k < t; ++k)
      spec.angles.push_back(0.12 +
                            static_cast<double>(gen() >> 11) * 0x1.0p-53 * 1.33);
    specs.push_back(std::move(spec));
  }
  return specs;
}

inline std::pair<Subspace, Subspace> make_pair(const PairSpec& spec) {
  return synthesize_pair(spec.angles, spec.a, spec.b, spec.c, spec.d, spec.seed);
}

inline std::vector<std::pair<Subspace, Subspace>> mixed(int count,
                                                        std::uint64_t seed = 1) {
  std::vector<std::pair<Subspace, Subspace>> pairs;
  pairs.reserve(static_cast<std::size_t>(count));
  for (const auto& spec : mixed_specs(count, seed)) pairs.push_back(make_pair(spec));
  return pairs;
}

/// Same span with a scrambled coordinate basis. synthesize_pair stores the
/// principal vectors themselves as basis columns, which would let a search
/// oracle find the maximizer at a trivial grid point.
inline Subspace scrambled(const Subspace& s, std::uint64_t seed) {
  if (s.dim() == 0) return s;
  return Subspace::from_orthonormal(s.basis() *
                                    jordanlens::seeded_unitary(s.dim(), seed));
}

/// Pairs in generic position: one to four interior angles, no flat parts.
inline std::vector<std::pair<Subspace, Subspace>> generic(int count,
                                                          std::uint64_t seed = 7) {
  std::vector<std::pair<Subspace, Subspace>> pairs;
  pairs.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const std::uint64_t pair_seed = seed * 2000003ULL + static_cast<std::uint64_t>(i);
    std::mt19937_64 gen(pair_seed);
    const int t = 1 + i % 4;
    std::vector<double> angles;
    for (int k = 0; k < t; ++k)
      angles.push_back(0.1 + static_cast<double>(gen() >> 11) * 0x1.0p-53 * 1.35);
    pairs.push_back(synthesize_pair(angles, 0, 0, 0, 0, pair_seed));
  }
  return pairs;
}

}  // namespace corpus
