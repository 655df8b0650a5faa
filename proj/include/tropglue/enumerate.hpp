#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tropglue/complex.hpp"
#include "tropglue/lattice.hpp"
#include "tropglue/tropical.hpp"

namespace tropglue {

struct PointConfig {
  std::vector<std::pair<int, RatPoint>> points;  // labels 1..n
  Domain domain = Domain::plane();
  std::uint64_t seed = 0;

  PointMap as_map() const;
};

// n points with large random integer numerators over a common prime denominator.
PointConfig generate_plane_config(int n, std::uint64_t seed);

struct MarkedCurve {
  CombinatorialType type;
  Realization realization;
  BigInt multiplicity;
  BigInt aut;
  std::string canonical;
};

// Mikhalkin multiplicity: product over vertices without a contracted end of
// |u ^ u'| for two of their three edges. Throws Error(Genericity) for other valences.
BigInt mikhalkin_multiplicity(const CombinatorialType& type);

struct EnumerateOptions {
  unsigned threads = 1;
};

// All rigid rational plane curves of degree d through the configuration, sorted by
// canonical form. Throws Error(Genericity) if the configuration is not generic.
std::vector<MarkedCurve> enumerate_plane(int degree, const PointConfig& config,
                                         const EnumerateOptions& options = {});

struct CountResult {
  BigInt count;
  std::vector<MarkedCurve> curves;
  PointConfig config;
  std::string rejected_seeds;  // diagnostics for seeds skipped by count_nd_retry
};

constexpr std::uint64_t kRetryStride = 1000003;

// Sum of multiplicity / |Aut| over enumerate_plane on a seeded configuration.
CountResult count_nd(int degree, std::uint64_t seed, const EnumerateOptions& options = {});

// count_nd on seed, seed + stride, ... until a configuration is generic.
CountResult count_nd_retry(int degree, std::uint64_t seed, int attempts, const EnumerateOptions& options = {});

// N(d) by the classical recursion on rational plane curve counts.
BigInt kontsevich(int degree);

}  // namespace tropglue
