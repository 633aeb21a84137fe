#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "norbit/orbit.hpp"

namespace norbit {

/// Lusztig-Spaltenstein induction from gl(k_1) x ... x gl(k_r) x g(n0) with
/// the zero orbit on every gl block. `base` lives on the residual factor of
/// rank n0 = n_ambient - sum(k). Type A has no residual factor; use
/// `induce_type_a` there.
OrbitDescriptor induce(ClassicalType t, int n_ambient, const OrbitDescriptor& base,
                       std::span<const int> blocks);

/// General gl data: gl_orbits[i] is an orbit (partition) of gl(k_i).
OrbitDescriptor induce_general(ClassicalType t, int n_ambient, const OrbitDescriptor& base,
                               std::span<const Partition> gl_orbits);

/// Type A induction from gl(k_1) x ... x gl(k_r): rows add coordinatewise.
OrbitDescriptor induce_type_a(std::span<const Partition> gl_orbits);

/// One presentation of an orbit as induced from a maximal Levi
/// gl(k) x g(n-k) (type A: gl(k) x gl(n+1-k)).
struct InducingPresentation {
  LeviShape levi;
  std::vector<Partition> gl_orbits;
  /// Orbit on the residual classical factor; empty for type A.
  std::optional<OrbitDescriptor> base;

  std::string to_string(ClassicalType t) const;
};

inline constexpr int kDefaultCuspidalRankBound = 6;

/// Every presentation from a proper maximal Levi. Throws ErrorKind::Bound if
/// the rank exceeds `rank_bound`.
std::vector<InducingPresentation> inducing_presentations(const OrbitDescriptor& o,
                                                         int rank_bound = kDefaultCuspidalRankBound);

bool is_cuspidal(const OrbitDescriptor& o, int rank_bound = kDefaultCuspidalRankBound);

struct Completion {
  std::vector<int> blocks;  // decreasing; empty when already triangular
  OrbitDescriptor triangular;
};

struct CompletionResult {
  std::optional<Completion> completion;
  /// Number of block multisets tried and the bound used, for diagnostics.
  long candidates_tried = 0;
  int search_bound = 0;
  std::string diagnostic;
};

/// Smallest block multiset (by total, then lexicographic on the decreasing
/// block list) whose trivial-gl induction of `o` is triangular. Throws
/// ErrorKind::Validation if `o` is not stably trivial in `mode`.
CompletionResult complete_to_triangular(const OrbitDescriptor& o, int search_bound,
                                        StablyTrivialMode mode = StablyTrivialMode::PaperLiteral);

}  // namespace norbit
