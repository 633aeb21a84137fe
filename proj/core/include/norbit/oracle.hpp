#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "norbit/orbit.hpp"
#include "norbit/weights.hpp"

namespace norbit {

struct OracleConfig {
  /// Points sampled on the orbit; 0 picks the monomial count plus a margin.
  std::size_t samples = 0;
  /// Relative singular-value threshold.
  double tolerance = 1e-8;
  std::uint64_t seed = 20240611;
  /// Cross-check seed; 0 means seed + 1.
  std::uint64_t second_seed = 0;
  /// Refuse degrees whose monomial count exceeds this.
  std::size_t max_monomials = 6000;

  /// Throws ErrorKind::Usage on an out-of-range field.
  void validate() const;
};

/// Degree-d part of the coordinate ring of an orbit closure, computed from
/// ranks of monomial evaluation matrices, split by torus weight.
struct GradedPiece {
  int degree = 0;
  std::int64_t dimension = 0;
  std::size_t monomials = 0;
  std::size_t samples = 0;
  std::map<Weight, std::int64_t> character;
  Branching decomposition;  // highest weights and multiplicities
};

/// Numeric model of an orbit closure in its defining matrix realization.
/// Type A orbits live in gl(n+1); B, C, D in so(2n+1), sp(2n), so(2n) with
/// an antidiagonal form.
class HilbertOracle {
 public:
  HilbertOracle(const OrbitDescriptor& orbit, OracleConfig cfg = {});
  ~HilbertOracle();
  HilbertOracle(HilbertOracle&&) noexcept;
  HilbertOracle& operator=(HilbertOracle&&) noexcept;

  const OrbitDescriptor& orbit() const noexcept;
  const RootSystem& root_system() const noexcept;
  /// Number of linear coordinate functions (the algebra's dimension).
  std::size_t coordinate_count() const noexcept;

  /// Runs both seeds and throws ErrorKind::Oracle if any weight space rank
  /// disagrees.
  GradedPiece piece(int degree) const;
  std::int64_t hilbert(int degree) const { return piece(degree).dimension; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// dim of the degree-d part of the coordinate ring of the orbit closure.
std::int64_t hilbert_oracle(const OrbitDescriptor& orbit, int degree, const OracleConfig& cfg = {});

}  // namespace norbit
