#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "norbit/classical_type.hpp"
#include "norbit/orbit.hpp"
#include "norbit/rational.hpp"

namespace norbit {

/// Weight in the standard orthonormal e-basis. Type A uses the n+1
/// coordinates of gl(n+1).
using Weight = std::vector<Rational>;

std::string to_string(const Weight& w);

class RootSystem {
 public:
  RootSystem(ClassicalType t, int rank);

  ClassicalType type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  /// Number of coordinates: n+1 for type A, n otherwise.
  int dimension() const noexcept { return dim_; }

  const std::vector<Weight>& positive_roots() const noexcept { return positive_; }
  const std::vector<Weight>& simple_roots() const noexcept { return simple_; }
  const std::vector<Weight>& fundamental_weights() const noexcept { return fundamental_; }
  const Weight& rho() const noexcept { return rho_; }
  /// Half-sum of positive coroots 2a/<a,a>.
  const Weight& rho_coroot() const noexcept { return rho_coroot_; }
  std::uint64_t weyl_order() const noexcept { return weyl_order_; }

  static Rational inner(const Weight& a, const Weight& b);

  /// <w, alpha^vee> integral for every simple root.
  bool is_integral(const Weight& w) const;
  /// Integral with nonnegative simple-coroot values.
  bool is_dominant(const Weight& w) const;
  /// The dominant member of the Weyl orbit of w.
  Weight dominant_representative(const Weight& w) const;
  /// Every member of the Weyl orbit, in increasing lexicographic order.
  std::vector<Weight> weyl_orbit(const Weight& w) const;
  /// Coordinates of w in the simple-root basis, or empty if w is not in the
  /// rational span of the roots.
  std::vector<Rational> simple_root_coordinates(const Weight& w) const;
  /// w is a nonnegative integral combination of simple roots.
  bool in_positive_root_cone(const Weight& w) const;

  std::string name() const;

 private:
  ClassicalType type_;
  int rank_;
  int dim_;
  std::vector<Weight> positive_;
  std::vector<Weight> simple_;
  std::vector<Weight> fundamental_;
  Weight rho_;
  Weight rho_coroot_;
  std::uint64_t weyl_order_ = 1;
};

/// Product over positive roots of <lambda+rho, alpha> / <rho, alpha>. Throws
/// ErrorKind::Validation if lambda is not dominant integral.
std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda);

struct WeightDiagram {
  Weight highest;
  std::map<Weight, std::int64_t> multiplicities;

  std::int64_t dimension() const;
  std::int64_t multiplicity(const Weight& w) const;
};

inline constexpr std::int64_t kDefaultDiagramBound = 20000;

/// Full weight diagram by Freudenthal's recursion on dominant weights. Results
/// are memoized in a process-wide table safe for concurrent readers. Throws
/// ErrorKind::Bound when weyl_dim exceeds `dim_bound`.
std::shared_ptr<const WeightDiagram> weight_multiplicities(const RootSystem& rs, const Weight& lambda,
                                                           std::int64_t dim_bound = kDefaultDiagramBound);

/// Number of memoized diagrams.
std::size_t weight_cache_size();
void clear_weight_cache();

/// Levi subalgebra as a root subsystem: gl blocks on consecutive leading
/// coordinates and the residual classical factor on the trailing ones.
class LeviSubsystem {
 public:
  LeviSubsystem(ClassicalType t, int ambient_rank, LeviShape shape);

  const LeviShape& shape() const noexcept { return shape_; }
  bool is_dominant(const Weight& w) const;
  /// Character of the Levi irreducible with highest weight w.
  std::map<Weight, std::int64_t> irreducible(const Weight& w, std::int64_t dim_bound) const;

 private:
  ClassicalType type_;
  int ambient_rank_;
  LeviShape shape_;
};

using Branching = std::vector<std::pair<Weight, std::int64_t>>;

/// Decomposes V_lambda restricted to the Levi by repeatedly peeling the
/// remaining weight of largest height <nu, rho> (lexicographic tie-break).
/// The result lists Levi highest weights in peel order.
Branching branch_to_levi(const RootSystem& rs, const Weight& lambda, const LeviShape& levi,
                         std::int64_t dim_bound = kDefaultDiagramBound);

/// Multiplicity of the Levi trivial representation in V_lambda.
std::int64_t trivial_multiplicity(const RootSystem& rs, const Weight& lambda, const LeviShape& levi,
                                  std::int64_t dim_bound = kDefaultDiagramBound);

/// Decomposes a Weyl-invariant character into irreducibles by peeling.
/// Throws ErrorKind::Oracle if the character is not a nonnegative
/// combination of irreducibles.
Branching decompose_character(const RootSystem& rs, std::map<Weight, std::int64_t> character,
                              std::int64_t dim_bound = kDefaultDiagramBound);

/// Dominant integral weights with weyl_dim at most `dim_bound`. For type A
/// the coordinates sum to `gl_trace`, else the argument is ignored.
std::vector<Weight> dominant_weights_up_to_dim(const RootSystem& rs, std::int64_t dim_bound, int gl_trace = 0);

}  // namespace norbit
