#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "norbit/classical_type.hpp"
#include "norbit/partition.hpp"

namespace norbit {

/// Opaque tag separating the two orbits of a very even type D partition.
/// Label I is the orbit whose neutral element h has a positive last
/// coordinate in the dominant chamber, label II the one with a negative last
/// coordinate.
enum class VeryEvenLabel { I, II };

std::string to_string(VeryEvenLabel label);
VeryEvenLabel parse_very_even_label(std::string_view text);

/// Type D partition with every part even (and nonempty).
bool is_very_even(ClassicalType t, const Partition& p) noexcept;

/// A nilpotent orbit of a classical Lie algebra, named by its Jordan type in
/// the defining representation. Construct through `make_orbit`.
struct OrbitDescriptor {
  ClassicalType type = ClassicalType::A;
  int rank = 0;
  Partition partition;
  std::optional<VeryEvenLabel> label;

  std::string to_string() const;  // e.g. "B2(3,1,1)" or "D4(4,4)I"

  friend bool operator==(const OrbitDescriptor&, const OrbitDescriptor&) = default;
};

/// Validates the orbit. Very even partitions require a label and other
/// partitions must not carry one. Throws ErrorKind::Validation otherwise.
OrbitDescriptor make_orbit(ClassicalType t, int rank, Partition p,
                           std::optional<VeryEvenLabel> label = std::nullopt);

/// Zero orbit (1^N) and principal orbit of the algebra.
OrbitDescriptor zero_orbit(ClassicalType t, int rank);
OrbitDescriptor principal_orbit(ClassicalType t, int rank);

/// Levi subalgebra gl(k_1) x ... x gl(k_r) x g(residual_rank). For type A
/// there is no residual factor and the blocks sum to n+1.
struct LeviShape {
  std::vector<int> gl_blocks;
  int residual_rank = 0;

  /// Blocks sorted decreasing.
  LeviShape normalized() const;
  std::string to_string(ClassicalType t) const;

  friend bool operator==(const LeviShape&, const LeviShape&) = default;
};

/// Throws unless the shape fits inside the given ambient algebra.
void check_levi(ClassicalType t, int ambient_rank, const LeviShape& levi);

// ---- enumeration and closure order ---------------------------------------

/// All orbits of type t and rank n, decreasing lexicographic order on
/// partitions; very even partitions appear twice (I then II).
std::vector<OrbitDescriptor> enumerate_orbits(ClassicalType t, int n);

/// Closure order: a lies in the closure of b. Very even orbits with the same
/// partition and different labels are incomparable.
bool orbit_leq(const OrbitDescriptor& a, const OrbitDescriptor& b);

/// Covering relations (upper, lower) of the closure order.
std::vector<std::pair<OrbitDescriptor, OrbitDescriptor>> hasse_edges(ClassicalType t, int n);

// ---- duality and neutral elements -----------------------------------------

bool is_special(const OrbitDescriptor& o);

/// Barbasch-Vogan (Spaltenstein) duality A->A, B<->C, D->D.
OrbitDescriptor bv_dual(const OrbitDescriptor& o);

/// Dominant neutral element h of a Lie triple for the orbit. Type A returns
/// all n+1 gl coordinates; B, C, D return the rank-many dominant ones, with
/// the last coordinate negated for a label II very even orbit.
std::vector<int> dynkin_h(const OrbitDescriptor& o);

/// Simple-root values of a dominant h (the weighted Dynkin diagram).
std::vector<int> dynkin_labels(ClassicalType t, const std::vector<int>& h);

/// All weighted Dynkin labels even.
bool is_even(const OrbitDescriptor& o);

/// |A(O)| for the adjoint group: A: 1; B, D: 2^max(0, #distinct odd - 1);
/// C: 2^(#distinct even); very even D: 1.
int component_group_order(const OrbitDescriptor& o);

// ---- stably trivial / triangular -----------------------------------------

enum class StablyTrivialMode { PaperLiteral, ParityParallel };

std::string to_string(StablyTrivialMode mode);
StablyTrivialMode parse_stably_trivial_mode(std::string_view text);

bool is_stably_trivial(const OrbitDescriptor& o, StablyTrivialMode mode = StablyTrivialMode::PaperLiteral);

/// Partition of the triangular orbit with parameter m in type t, i.e.
/// B: (2m+1, 2m-1, 2m-1, ..., 1, 1); C: (2m, 2m, ..., 2, 2);
/// D: (2m-1, 2m-1, ..., 1, 1).
Partition triangular_partition(ClassicalType t, int m);
int triangular_rank(ClassicalType t, int m);

/// Parameter m if the orbit is triangular.
std::optional<int> triangular_parameter(const OrbitDescriptor& o);
bool is_triangular(const OrbitDescriptor& o);

struct TriangularLevi {
  LeviShape levi;
  /// The component group A_P of the inducing parabolic; trivial for these
  /// families.
  bool component_group_trivial = true;
};

/// Inducing Levi of a triangular orbit: B: gl(2) x gl(4) x ... x gl(2m);
/// C: sp(2m) x gl(1) x gl(3) x ... x gl(2m-1); D: gl(1) x gl(3) x ... x
/// gl(2m-1). Throws ErrorKind::Validation on a non-triangular orbit.
TriangularLevi triangular_levi(const OrbitDescriptor& o);

}  // namespace norbit
