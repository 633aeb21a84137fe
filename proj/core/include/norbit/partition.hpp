#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "norbit/classical_type.hpp"

namespace norbit {

/// A weakly decreasing sequence of positive integers. Zero parts are never
/// stored; the empty partition has size 0.
class Partition {
 public:
  Partition() = default;
  /// Throws ErrorKind::Usage unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts into decreasing order and drops zeros; negative entries throw.
  static Partition from_unsorted(std::vector<int> parts);
  /// Comma-separated decreasing integers, e.g. "3,1,1" or "3,1^2". Empty string or "0"
  /// gives the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return size_; }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  /// Part i, or 0 past the end.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  int multiplicity(int value) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; a linear extension of dominance.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Conjugate partition: result[j] = #{i : parts[i] >= j+1}.
Partition transpose(const Partition& p);

/// True iff every partial sum of `p` is at least the matching partial sum of
/// `q`. Throws ErrorKind::Usage if sizes differ.
bool dominates(const Partition& p, const Partition& q);

/// Parity rule only: B, D need even parts with even multiplicity; C needs odd
/// parts with even multiplicity; A is unconstrained.
bool satisfies_parity(ClassicalType t, const Partition& p) noexcept;

/// Parity rule plus the size check against the defining dimension.
bool is_valid(ClassicalType t, int rank, const Partition& p) noexcept;

/// Dominance-greatest partition of the same size below `p` that satisfies
/// the parity rule of `t`. Identity for type A. Throws ErrorKind::Validation
/// when the size parity is impossible for `t` (B odd, C and D even).
Partition collapse(ClassicalType t, const Partition& p);

/// Remove one box from a largest part. Throws on the empty partition.
Partition remove_box_largest(const Partition& p);
/// Add one box to a largest part (to the empty partition gives (1)).
Partition add_box_largest(const Partition& p);

/// Every partition of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Every partition of n with all parts at most `max_part`.
std::vector<Partition> partitions_of(int n, int max_part);

/// Coordinatewise sum of rows.
Partition row_sum(const Partition& a, const Partition& b);

}  // namespace norbit
