#include "norbit/orbit.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "norbit/error.hpp"

namespace norbit {

std::string to_string(VeryEvenLabel label) { return label == VeryEvenLabel::I ? "I" : "II"; }

VeryEvenLabel parse_very_even_label(std::string_view text) {
  if (text == "I" || text == "i" || text == "1") return VeryEvenLabel::I;
  if (text == "II" || text == "ii" || text == "2") return VeryEvenLabel::II;
  throw Error(ErrorKind::Usage, "very even label must be I or II, got '" + std::string(text) + "'");
}

bool is_very_even(ClassicalType t, const Partition& p) noexcept {
  if (t != ClassicalType::D || p.empty()) return false;
  return std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 0; });
}

std::string OrbitDescriptor::to_string() const {
  std::string out = norbit::to_string(type) + std::to_string(rank) + "(" + partition.to_string() + ")";
  if (label) out += norbit::to_string(*label);
  return out;
}

OrbitDescriptor make_orbit(ClassicalType t, int rank, Partition p, std::optional<VeryEvenLabel> label) {
  if (rank < 0) throw Error(ErrorKind::Validation, "rank must be nonnegative");
  if (p.size() != defining_dimension(t, rank))
    throw Error(ErrorKind::Validation, "partition (" + p.to_string() + ") has size " + std::to_string(p.size()) +
                                           ", expected " + std::to_string(defining_dimension(t, rank)) +
                                           " for " + to_string(t) + std::to_string(rank));
  if (!satisfies_parity(t, p))
    throw Error(ErrorKind::Validation,
                "partition (" + p.to_string() + ") violates the type " + to_string(t) + " parity rule");
  const bool ve = is_very_even(t, p);
  if (ve && !label)
    throw Error(ErrorKind::Validation, "very even partition (" + p.to_string() + ") needs a label I or II");
  if (!ve && label)
    throw Error(ErrorKind::Validation, "partition (" + p.to_string() + ") is not very even; drop the label");
  return OrbitDescriptor{t, rank, std::move(p), label};
}

OrbitDescriptor zero_orbit(ClassicalType t, int rank) {
  const int dim = defining_dimension(t, rank);
  std::vector<int> ones(static_cast<std::size_t>(dim), 1);
  return make_orbit(t, rank, Partition(std::move(ones)));
}

OrbitDescriptor principal_orbit(ClassicalType t, int rank) {
  const int dim = defining_dimension(t, rank);
  if (dim == 0) return make_orbit(t, rank, Partition{});
  switch (t) {
    case ClassicalType::A:
    case ClassicalType::B:
    case ClassicalType::C: return make_orbit(t, rank, Partition{dim});
    case ClassicalType::D:
      if (rank == 1) return make_orbit(t, rank, Partition{1, 1});
      return make_orbit(t, rank, Partition{dim - 1, 1});
  }
  throw Error(ErrorKind::Usage, "unknown type");
}

LeviShape LeviShape::normalized() const {
  LeviShape out = *this;
  std::sort(out.gl_blocks.begin(), out.gl_blocks.end(), std::greater<>{});
  return out;
}

std::string LeviShape::to_string(ClassicalType t) const {
  std::string out;
  for (int k : gl_blocks) {
    if (!out.empty()) out += " x ";
    out += "gl(" + std::to_string(k) + ")";
  }
  if (t != ClassicalType::A) {
    if (!out.empty()) out += " x ";
    switch (t) {
      case ClassicalType::B: out += "so(" + std::to_string(2 * residual_rank + 1) + ")"; break;
      case ClassicalType::C: out += "sp(" + std::to_string(2 * residual_rank) + ")"; break;
      case ClassicalType::D: out += "so(" + std::to_string(2 * residual_rank) + ")"; break;
      default: break;
    }
  }
  return out;
}

void check_levi(ClassicalType t, int ambient_rank, const LeviShape& levi) {
  int total = 0;
  for (int k : levi.gl_blocks) {
    if (k <= 0) throw Error(ErrorKind::Usage, "gl block sizes must be positive");
    total += k;
  }
  if (levi.residual_rank < 0) throw Error(ErrorKind::Usage, "residual rank must be nonnegative");
  if (t == ClassicalType::A) {
    if (levi.residual_rank != 0 || total != ambient_rank + 1)
      throw Error(ErrorKind::Usage, "type A Levi blocks must sum to " + std::to_string(ambient_rank + 1));
    return;
  }
  if (total + levi.residual_rank != ambient_rank)
    throw Error(ErrorKind::Usage, "Levi " + levi.to_string(t) + " does not have rank " + std::to_string(ambient_rank));
}

// ---- enumeration and closure order ---------------------------------------

std::vector<OrbitDescriptor> enumerate_orbits(ClassicalType t, int n) {
  if (n < 0) throw Error(ErrorKind::Usage, "rank must be nonnegative");
  std::vector<OrbitDescriptor> out;
  for (auto& p : partitions_of(defining_dimension(t, n))) {
    if (!satisfies_parity(t, p)) continue;
    if (is_very_even(t, p)) {
      out.push_back(OrbitDescriptor{t, n, p, VeryEvenLabel::I});
      out.push_back(OrbitDescriptor{t, n, p, VeryEvenLabel::II});
    } else {
      out.push_back(OrbitDescriptor{t, n, p, std::nullopt});
    }
  }
  return out;
}

bool orbit_leq(const OrbitDescriptor& a, const OrbitDescriptor& b) {
  if (a.type != b.type || a.rank != b.rank)
    throw Error(ErrorKind::Usage, "closure order needs orbits of the same algebra");
  if (!dominates(b.partition, a.partition)) return false;
  if (!a.label || !b.label || *a.label == *b.label) return true;
  if (a.partition == b.partition) return false;
  // Differently labelled very even orbits meet only through an intermediate
  // orbit that is not very even.
  for (const auto& r : partitions_of(a.partition.size())) {
    if (!satisfies_parity(a.type, r) || is_very_even(a.type, r)) continue;
    if (dominates(r, a.partition) && dominates(b.partition, r)) return true;
  }
  return false;
}

std::vector<std::pair<OrbitDescriptor, OrbitDescriptor>> hasse_edges(ClassicalType t, int n) {
  const auto orbits = enumerate_orbits(t, n);
  const std::size_t count = orbits.size();
  std::vector<std::vector<char>> lt(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      lt[i][j] = i != j && orbit_leq(orbits[i], orbits[j]) ? 1 : 0;
  std::vector<std::pair<OrbitDescriptor, OrbitDescriptor>> out;
  for (std::size_t hi = 0; hi < count; ++hi) {
    for (std::size_t lo = 0; lo < count; ++lo) {
      if (!lt[lo][hi]) continue;
      bool covered = true;
      for (std::size_t mid = 0; mid < count && covered; ++mid)
        if (lt[lo][mid] && lt[mid][hi]) covered = false;
      if (covered) out.emplace_back(orbits[hi], orbits[lo]);
    }
  }
  return out;
}

// ---- duality and neutral elements -----------------------------------------

bool is_special(const OrbitDescriptor& o) {
  const Partition tr = transpose(o.partition);
  switch (o.type) {
    case ClassicalType::A: return true;
    case ClassicalType::B: return satisfies_parity(ClassicalType::B, tr);
    case ClassicalType::C:
    case ClassicalType::D: return satisfies_parity(ClassicalType::C, tr);
  }
  return false;
}

OrbitDescriptor bv_dual(const OrbitDescriptor& o) {
  const auto& p = o.partition;
  switch (o.type) {
    case ClassicalType::A: return OrbitDescriptor{o.type, o.rank, transpose(p), std::nullopt};
    case ClassicalType::B: {
      auto q = collapse(ClassicalType::C, transpose(remove_box_largest(p)));
      return make_orbit(ClassicalType::C, o.rank, std::move(q));
    }
    case ClassicalType::C: {
      auto q = collapse(ClassicalType::B, add_box_largest(transpose(p)));
      return make_orbit(ClassicalType::B, o.rank, std::move(q));
    }
    case ClassicalType::D: {
      auto q = collapse(ClassicalType::D, transpose(p));
      std::optional<VeryEvenLabel> label;
      if (is_very_even(ClassicalType::D, q)) {
        VeryEvenLabel from = o.label.value_or(VeryEvenLabel::I);
        if (o.rank % 4 == 2) from = from == VeryEvenLabel::I ? VeryEvenLabel::II : VeryEvenLabel::I;
        label = from;
      }
      return make_orbit(ClassicalType::D, o.rank, std::move(q), label);
    }
  }
  throw Error(ErrorKind::Usage, "unknown type");
}

std::vector<int> dynkin_h(const OrbitDescriptor& o) {
  std::vector<int> values;
  for (int part : o.partition.parts())
    for (int i = 0; i < part; ++i) values.push_back(part - 1 - 2 * i);
  std::sort(values.begin(), values.end(), std::greater<>{});
  if (o.type == ClassicalType::A) return values;
  values.resize(static_cast<std::size_t>(o.rank));
  if (o.label == VeryEvenLabel::II && !values.empty()) values.back() = -values.back();
  return values;
}

std::vector<int> dynkin_labels(ClassicalType t, const std::vector<int>& h) {
  std::vector<int> labels;
  for (std::size_t i = 0; i + 1 < h.size(); ++i) labels.push_back(h[i] - h[i + 1]);
  if (h.empty()) return labels;
  switch (t) {
    case ClassicalType::A: break;
    case ClassicalType::B: labels.push_back(h.back()); break;
    case ClassicalType::C: labels.push_back(2 * h.back()); break;
    case ClassicalType::D:
      if (h.size() >= 2) {
        labels.back() = h[h.size() - 2] - h.back();
        labels.push_back(h[h.size() - 2] + h.back());
      } else {
        labels.clear();  // D1 is a torus; no roots
      }
      break;
  }
  return labels;
}

bool is_even(const OrbitDescriptor& o) {
  const auto labels = dynkin_labels(o.type, dynkin_h(o));
  return std::all_of(labels.begin(), labels.end(), [](int x) { return x % 2 == 0; });
}

int component_group_order(const OrbitDescriptor& o) {
  std::set<int> odd;
  std::set<int> even;
  for (int part : o.partition.parts()) (part % 2 ? odd : even).insert(part);
  switch (o.type) {
    case ClassicalType::A: return 1;
    case ClassicalType::C: return 1 << even.size();
    case ClassicalType::B:
    case ClassicalType::D:
      if (o.label) return 1;
      return odd.size() <= 1 ? 1 : 1 << (odd.size() - 1);
  }
  return 1;
}

// ---- stably trivial / triangular -----------------------------------------

std::string to_string(StablyTrivialMode mode) {
  return mode == StablyTrivialMode::PaperLiteral ? "paper-literal" : "parity-parallel";
}

StablyTrivialMode parse_stably_trivial_mode(std::string_view text) {
  if (text == "paper-literal") return StablyTrivialMode::PaperLiteral;
  if (text == "parity-parallel") return StablyTrivialMode::ParityParallel;
  throw Error(ErrorKind::Usage, "mode must be paper-literal or parity-parallel, got '" + std::string(text) + "'");
}

namespace {

// Every part of the given parity, other than `exempt`, has even multiplicity.
bool even_multiplicities(const Partition& p, int parity, int exempt) {
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (parts[i] % 2 == parity && parts[i] != exempt && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

}  // namespace

bool is_stably_trivial(const OrbitDescriptor& o, StablyTrivialMode mode) {
  const auto& p = o.partition;
  switch (o.type) {
    case ClassicalType::A: return true;
    case ClassicalType::B: return even_multiplicities(p, 1, p.largest());
    case ClassicalType::C: return even_multiplicities(p, 0, -1);
    case ClassicalType::D:
      if (mode == StablyTrivialMode::PaperLiteral) return even_multiplicities(p, 0, -1);
      return even_multiplicities(p, 1, p.largest());
  }
  return false;
}

Partition triangular_partition(ClassicalType t, int m) {
  if (m < 1) throw Error(ErrorKind::Usage, "triangular parameter must be at least 1");
  std::vector<int> parts;
  switch (t) {
    case ClassicalType::B:
      parts.push_back(2 * m + 1);
      for (int i = m; i >= 1; --i) parts.insert(parts.end(), {2 * i - 1, 2 * i - 1});
      break;
    case ClassicalType::C:
      for (int i = m; i >= 1; --i) parts.insert(parts.end(), {2 * i, 2 * i});
      break;
    case ClassicalType::D:
      for (int i = m; i >= 1; --i) parts.insert(parts.end(), {2 * i - 1, 2 * i - 1});
      break;
    case ClassicalType::A: throw Error(ErrorKind::Unsupported, "type A has no triangular family");
  }
  return Partition(std::move(parts));
}

int triangular_rank(ClassicalType t, int m) {
  switch (t) {
    case ClassicalType::B:
    case ClassicalType::C: return m * (m + 1);
    case ClassicalType::D: return m * m;
    case ClassicalType::A: break;
  }
  throw Error(ErrorKind::Unsupported, "type A has no triangular family");
}

std::optional<int> triangular_parameter(const OrbitDescriptor& o) {
  if (o.type == ClassicalType::A || o.partition.empty()) return std::nullopt;
  const int top = o.partition.largest();
  int m = 0;
  switch (o.type) {
    case ClassicalType::B: m = (top - 1) / 2; break;
    case ClassicalType::C: m = top / 2; break;
    case ClassicalType::D: m = (top + 1) / 2; break;
    case ClassicalType::A: break;
  }
  if (m < 1 || triangular_rank(o.type, m) != o.rank) return std::nullopt;
  if (triangular_partition(o.type, m) != o.partition) return std::nullopt;
  return m;
}

bool is_triangular(const OrbitDescriptor& o) { return triangular_parameter(o).has_value(); }

TriangularLevi triangular_levi(const OrbitDescriptor& o) {
  const auto m = triangular_parameter(o);
  if (!m) throw Error(ErrorKind::Validation, o.to_string() + " is not triangular");
  TriangularLevi out;
  switch (o.type) {
    case ClassicalType::B:
      for (int i = *m; i >= 1; --i) out.levi.gl_blocks.push_back(2 * i);
      out.levi.residual_rank = 0;
      break;
    case ClassicalType::C:
      for (int i = *m; i >= 1; --i) out.levi.gl_blocks.push_back(2 * i - 1);
      out.levi.residual_rank = *m;
      break;
    case ClassicalType::D:
      for (int i = *m; i >= 1; --i) out.levi.gl_blocks.push_back(2 * i - 1);
      out.levi.residual_rank = 0;
      break;
    case ClassicalType::A: break;
  }
  out.component_group_trivial = true;
  return out;
}

}  // namespace norbit
