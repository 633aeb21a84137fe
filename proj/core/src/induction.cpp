#include "norbit/induction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "norbit/error.hpp"

namespace norbit {

namespace {

std::optional<VeryEvenLabel> induced_label(ClassicalType t, const Partition& result, const OrbitDescriptor& base) {
  if (!is_very_even(t, result)) return std::nullopt;
  return base.label.value_or(VeryEvenLabel::I);
}

Partition ones(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(k), 1)); }

OrbitDescriptor induce_impl(ClassicalType t, int n_ambient, const OrbitDescriptor& base,
                            std::span<const Partition> gl_orbits) {
  if (base.type != t) throw Error(ErrorKind::Usage, "base orbit has the wrong type");
  if (!is_valid(t, base.rank, base.partition))
    throw Error(ErrorKind::Validation, "invalid base orbit " + base.to_string());
  int total = 0;
  Partition q;
  for (const auto& lam : gl_orbits) {
    if (lam.empty()) throw Error(ErrorKind::Usage, "gl blocks must be nonempty");
    total += lam.size();
    q = row_sum(q, lam);
  }
  if (t == ClassicalType::A) {
    if (base.rank + 1 + total != n_ambient + 1)
      throw Error(ErrorKind::Usage, "Levi rank mismatch: gl(" + std::to_string(base.rank + 1) + ") plus blocks of total " +
                                        std::to_string(total) + " is not gl(" + std::to_string(n_ambient + 1) + ")");
    return OrbitDescriptor{t, n_ambient, row_sum(base.partition, q), std::nullopt};
  }
  if (base.rank + total != n_ambient)
    throw Error(ErrorKind::Usage, "Levi rank mismatch: residual rank " + std::to_string(base.rank) +
                                      " plus blocks of total " + std::to_string(total) + " is not " +
                                      std::to_string(n_ambient));
  const Partition doubled = row_sum(q, q);
  Partition result = collapse(t, row_sum(base.partition, doubled));
  auto label = induced_label(t, result, base);
  return make_orbit(t, n_ambient, std::move(result), label);
}

}  // namespace

OrbitDescriptor induce(ClassicalType t, int n_ambient, const OrbitDescriptor& base, std::span<const int> blocks) {
  std::vector<Partition> trivial;
  for (int k : blocks) {
    if (k <= 0) throw Error(ErrorKind::Usage, "gl block sizes must be positive");
    trivial.push_back(ones(k));
  }
  return induce_impl(t, n_ambient, base, trivial);
}

OrbitDescriptor induce_general(ClassicalType t, int n_ambient, const OrbitDescriptor& base,
                               std::span<const Partition> gl_orbits) {
  return induce_impl(t, n_ambient, base, gl_orbits);
}

OrbitDescriptor induce_type_a(std::span<const Partition> gl_orbits) {
  Partition q;
  for (const auto& lam : gl_orbits) q = row_sum(q, lam);
  if (q.empty()) throw Error(ErrorKind::Usage, "type A induction needs at least one block");
  return OrbitDescriptor{ClassicalType::A, q.size() - 1, q, std::nullopt};
}

std::string InducingPresentation::to_string(ClassicalType t) const {
  std::string out = levi.to_string(t) + " with";
  for (const auto& lam : gl_orbits) out += " (" + lam.to_string() + ")";
  if (base) out += " and " + base->to_string();
  return out;
}

std::vector<InducingPresentation> inducing_presentations(const OrbitDescriptor& o, int rank_bound) {
  if (o.rank > rank_bound)
    throw Error(ErrorKind::Bound, "cuspidality search limited to rank " + std::to_string(rank_bound) + ", got " +
                                      o.to_string());
  std::vector<InducingPresentation> out;
  const ClassicalType t = o.type;
  if (t == ClassicalType::A) {
    const int dim = o.rank + 1;
    for (int k = 1; 2 * k <= dim; ++k) {
      for (const auto& a : partitions_of(k)) {
        for (const auto& b : partitions_of(dim - k)) {
          if (2 * k == dim && b < a) continue;  // swapped blocks give the same Levi
          if (row_sum(a, b) != o.partition) continue;
          out.push_back(InducingPresentation{LeviShape{{dim - k, k}, 0}.normalized(), {b, a}, std::nullopt});
        }
      }
    }
    return out;
  }
  for (int k = 1; k <= o.rank; ++k) {
    const int n0 = o.rank - k;
    const auto bases = enumerate_orbits(t, n0);
    for (const auto& lam : partitions_of(k)) {
      for (const auto& base : bases) {
        const Partition one[] = {lam};
        const auto induced = induce_general(t, o.rank, base, one);
        if (induced.partition != o.partition) continue;
        // With no residual factor the gl(n) Levis split into two classes in
        // type D, one for each very even label.
        const bool either_label = t == ClassicalType::D && n0 == 0;
        if (!either_label && induced.label != o.label) continue;
        out.push_back(InducingPresentation{LeviShape{{k}, n0}, {lam}, base});
      }
    }
  }
  return out;
}

bool is_cuspidal(const OrbitDescriptor& o, int rank_bound) { return inducing_presentations(o, rank_bound).empty(); }

CompletionResult complete_to_triangular(const OrbitDescriptor& o, int search_bound, StablyTrivialMode mode) {
  if (o.type == ClassicalType::A) throw Error(ErrorKind::Unsupported, "type A has no triangular family");
  if (!is_stably_trivial(o, mode))
    throw Error(ErrorKind::Validation, o.to_string() + " is not stably trivial (" + to_string(mode) + ")");
  CompletionResult result;
  result.search_bound = search_bound;
  if (is_triangular(o)) {
    result.completion = Completion{{}, o};
    result.diagnostic = "already triangular";
    return result;
  }
  for (int total = 1; total <= search_bound; ++total) {
    auto candidates = partitions_of(total);
    std::sort(candidates.begin(), candidates.end());
    for (const auto& blocks : candidates) {
      ++result.candidates_tried;
      const auto induced = induce(o.type, o.rank + total, o, blocks.parts());
      if (is_triangular(induced)) {
        result.completion = Completion{blocks.parts(), induced};
        result.diagnostic = "found at block total " + std::to_string(total);
        return result;
      }
    }
  }
  result.diagnostic = "no block multiset with total at most " + std::to_string(search_bound) + " induces " +
                      o.to_string() + " to a triangular orbit (" + std::to_string(result.candidates_tried) +
                      " candidates tried)";
  return result;
}

}  // namespace norbit
