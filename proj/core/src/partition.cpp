#include "norbit/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "norbit/error.hpp"

namespace norbit {

char to_char(ClassicalType t) noexcept {
  switch (t) {
    case ClassicalType::A: return 'A';
    case ClassicalType::B: return 'B';
    case ClassicalType::C: return 'C';
    case ClassicalType::D: return 'D';
  }
  return '?';
}

std::string to_string(ClassicalType t) { return std::string(1, to_char(t)); }

ClassicalType parse_classical_type(std::string_view text) {
  if (text.size() == 1) {
    switch (text.front()) {
      case 'A': case 'a': return ClassicalType::A;
      case 'B': case 'b': return ClassicalType::B;
      case 'C': case 'c': return ClassicalType::C;
      case 'D': case 'd': return ClassicalType::D;
      default: break;
    }
  }
  throw Error(ErrorKind::Usage, "unknown classical type '" + std::string(text) + "'");
}

int defining_dimension(ClassicalType t, int rank) noexcept {
  switch (t) {
    case ClassicalType::A: return rank + 1;
    case ClassicalType::B: return 2 * rank + 1;
    case ClassicalType::C:
    case ClassicalType::D: return 2 * rank;
  }
  return 0;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorKind::Usage, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(ErrorKind::Usage, "partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
    throw Error(ErrorKind::Usage, "negative partition part");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return {};
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    // "a^k" stands for k copies of a.
    const auto caret = item.find('^');
    auto read_int = [&](std::string_view s) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorKind::Usage, "cannot parse partition '" + std::string(text) + "'");
      return v;
    };
    const int v = read_int(item.substr(0, caret));
    const int copies = caret == std::string_view::npos ? 1 : read_int(item.substr(caret + 1));
    if (copies < 0 || copies > 10000) throw Error(ErrorKind::Usage, "bad exponent in partition '" + std::string(text) + "'");
    parts.insert(parts.end(), static_cast<std::size_t>(copies), v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() == 1 && parts.front() == 0) return {};
  return Partition(std::move(parts));
}

int Partition::multiplicity(int value) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.to_string() << ')'; }

Partition transpose(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool dominates(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw Error(ErrorKind::Usage, "dominance needs equal sizes: " + p.to_string() + " vs " + q.to_string());
  int sp = 0;
  int sq = 0;
  const std::size_t len = std::max(p.length(), q.length());
  for (std::size_t i = 0; i < len; ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp < sq) return false;
  }
  return true;
}

namespace {

// Parts of this parity must occur with even multiplicity.
int constrained_parity(ClassicalType t) noexcept { return t == ClassicalType::C ? 1 : 0; }

}  // namespace

bool satisfies_parity(ClassicalType t, const Partition& p) noexcept {
  if (t == ClassicalType::A) return true;
  const int parity = constrained_parity(t);
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (parts[i] % 2 == parity && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

bool is_valid(ClassicalType t, int rank, const Partition& p) noexcept {
  if (rank < 0) return false;
  return p.size() == defining_dimension(t, rank) && satisfies_parity(t, p);
}

Partition collapse(ClassicalType t, const Partition& p) {
  if (t == ClassicalType::A) return p;
  const bool odd_size = p.size() % 2 != 0;
  if ((t == ClassicalType::B) != odd_size)
    throw Error(ErrorKind::Validation,
                "size " + std::to_string(p.size()) + " has the wrong parity for type " + to_string(t));
  const int parity = constrained_parity(t);
  std::vector<int> parts = p.parts();
  for (;;) {
    // Largest offending part value.
    int offender = -1;
    std::size_t last = 0;
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      if (parts[i] % 2 == parity && (j - i) % 2 != 0) {
        offender = parts[i];
        last = j - 1;
        break;
      }
      i = j;
    }
    if (offender < 0) break;
    --parts[last];
    std::size_t k = last + 1;
    while (k < parts.size() && parts[k] >= offender - 1) ++k;
    if (k == parts.size()) parts.push_back(0);
    ++parts[k];
    std::erase(parts, 0);
  }
  return Partition(std::move(parts));
}

Partition remove_box_largest(const Partition& p) {
  if (p.empty()) throw Error(ErrorKind::Usage, "cannot remove a box from the empty partition");
  std::vector<int> parts = p.parts();
  // The last copy of the largest value keeps the sequence sorted.
  std::size_t i = 0;
  while (i + 1 < parts.size() && parts[i + 1] == parts[0]) ++i;
  --parts[i];
  std::erase(parts, 0);
  return Partition(std::move(parts));
}

Partition add_box_largest(const Partition& p) {
  std::vector<int> parts = p.parts();
  if (parts.empty())
    parts.push_back(1);
  else
    ++parts[0];
  return Partition(std::move(parts));
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    current.push_back(k);
    generate(remaining - k, k, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  generate(n, max_part, current, out);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

Partition row_sum(const Partition& a, const Partition& b) {
  std::vector<int> parts(std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = a.part(i) + b.part(i);
  return Partition(std::move(parts));
}

}  // namespace norbit
