#include "norbit/weights.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <tuple>

#include "norbit/error.hpp"

namespace norbit {

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += w[i].to_string();
  }
  return out + ")";
}

namespace {

// Weights are handled internally in doubled integer coordinates so that the
// half-integral spin weights of B and D stay integral.
using IVec = std::vector<int>;

IVec doubled(const Weight& w) {
  IVec out;
  out.reserve(w.size());
  for (const auto& x : w) {
    const Rational d = x * 2;
    if (!d.is_integer()) throw Error(ErrorKind::Validation, "weight " + to_string(w) + " is not half-integral");
    out.push_back(static_cast<int>(d.to_integer()));
  }
  return out;
}

Weight halved(const IVec& v) {
  Weight out;
  out.reserve(v.size());
  for (int x : v) out.emplace_back(x, 2);
  return out;
}

long dot(const IVec& a, const IVec& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

Weight unit(int dim, std::initializer_list<std::pair<int, int>> entries) {
  Weight w(static_cast<std::size_t>(dim));
  for (auto [i, v] : entries) w[static_cast<std::size_t>(i)] = v;
  return w;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

IVec dominant_doubled(ClassicalType t, IVec v) {
  if (t == ClassicalType::A) {
    std::sort(v.begin(), v.end(), std::greater<>{});
    return v;
  }
  int negatives = 0;
  bool zero = false;
  for (int& x : v) {
    if (x < 0) ++negatives;
    if (x == 0) zero = true;
    x = std::abs(x);
  }
  std::sort(v.begin(), v.end(), std::greater<>{});
  if (t == ClassicalType::D && !zero && negatives % 2 != 0 && !v.empty()) v.back() = -v.back();
  return v;
}

std::vector<IVec> orbit_doubled(ClassicalType t, const IVec& w) {
  std::vector<IVec> out;
  IVec base = w;
  if (t == ClassicalType::A) {
    std::sort(base.begin(), base.end());
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
  }
  int negatives = 0;
  bool zero = false;
  for (int& x : base) {
    if (x < 0) ++negatives;
    if (x == 0) zero = true;
    x = std::abs(x);
  }
  std::sort(base.begin(), base.end());
  do {
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (base[i] != 0) nonzero.push_back(i);
    const std::uint64_t patterns = std::uint64_t{1} << nonzero.size();
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      if (t == ClassicalType::D && !zero && (std::popcount(mask) % 2) != (negatives % 2)) continue;
      IVec v = base;
      for (std::size_t j = 0; j < nonzero.size(); ++j)
        if (mask >> j & 1u) v[nonzero[j]] = -v[nonzero[j]];
      out.push_back(std::move(v));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

RootSystem::RootSystem(ClassicalType t, int rank) : type_(t), rank_(rank) {
  if (rank < 0) throw Error(ErrorKind::Usage, "rank must be nonnegative");
  const int n = rank;
  dim_ = t == ClassicalType::A ? n + 1 : n;
  const int d = dim_;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      positive_.push_back(unit(d, {{i, 1}, {j, -1}}));
      if (t != ClassicalType::A) positive_.push_back(unit(d, {{i, 1}, {j, 1}}));
    }
  if (t == ClassicalType::B)
    for (int i = 0; i < d; ++i) positive_.push_back(unit(d, {{i, 1}}));
  if (t == ClassicalType::C)
    for (int i = 0; i < d; ++i) positive_.push_back(unit(d, {{i, 2}}));

  for (int i = 0; i + 1 < d; ++i) simple_.push_back(unit(d, {{i, 1}, {i + 1, -1}}));
  switch (t) {
    case ClassicalType::A: break;
    case ClassicalType::B:
      if (n >= 1) simple_.push_back(unit(d, {{n - 1, 1}}));
      break;
    case ClassicalType::C:
      if (n >= 1) simple_.push_back(unit(d, {{n - 1, 2}}));
      break;
    case ClassicalType::D:
      if (n >= 2) simple_.push_back(unit(d, {{n - 2, 1}, {n - 1, 1}}));
      break;
  }

  auto leading_ones = [d](int count, Rational value) {
    Weight w(static_cast<std::size_t>(d));
    for (int i = 0; i < count; ++i) w[static_cast<std::size_t>(i)] = value;
    return w;
  };
  switch (t) {
    case ClassicalType::A:
      for (int i = 1; i <= n; ++i) fundamental_.push_back(leading_ones(i, 1));
      break;
    case ClassicalType::B:
      for (int i = 1; i < n; ++i) fundamental_.push_back(leading_ones(i, 1));
      if (n >= 1) fundamental_.push_back(leading_ones(n, Rational(1, 2)));
      break;
    case ClassicalType::C:
      for (int i = 1; i <= n; ++i) fundamental_.push_back(leading_ones(i, 1));
      break;
    case ClassicalType::D:
      if (n >= 2) {
        for (int i = 1; i <= n - 2; ++i) fundamental_.push_back(leading_ones(i, 1));
        Weight minus = leading_ones(n, Rational(1, 2));
        minus.back() = Rational(-1, 2);
        fundamental_.push_back(minus);
        fundamental_.push_back(leading_ones(n, Rational(1, 2)));
      }
      break;
  }

  rho_.assign(static_cast<std::size_t>(d), Rational(0));
  for (const auto& a : positive_)
    for (int i = 0; i < d; ++i) rho_[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(i)] / 2;
  rho_coroot_.assign(static_cast<std::size_t>(d), Rational(0));
  for (const auto& a : positive_) {
    const Rational scale = Rational(1) / inner(a, a);
    for (int i = 0; i < d; ++i) rho_coroot_[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(i)] * scale;
  }

  switch (t) {
    case ClassicalType::A: weyl_order_ = factorial(n + 1); break;
    case ClassicalType::B:
    case ClassicalType::C: weyl_order_ = (std::uint64_t{1} << n) * factorial(n); break;
    case ClassicalType::D: weyl_order_ = n >= 1 ? (std::uint64_t{1} << (n - 1)) * factorial(n) : 1; break;
  }
}

std::string RootSystem::name() const {
  if (type_ == ClassicalType::A) return "gl(" + std::to_string(rank_ + 1) + ")";
  return to_string(type_) + std::to_string(rank_);
}

Rational RootSystem::inner(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Usage, "weights of different lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool RootSystem::is_integral(const Weight& w) const {
  if (static_cast<int>(w.size()) != dim_) return false;
  for (const auto& a : simple_)
    if (!(inner(w, a) * 2 / inner(a, a)).is_integer()) return false;
  if (type_ == ClassicalType::D && rank_ == 1) return (w[0] * 2).is_integer();
  return true;
}

bool RootSystem::is_dominant(const Weight& w) const {
  if (!is_integral(w)) return false;
  return std::all_of(simple_.begin(), simple_.end(), [&](const Weight& a) { return inner(w, a).sign() >= 0; });
}

Weight RootSystem::dominant_representative(const Weight& w) const {
  if (static_cast<int>(w.size()) != dim_) throw Error(ErrorKind::Usage, "weight has the wrong length");
  if (type_ == ClassicalType::D && rank_ == 1) return w;
  Weight out = w;
  if (type_ == ClassicalType::A) {
    std::sort(out.begin(), out.end(), std::greater<>{});
    return out;
  }
  int negatives = 0;
  bool zero = false;
  for (auto& x : out) {
    if (x.sign() < 0) ++negatives;
    if (x.is_zero()) zero = true;
    x = abs(x);
  }
  std::sort(out.begin(), out.end(), std::greater<>{});
  if (type_ == ClassicalType::D && !zero && negatives % 2 != 0) out.back() = -out.back();
  return out;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& w) const {
  if (type_ == ClassicalType::D && rank_ == 1) return {w};
  std::vector<Weight> out;
  for (const auto& v : orbit_doubled(type_, doubled(w))) out.push_back(halved(v));
  return out;
}

std::vector<Rational> RootSystem::simple_root_coordinates(const Weight& w) const {
  if (static_cast<int>(w.size()) != dim_) throw Error(ErrorKind::Usage, "weight has the wrong length");
  const int n = rank_;
  std::vector<Rational> partial(w.size());
  Rational s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) partial[i] = (s += w[i]);
  std::vector<Rational> c;
  switch (type_) {
    case ClassicalType::A:
      if (!s.is_zero()) return {};
      c.assign(partial.begin(), partial.end() - 1);
      break;
    case ClassicalType::B: c = partial; break;
    case ClassicalType::C:
      c = partial;
      if (!c.empty()) c.back() = s / 2;
      break;
    case ClassicalType::D:
      if (n == 0) break;
      if (n == 1) {
        if (!w[0].is_zero()) return {};
        break;
      }
      c.assign(partial.begin(), partial.end() - 2);
      c.push_back((partial[static_cast<std::size_t>(n - 2)] - w.back()) / 2);
      c.push_back(s / 2);
      break;
  }
  return c;
}

bool RootSystem::in_positive_root_cone(const Weight& w) const {
  const bool is_zero = std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
  if (is_zero) return true;
  const auto c = simple_root_coordinates(w);
  if (c.empty()) return false;
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_integer() && x.sign() >= 0; });
}

std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw Error(ErrorKind::Validation, to_string(lambda) + " is not dominant integral for " + rs.name());
  Weight shifted = lambda;
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += rs.rho()[i];
  Rational dim = 1;
  for (const auto& a : rs.positive_roots()) dim *= RootSystem::inner(shifted, a) / RootSystem::inner(rs.rho(), a);
  return dim.to_integer();
}

std::int64_t WeightDiagram::dimension() const {
  std::int64_t total = 0;
  for (const auto& [w, m] : multiplicities) total += m;
  return total;
}

std::int64_t WeightDiagram::multiplicity(const Weight& w) const {
  const auto it = multiplicities.find(w);
  return it == multiplicities.end() ? 0 : it->second;
}

// ---- Freudenthal -------------------------------------------------------------

namespace {

using CacheKey = std::tuple<ClassicalType, int, IVec>;

struct DiagramCache {
  std::shared_mutex mutex;
  std::map<CacheKey, std::shared_ptr<const WeightDiagram>> table;
};

DiagramCache& cache() {
  static DiagramCache instance;
  return instance;
}

std::shared_ptr<const WeightDiagram> freudenthal(const RootSystem& rs, const Weight& lambda) {
  const ClassicalType t = rs.type();
  auto result = std::make_shared<WeightDiagram>();
  result->highest = lambda;
  if (t == ClassicalType::D && rs.rank() == 1) {
    result->multiplicities[lambda] = 1;
    return result;
  }
  const IVec top = doubled(lambda);
  const IVec rho2 = doubled(rs.rho());
  std::vector<IVec> roots;
  for (const auto& a : rs.positive_roots()) roots.push_back(doubled(a));
  std::vector<IVec> simple;
  for (const auto& a : rs.simple_roots()) simple.push_back(doubled(a));

  auto is_dom = [&](const IVec& v) {
    return std::all_of(simple.begin(), simple.end(), [&](const IVec& a) { return dot(v, a) >= 0; });
  };

  // Dominant weights below the top, reached by subtracting positive roots.
  std::set<IVec> dominant{top};
  std::deque<IVec> queue{top};
  while (!queue.empty()) {
    IVec v = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : roots) {
      IVec w = v;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= a[i];
      if (is_dom(w) && dominant.insert(w).second) queue.push_back(std::move(w));
    }
  }
  std::vector<IVec> order(dominant.begin(), dominant.end());
  std::stable_sort(order.begin(), order.end(), [&](const IVec& a, const IVec& b) { return dot(a, rho2) > dot(b, rho2); });

  IVec top_rho = top;
  for (std::size_t i = 0; i < top_rho.size(); ++i) top_rho[i] += rho2[i];
  const long top_norm = dot(top_rho, top_rho);

  std::map<IVec, std::int64_t> mult;
  auto lookup = [&](const IVec& v) -> std::int64_t {
    const auto it = mult.find(dominant_doubled(t, v));
    return it == mult.end() ? 0 : it->second;
  };
  for (const auto& mu : order) {
    if (mu == top) {
      mult[mu] = 1;
      continue;
    }
    long numerator = 0;
    for (const auto& a : roots) {
      IVec v = mu;
      for (;;) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += a[i];
        if (!dominant.count(dominant_doubled(t, v))) break;
        numerator += lookup(v) * dot(v, a);
      }
    }
    IVec mu_rho = mu;
    for (std::size_t i = 0; i < mu_rho.size(); ++i) mu_rho[i] += rho2[i];
    const long denominator = top_norm - dot(mu_rho, mu_rho);
    if (denominator <= 0 || (2 * numerator) % denominator != 0)
      throw Error(ErrorKind::Oracle, "Freudenthal recursion produced a non-integral multiplicity");
    mult[mu] = 2 * numerator / denominator;
  }
  for (const auto& [mu, m] : mult) {
    if (m == 0) continue;
    for (const auto& v : orbit_doubled(t, mu)) result->multiplicities.emplace(halved(v), m);
  }
  return result;
}

}  // namespace

std::shared_ptr<const WeightDiagram> weight_multiplicities(const RootSystem& rs, const Weight& lambda,
                                                           std::int64_t dim_bound) {
  const std::int64_t dim = weyl_dim(rs, lambda);
  if (dim > dim_bound)
    throw Error(ErrorKind::Bound, "V" + to_string(lambda) + " of " + rs.name() + " has dimension " +
                                      std::to_string(dim) + " above the bound " + std::to_string(dim_bound));
  CacheKey key{rs.type(), rs.rank(), doubled(lambda)};
  auto& c = cache();
  {
    std::shared_lock lock(c.mutex);
    const auto it = c.table.find(key);
    if (it != c.table.end()) return it->second;
  }
  auto diagram = freudenthal(rs, lambda);
  std::unique_lock lock(c.mutex);
  return c.table.emplace(std::move(key), std::move(diagram)).first->second;
}

std::size_t weight_cache_size() {
  std::shared_lock lock(cache().mutex);
  return cache().table.size();
}

void clear_weight_cache() {
  std::unique_lock lock(cache().mutex);
  cache().table.clear();
}

// ---- Levi branching ------------------------------------------------------------

LeviSubsystem::LeviSubsystem(ClassicalType t, int ambient_rank, LeviShape shape)
    : type_(t), ambient_rank_(ambient_rank), shape_(std::move(shape)) {
  check_levi(t, ambient_rank, shape_);
}

namespace {

struct Factor {
  RootSystem rs;
  std::size_t offset;
};

std::vector<Factor> levi_factors(ClassicalType t, const LeviShape& shape) {
  std::vector<Factor> out;
  std::size_t offset = 0;
  for (int k : shape.gl_blocks) {
    out.push_back({RootSystem(ClassicalType::A, k - 1), offset});
    offset += static_cast<std::size_t>(k);
  }
  if (t != ClassicalType::A && shape.residual_rank > 0) out.push_back({RootSystem(t, shape.residual_rank), offset});
  return out;
}

Weight slice(const Weight& w, const Factor& f) {
  const auto begin = w.begin() + static_cast<std::ptrdiff_t>(f.offset);
  return Weight(begin, begin + f.rs.dimension());
}

}  // namespace

bool LeviSubsystem::is_dominant(const Weight& w) const {
  for (const auto& f : levi_factors(type_, shape_))
    if (!f.rs.is_dominant(slice(w, f))) return false;
  return true;
}

std::map<Weight, std::int64_t> LeviSubsystem::irreducible(const Weight& w, std::int64_t dim_bound) const {
  std::map<Weight, std::int64_t> product{{w, 1}};
  for (const auto& f : levi_factors(type_, shape_)) {
    const auto diagram = weight_multiplicities(f.rs, slice(w, f), dim_bound);
    std::map<Weight, std::int64_t> next;
    for (const auto& [base, m] : product) {
      for (const auto& [piece, k] : diagram->multiplicities) {
        Weight v = base;
        std::copy(piece.begin(), piece.end(), v.begin() + static_cast<std::ptrdiff_t>(f.offset));
        next[v] += m * k;
      }
    }
    product = std::move(next);
  }
  return product;
}

namespace {

// Removes highest pieces from `remaining` until it is empty.
Branching peel(std::map<Weight, std::int64_t> remaining, const Weight& rho_g,
               const std::function<bool(const Weight&)>& is_highest,
               const std::function<std::map<Weight, std::int64_t>(const Weight&)>& irreducible) {
  Branching out;
  for (;;) {
    std::erase_if(remaining, [](const auto& kv) { return kv.second == 0; });
    if (remaining.empty()) break;
    const Weight* best = nullptr;
    Rational best_height;
    for (const auto& [w, m] : remaining) {
      const Rational h = RootSystem::inner(w, rho_g);
      if (!best || h > best_height || (h == best_height && w > *best)) {
        best = &w;
        best_height = h;
      }
    }
    const Weight top = *best;
    const std::int64_t m = remaining[top];
    if (m < 0 || !is_highest(top))
      throw Error(ErrorKind::Oracle, "character is not a nonnegative sum of irreducibles near " + to_string(top));
    for (const auto& [w, k] : irreducible(top)) remaining[w] -= m * k;
    out.emplace_back(top, m);
  }
  return out;
}

}  // namespace

Branching branch_to_levi(const RootSystem& rs, const Weight& lambda, const LeviShape& levi, std::int64_t dim_bound) {
  const LeviSubsystem sub(rs.type(), rs.rank(), levi);
  const auto diagram = weight_multiplicities(rs, lambda, dim_bound);
  return peel(
      diagram->multiplicities, rs.rho(), [&](const Weight& w) { return sub.is_dominant(w); },
      [&](const Weight& w) { return sub.irreducible(w, dim_bound); });
}

std::int64_t trivial_multiplicity(const RootSystem& rs, const Weight& lambda, const LeviShape& levi,
                                  std::int64_t dim_bound) {
  std::int64_t total = 0;
  for (const auto& [w, m] : branch_to_levi(rs, lambda, levi, dim_bound))
    if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); })) total += m;
  return total;
}

Branching decompose_character(const RootSystem& rs, std::map<Weight, std::int64_t> character, std::int64_t dim_bound) {
  return peel(
      std::move(character), rs.rho(), [&](const Weight& w) { return rs.is_dominant(w); },
      [&](const Weight& w) { return weight_multiplicities(rs, w, dim_bound)->multiplicities; });
}

std::vector<Weight> dominant_weights_up_to_dim(const RootSystem& rs, std::int64_t dim_bound, int gl_trace) {
  const auto& fundamentals = rs.fundamental_weights();
  const std::size_t count = fundamentals.size();
  std::vector<Weight> out;
  Weight zero(static_cast<std::size_t>(rs.dimension()));
  std::vector<int> coeff(count, 0);

  auto build = [&]() {
    Weight w = zero;
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < w.size(); ++j) w[j] += fundamentals[i][j] * coeff[i];
    return w;
  };

  std::function<void(std::size_t)> visit = [&](std::size_t index) {
    if (index == count) {
      Weight w = build();
      if (rs.type() == ClassicalType::A) {
        Rational sum = 0;
        for (const auto& x : w) sum += x;
        const Rational shift = (sum - gl_trace) / static_cast<std::int64_t>(w.size());
        if (!shift.is_integer()) return;
        for (auto& x : w) x -= shift;
      }
      out.push_back(std::move(w));
      return;
    }
    for (coeff[index] = 0;; ++coeff[index]) {
      if (weyl_dim(rs, build()) > dim_bound) break;
      visit(index + 1);
    }
    coeff[index] = 0;
  };
  if (rs.type() == ClassicalType::A && count == 0) {
    out.push_back(Weight{Rational(gl_trace)});
    return out;
  }
  visit(0);
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    const auto da = weyl_dim(rs, a);
    const auto db = weyl_dim(rs, b);
    return da != db ? da < db : a > b;
  });
  return out;
}

}  // namespace norbit
