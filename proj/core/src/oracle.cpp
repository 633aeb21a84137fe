#include "norbit/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <random>

#include "norbit/error.hpp"

namespace norbit {

void OracleConfig::validate() const {
  if (!(tolerance > 0.0 && tolerance <= 1e-4))
    throw Error(ErrorKind::Usage, "oracle tolerance must lie in (0, 1e-4]");
  if (max_monomials == 0) throw Error(ErrorKind::Usage, "oracle monomial cap must be positive");
}

namespace {

using Matrix = Eigen::MatrixXd;
using IVec = std::vector<int>;

struct Coordinate {
  int row;
  int col;
  IVec weight;  // doubled coordinates, weight of the coordinate function
};

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::size_t{1} << 40)) return r;
  }
  return r;
}

// Visits every nondecreasing index tuple of length d over [0, m).
template <class F>
void for_each_monomial(int m, int d, F&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  if (d == 0) {
    visit(idx);
    return;
  }
  for (;;) {
    visit(idx);
    int pos = d - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - 1) --pos;
    if (pos < 0) return;
    const int next = idx[static_cast<std::size_t>(pos)] + 1;
    for (int j = pos; j < d; ++j) idx[static_cast<std::size_t>(j)] = next;
  }
}

}  // namespace

struct HilbertOracle::Impl {
  OrbitDescriptor orbit;
  RootSystem rs;
  OracleConfig cfg;
  int size = 0;  // matrix size N
  std::vector<IVec> basis_weight;  // doubled weight of each defining basis vector
  Matrix form;                     // J, empty for type A
  std::vector<Matrix> algebra;     // basis of the Lie algebra
  std::vector<Coordinate> coords;
  Matrix nilpotent;  // generic element of the orbit
  bool zero = false;

  Impl(const OrbitDescriptor& o, OracleConfig c) : orbit(o), rs(o.type, o.rank), cfg(c) {
    cfg.validate();
    const ClassicalType t = o.type;
    size = defining_dimension(t, o.rank);
    const int n = o.rank;
    const int dim = rs.dimension();

    std::vector<int> h(static_cast<std::size_t>(size), 0);
    const auto hd = dynkin_h(o);
    basis_weight.assign(static_cast<std::size_t>(size), IVec(static_cast<std::size_t>(dim), 0));
    if (t == ClassicalType::A) {
      for (int a = 0; a < size; ++a) {
        basis_weight[a][a] = 2;
        h[a] = hd[a];
      }
    } else {
      for (int a = 0; a < n; ++a) {
        basis_weight[a][a] = 2;
        basis_weight[size - 1 - a][a] = -2;
        h[a] = hd[a];
        h[size - 1 - a] = -hd[a];
      }
      form = Matrix::Zero(size, size);
      for (int a = 0; a < size; ++a) form(a, size - 1 - a) = (t == ClassicalType::C && a >= n) ? -1.0 : 1.0;
    }

    auto elementary = [&](int a, int b) {
      Matrix e = Matrix::Zero(size, size);
      e(a, b) = 1.0;
      return e;
    };
    std::vector<int> eigen;
    for (int a = 0; a < size; ++a) {
      for (int b = 0; b < size; ++b) {
        Matrix x = elementary(a, b);
        if (t != ClassicalType::A) {
          // Keep one entry per orbit of (a,b) -> (N-1-b, N-1-a).
          const int ra = size - 1 - b;
          const int rb = size - 1 - a;
          if (std::make_pair(ra, rb) < std::make_pair(a, b)) continue;
          const Matrix sigma = -form.inverse() * elementary(b, a) * form;
          x += sigma;
          if (x.norm() < 1e-12) continue;
        }
        IVec w(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) w[i] = -(basis_weight[a][i] - basis_weight[b][i]);
        algebra.push_back(std::move(x));
        coords.push_back({a, b, std::move(w)});
        eigen.push_back(h[a] - h[b]);
      }
    }

    // A generic element of the sum of ad(h)-eigenspaces of eigenvalue >= 2
    // lies in the orbit.
    std::mt19937_64 rng(cfg.seed ^ 0x5bd1e995u);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    nilpotent = Matrix::Zero(size, size);
    zero = true;
    for (std::size_t k = 0; k < algebra.size(); ++k) {
      if (eigen[k] >= 2) {
        nilpotent += unit(rng) * algebra[k];
        zero = false;
      }
    }
  }

  Matrix group_element(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    if (orbit.type == ClassicalType::A) {
      Matrix g(size, size);
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) g(i, j) = unit(rng);
      return g;
    }
    Matrix x = Matrix::Zero(size, size);
    for (const auto& b : algebra) x += unit(rng) * b;
    const Matrix id = Matrix::Identity(size, size);
    return (id - x).partialPivLu().solve(id + x);
  }

  // Ranks of each weight class of degree-d monomials for one seed.
  std::map<IVec, std::int64_t> ranks(int degree, std::uint64_t seed, std::size_t& samples_used,
                                     std::size_t& monomial_count) const {
    const int m = static_cast<int>(coords.size());
    std::map<IVec, std::vector<std::vector<int>>> classes;
    for_each_monomial(m, degree, [&](const std::vector<int>& idx) {
      IVec w(coords.empty() ? 0 : coords.front().weight.size(), 0);
      if (coords.empty()) w.assign(static_cast<std::size_t>(rs.dimension()), 0);
      for (int i : idx)
        for (std::size_t j = 0; j < w.size(); ++j) w[j] += coords[static_cast<std::size_t>(i)].weight[j];
      classes[w].push_back(idx);
    });
    monomial_count = 0;
    for (const auto& [w, list] : classes) monomial_count += list.size();
    const std::size_t samples = cfg.samples ? cfg.samples : monomial_count + 16;
    if (samples < monomial_count)
      throw Error(ErrorKind::Usage, "oracle needs at least " + std::to_string(monomial_count) + " samples, got " +
                                        std::to_string(samples));
    samples_used = samples;

    std::map<IVec, std::int64_t> out;
    if (zero) {
      if (degree == 0) out[classes.begin()->first] = 1;
      return out;
    }

    std::mt19937_64 rng(seed);
    Matrix values(static_cast<Eigen::Index>(samples), m);
    for (std::size_t s = 0; s < samples; ++s) {
      const Matrix g = group_element(rng);
      Matrix x = g * nilpotent * g.partialPivLu().inverse();
      x /= x.norm();
      for (int k = 0; k < m; ++k) values(static_cast<Eigen::Index>(s), k) = x(coords[k].row, coords[k].col);
    }

    double reference = 0.0;
    std::map<IVec, Eigen::VectorXd> singular;
    for (const auto& [w, list] : classes) {
      Matrix block(static_cast<Eigen::Index>(samples), static_cast<Eigen::Index>(list.size()));
      for (std::size_t c = 0; c < list.size(); ++c) {
        for (std::size_t s = 0; s < samples; ++s) {
          double v = 1.0;
          for (int i : list[c]) v *= values(static_cast<Eigen::Index>(s), i);
          block(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(c)) = v;
        }
      }
      Eigen::BDCSVD<Matrix> svd(block);
      singular[w] = svd.singularValues();
      if (singular[w].size() > 0) reference = std::max(reference, singular[w](0));
    }
    const double threshold = cfg.tolerance * reference;
    for (const auto& [w, sv] : singular) {
      std::int64_t r = 0;
      for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > threshold) ++r;
      if (r > 0) out[w] = r;
    }
    return out;
  }
};

HilbertOracle::HilbertOracle(const OrbitDescriptor& orbit, OracleConfig cfg)
    : impl_(std::make_unique<Impl>(orbit, cfg)) {}
HilbertOracle::~HilbertOracle() = default;
HilbertOracle::HilbertOracle(HilbertOracle&&) noexcept = default;
HilbertOracle& HilbertOracle::operator=(HilbertOracle&&) noexcept = default;

const OrbitDescriptor& HilbertOracle::orbit() const noexcept { return impl_->orbit; }
const RootSystem& HilbertOracle::root_system() const noexcept { return impl_->rs; }
std::size_t HilbertOracle::coordinate_count() const noexcept { return impl_->coords.size(); }

GradedPiece HilbertOracle::piece(int degree) const {
  if (degree < 0) throw Error(ErrorKind::Usage, "degree must be nonnegative");
  const std::size_t count = binomial(impl_->coords.size() + static_cast<std::size_t>(degree) - 1,
                                     static_cast<std::size_t>(degree));
  if (count > impl_->cfg.max_monomials)
    throw Error(ErrorKind::Bound, "degree " + std::to_string(degree) + " needs " + std::to_string(count) +
                                      " monomials, above the cap " + std::to_string(impl_->cfg.max_monomials));
  GradedPiece piece;
  piece.degree = degree;
  const std::uint64_t seed = impl_->cfg.seed;
  const std::uint64_t second = impl_->cfg.second_seed ? impl_->cfg.second_seed : seed + 1;
  const auto first = impl_->ranks(degree, seed, piece.samples, piece.monomials);
  const auto check = impl_->ranks(degree, second, piece.samples, piece.monomials);
  if (first != check)
    throw Error(ErrorKind::Oracle, "seed disagreement for " + impl_->orbit.to_string() + " in degree " +
                                       std::to_string(degree) + "; loosen the tolerance or add samples");
  for (const auto& [w, r] : first) {
    Weight weight;
    for (int x : w) weight.emplace_back(x, 2);
    piece.character[weight] = r;
    piece.dimension += r;
  }
  piece.decomposition = decompose_character(impl_->rs, piece.character);
  return piece;
}

std::int64_t hilbert_oracle(const OrbitDescriptor& orbit, int degree, const OracleConfig& cfg) {
  return HilbertOracle(orbit, cfg).piece(degree).dimension;
}

}  // namespace norbit
