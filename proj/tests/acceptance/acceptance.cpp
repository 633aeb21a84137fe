// Acceptance criteria: one PASS/FAIL line per criterion.
//
//   norbit_acceptance [--expect-fail 1,7]
//
// Exit status is 0 when every criterion passes, or when the failing set is
// exactly the --expect-fail list (documented deviations). Any other outcome
// exits 1.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "norbit/induction.hpp"
#include "norbit/infchar.hpp"
#include "norbit/oracle.hpp"
#include "norbit/verify.hpp"

using namespace norbit;
using T = ClassicalType;

namespace {

// Pinned tolerances and bounds.
constexpr double kOracleTolerance = 1e-8;
constexpr double kOracleRuntimeSeconds = 30.0;
constexpr std::int64_t kWeightDimBound = 200;
constexpr int kOracleDegree = 3;
constexpr int kTriangularMax = 4;
constexpr int kConsistencyRank = 4;
constexpr int kCollapseSize = 12;
constexpr int kStageRank = 6;
constexpr int kDualityRank = 5;
constexpr int kTypeAProp55Size = 4;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

std::vector<Rational> q(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(Rational::parse(x));
  return out;
}

std::string str(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

Outcome infchar_table() {
  struct Row {
    T type;
    int rank;
    Partition p;
    std::vector<Rational> expected;
  };
  const std::vector<Row> rows = {
      {T::B, 2, {3, 1, 1}, q({"1/2", "1/2"})},
      {T::B, 3, {3, 3, 1}, q({"1/2", "1/2", "1/2"})},
      {T::B, 3, {3, 2, 2}, q({"1", "1", "0"})},
      {T::B, 2, {5}, q({"0", "0"})},
      {T::C, 2, {2, 2}, q({"1", "0"})},
      {T::C, 4, {4, 4}, q({"1", "1/2", "1/2", "0"})},
      {T::C, 4, {4, 2, 1, 1}, q({"2", "1", "0", "0"})},
      {T::C, 2, {1, 1, 1, 1}, q({"2", "1"})},
      {T::D, 4, {3, 3, 1, 1}, q({"1", "1/2", "1/2", "0"})},
  };
  Outcome out;
  int ok = 0;
  for (const auto& row : rows) {
    const auto o = make_orbit(row.type, row.rank, row.p);
    const auto got = infchar(o);
    if (infchar_equal(got.value, InfChar(row.type, row.expected))) {
      ++ok;
    } else {
      out.fail(o.to_string() + " expected " + str(row.expected) + " got " + str(got.value.canonical()) + " [" +
               to_string(got.rule) + "]");
    }
  }
  for (int n = 0; n <= 5; ++n) {
    const auto got = infchar(zero_orbit(T::A, n)).value;
    if (infchar_equal(got, rho(T::A, n)))
      ++ok;
    else
      out.fail("gl(" + std::to_string(n + 1) + ") zero orbit got " + str(got.canonical()));
  }
  if (out.pass) out.detail = std::to_string(ok) + " values exact";
  return out;
}

Outcome triangular() {
  Outcome out;
  int checked = 0;
  for (auto t : {T::B, T::C, T::D}) {
    for (int m = 1; m <= kTriangularMax; ++m) {
      const auto o = make_orbit(t, triangular_rank(t, m), triangular_partition(t, m));
      const auto levi = triangular_levi(o).levi;
      const auto induced = induce(t, o.rank, zero_orbit(t, levi.residual_rank), levi.gl_blocks);
      if (!(induced == o)) out.fail(o.to_string() + " induced " + induced.to_string());
      std::vector<Rational> rho_l;
      for (int k : levi.gl_blocks)
        for (const auto& x : rho_gl(k)) rho_l.push_back(x);
      const InfChar residual = rho(t, levi.residual_rank);
      for (const auto& x : residual.entries()) rho_l.push_back(x);
      const auto got = infchar(o).value;
      if (!infchar_equal(got, InfChar(t, rho_l)))
        out.fail(o.to_string() + " infchar " + str(got.canonical()) + " vs rho_L " + str(rho_l));
      ++checked;
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " triangular orbits";
  return out;
}

Outcome consistency() {
  Outcome out;
  long checks = 0;
  for (auto t : {T::B, T::C, T::D}) {
    for (int n = 1; n <= kConsistencyRank; ++n) {
      const auto r = consistency_report(t, n);
      checks += r.check_count();
      for (const auto& d : r.discrepancies) out.fail(d);
      for (const auto& e : r.exceptions) out.fail("exception " + e);
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " checks, 0 discrepancies, 0 exceptions";
  return out;
}

Outcome sweeps() {
  Outcome out;
  long cases = 0;
  for (auto t : {T::A, T::B, T::C, T::D}) {
    for (int size = 1; size <= kCollapseSize; ++size) {
      const auto r = check_collapse(t, size);
      cases += r.cases.front().witness.value("inputs", 0L);
      if (!r.passed()) out.fail("collapse " + to_string(t) + " size " + std::to_string(size));
    }
    const auto s = check_stage_independence(t, kStageRank, kStageRank);
    cases += s.cases.front().witness.value("orderings", 0L);
    if (!s.passed()) out.fail("stage independence " + to_string(t));
  }
  for (auto t : {T::B, T::C, T::D})
    for (int n = 1; n <= kDualityRank; ++n) {
      const auto d = check_duality(t, n);
      cases += d.cases.front().witness.value("ordered_pairs", 0L);
      if (!d.passed()) out.fail("duality " + to_string(t) + std::to_string(n));
    }
  if (enumerate_orbits(T::B, 2).size() != 4) out.fail("B2 orbit count");
  if (enumerate_orbits(T::C, 2).size() != 4) out.fail("C2 orbit count");
  if (out.pass) out.detail = std::to_string(cases) + " cases";
  return out;
}

Outcome hilbert() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  OracleConfig cfg;
  cfg.tolerance = kOracleTolerance;
  OracleConfig other = cfg;
  other.seed = cfg.seed + 1000;
  const std::vector<std::pair<OrbitDescriptor, std::vector<std::int64_t>>> cases = {
      {make_orbit(T::A, 1, {2}), {1, 3, 5, 7}},
      {make_orbit(T::A, 2, {2, 1}), {1, 8, 27}},
  };
  try {
    for (const auto& [orbit, expected] : cases) {
      HilbertOracle a(orbit, cfg), b(orbit, other);
      for (std::size_t d = 0; d < expected.size(); ++d) {
        const auto ha = a.hilbert(static_cast<int>(d));
        const auto hb = b.hilbert(static_cast<int>(d));
        if (ha != expected[d])
          out.fail(orbit.to_string() + " degree " + std::to_string(d) + " got " + std::to_string(ha));
        if (ha != hb) out.fail(orbit.to_string() + " seeds disagree at degree " + std::to_string(d));
      }
    }
  } catch (const std::exception& e) {
    out.fail(e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > kOracleRuntimeSeconds) out.fail("runtime " + std::to_string(seconds) + " s");
  if (out.pass) {
    std::ostringstream os;
    os.precision(3);
    os << "1,3,5,7 and 1,8,27; dual seeds agree; " << seconds << " s";
    out.detail = os.str();
  }
  return out;
}

Outcome richardson() {
  Outcome out;
  OracleConfig cfg;
  cfg.tolerance = kOracleTolerance;
  for (const auto& o : {principal_orbit(T::A, 1), make_orbit(T::A, 2, {2, 1})}) {
    const auto r = check_richardson_typeA(o, kWeightDimBound, kOracleDegree, cfg);
    if (!r.passed()) out.fail(o.to_string() + " has " + std::to_string(r.count("fail")) + " failing cases");
    if (o.rank == 2) {
      bool found = false;
      for (const auto& c : r.cases) {
        if (c.name != "mu=(1,0,-1)") continue;
        found = true;
        if (c.witness["induced_multiplicity"] != 1 || c.witness["oracle_multiplicity"] != 1)
          out.fail("adjoint multiplicities " + c.witness.dump());
      }
      if (!found) out.fail("adjoint case missing");
    }
  }
  if (out.pass) out.detail = "gl(2) principal, gl(3) minimal; adjoint 1 = 1";
  return out;
}

Outcome prop55() {
  Outcome out;
  std::size_t type_a = 0;
  for (const auto& d : prop55_typeA_cases(kTypeAProp55Size)) {
    const auto r = check_prop55(d, kWeightDimBound);
    type_a += r.cases.size();
    if (!r.passed()) out.fail("type A " + d.to_string());
  }
  OracleConfig cfg;
  cfg.tolerance = kOracleTolerance;
  const Prop55Data b2{T::B, 2, {Partition{1, 1}}, make_orbit(T::B, 0, {1}), true};
  try {
    const auto r = check_prop55(b2, kWeightDimBound, kOracleDegree, cfg);
    for (const auto& c : r.cases) {
      if (!c.witness.contains("levi_multiplicity") || !c.witness.value("certified", false)) continue;
      const auto lhs = c.witness["levi_multiplicity"].get<std::int64_t>();
      const auto rhs = c.witness["partial_orbit_multiplicity"].get<std::int64_t>();
      if (lhs > rhs)
        out.fail("B2 " + c.name + ": LHS " + std::to_string(lhs) + " > partial RHS " + std::to_string(rhs) +
                 " at D=3 (oracle sees the trivial isotypic part only; A(O)=Z/2)");
    }
  } catch (const std::exception& e) {
    out.fail(std::string("B2 numeric branch error: ") + e.what());
  }
  if (out.pass) out.detail = std::to_string(type_a) + " type-A comparisons exact; B2 bound holds";
  return out;
}

}  // namespace


int main(int argc, char** argv) {
  std::set<int> expected_fail;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) expected_fail.insert(std::stoi(item));
    } else {
      std::cerr << "usage: norbit_acceptance [--expect-fail 1,7]\n";
      return 1;
    }
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"infinitesimal-character table", infchar_table},
      {"triangular consistency", triangular},
      {"consistency report", consistency},
      {"combinatorial sweeps", sweeps},
      {"Hilbert oracle", hilbert},
      {"Richardson equality", richardson},
      {"induced multiplicity bound", prop55},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("error: ") + e.what());
    }
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << criteria[i].first << ": " << o.detail << '\n';
  }
  std::cout << criteria.size() - failed.size() << "/" << criteria.size() << " criteria pass\n";
  if (failed.empty()) return 0;
  if (failed == expected_fail) {
    std::cout << "failing criteria match the documented deviations\n";
    return 0;
  }
  return 1;
}
