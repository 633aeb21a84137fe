#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "norbit/oracle.hpp"
#include "norbit/orbit.hpp"

namespace norbit {

/// One verified case. Status is "pass", "fail", or "uncertified" (a
/// comparison the configured degree bound cannot decide).
struct CaseResult {
  std::string name;
  std::string status;
  nlohmann::json witness;
};

struct VerifyReport {
  std::string check;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<CaseResult> cases;

  std::size_t count(std::string_view status) const;
  /// No case failed.
  bool passed() const;
  nlohmann::json to_json() const;
};

/// Compares [mu : Ind_P^G triv] with the multiplicity of mu in the oracle's
/// graded coordinate ring through `degree`, for every dominant gl weight mu
/// of trace 0 with dim at most `dim_bound`. P has Levi blocks given by the
/// transpose of the orbit's partition. A comparison is certified when
/// <mu, rho^vee> <= degree, the top degree in which mu can occur.
VerifyReport check_richardson_typeA(const OrbitDescriptor& orbit, std::int64_t dim_bound = 200, int degree = 3,
                                    const OracleConfig& cfg = {});

/// Inducing data for the multiplicity inequality: a Levi M and an orbit on
/// it, given by one partition per gl block and a residual orbit.
struct Prop55Data {
  ClassicalType type = ClassicalType::A;
  int rank = 0;
  std::vector<Partition> gl_orbits;
  /// Residual orbit (types B, C, D); nullopt for type A.
  std::optional<OrbitDescriptor> base;
  /// Only the trivial character of the component group is supported.
  bool psi_trivial = true;

  LeviShape levi() const;
  OrbitDescriptor induced() const;
  std::string to_string() const;
};

/// Type A: exact comparison of [mu|_M : R(O_m)] with [mu : R(O)]; equality
/// is required. Other types need O_m = 0 and compare [mu|_M : triv] with the
/// oracle's graded multiplicities through `degree`. Throws
/// ErrorKind::Unsupported for a nontrivial character.
VerifyReport check_prop55(const Prop55Data& data, std::int64_t dim_bound = 200, int degree = 3,
                          const OracleConfig& cfg = {});

/// Every inducing datum in gl(N) for 1 <= N <= max_size: all block
/// compositions in decreasing order with every orbit on each block.
std::vector<Prop55Data> prop55_typeA_cases(int max_size);

/// Inducing one block at a time in every order agrees with inducing at once.
VerifyReport check_stage_independence(ClassicalType t, int n, int block_bound);

/// bv_dual maps specials bijectively onto the specials of the dual type and
/// reverses the closure order; every image is special.
VerifyReport check_duality(ClassicalType t, int n);

/// Greedy collapse equals the brute-force dominance maximum.
VerifyReport check_collapse(ClassicalType t, int size);

/// Hilbert function and graded decomposition of an orbit closure, with the
/// reassembly check sum(mult * dim) = hilbert(d).
VerifyReport check_hilbert(const OrbitDescriptor& orbit, int max_degree, const OracleConfig& cfg = {},
                           const std::vector<std::int64_t>& expected = {});

}  // namespace norbit
