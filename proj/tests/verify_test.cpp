#include <doctest.h>

#include "norbit/error.hpp"
#include "norbit/oracle.hpp"
#include "norbit/verify.hpp"

using namespace norbit;
using T = ClassicalType;

namespace {

OrbitDescriptor orb(T t, int n, Partition p) { return make_orbit(t, n, std::move(p)); }

const CaseResult* find_case(const VerifyReport& r, const std::string& name) {
  for (const auto& c : r.cases)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("oracle config validation") {
    OracleConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.tolerance = 1e-3;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.tolerance = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
  }

  TEST_CASE("Hilbert functions of small orbit closures") {
    const std::int64_t cone[] = {1, 3, 5, 7};
    for (int d = 0; d <= 3; ++d) CHECK(hilbert_oracle(orb(T::A, 1, {2}), d) == cone[d]);
    HilbertOracle minimal(orb(T::A, 2, {2, 1}));
    CHECK(minimal.coordinate_count() == 9);
    CHECK(minimal.hilbert(0) == 1);
    CHECK(minimal.hilbert(1) == 8);
    CHECK(minimal.hilbert(2) == 27);
    CHECK(minimal.hilbert(3) == 64);
    HilbertOracle regular(orb(T::A, 2, {3}));
    CHECK(regular.hilbert(2) == 35);
    CHECK(regular.hilbert(3) == 111);
    for (int d = 1; d <= 3; ++d) CHECK(hilbert_oracle(zero_orbit(T::A, 2), d) == 0);
    HilbertOracle b2(orb(T::B, 2, {3, 1, 1}));
    CHECK(b2.hilbert(2) == 49);
    CHECK(b2.hilbert(3) == 165);
    CHECK(hilbert_oracle(orb(T::B, 2, {2, 2, 1}), 3) == 84);
  }

  TEST_CASE("graded decomposition") {
    HilbertOracle oracle(orb(T::B, 2, {3, 1, 1}));
    const auto piece = oracle.piece(2);
    REQUIRE(piece.decomposition.size() == 2);
    CHECK(piece.decomposition[0].second == 1);
    CHECK(piece.samples >= piece.monomials);
  }

  TEST_CASE("oracle is seed independent") {
    OracleConfig a, b;
    a.seed = 7;
    b.seed = 99;
    for (int d = 0; d <= 3; ++d) CHECK(hilbert_oracle(orb(T::A, 2, {2, 1}), d, a) == hilbert_oracle(orb(T::A, 2, {2, 1}), d, b));
  }

  TEST_CASE("oracle bounds") {
    OracleConfig cfg;
    cfg.max_monomials = 50;
    CHECK_THROWS_AS(hilbert_oracle(orb(T::A, 2, {2, 1}), 3, cfg), Error);
  }

  TEST_CASE("Hilbert report with expectations") {
    const auto ok = check_hilbert(orb(T::A, 1, {2}), 3, {}, {1, 3, 5, 7});
    CHECK(ok.passed());
    CHECK(ok.count("fail") == 0);
    const auto bad = check_hilbert(orb(T::A, 1, {2}), 2, {}, {1, 3, 6});
    CHECK_FALSE(bad.passed());
    CHECK(bad.to_json()["status"] == "fail");
  }

  TEST_CASE("Richardson equality in type A") {
    const auto minimal = check_richardson_typeA(orb(T::A, 2, {2, 1}));
    CHECK(minimal.passed());
    const auto* adjoint = find_case(minimal, "mu=(1,0,-1)");
    REQUIRE(adjoint != nullptr);
    CHECK(adjoint->status == "pass");
    CHECK(adjoint->witness["induced_multiplicity"] == 1);
    CHECK(adjoint->witness["oracle_multiplicity"] == 1);
    CHECK(check_richardson_typeA(principal_orbit(T::A, 1)).passed());
    CHECK(check_richardson_typeA(zero_orbit(T::A, 2)).passed());
    for (const auto& o : enumerate_orbits(T::A, 3)) CHECK(check_richardson_typeA(o, 100, 2).passed());
    CHECK_THROWS_AS(check_richardson_typeA(orb(T::B, 2, {3, 1, 1})), Error);
  }

  TEST_CASE("induced multiplicities in type A are exact") {
    const auto cases = prop55_typeA_cases(4);
    CHECK(cases.size() == 1 + 3 + 6 + 15);
    for (const auto& d : cases) CHECK(check_prop55(d, 200).passed());
    Prop55Data torus{T::A, 2, {Partition{1}, Partition{1}, Partition{1}}, std::nullopt, true};
    CHECK(torus.induced() == principal_orbit(T::A, 2));
    const auto r = check_prop55(torus);
    CHECK(r.passed());
    CHECK(r.cases.front().witness["levi_multiplicity"] == 1);
  }

  TEST_CASE("numeric branch in B2") {
    Prop55Data small{T::B, 2, {Partition{1}}, orb(T::B, 1, {1, 1, 1}), true};
    CHECK(small.induced() == orb(T::B, 2, {3, 1, 1}));
    CHECK(check_prop55(small).passed());

    // Ind from gl(2) contains the 5-dimensional representation; C[closure] does
    // not, and A(O) = Z/2 leaves the comparison undecided.
    Prop55Data big{T::B, 2, {Partition{1, 1}}, orb(T::B, 0, {1}), true};
    const auto r = check_prop55(big);
    CHECK(r.parameters["component_group_order"] == 2);
    const auto* vector_rep = find_case(r, "mu=(1,0)");
    REQUIRE(vector_rep != nullptr);
    CHECK(vector_rep->witness["levi_multiplicity"] == 1);
    CHECK(vector_rep->witness["partial_orbit_multiplicity"] == 0);
    CHECK(vector_rep->witness["certified"] == true);
    CHECK(vector_rep->status == "uncertified");

    big.psi_trivial = false;
    CHECK_THROWS_AS(check_prop55(big), Error);
    Prop55Data nonzero{T::B, 3, {Partition{1}}, orb(T::B, 2, {3, 1, 1}), true};
    CHECK_THROWS_AS(check_prop55(nonzero), Error);
  }

  TEST_CASE("combinatorial sweeps") {
    for (auto t : {T::A, T::B, T::C, T::D}) {
      CHECK(check_stage_independence(t, 4, 4).passed());
      CHECK(check_collapse(t, 10).passed());
      CHECK(check_collapse(t, 9).passed());
    }
    for (auto t : {T::B, T::C, T::D}) CHECK(check_duality(t, 4).passed());
    const auto r = check_collapse(T::B, 11);
    CHECK(r.cases.front().witness["inputs"] == 56);
  }

  TEST_CASE("reports serialize") {
    const auto j = check_duality(T::C, 3).to_json();
    CHECK(j["check"] == "duality");
    CHECK(j["status"] == "pass");
    CHECK(j["cases"].is_array());
    CHECK(j["cases"][0].contains("witness"));
  }
}
