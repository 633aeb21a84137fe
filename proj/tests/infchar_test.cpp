#include <doctest.h>

#include "norbit/error.hpp"
#include "norbit/infchar.hpp"

using namespace norbit;
using T = ClassicalType;

namespace {

OrbitDescriptor orb(T t, int n, Partition p, std::optional<VeryEvenLabel> l = std::nullopt) {
  return make_orbit(t, n, std::move(p), l);
}

std::vector<Rational> q(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(Rational::parse(x));
  return out;
}

std::vector<Rational> lambda(const OrbitDescriptor& o) { return infchar(o).value.canonical(); }

}  // namespace

TEST_SUITE("infchar") {
  TEST_CASE("rho") {
    CHECK(rho(T::B, 2).entries() == q({"3/2", "1/2"}));
    CHECK(rho(T::C, 2).entries() == q({"2", "1"}));
    CHECK(rho(T::D, 4).entries() == q({"3", "2", "1", "0"}));
    CHECK(rho(T::A, 2).entries() == q({"1", "0", "-1"}));
    CHECK(rho_gl(2) == q({"1/2", "-1/2"}));
  }

  TEST_CASE("canonical forms") {
    CHECK(InfChar(T::B, q({"-1/2", "3/2"})).canonical() == q({"3/2", "1/2"}));
    CHECK(InfChar(T::D, q({"-1", "2"})).canonical() == q({"2", "-1"}));
    CHECK(InfChar(T::D, q({"-1", "-2"})).canonical() == q({"2", "1"}));
    CHECK(InfChar(T::D, q({"-1", "0"})).canonical() == q({"1", "0"}));
    CHECK(InfChar(T::A, q({"-1", "1", "0"})).canonical() == q({"1", "0", "-1"}));
    CHECK(InfChar(T::D, q({"1", "-2"})).d_sign_parity() == false);
    CHECK_FALSE(InfChar(T::D, q({"1", "0"})).d_sign_parity().has_value());
    CHECK(infchar_equal(InfChar(T::C, q({"1", "-2"})), InfChar(T::C, q({"2", "1"}))));
    CHECK_FALSE(infchar_equal(InfChar(T::D, q({"1", "-2"})), InfChar(T::D, q({"2", "1"}))));
  }

  TEST_CASE("table of values") {
    CHECK(lambda(orb(T::B, 2, {3, 1, 1})) == q({"1/2", "1/2"}));
    CHECK(lambda(orb(T::B, 3, {3, 3, 1})) == q({"1/2", "1/2", "1/2"}));
    CHECK(lambda(orb(T::B, 3, {3, 2, 2})) == q({"1", "1", "0"}));
    CHECK(lambda(orb(T::B, 2, {5})) == q({"0", "0"}));
    CHECK(lambda(orb(T::C, 2, {2, 2})) == q({"1", "0"}));
    CHECK(lambda(orb(T::C, 4, {4, 4})) == q({"1", "1/2", "1/2", "0"}));
    CHECK(lambda(orb(T::C, 4, {4, 2, 1, 1})) == q({"2", "1", "0", "0"}));
    CHECK(lambda(orb(T::C, 2, {1, 1, 1, 1})) == q({"2", "1"}));
    CHECK(lambda(orb(T::B, 2, {2, 2, 1})) == q({"1", "1/2"}));
    CHECK(lambda(orb(T::C, 2, {2, 1, 1})) == q({"3/2", "1/2"}));
    CHECK(lambda(orb(T::A, 2, {2, 1})) == q({"1/2", "0", "-1/2"}));
    for (int n = 0; n <= 4; ++n) CHECK(lambda(zero_orbit(T::A, n)) == rho(T::A, n).entries());
  }

  TEST_CASE("D(3,3,1,1) is special with even dual and takes half its dual's h") {
    const auto o = orb(T::D, 4, {3, 3, 1, 1});
    CHECK(even_dual_applies(o));
    CHECK(infchar(o).rule == InfCharRule::EvenDual);
    CHECK(lambda(o) == q({"1", "1", "0", "0"}));
    CHECK(recipe_infchar(o, PairingMode::Uniform).canonical() == q({"1", "1/2", "1/2", "0"}));
  }

  TEST_CASE("very even labels give distinct characters") {
    CHECK(lambda(orb(T::D, 4, {4, 4}, VeryEvenLabel::I)) == q({"1/2", "1/2", "1/2", "1/2"}));
    CHECK(lambda(orb(T::D, 4, {4, 4}, VeryEvenLabel::II)) == q({"1/2", "1/2", "1/2", "-1/2"}));
  }

  TEST_CASE("pairing modes") {
    CHECK(recipe_infchar(orb(T::C, 3, {2, 2, 2}), PairingMode::Parity).canonical() == q({"1", "1", "0"}));
    CHECK(recipe_infchar(orb(T::C, 3, {2, 2, 2}), PairingMode::Literal).canonical() == q({"3/2", "1/2", "1/2"}));
    CHECK(recipe_infchar(orb(T::C, 2, {4}), PairingMode::Literal).canonical() == q({"1/2", "0"}));
    CHECK(recipe_infchar(orb(T::B, 2, {3, 1, 1}), PairingMode::Uniform).canonical() == q({"1/2", "0"}));
    CHECK(parse_pairing_mode("literal") == PairingMode::Literal);
    CHECK_THROWS_AS(parse_pairing_mode("other"), Error);
  }

  TEST_CASE("recipe trace") {
    RecipeTrace trace;
    recipe_infchar(orb(T::D, 4, {3, 3, 1, 1}), PairingMode::Parity, &trace);
    CHECK(trace.columns == std::vector<int>{4, 2, 2});
    CHECK(trace.padded == std::vector<int>{4, 2, 2, 0});
    CHECK(trace.steps.size() >= 2);
    CHECK(trace.raw.size() == 4);
    CHECK_FALSE(trace.to_text().empty());
  }

  TEST_CASE("consistency reports are clean") {
    for (auto t : {T::A, T::B, T::C, T::D}) {
      for (int n = 1; n <= 5; ++n) {
        const auto report = consistency_report(t, n);
        INFO(to_string(t) << n);
        CHECK(report.discrepancies.empty());
        CHECK(report.exceptions.empty());
        CHECK(report.check_count() > 0);
      }
    }
    CHECK_THROWS_AS(consistency_report(T::B, 9), Error);
  }

  TEST_CASE("property: triangular characters are rho of the Levi") {
    for (auto t : {T::B, T::C, T::D}) {
      for (int m = 1; m <= 4; ++m) {
        const auto o = make_orbit(t, triangular_rank(t, m), triangular_partition(t, m));
        const auto levi = triangular_levi(o).levi;
        std::vector<Rational> expected;
        for (int k : levi.gl_blocks)
          for (const auto& x : rho_gl(k)) expected.push_back(x);
        const InfChar residual = rho(t, levi.residual_rank);
        for (const auto& x : residual.entries()) expected.push_back(x);
        INFO(o.to_string());
        CHECK(infchar_equal(infchar(o).value, InfChar(t, expected)));
      }
    }
  }

  TEST_CASE("property: even-dual values are dominant halves of h") {
    for (auto t : {T::B, T::C, T::D}) {
      for (int n = 1; n <= 6; ++n) {
        for (const auto& o : enumerate_orbits(t, n)) {
          const auto r = infchar(o);
          CHECK(r.value.size() == static_cast<std::size_t>(n));
          if (r.rule != InfCharRule::EvenDual) continue;
          const auto h = dynkin_h(bv_dual(o));
          std::vector<Rational> half;
          for (int x : h) half.push_back(Rational(x, 2));
          CHECK(infchar_equal(r.value, InfChar(t, half)));
        }
      }
    }
  }
}
