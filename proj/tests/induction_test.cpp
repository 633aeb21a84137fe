#include <doctest.h>

#include "norbit/error.hpp"
#include "norbit/induction.hpp"
#include "norbit/verify.hpp"

using namespace norbit;
using T = ClassicalType;

namespace {

OrbitDescriptor orb(T t, int n, Partition p, std::optional<VeryEvenLabel> l = std::nullopt) {
  return make_orbit(t, n, std::move(p), l);
}

OrbitDescriptor induce_blocks(T t, int n, const OrbitDescriptor& base, std::vector<int> blocks) {
  return induce(t, n, base, blocks);
}

}  // namespace

TEST_SUITE("induction") {
  TEST_CASE("Richardson orbits in rank 2") {
    CHECK(induce_blocks(T::B, 2, orb(T::B, 0, {1}), {2}) == orb(T::B, 2, {3, 1, 1}));
    CHECK(induce_blocks(T::B, 2, orb(T::B, 1, {1, 1, 1}), {1}) == orb(T::B, 2, {3, 1, 1}));
    CHECK(induce_blocks(T::B, 2, orb(T::B, 0, {1}), {1, 1}) == orb(T::B, 2, {5}));
    CHECK(induce_blocks(T::C, 2, orb(T::C, 0, {}), {2}) == orb(T::C, 2, {2, 2}));
    CHECK(induce_blocks(T::C, 2, orb(T::C, 1, {1, 1}), {1}) == orb(T::C, 2, {2, 2}));
    CHECK(induce_blocks(T::C, 2, orb(T::C, 0, {}), {1, 1}) == orb(T::C, 2, {4}));
  }

  TEST_CASE("non-zero data and labels") {
    CHECK(induce_blocks(T::B, 3, orb(T::B, 2, {3, 1, 1}), {1}) == orb(T::B, 3, {5, 1, 1}));
    CHECK(induce_blocks(T::D, 4, orb(T::D, 2, {2, 2}, VeryEvenLabel::II), {2}) ==
          orb(T::D, 4, {4, 4}, VeryEvenLabel::II));
    CHECK(induce_blocks(T::D, 4, orb(T::D, 0, {}), {4}) == orb(T::D, 4, {2, 2, 2, 2}, VeryEvenLabel::I));
    const Partition gl[] = {Partition{2, 2}};
    CHECK(induce_general(T::D, 4, orb(T::D, 0, {}), gl) == orb(T::D, 4, {4, 4}, VeryEvenLabel::I));
    CHECK_THROWS_AS(induce_blocks(T::B, 3, orb(T::B, 2, {3, 1, 1}), {2}), Error);
  }

  TEST_CASE("type A induction concatenates duals") {
    const Partition ones[] = {Partition{1}, Partition{1}, Partition{1}};
    CHECK(induce_type_a(ones) == orb(T::A, 2, {3}));
    const Partition mixed[] = {Partition{1, 1}, Partition{1}};
    CHECK(induce_type_a(mixed) == orb(T::A, 2, {2, 1}));
    const Partition nonzero[] = {Partition{2}, Partition{1, 1}};
    CHECK(induce_type_a(nonzero) == orb(T::A, 3, {3, 1}));
  }

  TEST_CASE("inducing presentations and cuspidality") {
    CHECK(is_cuspidal(orb(T::B, 2, {2, 2, 1})));
    CHECK_FALSE(is_cuspidal(orb(T::B, 2, {3, 1, 1})));
    CHECK(is_cuspidal(zero_orbit(T::C, 3)));
    CHECK(inducing_presentations(orb(T::C, 3, {4, 2})).size() == 4);
    CHECK(inducing_presentations(orb(T::D, 4, {4, 4}, VeryEvenLabel::II)).size() == 2);
    CHECK_THROWS_AS(is_cuspidal(zero_orbit(T::B, 7)), Error);
    CHECK_NOTHROW(is_cuspidal(zero_orbit(T::B, 7), 7));
    for (const auto& o : enumerate_orbits(T::B, 4))
      for (const auto& p : inducing_presentations(o)) {
        if (!p.base) continue;
        CHECK(induce_general(T::B, 4, *p.base, p.gl_orbits) == o);
      }
  }

  TEST_CASE("completion to triangular orbits") {
    const auto b = complete_to_triangular(orb(T::B, 0, {1}), 12);
    REQUIRE(b.completion);
    CHECK(b.completion->blocks == std::vector<int>{2});
    CHECK(b.completion->triangular == orb(T::B, 2, {3, 1, 1}));

    const auto d = complete_to_triangular(orb(T::D, 3, {2, 2, 1, 1}), 12);
    REQUIRE(d.completion);
    CHECK(d.completion->blocks == std::vector<int>{1});
    CHECK(d.completion->triangular == orb(T::D, 4, {3, 3, 1, 1}));

    const auto z = complete_to_triangular(zero_orbit(T::D, 3), 12);
    REQUIRE(z.completion);
    CHECK(z.completion->blocks == std::vector<int>{4, 2});
    CHECK(z.completion->triangular.partition == Partition{5, 5, 3, 3, 1, 1});

    const auto already = complete_to_triangular(orb(T::C, 2, {2, 2}), 12);
    REQUIRE(already.completion);
    CHECK(already.completion->blocks.empty());

    const auto none = complete_to_triangular(orb(T::B, 3, {5, 1, 1}), 12);
    CHECK_FALSE(none.completion);
    CHECK(none.candidates_tried == 271);
    CHECK_FALSE(none.diagnostic.empty());

    CHECK_THROWS_AS(complete_to_triangular(orb(T::B, 2, {2, 2, 1}), 12), Error);
    CHECK_THROWS_AS(complete_to_triangular(orb(T::A, 2, {2, 1}), 12), Error);
  }

  TEST_CASE("property: triangular Levis induce the triangular orbits") {
    for (auto t : {T::B, T::C, T::D}) {
      for (int m = 1; m <= 4; ++m) {
        const auto target = make_orbit(t, triangular_rank(t, m), triangular_partition(t, m));
        const auto levi = triangular_levi(target).levi;
        const auto base = zero_orbit(t, levi.residual_rank);
        CHECK(induce(t, target.rank, base, levi.gl_blocks) == target);
      }
    }
  }

  TEST_CASE("property: induction in stages") {
    for (auto t : {T::A, T::B, T::C, T::D}) CHECK(check_stage_independence(t, 5, 5).passed());
  }
}
