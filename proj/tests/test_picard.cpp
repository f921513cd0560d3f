#include <gtest/gtest.h>

#include <random>

#include "zcover/picard.hpp"

using zcover::GroupElement;
using zcover::GroupSpec;
using zcover::SurfaceClass;

namespace {

// Z^3 + (Z/2)^2, as in the n = 1 family model.
const GroupSpec spec(3, {2, 2});

GroupElement pic(std::vector<std::int64_t> f, std::vector<std::int64_t> t) { return GroupElement(spec, f, t); }
SurfaceClass cls(std::int64_t a, std::int64_t d, GroupElement p) { return {a, {d, std::move(p)}}; }
SurfaceClass cls(std::int64_t a, std::int64_t d) { return cls(a, d, GroupElement(spec)); }

const auto eta1 = pic({0, 0, 0}, {1, 0});
const auto sigma_g = pic({1, 4, -2}, {0, 0});

}  // namespace

TEST(Picard, ClassAdd) {
  const int n = 3;
  EXPECT_EQ(cls(3, n, sigma_g) + SurfaceClass::canonical(spec), cls(1, n, sigma_g));
  const auto u = cls(4, -2, sigma_g);
  EXPECT_EQ(u + SurfaceClass::zero(spec), u);
  EXPECT_EQ(cls(1, 0, eta1) + cls(1, 0, eta1), cls(2, 0));
}

TEST(Picard, ClassAddRejectsOtherGroups) {
  const SurfaceClass other = SurfaceClass::zero(GroupSpec(1, {}));
  EXPECT_THROW(cls(1, 1) + other, zcover::ShapeError);
}

TEST(Picard, Intersect) {
  EXPECT_EQ(zcover::intersect(SurfaceClass::elliptic_fiber(spec), SurfaceClass::rational_fiber(sigma_g)), 1);
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(zcover::intersect(cls(2, 2 * n), cls(2, 2 * n)), 8 * n);
    EXPECT_EQ(zcover::intersect(cls(1, n, sigma_g), cls(1, n, sigma_g)), 2 * n);
  }
}

TEST(Picard, H0) {
  EXPECT_EQ(zcover::h0(cls(1, 3, sigma_g)), 6);
  EXPECT_EQ(zcover::h0(cls(0, 0, eta1)), 0);
  EXPECT_EQ(zcover::h0(cls(0, 0)), 1);
  EXPECT_EQ(zcover::h0(cls(-1, 3, sigma_g)), 0);
  EXPECT_EQ(zcover::h0(cls(2, -1)), 0);
}

TEST(Picard, BasePointFree) {
  for (int n = 2; n <= 6; ++n) EXPECT_TRUE(zcover::is_base_point_free(cls(1, n, sigma_g)));
  EXPECT_TRUE(zcover::is_base_point_free(cls(0, 0)));
  // a degree-1 system on an elliptic curve has a single section vanishing at one point
  EXPECT_FALSE(zcover::is_base_point_free(cls(2, 1, sigma_g)));
  EXPECT_THROW(zcover::is_base_point_free(cls(0, 0, eta1)), zcover::PreconditionError);
}

TEST(Picard, MapAnalysis) {
  const auto r3 = zcover::map_analysis(cls(1, 3, sigma_g));
  EXPECT_EQ(r3.image_dim, 2);
  EXPECT_EQ(r3.map_degree, 1);
  EXPECT_EQ(r3.image_degree, 6);

  const auto r2 = zcover::map_analysis(cls(1, 2, sigma_g));
  EXPECT_EQ(r2.image_dim, 2);
  EXPECT_EQ(r2.map_degree, 2);
  EXPECT_EQ(r2.image_degree, 2);

  const auto curve = zcover::map_analysis(cls(0, 3, sigma_g));
  EXPECT_EQ(curve.image_dim, 1);
  EXPECT_FALSE(curve.map_degree.has_value());
  EXPECT_FALSE(curve.image_degree.has_value());

  EXPECT_EQ(zcover::map_analysis(cls(0, 0)).image_dim, 0);
  EXPECT_EQ(zcover::map_analysis(cls(3, 1, sigma_g)).image_dim, 1);
  EXPECT_THROW(zcover::map_analysis(cls(-1, 3)), zcover::PreconditionError);
}

TEST(PicardProperties, RandomClasses) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d(-6, 6);
  auto random_class = [&] { return cls(d(rng), d(rng), pic({d(rng), d(rng), d(rng)}, {d(rng), d(rng)})); };
  const auto ky = SurfaceClass::canonical(spec);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto u = random_class(), v = random_class(), w = random_class();
    EXPECT_EQ(zcover::intersect(u, v), zcover::intersect(v, u));
    EXPECT_EQ(zcover::intersect(u + v, w), zcover::intersect(u, w) + zcover::intersect(v, w));

    if (u.a < 0 || u.c.degree < 0) { EXPECT_EQ(zcover::h0(u), 0); }
    if (u.a >= 0 && u.c.degree >= 1) {
      EXPECT_EQ(zcover::h0(u), (u.a + 1) * u.c.degree);
      // Riemann-Roch on Y with chi(O_Y) = 0: chi(u) = u.(u - K_Y) / 2, and higher
      // cohomology vanishes in this range.
      const auto twice = zcover::intersect(u, u - ky);
      EXPECT_EQ(twice % 2, 0);
      EXPECT_EQ(twice / 2, zcover::h0(u));
    }
    if (zcover::h0(u) > 0) {
      const auto m = zcover::map_analysis(u);
      if (m.image_dim == 2) { EXPECT_EQ(*m.map_degree * *m.image_degree, zcover::intersect(u, u)); }
    }
  }
}
