#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcx/fan.hpp"
#include "dcx/random.hpp"

using namespace dcx;

namespace {

VecZ zv(std::initializer_list<long> xs) {
  VecZ v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v[i++] = Int(x);
  return v;
}

LatticeSet set_of(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<VecZ> v;
  for (const auto& p : pts) v.push_back(zv(p));
  return LatticeSet(std::move(v));
}

RatPolytope segment_through(const VecZ& r) {
  std::vector<VecZ> ends{r, VecZ(-r)};
  return hull(LatticeSet(ends));
}

RatPolytope zonotope_of(const std::vector<VecZ>& lines) {
  RatPolytope z = segment_through(lines.front());
  for (size_t i = 1; i < lines.size(); ++i) z = minkowski_sum(z, segment_through(lines[i]));
  return z;
}

const std::vector<VecZ> kA2 = {zv({1, 0}), zv({0, 1}), zv({1, -1})};

}  // namespace

TEST_CASE("normal fan of the unit square: quadrants, rays, origin") {
  RatPolytope p = hull(set_of({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  Fan f = normal_fan(p);
  CHECK(f.ambient_rank() == 2);
  CHECK(f.cones().size() == faces(p).size());

  int by_dim[3] = {0, 0, 0};
  for (const Cone& c : f.cones()) {
    REQUIRE(c.dim <= 2);
    ++by_dim[c.dim];
    CHECK(c.pointed());
    CHECK(rank_of(c.rays) == c.dim);
  }
  CHECK(by_dim[0] == 1);
  CHECK(by_dim[1] == 4);
  CHECK(by_dim[2] == 4);

  auto maximal = f.maximal_cones();
  REQUIRE(maximal.size() == 4);
  MatZ quadrant(2, 2);
  quadrant << 0, 1, 1, 0;  // columns e2, e1 after lex sort
  Cone expected{MatZ(2, 0), quadrant, 2};
  CHECK(std::count(maximal.begin(), maximal.end(), expected) == 1);
}

TEST_CASE("normal fan of a one-dimensional polytope in the line") {
  std::vector<VecZ> pts{zv({0}), zv({1})};
  Fan f = normal_fan(hull(LatticeSet(pts)));
  CHECK(f.cones().size() == 3);
  CHECK(f.maximal_cones().size() == 2);
}

TEST_CASE("normal fan rejects lower-dimensional polytopes") {
  CHECK_THROWS_AS(normal_fan(hull(set_of({{0, 0}, {1, 1}}))), std::invalid_argument);
}

TEST_CASE("three central mirrors in the plane cut six chambers and six walls") {
  ChamberComplex cc = central_chambers(kA2, 2);
  CHECK(cc.mirrors.size() == 3);
  CHECK(cc.chambers.size() == 6);
  CHECK(cc.walls.size() == 6);
  for (const auto& w : cc.walls) {
    CHECK(w.cone.dim == 1);
    const VecZ& m = cc.mirrors[static_cast<size_t>(w.mirror)];
    for (Index j = 0; j < w.cone.rays.cols(); ++j)
      CHECK((m.transpose() * w.cone.rays.col(j))(0, 0) == 0);
    CHECK(cc.signs[static_cast<size_t>(w.plus)][static_cast<size_t>(w.mirror)] == 1);
    CHECK(cc.signs[static_cast<size_t>(w.minus)][static_cast<size_t>(w.mirror)] == -1);
  }
  for (const Cone& c : cc.chambers) {
    CHECK(c.dim == 2);
    CHECK(c.pointed());
    CHECK(c.rays.cols() == 2);
  }
}

TEST_CASE("chamber sign vectors certify their chambers") {
  ChamberComplex cc = central_chambers(kA2, 2);
  for (size_t c = 0; c < cc.chambers.size(); ++c)
    for (size_t i = 0; i < cc.mirrors.size(); ++i)
      for (Index j = 0; j < cc.chambers[c].rays.cols(); ++j) {
        Int dot = (cc.mirrors[i].transpose() * cc.chambers[c].rays.col(j))(0, 0);
        CHECK(Int(cc.signs[c][i]) * dot >= 0);
      }
}

TEST_CASE("arrangement fan of the plane arrangement has thirteen faces") {
  Fan f = arrangement_fan(kA2, 2);
  CHECK(f.cones().size() == 13);  // 6 chambers + 6 rays + origin
  CHECK(f.maximal_cones().size() == 6);
}

TEST_CASE("arrangement fan equals the normal fan of the associated zonotope") {
  CHECK(arrangement_fan(kA2, 2) == normal_fan(zonotope_of(kA2)));

  std::vector<VecZ> axes = {zv({1, 0}), zv({0, 1})};
  Fan square_fan = arrangement_fan(axes, 2);
  CHECK(square_fan.maximal_cones().size() == 4);
  CHECK(square_fan == normal_fan(zonotope_of(axes)));
}

TEST_CASE("mirrors sharing a line yield non-pointed chambers") {
  std::vector<VecZ> diffs = {zv({1, -1, 0}), zv({1, 0, -1}), zv({0, 1, -1})};
  ChamberComplex cc = central_chambers(diffs, 3);
  CHECK(cc.chambers.size() == 6);  // one chamber per ordering of the coordinates
  for (const Cone& c : cc.chambers) {
    CHECK(c.dim == 3);
    REQUIRE(c.lineality.cols() == 1);
    CHECK(c.lineality.col(0) == zv({1, 1, 1}));
  }
  CHECK(cc.walls.size() == 6);
  Fan f = arrangement_fan(diffs, 3);
  CHECK(f.cones().size() == 13);  // 6 + 6 + the shared line
  Cone least = f.cones().front();
  CHECK(least.dim == 1);
  CHECK(least.rays.cols() == 0);
  CHECK(least.lineality.cols() == 1);
}

TEST_CASE("mirror input accepts duplicates and sign flips") {
  std::vector<VecZ> noisy = {zv({1, 0}), zv({-1, 0}), zv({0, 2}), zv({0, 1})};
  ChamberComplex cc = central_chambers(noisy, 2);
  CHECK(cc.mirrors.size() == 2);
  CHECK(cc.chambers.size() == 4);
  CHECK_THROWS_AS(central_chambers({zv({0, 0})}, 2), std::invalid_argument);
}

TEST_CASE("no mirrors leaves the whole space as a single cell") {
  ChamberComplex cc = central_chambers({}, 3);
  CHECK(cc.chambers.size() == 1);
  CHECK(cc.chambers[0].dim == 3);
  CHECK(cc.walls.empty());
  Fan f = arrangement_fan({}, 3);
  CHECK(f.cones().size() == 1);
}

TEST_CASE("normal fan cone count matches face count on random full-dim hulls") {
  Rng rng(20240816);
  int tested = 0;
  for (int iter = 0; iter < 30 && tested < 10; ++iter) {
    Index n = 2 + rng.below(2);
    std::vector<VecZ> pts;
    for (int k = 0, m = 3 + static_cast<int>(rng.below(5)); k < m; ++k)
      pts.push_back(random_vector(rng, n, -3, 3));
    RatPolytope p = hull(LatticeSet(pts));
    if (p.dim() != n) continue;
    ++tested;
    Fan f = normal_fan(p);
    CHECK(f.cones().size() == faces(p).size());
    for (const Cone& c : f.cones()) CHECK(c.dim <= n);
  }
  CHECK(tested == 10);
}
