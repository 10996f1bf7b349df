#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dcx/dcclass.hpp"
#include "dcx/random.hpp"

using namespace dcx;

namespace {

VecZ zv(std::initializer_list<long> xs) {
  VecZ v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v[i++] = Int(x);
  return v;
}

VecQ qv(std::initializer_list<Rat> xs) {
  VecQ v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const Rat& x : xs) v[i++] = x;
  return v;
}

LatticeSet ls(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<VecZ> v;
  for (const auto& p : pts) v.push_back(zv(p));
  return LatticeSet(std::move(v));
}

UnimodularSystem make(Index ambient, std::initializer_list<std::initializer_list<long>> vs) {
  std::vector<VecZ> vecs;
  for (const auto& v : vs) vecs.push_back(zv(v));
  auto res = validate_unimodular(ambient, vecs);
  REQUIRE(std::holds_alternative<UnimodularSystem>(res));
  return std::get<UnimodularSystem>(std::move(res));
}

// Zonotope spanned by a random submultiset of the root segments, translated
// by t: in the class of r-polytopes by construction.
RatPolytope random_root_zonotope(Rng& rng, const UnimodularSystem& r, long max_repeat,
                                 const VecZ& t) {
  const Index n = r.ambient_rank();
  RatPolytope p = RatPolytope::from_points({to_rat(t)});
  bool used = false;
  for (const VecZ& rep : r.line_reps()) {
    long k = rng.range(0, max_repeat);
    if (k == 0) continue;
    used = true;
    VecZ end = rep * Int(k);
    p = minkowski_sum(p, RatPolytope::from_points({VecQ(VecQ::Zero(n)), to_rat(end)}));
  }
  if (!used)
    p = minkowski_sum(p, RatPolytope::from_points(
                             {VecQ(VecQ::Zero(n)), to_rat(VecZ(r.line_reps().front()))}));
  return p;
}

// The plane system in the hexagon's chart: {+-e1, +-e2, +-(e1+e2)}.
UnimodularSystem conjugate_plane() { return make(2, {{1, 0}, {0, 1}, {1, 1}}); }

RatPolytope example_hexagon() {
  UnimodularSystem s = conjugate_plane();
  return star_r_polytope(s, {{zv({1, 0}), Int(2)},
                             {zv({-1, 0}), Int(0)},
                             {zv({0, 1}), Int(2)},
                             {zv({0, -1}), Int(0)},
                             {zv({1, 1}), Int(3)},
                             {zv({-1, -1}), Int(-1)}});
}

}  // namespace

TEST_CASE("pseudo-convexity: hull gaps are detected") {
  CHECK(is_pseudo_convex(ls({{0, 0}, {1, 1}})));
  CHECK(is_pseudo_convex(ls({{3, -2}})));
  CHECK(is_pseudo_convex(ls({{0}, {1}, {2}})));
  // Sum of the diagonal pair with the antidiagonal pair misses (1,1).
  CHECK_FALSE(is_pseudo_convex(ls({{0, 1}, {1, 0}, {1, 2}, {2, 1}})));
  CHECK_FALSE(is_pseudo_convex(ls({{0}, {2}})));
}

TEST_CASE("pseudo-convexity property: integer points of random hulls") {
  Rng rng(2026'02'01);
  for (int it = 0; it < 40; ++it) {
    Index n = 1 + static_cast<Index>(rng.below(3));
    std::vector<VecZ> pts;
    long count = rng.range(1, 6);
    for (long i = 0; i < count; ++i) pts.push_back(random_vector(rng, n, -4, 4));
    LatticeSet filled = lattice_points(hull(LatticeSet(pts)));
    CHECK(is_pseudo_convex(filled));
  }
}

TEST_CASE("iterated sums scale point sets") {
  LatticeSet diag = ls({{0, 0}, {1, 1}});
  CHECK(iterated_sum(diag, 1) == diag);
  CHECK(iterated_sum(diag, 2) == ls({{0, 0}, {1, 1}, {2, 2}}));
  CHECK(iterated_sum(ls({{0, 0}, {1, 0}, {0, 1}}), 2).size() == 6);
  CHECK_THROWS_AS(iterated_sum(diag, 0), std::invalid_argument);

  // [n]X of a pseudo-convex set in dimension one stays pseudo-convex.
  LatticeSet seg = ls({{-1}, {0}, {1}, {2}});
  for (int n2 = 1; n2 <= 4; ++n2) CHECK(is_pseudo_convex(iterated_sum(seg, n2)));
}

TEST_CASE("difference groups and their purity") {
  Sublattice d = difference_group(ls({{0, 0}, {1, 1}}));
  CHECK(d.rank() == 1);
  CHECK(d.contains(zv({1, 1})));
  CHECK(is_pure(d));

  Sublattice even = difference_group(ls({{0, 0}, {2, 0}}));
  CHECK(even.rank() == 1);
  CHECK(even.contains(zv({2, 0})));
  CHECK_FALSE(even.contains(zv({1, 0})));
  CHECK_FALSE(is_pure(even));

  CHECK(difference_group(ls({{0, 0}, {1, 0}, {0, 1}})) == Sublattice::full(2));
  CHECK(difference_group(ls({{7, -3}})).rank() == 0);
}

TEST_CASE("sum property fails on the crossing diagonals and holds on intervals") {
  LatticeSet x = ls({{0, 0}, {1, 1}});
  LatticeSet y = ls({{0, 1}, {1, 0}});
  CHECK(is_pseudo_convex(x));
  CHECK(is_pseudo_convex(y));
  CHECK_FALSE(check_add(x, y));

  CHECK(check_add(ls({{0}, {1}, {2}}), ls({{-3}, {-2}})));
  CHECK(check_add(ls({{5}}), ls({{0}, {1}})));
  LatticeSet z = ls({{0}, {1}, {2}, {3}});
  CHECK(check_add(z, z));
}

TEST_CASE("separation certificates") {
  SeparationResult far = separate(ls({{0, 0}}), ls({{2, 0}}));
  REQUIRE(far.separated());
  CHECK(far.separation->functional == zv({-1, 0}));
  CHECK(far.separation->margin == Rat(2));

  SeparationResult diag = separate(ls({{0, 0}}), ls({{1, 1}}));
  REQUIRE(diag.separated());
  // Two facets tie at margin 1; the lex-least functional wins.
  CHECK(diag.separation->functional == zv({-1, 0}));
  CHECK(diag.separation->margin == Rat(1));

  SeparationResult crossing = separate(ls({{0, 0}, {1, 1}}), ls({{0, 1}, {1, 0}}));
  REQUIRE_FALSE(crossing.separated());
  CHECK(*crossing.overlap_witness == qv({Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("separation margin is exact on random disjoint boxes") {
  Rng rng(414213);
  for (int it = 0; it < 30; ++it) {
    Index n = 1 + static_cast<Index>(rng.below(3));
    std::vector<VecZ> a, b;
    for (int i = 0; i < 4; ++i) a.push_back(random_vector(rng, n, 0, 3));
    VecZ shift = VecZ::Zero(n);
    shift[0] = Int(10);
    for (int i = 0; i < 4; ++i) b.push_back(VecZ(random_vector(rng, n, 0, 3) + shift));
    SeparationResult s = separate(LatticeSet(a), LatticeSet(b));
    REQUIRE(s.separated());
    CHECK(s.separation->margin > 0);
    Rat min_a, max_b;
    for (size_t i = 0; i < a.size(); ++i) {
      Rat v = to_rat(Int(s.separation->functional.dot(a[i])));
      if (i == 0 || v < min_a) min_a = v;
    }
    for (size_t i = 0; i < b.size(); ++i) {
      Rat v = to_rat(Int(s.separation->functional.dot(b[i])));
      if (i == 0 || v > max_b) max_b = v;
    }
    CHECK(min_a - max_b == s.separation->margin);
  }
}

TEST_CASE("intersection checks on the crossing diagonals and shared faces") {
  LatticeSet x = ls({{0, 0}, {1, 1}});
  LatticeSet y = ls({{0, 1}, {1, 0}});
  CHECK_FALSE(check_int(x, y));
  CHECK_FALSE(check_edm(x, y));

  CHECK(check_int(x, x));
  CHECK(check_edm(x, x));

  // Two edges of the hexagon: sharing a vertex or fully disjoint.
  LatticeSet bottom = ls({{1, 0}, {2, 0}});
  LatticeSet right = ls({{2, 0}, {2, 1}});
  LatticeSet top = ls({{0, 2}, {1, 2}});
  CHECK(check_int(bottom, right));
  CHECK(check_edm(bottom, right));
  CHECK(check_int(bottom, top));
  CHECK(check_edm(bottom, top));
}

TEST_CASE("homogenization collects saturated tangents") {
  LatticeSet diag = ls({{0, 0}, {1, 1}, {2, 2}});
  LatticeSet axis = ls({{0, 0}, {1, 0}});
  PureSystem two = homogenize({diag, axis});
  REQUIRE(two.flats().size() == 2);
  CHECK(two.contains(Sublattice::from_generators(zv({1, 1}))));
  CHECK(two.contains(Sublattice::from_generators(zv({1, 0}))));

  // Tangent saturation: the even segment homogenizes to the full line.
  PureSystem line = homogenize({ls({{0, 0}, {2, 0}})});
  REQUIRE(line.flats().size() == 1);
  CHECK(line.flats().front().contains(zv({1, 0})));

  PureSystem zero = homogenize({ls({{4, 5}}), ls({{-1, 3}})});
  REQUIRE(zero.flats().size() == 1);
  CHECK(zero.flats().front().rank() == 0);

  // The two diagonal lines sum to an index-2 sublattice of the plane.
  CHECK_THROWS_WITH_AS(homogenize({ls({{0, 0}, {1, 1}}), ls({{0, 0}, {1, -1}})}),
                       doctest::Contains("span{(1,-1)} vs span{(1,1)}"),
                       std::invalid_argument);
}

TEST_CASE("edge criterion for membership in a root class") {
  UnimodularSystem a2 = builtin("A_n", 2);
  RatPolytope square = hull(ls({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(is_r_polytope(square, a2));

  RatPolytope tri = hull(ls({{0, 0}, {1, 0}, {1, 1}}));
  CHECK_FALSE(is_r_polytope(tri, a2));  // the (1,1) edge is not a root

  RatPolytope hex = example_hexagon();
  CHECK(is_r_polytope(hex, a2));                // edges run along e1, e2, e1-e2
  CHECK_FALSE(is_r_polytope(hex, conjugate_plane()));  // (1,-1) is not a root here

  CHECK(is_r_polytope(hull(ls({{3, 1}})), a2));
  CHECK(is_r_polytope(hull(ls({{0, 0}, {1, 1}})), make(2, {{1, 1}})));
}

TEST_CASE("facet criterion and builder for star polytopes") {
  UnimodularSystem a2 = builtin("A_n", 2);
  UnimodularSystem conj = conjugate_plane();
  RatPolytope hex = example_hexagon();

  CHECK(is_star_r_polytope(hex, conj));
  CHECK_FALSE(is_star_r_polytope(hex, a2));  // facet normal (1,1) is not a root
  CHECK(is_lattice_polytope(hex));
  CHECK(hex.facets().size() == 6);
  CHECK(hex.vertices().size() == 6);

  RatPolytope square = hull(ls({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(is_star_r_polytope(square, a2));

  // Bounds on units and differences cut integer vertices in rank 3.
  UnimodularSystem a3 = builtin("A_n", 3);
  std::vector<std::pair<VecZ, Int>> bounds;
  for (Index i = 0; i < 3; ++i) {
    VecZ e = VecZ::Zero(3);
    e[i] = 1;
    bounds.push_back({e, Int(2 + i)});
    bounds.push_back({VecZ(-e), Int(1)});
  }
  bounds.push_back({zv({1, -1, 0}), Int(1)});
  bounds.push_back({zv({0, 1, -1}), Int(2)});
  RatPolytope box = star_r_polytope(a3, bounds);
  CHECK(is_lattice_polytope(box));
  CHECK(is_star_r_polytope(box, a3));
  // Not an edge-class member of the same system: the two difference facets
  // meet in an edge along (1,1,1), which is not a root.
  CHECK_FALSE(is_r_polytope(box, a3));

  CHECK_THROWS_AS(star_r_polytope(a2, {}), std::invalid_argument);
  CHECK_THROWS_AS(star_r_polytope(a2, {{zv({1, 2}), Int(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(star_r_polytope(a2, {{zv({1, 0}), Int(-1)}, {zv({-1, 0}), Int(0)}}),
                  std::invalid_argument);  // empty slab
  CHECK_THROWS_AS(star_r_polytope(a2, {{zv({1, 0}), Int(1)}}),
                  std::invalid_argument);  // half-plane, unbounded
}

TEST_CASE("cross purity between pure systems") {
  PureSystem a2flats = flats(builtin("A_n", 2));
  CHECK(are_systems_cross_pure(a2flats, a2flats));

  // The zero-sum hyperplane meets every flat of the exceptional system purely.
  MatZ ones(1, 5);
  for (Index i = 0; i < 5; ++i) ones(0, i) = 1;
  PureSystem hyper(5, {Sublattice::from_generators(kernel_basis(ones))});
  CHECK(are_systems_cross_pure(flats(builtin("E5", 5)), hyper));

  PureSystem d1(2, {Sublattice::from_generators(zv({1, 1}))});
  PureSystem d2(2, {Sublattice::from_generators(zv({1, -1}))});
  CHECK_FALSE(are_systems_cross_pure(d1, d2));
}

TEST_CASE("difference groups of dilated class members are pure") {
  Rng rng(5772156);
  UnimodularSystem a2 = builtin("A_n", 2);
  for (int it = 0; it < 10; ++it) {
    RatPolytope p = random_root_zonotope(rng, a2, 2, random_vector(rng, 2, -2, 2));
    LatticeSet x = lattice_points(p);
    for (int n2 = 1; n2 <= 4; ++n2) {
      LatticeSet multiple = iterated_sum(x, n2);
      CHECK(is_pseudo_convex(multiple));
      CHECK(is_pure(difference_group(multiple)));
    }
  }
}

TEST_CASE("slices of exceptional zonotopes by the zero-sum hyperplane are integer") {
  Rng rng(1729);
  UnimodularSystem e5 = builtin("E5", 5);
  VecZ ones = VecZ::Zero(5);
  for (Index i = 0; i < 5; ++i) ones[i] = 1;
  int nonempty = 0;
  for (int it = 0; it < 50; ++it) {
    RatPolytope p = random_root_zonotope(rng, e5, 1, VecZ(VecZ::Zero(5)));
    std::vector<Facet> cut = p.facets();
    cut.push_back({ones, Rat(0)});
    cut.push_back({VecZ(-ones), Rat(0)});
    auto slice = RatPolytope::from_inequalities(5, cut);
    REQUIRE(slice.has_value());  // zonotopes from the origin contain 0
    ++nonempty;
    CHECK(is_lattice_polytope(*slice));
  }
  CHECK(nonempty == 50);
}

TEST_CASE("random class members satisfy all four closure properties") {
  Rng rng(31415926);
  for (Index sz : {2, 3}) {
    UnimodularSystem r = builtin("A_n", sz);
    const Index n = r.ambient_rank();
    int disjoint = 0;
    for (int it = 0; it < 100; ++it) {
      RatPolytope p = random_root_zonotope(rng, r, 2, random_vector(rng, n, -3, 3));
      RatPolytope q = random_root_zonotope(rng, r, 2, random_vector(rng, n, -3, 3));
      LatticeSet x = lattice_points(p);
      LatticeSet y = lattice_points(q);

      CHECK(check_add(x, y));
      CHECK(check_int(x, y));
      CHECK(check_edm(x, y));
      SeparationResult s = separate(x, y);
      bool sets_meet = false;
      for (const VecZ& pt : x.points()) sets_meet = sets_meet || y.contains(pt);
      if (s.separated()) {
        ++disjoint;
        CHECK_FALSE(sets_meet);
      }

      // Sum property in polytope form: (P+Q)(Z) = P(Z) + Q(Z).
      CHECK(lattice_points(minkowski_sum(p, q)) == pointwise_sum(x, y));
    }
    CHECK(disjoint > 5);  // the translations make both outcomes common
  }
}
