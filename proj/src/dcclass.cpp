#include "dcx/dcclass.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dcx {

namespace {

void require_same_ambient(const LatticeSet& x, const LatticeSet& y, const char* op) {
  if (x.ambient_rank() != y.ambient_rank())
    throw std::invalid_argument(std::string(op) + ": ambient rank mismatch");
}

std::string span_string(const Sublattice& s) {
  std::ostringstream os;
  os << "span{";
  for (Index j = 0; j < s.basis().cols(); ++j) {
    if (j > 0) os << ", ";
    os << "(";
    for (Index i = 0; i < s.basis().rows(); ++i) {
      if (i > 0) os << ",";
      os << s.basis()(i, j);
    }
    os << ")";
  }
  os << "}";
  return os.str();
}

}  // namespace

bool is_pseudo_convex(const LatticeSet& x) { return lattice_points(hull(x)) == x; }

LatticeSet pointwise_sum(const LatticeSet& x, const LatticeSet& y) {
  require_same_ambient(x, y, "pointwise_sum");
  std::vector<VecZ> pts;
  pts.reserve(x.size() * y.size());
  for (const VecZ& a : x.points())
    for (const VecZ& b : y.points()) pts.push_back(a + b);
  return LatticeSet(std::move(pts));
}

LatticeSet pointwise_difference(const LatticeSet& x, const LatticeSet& y) {
  require_same_ambient(x, y, "pointwise_difference");
  std::vector<VecZ> pts;
  pts.reserve(x.size() * y.size());
  for (const VecZ& a : x.points())
    for (const VecZ& b : y.points()) pts.push_back(a - b);
  return LatticeSet(std::move(pts));
}

LatticeSet iterated_sum(const LatticeSet& x, int n) {
  if (n < 1) throw std::invalid_argument("iterated_sum: copy count must be positive");
  LatticeSet acc = x;
  for (int i = 1; i < n; ++i) acc = pointwise_sum(acc, x);
  return acc;
}

Sublattice difference_group(const LatticeSet& x) {
  // Differences from one basepoint generate all pairwise differences.
  const VecZ& base = x.points().front();
  std::vector<VecZ> gens;
  for (const VecZ& p : x.points())
    if (p != base) gens.push_back(p - base);
  return Sublattice::from_generators(matrix_from_columns(gens, x.ambient_rank()));
}

bool check_add(const LatticeSet& x, const LatticeSet& y) {
  require_same_ambient(x, y, "check_add");
  return is_pseudo_convex(pointwise_sum(x, y)) &&
         is_pseudo_convex(pointwise_difference(x, y));
}

SeparationResult separate(const LatticeSet& x, const LatticeSet& y) {
  require_same_ambient(x, y, "separate");
  RatPolytope diff = hull(pointwise_difference(x, y));

  // A facet of co(X - Y) cutting off the origin separates: its rhs is the
  // margin because the facet is tight on the difference points.
  std::optional<VecZ> best;
  Rat best_margin(0);
  for (const Facet& f : diff.facets()) {
    if (f.rhs >= 0) continue;
    VecZ phi = -f.normal;
    Rat margin = -f.rhs;
    if (!best || margin > best_margin ||
        (margin == best_margin && lex_less(phi, *best)))
      best = std::move(phi), best_margin = margin;
  }

  if (best) {
    Rat min_x, max_y;
    for (size_t i = 0; i < x.size(); ++i) {
      Rat v = to_rat(Int(best->dot(x.points()[i])));
      if (i == 0 || v < min_x) min_x = v;
    }
    for (size_t i = 0; i < y.size(); ++i) {
      Rat v = to_rat(Int(best->dot(y.points()[i])));
      if (i == 0 || v > max_y) max_y = v;
    }
    if (min_x - max_y != best_margin || best_margin <= 0)
      throw std::logic_error("separate: facet certificate fails the exhaustive check");
    return {Separation{*best, best_margin}, std::nullopt};
  }

  auto common = intersect_polytopes(hull(x), hull(y));
  if (!common)
    throw std::logic_error("separate: difference hull contains 0 but the hulls are disjoint");
  return {std::nullopt, common->vertices().front()};
}

bool check_int(const LatticeSet& x, const LatticeSet& y) {
  require_same_ambient(x, y, "check_int");
  for (const VecZ& p : x.points())
    if (y.contains(p)) return true;  // point sets meet: nothing to certify
  return !intersect_polytopes(hull(x), hull(y)).has_value();
}

bool check_edm(const LatticeSet& x, const LatticeSet& y) {
  require_same_ambient(x, y, "check_edm");
  auto common = intersect_polytopes(hull(x), hull(y));
  return !common || is_lattice_polytope(*common);
}

PureSystem homogenize(const std::vector<LatticeSet>& sets) {
  if (sets.empty()) throw std::invalid_argument("homogenize: empty family");
  const Index n = sets.front().ambient_rank();
  std::vector<Sublattice> tangents;
  for (const LatticeSet& s : sets) {
    if (s.ambient_rank() != n)
      throw std::invalid_argument("homogenize: ambient rank mismatch");
    tangents.push_back(saturation(difference_group(s)).sat);
  }
  std::sort(tangents.begin(), tangents.end());
  tangents.erase(std::unique(tangents.begin(), tangents.end()), tangents.end());
  for (size_t i = 0; i < tangents.size(); ++i)
    for (size_t j = i + 1; j < tangents.size(); ++j)
      if (!are_mutually_pure(tangents[i], tangents[j]))
        throw std::invalid_argument("homogenize: tangents not mutually pure: " +
                                    span_string(tangents[i]) + " vs " +
                                    span_string(tangents[j]));
  return PureSystem(n, std::move(tangents));
}

bool is_r_polytope(const RatPolytope& p, const UnimodularSystem& r) {
  if (p.ambient_rank() != r.ambient_rank())
    throw std::invalid_argument("is_r_polytope: ambient rank mismatch");
  for (const Edge& e : edges(p))
    if (!r.contains_root(e.direction)) return false;
  // Face tangents are saturated spans of the face's edge directions, hence
  // flats once every edge is a root; verified as a consistency assertion.
  PureSystem fl = flats(r);
  for (const Face& f : faces(p))
    if (!fl.contains(f.tangent))
      throw std::logic_error(
          "is_r_polytope: edges are roots but a face tangent is not a flat");
  return true;
}

bool is_star_r_polytope(const RatPolytope& p, const UnimodularSystem& r) {
  if (p.ambient_rank() != r.ambient_rank())
    throw std::invalid_argument("is_star_r_polytope: ambient rank mismatch");
  for (const Facet& f : p.facets())
    if (!r.contains_root(f.normal)) return false;
  return true;
}

RatPolytope star_r_polytope(const UnimodularSystem& r,
                            const std::vector<std::pair<VecZ, Int>>& bounds) {
  if (bounds.empty()) throw std::invalid_argument("star_r_polytope: no bounds");
  std::vector<Facet> fs;
  for (const auto& [root, a] : bounds) {
    if (!r.contains_root(root))
      throw std::invalid_argument("star_r_polytope: bound on a non-root");
    fs.push_back({root, to_rat(a)});
  }
  auto p = RatPolytope::from_inequalities(r.ambient_rank(), fs);
  if (!p) throw std::invalid_argument("star_r_polytope: bounds cut an empty set");
  if (!is_lattice_polytope(*p))
    throw std::logic_error("star_r_polytope: integer bounds must cut integer vertices");
  return *p;
}

bool are_systems_cross_pure(const PureSystem& u1, const PureSystem& u2) {
  if (u1.ambient_rank() != u2.ambient_rank())
    throw std::invalid_argument("are_systems_cross_pure: ambient rank mismatch");
  for (const Sublattice& a : u1.flats())
    for (const Sublattice& b : u2.flats())
      if (!are_mutually_pure(a, b)) return false;
  return true;
}

}  // namespace dcx
