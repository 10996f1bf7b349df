#include "dcx/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "dcx/cone.hpp"
#include "dcx/normal_forms.hpp"

namespace dcx {

namespace {

void require_same_ambient(const RatPolytope& p, const RatPolytope& q, const char* op) {
  if (p.ambient_rank() != q.ambient_rank())
    throw std::invalid_argument(std::string(op) + ": ambient rank mismatch");
}

bool facet_less(const Facet& a, const Facet& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.rhs < b.rhs;
}

// Splits a primitive generator (w, w0) of the dual cone into a facet
// inequality (-w)·x <= w0 with primitive normal and rational rhs.
Facet facet_from_dual(const VecZ& gen, bool flip) {
  const Index n = gen.size() - 1;
  VecZ w = gen.head(n);
  if (flip) w = -w;
  Rat c = flip ? Rat(gen[n]) : Rat(-gen[n]);
  Int g = gcd_of(w);
  Facet f;
  f.normal = VecZ(w / g);
  f.rhs = c / Rat(g);
  return f;
}

}  // namespace

LatticeSet::LatticeSet(std::vector<VecZ> pts) {
  if (pts.empty()) throw std::invalid_argument("LatticeSet: empty point list");
  ambient_ = pts.front().size();
  for (const VecZ& p : pts)
    if (p.size() != ambient_) throw std::invalid_argument("LatticeSet: mixed dimensions");
  std::sort(pts.begin(), pts.end(), VecZLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  points_ = std::move(pts);
}

bool LatticeSet::contains(const VecZ& v) const {
  return std::binary_search(points_.begin(), points_.end(), v, VecZLess{});
}

RatPolytope RatPolytope::from_points(const std::vector<VecQ>& pts) {
  if (pts.empty()) throw std::invalid_argument("RatPolytope: empty point list");
  const Index n = pts.front().size();
  std::vector<VecQ> uniq = pts;
  for (const VecQ& p : uniq)
    if (p.size() != n) throw std::invalid_argument("RatPolytope: mixed dimensions");
  std::sort(uniq.begin(), uniq.end(), VecQLess{});
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

  // Dual cone over (p, 1): lineality = affine functions vanishing on the
  // hull, extreme rays (mod lineality) = the facets.
  MatQ dual(static_cast<Index>(uniq.size()), n + 1);
  for (size_t i = 0; i < uniq.size(); ++i) {
    dual.row(static_cast<Index>(i)).head(n) = uniq[i].transpose();
    dual(static_cast<Index>(i), n) = Rat(1);
  }
  ConeGenerators gens = cone_generators(dual);

  RatPolytope out;
  out.ambient_ = n;
  out.dim_ = n - gens.lineality.cols();

  for (Index j = 0; j < gens.lineality.cols(); ++j) {
    VecZ l = gens.lineality.col(j);
    out.facets_.push_back(facet_from_dual(l, false));
    out.facets_.push_back(facet_from_dual(l, true));
  }
  if (out.dim_ > 0) {
    // For a zero-dimensional polytope the only valid tight inequalities are
    // the equality pairs; any leftover ray is the trivial 0·x <= const.
    for (Index j = 0; j < gens.rays.cols(); ++j) {
      VecZ r = gens.rays.col(j);
      if (gcd_of(VecZ(r.head(n))) == 0) continue;
      out.facets_.push_back(facet_from_dual(r, true));
    }
  }
  std::sort(out.facets_.begin(), out.facets_.end(), facet_less);
  out.facets_.erase(std::unique(out.facets_.begin(), out.facets_.end()), out.facets_.end());

  // A point of the hull is a vertex iff its tight normals span everything.
  for (const VecQ& p : uniq) {
    MatQ tight(static_cast<Index>(out.facets_.size()), n);
    Index rows = 0;
    for (const Facet& f : out.facets_) {
      Rat v = (to_rat(f.normal).transpose() * p)(0, 0);
      if (v == f.rhs) tight.row(rows++) = to_rat(f.normal).transpose();
    }
    if (rank_of(MatQ(tight.topRows(rows))) == n) out.vertices_.push_back(p);
  }
  return out;
}

std::optional<RatPolytope> RatPolytope::from_inequalities(Index ambient,
                                                          const std::vector<Facet>& ineqs) {
  // Homogenize over (x, t): each a·x <= c becomes c·t - a·x >= 0, plus t >= 0.
  MatQ rows(static_cast<Index>(ineqs.size()) + 1, ambient + 1);
  for (size_t i = 0; i < ineqs.size(); ++i) {
    if (ineqs[i].normal.size() != ambient)
      throw std::invalid_argument("RatPolytope: facet dimension mismatch");
    rows.row(static_cast<Index>(i)).head(ambient) = -to_rat(ineqs[i].normal).transpose();
    rows(static_cast<Index>(i), ambient) = ineqs[i].rhs;
  }
  rows.row(static_cast<Index>(ineqs.size())).setZero();
  rows(static_cast<Index>(ineqs.size()), ambient) = Rat(1);

  ConeGenerators gens = cone_generators(rows);
  std::vector<VecQ> verts;
  bool recession = false;
  for (Index j = 0; j < gens.rays.cols(); ++j) {
    VecZ r = gens.rays.col(j);
    if (r[ambient] > 0) {
      VecQ v(ambient);
      for (Index i = 0; i < ambient; ++i) v[i] = make_rat(r[i], r[ambient]);
      verts.push_back(v);
    } else {
      recession = true;
    }
  }
  if (verts.empty()) return std::nullopt;
  if (recession || gens.lineality.cols() > 0)
    throw std::invalid_argument("RatPolytope: unbounded feasible set");
  return from_points(verts);
}

bool RatPolytope::contains(const VecQ& x) const {
  if (x.size() != ambient_) throw std::invalid_argument("RatPolytope::contains: dimension");
  for (const Facet& f : facets_)
    if ((to_rat(f.normal).transpose() * x)(0, 0) > f.rhs) return false;
  return true;
}

RatPolytope hull(const std::vector<VecQ>& pts) { return RatPolytope::from_points(pts); }

RatPolytope hull(const LatticeSet& x) {
  std::vector<VecQ> pts;
  pts.reserve(x.size());
  for (const VecZ& p : x.points()) pts.push_back(to_rat(p));
  return RatPolytope::from_points(pts);
}

long long enum_budget() {
  if (const char* s = std::getenv("DCX_ENUM_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("DCX_ENUM_BUDGET: not a positive integer");
  }
  return 10'000'000;
}

std::vector<VecZ> integer_points_in(const RatPolytope& p) {
  const Index n = p.ambient_rank();
  VecZ lo(n), hi(n);
  for (Index i = 0; i < n; ++i) {
    Rat mn = p.vertices().front()[i], mx = mn;
    for (const VecQ& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil_int(mn);
    hi[i] = floor_int(mx);
    if (lo[i] > hi[i]) return {};
  }
  Int box = 1;
  for (Index i = 0; i < n; ++i) box *= hi[i] - lo[i] + 1;
  if (box > enum_budget())
    throw std::runtime_error("integer_points_in: bounding box exceeds enumeration budget");

  std::vector<VecZ> out;
  VecZ x = lo;
  while (true) {
    if (p.contains(to_rat(x))) out.push_back(x);
    Index i = n - 1;
    while (i >= 0 && x[i] == hi[i]) {
      x[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    x[i] += 1;
  }
  std::sort(out.begin(), out.end(), VecZLess{});
  return out;
}

LatticeSet lattice_points(const RatPolytope& p) {
  std::vector<VecZ> pts = integer_points_in(p);
  if (pts.empty()) throw std::invalid_argument("lattice_points: no integer points");
  return LatticeSet(std::move(pts));
}

bool is_lattice_polytope(const RatPolytope& p) {
  for (const VecQ& v : p.vertices())
    if (!is_integer(v)) return false;
  return true;
}

RatPolytope minkowski_sum(const RatPolytope& p, const RatPolytope& q) {
  require_same_ambient(p, q, "minkowski_sum");
  std::vector<VecQ> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const VecQ& a : p.vertices())
    for (const VecQ& b : q.vertices()) sums.push_back(a + b);
  return RatPolytope::from_points(sums);
}

std::optional<RatPolytope> intersect_polytopes(const RatPolytope& p, const RatPolytope& q) {
  require_same_ambient(p, q, "intersect_polytopes");
  std::vector<Facet> all = p.facets();
  all.insert(all.end(), q.facets().begin(), q.facets().end());
  return RatPolytope::from_inequalities(p.ambient_rank(), all);
}

namespace {

Sublattice tangent_of(const RatPolytope& p, const std::vector<Index>& verts) {
  const Index n = p.ambient_rank();
  std::vector<VecZ> diffs;
  for (size_t k = 1; k < verts.size(); ++k)
    diffs.push_back(primitive(VecQ(p.vertices()[verts[k]] - p.vertices()[verts[0]])));
  return saturation(Sublattice::from_generators(matrix_from_columns(diffs, n))).sat;
}

}  // namespace

std::vector<Face> faces(const RatPolytope& p) {
  const Index nv = static_cast<Index>(p.vertices().size());
  std::vector<std::vector<Index>> incidences;
  for (const Facet& f : p.facets()) {
    std::vector<Index> inc;
    for (Index i = 0; i < nv; ++i)
      if ((to_rat(f.normal).transpose() * p.vertices()[i])(0, 0) == f.rhs) inc.push_back(i);
    incidences.push_back(std::move(inc));
  }

  // Face lattice = closure of {all vertices} under intersection with facets.
  std::vector<Index> top(nv);
  for (Index i = 0; i < nv; ++i) top[i] = i;
  std::set<std::vector<Index>> known{top};
  std::vector<std::vector<Index>> queue{top};
  while (!queue.empty()) {
    std::vector<Index> cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& inc : incidences) {
      std::vector<Index> meet;
      std::set_intersection(cur.begin(), cur.end(), inc.begin(), inc.end(),
                            std::back_inserter(meet));
      if (meet.empty() || known.count(meet)) continue;
      known.insert(meet);
      queue.push_back(meet);
    }
  }

  std::vector<Face> out;
  for (const auto& vs : known) {
    Sublattice tan = tangent_of(p, vs);
    Index d = tan.rank();
    out.push_back(Face{vs, std::move(tan), d});
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_indices < b.vertex_indices;
  });
  return out;
}

std::vector<Edge> edges(const RatPolytope& p) {
  std::vector<Edge> out;
  for (const Face& f : faces(p)) {
    if (f.dim != 1) continue;
    if (f.vertex_indices.size() != 2)
      throw std::logic_error("edges: one-dimensional face without exactly two vertices");
    Edge e;
    e.a = f.vertex_indices[0];
    e.b = f.vertex_indices[1];
    e.direction =
        line_representative(primitive(VecQ(p.vertices()[e.b] - p.vertices()[e.a])));
    out.push_back(std::move(e));
  }
  return out;
}

Rat support_value(const RatPolytope& p, const VecZ& phi) {
  if (phi.size() != p.ambient_rank())
    throw std::invalid_argument("support_value: dimension mismatch");
  Rat best = (to_rat(phi).transpose() * p.vertices().front())(0, 0);
  for (const VecQ& v : p.vertices()) best = std::max(best, Rat((to_rat(phi).transpose() * v)(0, 0)));
  return best;
}

Rat lattice_volume(const RatPolytope& p) {
  if (p.dim() == 0) return Rat(1);

  if (p.dim() < p.ambient_rank()) {
    // Coordinates in a basis of the tangent lattice preserve lattice volume.
    std::vector<Index> all(p.vertices().size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Index>(i);
    Sublattice tan = tangent_of(p, all);
    Eigen::FullPivLU<MatQ> lu(to_rat(tan.basis()));
    lu.setThreshold(Rat(0));
    std::vector<VecQ> coords;
    for (const VecQ& v : p.vertices())
      coords.push_back(lu.solve(VecQ(v - p.vertices().front())));
    return lattice_volume(RatPolytope::from_points(coords));
  }

  // Pyramid decomposition from the first vertex; primitive facet normals make
  // (rhs - normal·apex) the lattice height over each facet.
  const VecQ& apex = p.vertices().front();
  Rat total(0);
  for (const Facet& f : p.facets()) {
    Rat h = f.rhs - (to_rat(f.normal).transpose() * apex)(0, 0);
    if (h == 0) continue;
    std::vector<VecQ> base;
    for (const VecQ& v : p.vertices())
      if ((to_rat(f.normal).transpose() * v)(0, 0) == f.rhs) base.push_back(v);
    total += h * lattice_volume(RatPolytope::from_points(base));
  }
  return total / Rat(p.dim());
}

}  // namespace dcx
