#include "dcx/fan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dcx/normal_forms.hpp"

namespace dcx {

namespace {

// Total order on integer matrices: shape, then entries.
int mat_cmp(const MatZ& a, const MatZ& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
  if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j) ? -1 : 1;
  return 0;
}

}  // namespace

bool Cone::operator==(const Cone& o) const {
  return dim == o.dim && lineality.rows() == o.lineality.rows() &&
         mat_cmp(lineality, o.lineality) == 0 && mat_cmp(rays, o.rays) == 0;
}

bool Cone::operator<(const Cone& o) const {
  if (dim != o.dim) return dim < o.dim;
  if (int c = mat_cmp(lineality, o.lineality); c != 0) return c < 0;
  return mat_cmp(rays, o.rays) < 0;
}

Cone cone_from_inequalities(const MatQ& a) {
  ConeGenerators g = cone_generators(a);
  MatZ span(g.lineality.rows(), g.lineality.cols() + g.rays.cols());
  span << g.lineality, g.rays;
  Index d = rank_of(span);
  return Cone{std::move(g.lineality), std::move(g.rays), d};
}

Fan::Fan(Index ambient, std::vector<Cone> cones) : ambient_(ambient), cones_(std::move(cones)) {
  std::sort(cones_.begin(), cones_.end());
  cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
}

std::vector<Cone> Fan::maximal_cones() const {
  Index top = 0;
  for (const Cone& c : cones_) top = std::max(top, c.dim);
  std::vector<Cone> out;
  for (const Cone& c : cones_)
    if (c.dim == top) out.push_back(c);
  return out;
}

Fan normal_fan(const RatPolytope& p) {
  const Index n = p.ambient_rank();
  if (p.dim() != n)
    throw std::invalid_argument("normal_fan: polytope must be full-dimensional");

  const Index nv = static_cast<Index>(p.vertices().size());
  std::vector<std::vector<Index>> incidences;
  for (const Facet& f : p.facets()) {
    std::vector<Index> inc;
    for (Index i = 0; i < nv; ++i)
      if ((to_rat(f.normal).transpose() * p.vertices()[i])(0, 0) == f.rhs) inc.push_back(i);
    incidences.push_back(std::move(inc));
  }

  std::vector<Cone> cones;
  for (const Face& face : faces(p)) {
    // Cone of a face = pointed cone on the normals of the facets containing
    // it; those normals are exactly its extreme rays.
    std::vector<VecZ> normals;
    for (size_t fi = 0; fi < incidences.size(); ++fi)
      if (std::includes(incidences[fi].begin(), incidences[fi].end(),
                        face.vertex_indices.begin(), face.vertex_indices.end()))
        normals.push_back(p.facets()[fi].normal);
    MatZ rays = sorted_unique_columns(matrix_from_columns(normals, n));
    Index d = n - face.dim;
    if (rank_of(rays) != d)
      throw std::logic_error("normal_fan: cone rank does not complement face dimension");
    cones.push_back(Cone{MatZ(n, 0), std::move(rays), d});
  }
  return Fan(n, std::move(cones));
}

namespace {

std::vector<VecZ> canonical_mirrors(const std::vector<VecZ>& mirrors, Index ambient) {
  std::vector<VecZ> reps;
  for (const VecZ& m : mirrors) {
    if (m.size() != ambient) throw std::invalid_argument("mirrors: dimension mismatch");
    if (gcd_of(m) == 0) throw std::invalid_argument("mirrors: zero normal");
    reps.push_back(line_representative(m));
  }
  MatZ uniq = sorted_unique_columns(matrix_from_columns(reps, ambient));
  return columns_of(uniq);
}

MatQ sign_rows(const std::vector<VecZ>& ms, const std::vector<int>& sig, Index ambient) {
  std::vector<VecQ> rows;
  for (size_t i = 0; i < sig.size(); ++i) {
    if (sig[i] == 0) {  // the mirror holds with equality
      rows.push_back(to_rat(ms[i]));
      rows.push_back(to_rat(VecZ(-ms[i])));
    } else {
      rows.push_back(to_rat(VecZ(sig[i] > 0 ? ms[i] : VecZ(-ms[i]))));
    }
  }
  MatQ a(static_cast<Index>(rows.size()), ambient);
  for (size_t i = 0; i < rows.size(); ++i) a.row(static_cast<Index>(i)) = rows[i].transpose();
  return a;
}

}  // namespace

ChamberComplex central_chambers(const std::vector<VecZ>& mirrors, Index ambient) {
  ChamberComplex out;
  out.mirrors = canonical_mirrors(mirrors, ambient);
  const auto& ms = out.mirrors;

  // Grow sign vectors one mirror at a time, keeping full-dimensional cells.
  std::vector<std::vector<int>> sigs{{}};
  for (size_t i = 0; i < ms.size(); ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& s : sigs)
      for (int t : {+1, -1}) {
        std::vector<int> cand = s;
        cand.push_back(t);
        if (cone_from_inequalities(sign_rows(ms, cand, ambient)).dim == ambient)
          next.push_back(std::move(cand));
      }
    sigs = std::move(next);
  }
  std::sort(sigs.begin(), sigs.end());

  for (const auto& s : sigs) {
    out.signs.push_back(s);
    out.chambers.push_back(cone_from_inequalities(sign_rows(ms, s, ambient)));
  }

  // Walls: chamber pairs whose sign vectors differ at exactly one mirror and
  // whose meet spans that mirror's hyperplane.
  const Index nc = static_cast<Index>(out.chambers.size());
  for (Index c = 0; c < nc; ++c)
    for (Index d = c + 1; d < nc; ++d) {
      Index diff = -1;
      bool single = true;
      for (size_t i = 0; i < ms.size() && single; ++i)
        if (out.signs[c][i] != out.signs[d][i]) {
          if (diff >= 0) single = false;
          diff = static_cast<Index>(i);
        }
      if (!single || diff < 0) continue;
      std::vector<int> meet = out.signs[c];
      meet[static_cast<size_t>(diff)] = 0;
      Cone w = cone_from_inequalities(sign_rows(ms, meet, ambient));
      if (w.dim != ambient - 1) continue;
      Index plus = out.signs[c][static_cast<size_t>(diff)] > 0 ? c : d;
      out.walls.push_back({diff, plus, plus == c ? d : c, std::move(w)});
    }
  std::sort(out.walls.begin(), out.walls.end(), [](const auto& a, const auto& b) {
    return std::tie(a.mirror, a.plus, a.minus) < std::tie(b.mirror, b.plus, b.minus);
  });
  return out;
}

Fan arrangement_fan(const std::vector<VecZ>& mirrors, Index ambient) {
  ChamberComplex cc = central_chambers(mirrors, ambient);

  // Every face of the arrangement is a meet of chambers, so closing the
  // chamber sign vectors under componentwise meet reaches all of them.
  std::set<std::vector<int>> known(cc.signs.begin(), cc.signs.end());
  std::vector<std::vector<int>> queue(cc.signs.begin(), cc.signs.end());
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& s : cc.signs) {
      std::vector<int> meet(cur.size());
      for (size_t i = 0; i < cur.size(); ++i) meet[i] = cur[i] == s[i] ? cur[i] : 0;
      if (known.insert(meet).second) {
        if (known.size() > 200000)
          throw std::logic_error("arrangement_fan: face closure too large");
        queue.push_back(meet);
      }
    }
  }

  // Distinct sign labels can describe the same cone once forced equalities
  // collapse; deduplication happens on the canonical cone form.
  std::set<Cone> cones;
  for (const auto& s : known) cones.insert(cone_from_inequalities(sign_rows(cc.mirrors, s, ambient)));
  return Fan(ambient, std::vector<Cone>(cones.begin(), cones.end()));
}

}  // namespace dcx
