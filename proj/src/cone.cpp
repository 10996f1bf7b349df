#include "dcx/cone.hpp"

#include <vector>

#include "dcx/normal_forms.hpp"

namespace dcx {

namespace {

struct Ray {
  VecZ v;
  std::vector<bool> tight;  // tight[i]: constraint i holds with equality
};

Int dot(const VecZ& a, const VecZ& b) { return (a.transpose() * b)(0, 0); }

// r1, r2 adjacent iff no third ray is tight on every constraint both are
// tight on. Valid because the list holds exactly the extreme rays (mod
// lineality) of the cone cut by the constraints processed so far.
bool adjacent(const std::vector<Ray>& rays, size_t p, size_t q) {
  const auto& tp = rays[p].tight;
  const auto& tq = rays[q].tight;
  for (size_t r = 0; r < rays.size(); ++r) {
    if (r == p || r == q) continue;
    const auto& tr = rays[r].tight;
    bool covers = true;
    for (size_t i = 0; i < tp.size() && covers; ++i)
      if (tp[i] && tq[i] && !tr[i]) covers = false;
    if (covers) return false;
  }
  return true;
}

}  // namespace

Index ConeGenerators::dim() const {
  MatZ all(lineality.rows(), lineality.cols() + rays.cols());
  all << lineality, rays;
  return rank_of(all);
}

ConeGenerators cone_generators(const MatZ& a) {
  const Index n = a.cols();
  std::vector<VecZ> lin;
  for (Index i = 0; i < n; ++i) lin.push_back(MatZ::Identity(n, n).col(i));
  std::vector<Ray> rays;

  for (Index k = 0; k < a.rows(); ++k) {
    VecZ row = a.row(k).transpose();

    size_t split = lin.size();
    for (size_t j = 0; j < lin.size(); ++j)
      if (dot(row, lin[j]) != 0) {
        split = j;
        break;
      }

    if (split < lin.size()) {
      // Constraint cuts the lineality space: pivot everything onto the
      // hyperplane {row = 0} along v0, then v0 itself becomes a ray.
      VecZ v0 = lin[split];
      Int d0 = dot(row, v0);
      if (d0 < 0) {
        v0 = -v0;
        d0 = -d0;
      }
      std::vector<VecZ> next_lin;
      for (size_t j = 0; j < lin.size(); ++j) {
        if (j == split) continue;
        next_lin.push_back(primitive(VecZ(d0 * lin[j] - dot(row, lin[j]) * v0)));
      }
      lin = std::move(next_lin);
      for (Ray& r : rays) {
        // Pivoting rescales earlier constraint values by d0 > 0: tight sets
        // and the cone membership of every ray are preserved.
        r.v = primitive(VecZ(d0 * r.v - dot(row, r.v) * v0));
        r.tight.push_back(true);
      }
      Ray nr;
      nr.v = v0;
      nr.tight.assign(static_cast<size_t>(k), true);  // v0 was in the lineality
      nr.tight.push_back(false);
      rays.push_back(std::move(nr));
      continue;
    }

    // Constraint vanishes on the lineality: classic +/0/- ray splitting.
    std::vector<Int> s(rays.size());
    bool has_neg = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(row, rays[i].v);
      has_neg = has_neg || s[i] < 0;
    }
    if (!has_neg) {
      for (size_t i = 0; i < rays.size(); ++i) rays[i].tight.push_back(s[i] == 0);
      continue;
    }
    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (s[i] < 0) continue;
      Ray r = rays[i];
      r.tight.push_back(s[i] == 0);
      next.push_back(std::move(r));
    }
    for (size_t p = 0; p < rays.size(); ++p) {
      if (s[p] <= 0) continue;
      for (size_t q = 0; q < rays.size(); ++q) {
        if (s[q] >= 0 || !adjacent(rays, p, q)) continue;
        Ray w;
        w.v = primitive(VecZ(s[p] * rays[q].v - s[q] * rays[p].v));
        w.tight.resize(static_cast<size_t>(k) + 1);
        for (size_t i = 0; i < static_cast<size_t>(k); ++i)
          w.tight[i] = rays[p].tight[i] && rays[q].tight[i];
        w.tight[static_cast<size_t>(k)] = true;
        next.push_back(std::move(w));
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = hnf_basis(matrix_from_columns(lin, n));
  std::vector<VecZ> reduced;
  for (const Ray& r : rays) {
    VecZ v = reduce_mod_lineality(to_rat(r.v), out.lineality);
    if (gcd_of(v) != 0) reduced.push_back(v);
  }
  out.rays = sorted_unique_columns(matrix_from_columns(reduced, n));
  return out;
}

ConeGenerators cone_generators(const MatQ& a) {
  MatZ cleared(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    cleared.row(i) = primitive(VecQ(a.row(i).transpose())).transpose();
  return cone_generators(cleared);
}

VecZ reduce_mod_lineality(const VecQ& v, const MatZ& lin) {
  if (lin.cols() == 0) return primitive(v);
  MatQ l = to_rat(lin);
  MatQ gram = l.transpose() * l;  // positive definite: lineality basis is independent
  Eigen::FullPivLU<MatQ> lu(gram);
  lu.setThreshold(Rat(0));
  VecQ c = lu.solve(VecQ(l.transpose() * v));
  return primitive(VecQ(v - l * c));
}

}  // namespace dcx
