#include "dcx/polymatroid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "dcx/fan.hpp"
#include "dcx/dcclass.hpp"
#include "dcx/normal_forms.hpp"

namespace dcx {

namespace {

VecZ indicator_vector(unsigned mask, Index n) {
  VecZ v = VecZ::Zero(n);
  for (Index i = 0; i < n; ++i)
    if (mask & (1u << i)) v[i] = 1;
  return v;
}

}  // namespace

SetFunction::SetFunction(Index ground, std::vector<Rat> values)
    : ground_(ground), values_(std::move(values)) {
  if (ground_ < 1 || ground_ > 12)
    throw std::invalid_argument("SetFunction: ground size out of range");
  if (values_.size() != (1u << ground_))
    throw std::invalid_argument("SetFunction: need one value per subset");
  if (values_[0] != 0)
    throw std::invalid_argument("SetFunction: the empty set must map to 0");
}

const Rat& SetFunction::value(unsigned mask) const {
  if (mask >= values_.size()) throw std::invalid_argument("SetFunction: subset out of range");
  return values_[mask];
}

bool is_submodular(const SetFunction& b) {
  const unsigned m = b.subset_count();
  for (unsigned s = 0; s < m; ++s)
    for (unsigned t = s + 1; t < m; ++t) {
      if ((s & t) == s || (s & t) == t) continue;  // nested pairs hold with equality
      if (b.value(s) + b.value(t) < b.value(s | t) + b.value(s & t)) return false;
    }
  return true;
}

bool is_supermodular(const SetFunction& a) {
  const unsigned m = a.subset_count();
  for (unsigned s = 0; s < m; ++s)
    for (unsigned t = s + 1; t < m; ++t) {
      if ((s & t) == s || (s & t) == t) continue;
      if (a.value(s) + a.value(t) > a.value(s | t) + a.value(s & t)) return false;
    }
  return true;
}

RatPolytope base_polytope(const SetFunction& b) {
  if (!is_submodular(b)) throw std::invalid_argument("base_polytope: set function not submodular");
  const Index n = b.ground_size();
  const unsigned full = (1u << n) - 1;
  std::vector<Facet> ineqs;
  for (unsigned s = 1; s < full; ++s) ineqs.push_back({indicator_vector(s, n), b.value(s)});
  VecZ ones = indicator_vector(full, n);
  ineqs.push_back({ones, b.value(full)});
  ineqs.push_back({VecZ(-ones), -b.value(full)});
  auto p = RatPolytope::from_inequalities(n, ineqs);
  if (!p) throw std::logic_error("base_polytope: submodular slab came out empty");
  return *p;
}

VecQ greedy_vertex(const SetFunction& b, const std::vector<Index>& order) {
  const Index n = b.ground_size();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  if (static_cast<Index>(order.size()) != n)
    throw std::invalid_argument("greedy_vertex: order must visit every element once");
  for (Index i : order) {
    if (i < 0 || i >= n || seen[static_cast<size_t>(i)])
      throw std::invalid_argument("greedy_vertex: order must visit every element once");
    seen[static_cast<size_t>(i)] = true;
  }
  if (!is_submodular(b)) throw std::invalid_argument("greedy_vertex: set function not submodular");
  VecQ x(n);
  unsigned prefix = 0;
  for (Index k = 0; k < n; ++k) {
    unsigned next = prefix | (1u << order[static_cast<size_t>(k)]);
    x[order[static_cast<size_t>(k)]] = b.value(next) - b.value(prefix);
    prefix = next;
  }
  return x;
}

Rat choquet_extension(const SetFunction& b, const VecQ& p) {
  const Index n = b.ground_size();
  if (p.size() != n) throw std::invalid_argument("choquet_extension: dimension mismatch");
  std::vector<Index> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), Index(0));
  std::stable_sort(idx.begin(), idx.end(), [&](Index i, Index j) { return p[i] > p[j]; });
  // Telescoped level sets: each prefix of the descending order is weighted by
  // the drop to the next coordinate, the full set by the smallest coordinate.
  Rat total(0);
  unsigned prefix = 0;
  for (Index k = 0; k < n; ++k) {
    prefix |= 1u << idx[static_cast<size_t>(k)];
    Rat weight = k + 1 < n ? Rat(p[idx[static_cast<size_t>(k)]] - p[idx[static_cast<size_t>(k) + 1]])
                           : Rat(p[idx[static_cast<size_t>(k)]]);
    total += weight * b.value(prefix);
  }
  return total;
}

bool is_strong_pair(const SetFunction& b, const SetFunction& a) {
  if (b.ground_size() != a.ground_size())
    throw std::invalid_argument("is_strong_pair: ground size mismatch");
  if (!is_submodular(b) || !is_supermodular(a)) return false;
  const unsigned m = b.subset_count();
  for (unsigned s = 0; s < m; ++s)
    for (unsigned t = 0; t < m; ++t)
      if (b.value(s) - a.value(t) < b.value(s & ~t) - a.value(t & ~s)) return false;
  return true;
}

StrongPair::StrongPair(SetFunction b, SetFunction a) : b_(std::move(b)), a_(std::move(a)) {
  if (!is_strong_pair(b_, a_))
    throw std::invalid_argument("StrongPair: bounds fail the pair inequalities");
}

RatPolytope gpm_polytope(const StrongPair& pair) {
  const Index n = pair.upper().ground_size();
  std::vector<Facet> ineqs;
  for (unsigned s = 1; s < pair.upper().subset_count(); ++s) {
    VecZ ind = indicator_vector(s, n);
    ineqs.push_back({ind, pair.upper().value(s)});
    ineqs.push_back({VecZ(-ind), -pair.lower().value(s)});
  }
  auto p = RatPolytope::from_inequalities(n, ineqs);
  if (!p) throw std::logic_error("gpm_polytope: strong pair cut out an empty slab");
  return *p;
}

SetFunction support_setfunction(const RatPolytope& p) {
  const Index n = p.ambient_rank();
  if (n < 1 || n > 12)
    throw std::invalid_argument("support_setfunction: ambient rank out of range");
  VecZ ones = indicator_vector((1u << n) - 1, n);
  if (support_value(p, ones) != -support_value(p, VecZ(-ones)))
    throw std::invalid_argument("support_setfunction: polytope not in a total-sum hyperplane");
  std::vector<Rat> vals(1u << n);
  for (unsigned s = 1; s < (1u << n); ++s) vals[s] = support_value(p, indicator_vector(s, n));
  return SetFunction(n, std::move(vals));
}

FanFunction::FanFunction(UnimodularSystem system, std::vector<std::pair<VecZ, Rat>> values)
    : system_(std::move(system)) {
  if (system_.rank() != system_.ambient_rank())
    throw std::invalid_argument("FanFunction: system must be full-dimensional");
  keys_ = crossings(system_);
  vals_.assign(keys_.size(), Rat(0));
  std::vector<bool> seen(keys_.size(), false);
  for (auto& [key, val] : values) {
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key, VecZLess{});
    if (key.size() != system_.ambient_rank() || it == keys_.end() || *it != key)
      throw std::invalid_argument("FanFunction: value key is not a crossing of the system");
    size_t pos = static_cast<size_t>(it - keys_.begin());
    if (seen[pos]) throw std::invalid_argument("FanFunction: duplicate crossing value");
    seen[pos] = true;
    vals_[pos] = std::move(val);
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }))
    throw std::invalid_argument("FanFunction: values must cover every crossing");
}

const Rat& FanFunction::value(const VecZ& xi) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), xi, VecZLess{});
  if (it == keys_.end() || xi.size() != it->size() || *it != xi)
    throw std::invalid_argument("FanFunction: functional is not a crossing of the system");
  return vals_[static_cast<size_t>(it - keys_.begin())];
}

FanFunction fan_function_from_setfunction(const SetFunction& b) {
  const Index n = b.ground_size();
  if (n < 2)
    throw std::invalid_argument("fan_function_from_setfunction: need at least two ground elements");
  // Chart of the difference system on n elements in a basis of its span: the
  // chart carries its fan to the fan of A_{n-1}, restricts 1_T to itself when
  // T avoids the dropped element and to -1_{N\T} shifted by the forced linear
  // value on the all-ones line otherwise.
  const unsigned full = (1u << n) - 1;
  std::vector<std::pair<VecZ, Rat>> vals;
  for (unsigned t = 1; t < (1u << (n - 1)); ++t) {
    VecZ ind = indicator_vector(t, n - 1);
    vals.emplace_back(ind, b.value(t));
    vals.emplace_back(VecZ(-ind), b.value(full ^ t) - b.value(full));
  }
  return FanFunction(builtin("A_n", n - 1), std::move(vals));
}

FanFunction fan_function_from_pair(const SetFunction& b, const SetFunction& a) {
  if (b.ground_size() != a.ground_size())
    throw std::invalid_argument("fan_function_from_pair: ground size mismatch");
  const Index n = b.ground_size();
  std::vector<std::pair<VecZ, Rat>> vals;
  for (unsigned s = 1; s < b.subset_count(); ++s) {
    VecZ ind = indicator_vector(s, n);
    vals.emplace_back(ind, b.value(s));
    vals.emplace_back(VecZ(-ind), -a.value(s));
  }
  return FanFunction(builtin("A_n", n), std::move(vals));
}

FanCompatReport fan_compat_check(const FanFunction& f) {
  const UnimodularSystem& r = f.system();
  const Index n = r.ambient_rank();
  if (n > 4)
    throw std::invalid_argument("fan_compat_check: ambient rank above the enumeration scale");
  ChamberComplex cc = central_chambers(r.line_reps(), n);
  FanCompatReport out;

  // Crossings inside a chamber are exactly its rays (a crossing ray contained
  // in a chamber is a face of it), so linear dependencies among them must be
  // respected with equality; an integer kernel basis spans all dependencies.
  for (const Cone& c : cc.chambers) {
    if (!c.pointed())
      throw std::logic_error("fan_compat_check: arrangement fan of a full system must be pointed");
    std::vector<Rat> vals;
    for (Index j = 0; j < c.rays.cols(); ++j) vals.push_back(f.value(c.rays.col(j)));
    MatZ ker = kernel_basis(c.rays);
    for (Index k = 0; k < ker.cols() && out.compatible; ++k) {
      Rat sum(0);
      for (Index j = 0; j < c.rays.cols(); ++j) sum += to_rat(ker(j, k)) * vals[j];
      if (sum != 0) {
        out.compatible = false;
        out.violation = "dependent crossings of one chamber carry non-linear values";
        for (Index j = 0; j < c.rays.cols(); ++j)
          if (ker(j, k) != 0) out.involved.push_back(c.rays.col(j));
      }
    }
    if (!out.compatible) break;
  }

  // Across every wall, the unique positive combination of an outside crossing
  // pair landing in the wall's span must dominate the induced wall value.
  // Once the chamber relations hold, the wall-side value is independent of
  // the representation chosen by the solver.
  if (out.compatible) {
    for (const ChamberComplex::Wall& w : cc.walls) {
      const VecZ& mir = cc.mirrors[static_cast<size_t>(w.mirror)];
      const Cone& cp = cc.chambers[static_cast<size_t>(w.plus)];
      const Cone& cm = cc.chambers[static_cast<size_t>(w.minus)];
      const MatZ& tau = w.cone.rays;
      MatQ tau_q = to_rat(tau);
      std::vector<Rat> tau_vals;
      for (Index j = 0; j < tau.cols(); ++j) tau_vals.push_back(f.value(tau.col(j)));
      for (Index i = 0; i < cp.rays.cols() && out.compatible; ++i) {
        VecZ xi = cp.rays.col(i);
        Int si = mir.dot(xi);
        if (si == 0) continue;  // the ray lies in the wall
        for (Index j = 0; j < cm.rays.cols() && out.compatible; ++j) {
          VecZ xj = cm.rays.col(j);
          Int sj = mir.dot(xj);
          if (sj == 0) continue;
          Rat alpha = make_rat(si, -sj);  // positive: the rays straddle the mirror
          VecQ target = to_rat(xi) + alpha * to_rat(xj);
          Rat rhs(0);
          if (tau.cols() == 0) {
            for (Index t = 0; t < target.size(); ++t)
              if (target[t] != 0)
                throw std::logic_error("fan_compat_check: wall span misses the crossing combination");
          } else {
            VecQ coeff = solve(tau_q, target);
            for (Index t = 0; t < coeff.size(); ++t) rhs += coeff[t] * tau_vals[t];
          }
          if (f.value(xi) + alpha * f.value(xj) < rhs) {
            out.compatible = false;
            out.violation = "opposite crossings dip below the wall values";
            out.involved.push_back(xi);
            out.involved.push_back(xj);
            for (Index t = 0; t < tau.cols(); ++t) out.involved.push_back(tau.col(t));
          }
        }
      }
      if (!out.compatible) break;
    }
  }

  // Over A_n the crossings are the +-indicator vectors and the verdict must
  // coincide with the pair inequalities of the induced bounds; the two
  // criteria are computed independently, so disagreement is a hard fault.
  if (r == builtin("A_n", n)) {
    const unsigned m = 1u << n;
    std::vector<Rat> bv(m), av(m);
    for (unsigned s = 1; s < m; ++s) {
      VecZ ind = indicator_vector(s, n);
      bv[s] = f.value(ind);
      av[s] = -f.value(VecZ(-ind));
    }
    SetFunction b(n, std::move(bv));
    SetFunction a(n, std::move(av));
    if (is_strong_pair(b, a) != out.compatible)
      throw std::logic_error("fan_compat_check: relation verdict disagrees with the bound-pair criterion");
  }
  return out;
}

bool sigma_refines_normal_fan(const RatPolytope& p, const UnimodularSystem& r) {
  if (p.ambient_rank() != r.ambient_rank())
    throw std::invalid_argument("sigma_refines_normal_fan: ambient rank mismatch");
  const bool by_edges = is_r_polytope(p, r);

  // Independent route: a chamber lies inside one normal-fan cone iff the
  // maximizer at an interior point (the ray sum) is unique and stays maximal
  // at every generator, lineality included.
  bool by_chambers = true;
  const std::vector<VecQ>& verts = p.vertices();
  for (const Cone& c : fan_sigma(r).maximal_cones()) {
    VecZ xi0 = VecZ::Zero(p.ambient_rank());
    for (Index j = 0; j < c.rays.cols(); ++j) xi0 += c.rays.col(j);
    VecQ xi0q = to_rat(xi0);
    std::vector<Index> best;
    Rat best_val(0);
    for (Index v = 0; v < static_cast<Index>(verts.size()); ++v) {
      Rat val = xi0q.dot(verts[v]);
      if (best.empty() || val > best_val) {
        best = {v};
        best_val = val;
      } else if (val == best_val) {
        best.push_back(v);
      }
    }
    if (best.size() != 1) {
      by_chambers = false;
      break;
    }
    const VecQ& vstar = verts[static_cast<size_t>(best.front())];
    auto maximizes = [&](const VecZ& xi) { return to_rat(xi).dot(vstar) == support_value(p, xi); };
    bool ok = true;
    for (Index j = 0; j < c.rays.cols() && ok; ++j) ok = maximizes(c.rays.col(j));
    for (Index j = 0; j < c.lineality.cols() && ok; ++j)
      ok = maximizes(c.lineality.col(j)) && maximizes(VecZ(-c.lineality.col(j)));
    if (!ok) {
      by_chambers = false;
      break;
    }
  }

  if (by_edges != by_chambers)
    throw std::logic_error("sigma_refines_normal_fan: edge and chamber criteria disagree");
  return by_edges;
}

ZonotopeComplement zonotope_complement(const RatPolytope& p, const UnimodularSystem& r,
                                       long cap) {
  if (cap < 1) throw std::invalid_argument("zonotope_complement: cap must be positive");
  if (!sigma_refines_normal_fan(p, r))
    throw std::invalid_argument("zonotope_complement: chamber fan does not refine the normal fan");
  const Index n = r.ambient_rank();

  RatPolytope z = RatPolytope::from_points({VecQ::Zero(n)});
  for (const VecZ& rep : r.line_reps()) {
    VecQ q = to_rat(rep);
    z = minkowski_sum(z, RatPolytope::from_points({q, VecQ(-q)}));
  }

  std::vector<VecZ> xs = crossings(r);
  std::vector<Cone> chambers = fan_sigma(r).maximal_cones();
  for (long k = 1; k <= cap; ++k) {
    std::vector<std::pair<VecZ, Rat>> vals;
    vals.reserve(xs.size());
    for (const VecZ& xi : xs)
      vals.emplace_back(xi, Rat(k) * support_value(z, xi) - support_value(p, xi));
    FanFunction g(r, std::move(vals));
    if (!fan_compat_check(g).compatible) continue;

    // The slack is convex and linear on every chamber; its vertices are the
    // per-chamber linear pieces, pinned by the values on the chamber rays.
    std::vector<VecQ> pieces;
    pieces.reserve(chambers.size());
    for (const Cone& c : chambers) {
      MatQ a(c.rays.cols(), n);
      VecQ rhs(c.rays.cols());
      for (Index j = 0; j < c.rays.cols(); ++j) {
        VecZ xi = c.rays.col(j);
        a.row(j) = to_rat(xi).transpose();
        rhs[j] = g.value(xi);
      }
      pieces.push_back(solve(a, rhs));
    }
    RatPolytope comp = RatPolytope::from_points(pieces);

    std::vector<VecQ> scaled;
    scaled.reserve(z.vertices().size());
    for (const VecQ& v : z.vertices()) scaled.push_back(Rat(k) * v);
    if (minkowski_sum(p, comp) != RatPolytope::from_points(scaled))
      throw std::logic_error("zonotope_complement: compatible slack fails the exact sum check");
    return {k, comp};
  }
  throw std::runtime_error("zonotope_complement: no complement within dilation cap " +
                           std::to_string(cap));
}

}  // namespace dcx
