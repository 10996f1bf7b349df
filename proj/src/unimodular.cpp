#include "dcx/unimodular.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dcx/normal_forms.hpp"

namespace dcx {

namespace {

// Both signs of every nonzero vector, deduplicated and lex-sorted.
std::vector<VecZ> symmetrized(const std::vector<VecZ>& vectors, Index ambient) {
  std::vector<VecZ> both;
  for (const VecZ& v : vectors) {
    if (gcd_of(v) == 0) continue;
    both.push_back(v);
    both.push_back(-v);
  }
  return columns_of(sorted_unique_columns(matrix_from_columns(both, ambient)));
}

std::vector<VecZ> line_representatives(const std::vector<VecZ>& roots, Index ambient) {
  std::vector<VecZ> reps;
  for (const VecZ& v : roots) reps.push_back(line_representative(v));
  return columns_of(sorted_unique_columns(matrix_from_columns(reps, ambient)));
}

// First (in DFS order) linearly independent subset spanning a non-pure
// sublattice; subsets of independent sets are independent, so restricting the
// walk to independent prefixes reaches every independent subset.
std::optional<std::vector<VecZ>> find_impure_subset(const std::vector<VecZ>& reps,
                                                    Index ambient) {
  std::vector<VecZ> chosen;
  std::function<std::optional<std::vector<VecZ>>(size_t)> walk =
      [&](size_t start) -> std::optional<std::vector<VecZ>> {
    for (size_t j = start; j < reps.size(); ++j) {
      chosen.push_back(reps[j]);
      MatZ m = matrix_from_columns(chosen, ambient);
      if (rank_of(m) == static_cast<Index>(chosen.size())) {
        if (!is_pure(Sublattice::from_generators(m))) return chosen;
        if (auto hit = walk(j + 1)) return hit;
      }
      chosen.pop_back();
    }
    return std::nullopt;
  };
  if (ambient == 0) return std::nullopt;
  return walk(0);
}

// Ghouila-Houri row criterion for total unimodularity: every row subset
// admits a +/-1 signing whose signed sum has entries in {-1,0,1}.
bool totally_unimodular(const MatZ& c) {
  const Index d = c.rows(), m = c.cols();
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < m; ++j)
      if (c(i, j) < -1 || c(i, j) > 1) return false;
  for (unsigned long mask = 1; mask < (1ul << d); ++mask) {
    std::vector<Index> rows;
    for (Index i = 0; i < d; ++i)
      if (mask & (1ul << i)) rows.push_back(i);
    const size_t k = rows.size();
    bool signed_ok = false;
    for (unsigned long s = 0; s < (1ul << (k - 1)) && !signed_ok; ++s) {
      VecZ sum = VecZ::Zero(m);
      sum += c.row(rows[0]).transpose();  // first sign fixed by symmetry
      for (size_t t = 1; t < k; ++t)
        sum += (s & (1ul << (t - 1))) ? VecZ(-c.row(rows[t]).transpose())
                                      : VecZ(c.row(rows[t]).transpose());
      signed_ok = true;
      for (Index j = 0; j < m && signed_ok; ++j)
        signed_ok = sum[j] >= -1 && sum[j] <= 1;
    }
    if (!signed_ok) return false;
  }
  return true;
}

// Coordinates of the representatives in a greedy root basis of their span.
// Returns nullopt when the basis spans a non-pure sublattice or some
// representative falls outside it — either way the system is not unimodular,
// matching the purity route.
std::optional<MatZ> basis_coordinates(const std::vector<VecZ>& reps, Index ambient) {
  std::vector<VecZ> basis;
  for (const VecZ& v : reps) {
    basis.push_back(v);
    if (rank_of(matrix_from_columns(basis, ambient)) < static_cast<Index>(basis.size()))
      basis.pop_back();
  }
  const Index d = static_cast<Index>(basis.size());
  if (!is_pure(Sublattice::from_generators(matrix_from_columns(basis, ambient))))
    return std::nullopt;
  MatQ b = to_rat(matrix_from_columns(basis, ambient));
  MatZ coords(d, static_cast<Index>(reps.size()));
  for (size_t j = 0; j < reps.size(); ++j) {
    VecQ x;
    try {
      x = solve(b, to_rat(reps[j]));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    for (Index i = 0; i < d; ++i) {
      if (!is_integer(x[i])) return std::nullopt;
      coords(i, static_cast<Index>(j)) = num(x[i]);
    }
  }
  return coords;
}

Sublattice line_of(const VecZ& v) {
  MatZ col(v.size(), 1);
  col.col(0) = v;
  return Sublattice::from_generators(col);
}

}  // namespace

UnimodularSystem::UnimodularSystem(Index ambient, std::vector<VecZ> roots,
                                   std::vector<VecZ> reps, Index rank)
    : ambient_(ambient), roots_(std::move(roots)), reps_(std::move(reps)), rank_(rank) {}

UnimodularSystem UnimodularSystem::trusted(Index ambient, const std::vector<VecZ>& vectors) {
  std::vector<VecZ> roots = symmetrized(vectors, ambient);
  std::vector<VecZ> reps = line_representatives(roots, ambient);
  Index rank = rank_of(matrix_from_columns(reps, ambient));
  return UnimodularSystem(ambient, std::move(roots), std::move(reps), rank);
}

bool UnimodularSystem::contains_root(const VecZ& v) const {
  return std::binary_search(roots_.begin(), roots_.end(), v, VecZLess{});
}

bool UnimodularSystem::operator==(const UnimodularSystem& o) const {
  return ambient_ == o.ambient_ && roots_ == o.roots_;
}

std::variant<UnimodularSystem, UnimodularFailure> validate_unimodular(
    Index ambient, const std::vector<VecZ>& vectors) {
  if (ambient < 0) throw std::invalid_argument("validate_unimodular: negative ambient rank");
  for (const VecZ& v : vectors) {
    if (v.size() != ambient)
      throw std::invalid_argument("validate_unimodular: vector dimension mismatch");
    Int g = gcd_of(v);
    if (g > 1) return UnimodularFailure{{v}};  // {v} spans an index-g sublattice of its line
  }

  std::vector<VecZ> roots = symmetrized(vectors, ambient);
  std::vector<VecZ> reps = line_representatives(roots, ambient);

  auto witness = find_impure_subset(reps, ambient);

  // Independent cross-check: valid iff the coordinate matrix in a root basis
  // of the span is totally unimodular.
  const Index d = rank_of(matrix_from_columns(reps, ambient));
  if (!reps.empty() && d <= 12) {
    auto coords = basis_coordinates(reps, ambient);
    bool tu = coords.has_value() && totally_unimodular(*coords);
    if (tu == witness.has_value())
      throw std::logic_error("validate_unimodular: purity and TU checks disagree");
  }

  if (witness) return UnimodularFailure{std::move(*witness)};
  return UnimodularSystem(ambient, std::move(roots), std::move(reps), d);
}

namespace {

UnimodularSystem validated_or_bug(Index ambient, const std::vector<VecZ>& vectors,
                                  const char* who) {
  auto res = validate_unimodular(ambient, vectors);
  if (std::holds_alternative<UnimodularFailure>(res))
    throw std::logic_error(std::string(who) + ": construction must be unimodular");
  return std::get<UnimodularSystem>(std::move(res));
}

VecZ unit(Index n, Index i) {
  VecZ v = VecZ::Zero(n);
  v[i] = 1;
  return v;
}

}  // namespace

UnimodularSystem builtin(const std::string& name, Index size) {
  std::vector<VecZ> vs;
  if (name == "A_n") {
    if (size < 1) throw std::invalid_argument("builtin: A_n needs size >= 1");
    for (Index i = 0; i < size; ++i) vs.push_back(unit(size, i));
    for (Index i = 0; i < size; ++i)
      for (Index j = i + 1; j < size; ++j) vs.push_back(VecZ(unit(size, i) - unit(size, j)));
    return validated_or_bug(size, vs, "builtin A_n");
  }
  if (name == "A(N)") {
    if (size < 1) throw std::invalid_argument("builtin: A(N) needs size >= 1");
    for (Index i = 0; i < size; ++i)
      for (Index j = i + 1; j < size; ++j) vs.push_back(VecZ(unit(size, i) - unit(size, j)));
    return validated_or_bug(size, vs, "builtin A(N)");
  }
  if (name == "E5") {
    if (size != 5) throw std::invalid_argument("builtin: E5 lives in rank 5");
    for (Index i = 0; i < 5; ++i) vs.push_back(unit(5, i));
    for (Index i = 0; i < 5; ++i) {
      VecZ v = unit(5, i) - unit(5, (i + 1) % 5) + unit(5, (i + 2) % 5);
      vs.push_back(v);
    }
    return validated_or_bug(5, vs, "builtin E5");
  }
  if (name == "D_K33") {
    if (size != 4) throw std::invalid_argument("builtin: D_K33 lives in rank 4");
    for (Index i = 0; i < 4; ++i) vs.push_back(unit(4, i));
    for (Index i = 0; i < 4; ++i) vs.push_back(VecZ(unit(4, i) + unit(4, (i + 1) % 4)));
    vs.push_back(VecZ(unit(4, 0) + unit(4, 1) + unit(4, 2) + unit(4, 3)));
    return validated_or_bug(4, vs, "builtin D_K33");
  }
  throw std::invalid_argument("builtin: unknown system name '" + name + "'");
}

UnimodularSystem cographic(const Graph& g) {
  const Index nv = g.vertex_count;
  if (nv < 1) throw std::invalid_argument("cographic: graph needs vertices");
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || u >= nv || v < 0 || v >= nv)
      throw std::invalid_argument("cographic: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("cographic: self-loops not allowed");
  }

  std::vector<std::vector<std::pair<Index, size_t>>> adj(static_cast<size_t>(nv));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    adj[static_cast<size_t>(g.edges[e].first)].push_back({g.edges[e].second, e});
    adj[static_cast<size_t>(g.edges[e].second)].push_back({g.edges[e].first, e});
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  // Lexicographically-first DFS tree from vertex 0.
  std::vector<bool> visited(static_cast<size_t>(nv), false);
  std::vector<bool> is_tree(g.edges.size(), false);
  std::vector<Index> parent(static_cast<size_t>(nv), -1);
  std::vector<size_t> parent_edge(static_cast<size_t>(nv), 0);
  std::function<void(Index)> dfs = [&](Index u) {
    visited[static_cast<size_t>(u)] = true;
    for (const auto& [w, e] : adj[static_cast<size_t>(u)])
      if (!visited[static_cast<size_t>(w)]) {
        is_tree[e] = true;
        parent[static_cast<size_t>(w)] = u;
        parent_edge[static_cast<size_t>(w)] = e;
        dfs(w);
      }
  };
  dfs(0);
  for (Index v = 0; v < nv; ++v)
    if (!visited[static_cast<size_t>(v)])
      throw std::invalid_argument("cographic: graph must be connected");

  std::vector<size_t> nontree;
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (!is_tree[e]) nontree.push_back(e);
  const Index k = static_cast<Index>(nontree.size());

  // classes[e][c] = signed incidence of edge e in the fundamental cycle of
  // the c-th non-tree edge (the cycle runs along that edge's orientation).
  std::vector<VecZ> classes(g.edges.size(), VecZ::Zero(k));
  std::vector<Index> depth(static_cast<size_t>(nv), 0);
  std::function<Index(Index)> depth_of = [&](Index v) -> Index {
    return parent[static_cast<size_t>(v)] < 0 ? 0 : depth_of(parent[static_cast<size_t>(v)]) + 1;
  };
  for (Index v = 0; v < nv; ++v) depth[static_cast<size_t>(v)] = depth_of(v);

  for (Index c = 0; c < k; ++c) {
    auto [u, v] = g.edges[nontree[static_cast<size_t>(c)]];
    classes[nontree[static_cast<size_t>(c)]][c] = 1;
    // Tree path v -> u: lift the deeper endpoint until the walks merge.
    Index x = v, y = u;
    auto step = [&](Index from, int dir) {  // dir +1: traversed child->parent
      size_t e = parent_edge[static_cast<size_t>(from)];
      // Cycle leaves v upward and descends into u: child->parent steps on the
      // v-side run with sign by orientation; u-side steps run reversed.
      int sign = g.edges[e].first == from ? 1 : -1;
      classes[e][c] += Int(sign * dir);
    };
    while (x != y) {
      if (depth[static_cast<size_t>(x)] >= depth[static_cast<size_t>(y)]) {
        step(x, 1);
        x = parent[static_cast<size_t>(x)];
      } else {
        step(y, -1);
        y = parent[static_cast<size_t>(y)];
      }
    }
  }

  std::vector<VecZ> vecs(classes.begin(), classes.end());
  return validated_or_bug(k, vecs, "cographic");
}

PureSystem::PureSystem(Index ambient, std::vector<Sublattice> flats) : ambient_(ambient) {
  if (ambient < 1) throw std::invalid_argument("PureSystem: ambient rank must be positive");
  for (const Sublattice& s : flats) {
    if (s.ambient_rank() != ambient)
      throw std::invalid_argument("PureSystem: flat ambient mismatch");
    if (!is_pure(s)) throw std::invalid_argument("PureSystem: flats must be pure");
  }
  std::sort(flats.begin(), flats.end());
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  // Mutual purity == purity of the sum; the cheap criterion keeps large
  // systems (E5 has 162 flats) affordable to validate pairwise.
  for (size_t i = 0; i < flats.size(); ++i)
    for (size_t j = i + 1; j < flats.size(); ++j)
      if (!is_pure(sum_lattices(flats[i], flats[j])))
        throw std::invalid_argument("PureSystem: flats must be pairwise mutually pure");
  flats_ = std::move(flats);
}

bool PureSystem::contains(const Sublattice& s) const {
  return std::binary_search(flats_.begin(), flats_.end(), s);
}

bool PureSystem::operator==(const PureSystem& o) const {
  return ambient_ == o.ambient_ && flats_ == o.flats_;
}

PureSystem flats(const UnimodularSystem& r) {
  const Index n = r.ambient_rank();
  if (n < 1) throw std::invalid_argument("flats: ambient rank must be positive");

  std::vector<Sublattice> lines;
  for (const VecZ& rep : r.line_reps()) lines.push_back(line_of(rep));

  // Saturated subset spans = closure of the root lines under saturated sum.
  std::set<Sublattice> known;
  known.insert(Sublattice(n));
  std::vector<Sublattice> queue;
  for (const Sublattice& l : lines)
    if (known.insert(l).second) queue.push_back(l);
  while (!queue.empty()) {
    Sublattice cur = std::move(queue.back());
    queue.pop_back();
    for (const Sublattice& l : lines) {
      Sublattice next = saturation(sum_lattices(cur, l)).sat;
      if (known.insert(next).second) queue.push_back(next);
    }
  }
  return PureSystem(n, std::vector<Sublattice>(known.begin(), known.end()));
}

PureSystem dual_system(const PureSystem& u) {
  std::vector<Sublattice> duals;
  for (const Sublattice& s : u.flats()) duals.push_back(orthogonal_lattice(s));
  return PureSystem(u.ambient_rank(), std::move(duals));
}

bool is_sum_closed(const PureSystem& u) {
  const auto& fl = u.flats();
  for (size_t i = 0; i < fl.size(); ++i)
    for (size_t j = i + 1; j < fl.size(); ++j)
      if (!u.contains(sum_lattices(fl[i], fl[j]))) return false;
  return true;
}

bool is_intersection_closed(const PureSystem& u) {
  const auto& fl = u.flats();
  for (size_t i = 0; i < fl.size(); ++i)
    for (size_t j = i + 1; j < fl.size(); ++j)
      if (!u.contains(intersect_lattices(fl[i], fl[j]))) return false;
  return true;
}

bool is_maximal_unimodular(const UnimodularSystem& r) {
  const Index n = r.ambient_rank();
  if (r.rank() < n) return false;  // any basis completion of the span extends r
  if (n == 0) return true;

  std::vector<VecZ> basis;
  for (const VecZ& rep : r.line_reps()) {
    basis.push_back(rep);
    if (rank_of(matrix_from_columns(basis, n)) < static_cast<Index>(basis.size()))
      basis.pop_back();
    if (static_cast<Index>(basis.size()) == n) break;
  }
  MatZ b = matrix_from_columns(basis, n);
  Int det = det_integer(b);
  if (det != 1 && det != -1)
    throw std::logic_error("is_maximal_unimodular: search unsound, roots hold no lattice basis");

  PureSystem fl = flats(r);
  std::vector<Sublattice> proper;
  for (const Sublattice& f : fl.flats())
    if (f.rank() < n) proper.push_back(f);

  // v extends r iff F + Zv stays pure for every flat F; candidates have
  // {-1,0,1} coordinates in the root basis, first nonzero +1.
  std::vector<int> c(static_cast<size_t>(n), 0);
  while (true) {
    // Base-3 odometer over digit cycle 0 -> 1 -> -1 -> carry.
    size_t pos = 0;
    while (pos < c.size() && c[pos] == -1) c[pos++] = 0;
    if (pos == c.size()) break;
    c[pos] = c[pos] == 0 ? 1 : -1;
    size_t first = 0;
    while (first < c.size() && c[first] == 0) ++first;
    if (first == c.size() || c[first] != 1) continue;  // sign class and zero skipped

    VecZ coeff(n);
    for (Index i = 0; i < n; ++i) coeff[i] = Int(c[static_cast<size_t>(i)]);
    VecZ v = b * coeff;
    if (r.contains_root(v)) continue;

    bool addable = true;
    for (const Sublattice& f : proper)
      if (!is_pure(sum_lattices(f, line_of(v)))) {
        addable = false;
        break;
      }
    if (addable) return false;
  }
  return true;
}

RatPolytope star_polytope(const UnimodularSystem& r) {
  const Index n = r.ambient_rank();
  if (n < 1 || r.rank() < n)
    throw std::invalid_argument("star_polytope: full-dimensional system required");
  std::vector<Facet> fs;
  for (const VecZ& root : r.roots()) fs.push_back({root, Rat(1)});
  auto p = RatPolytope::from_inequalities(n, fs);
  if (!p) throw std::logic_error("star_polytope: star cannot be empty, it contains 0");
  return *p;
}

std::vector<VecZ> coroots(const UnimodularSystem& r) {
  return integer_points_in(star_polytope(r));
}

std::vector<VecZ> crossings(const UnimodularSystem& r) {
  const Index n = r.ambient_rank();
  if (n < 1 || r.rank() < n)
    throw std::invalid_argument("crossings: full-dimensional system required");
  std::vector<VecZ> out;
  PureSystem fl = flats(r);
  for (const Sublattice& f : fl.flats()) {
    if (f.rank() != n - 1) continue;
    Sublattice orth = orthogonal_lattice(f);
    VecZ g = orth.basis().col(0);
    out.push_back(g);
    out.push_back(-g);
  }
  return columns_of(sorted_unique_columns(matrix_from_columns(out, n)));
}

namespace {

bool polytope_less(const RatPolytope& a, const RatPolytope& b) {
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  for (size_t i = 0; i < va.size() && i < vb.size(); ++i)
    for (Index j = 0; j < va[i].size(); ++j)
      if (va[i][j] != vb[i][j]) return va[i][j] < vb[i][j];
  return va.size() < vb.size();
}

}  // namespace

std::vector<RatPolytope> dicing_chambers(const UnimodularSystem& r, const VecZ& lo,
                                         const VecZ& hi) {
  const Index n = r.ambient_rank();
  if (n < 1 || r.rank() < n)
    throw std::invalid_argument("dicing_chambers: full-dimensional system required");
  if (lo.size() != n || hi.size() != n)
    throw std::invalid_argument("dicing_chambers: box dimension mismatch");
  for (Index i = 0; i < n; ++i)
    if (lo[i] > hi[i]) throw std::invalid_argument("dicing_chambers: empty box");

  std::vector<Facet> box_facets;
  for (Index i = 0; i < n; ++i) {
    VecZ e = VecZ::Zero(n);
    e[i] = 1;
    box_facets.push_back({e, Rat(hi[i])});
    box_facets.push_back({VecZ(-e), Rat(-lo[i])});
  }
  auto box = RatPolytope::from_inequalities(n, box_facets);
  if (!box) throw std::logic_error("dicing_chambers: box cannot be empty");

  std::vector<RatPolytope> chambers{*box};
  for (const VecZ& rep : r.line_reps()) {
    Int a_lo = ceil_int(-support_value(*box, VecZ(-rep)));
    Int a_hi = floor_int(support_value(*box, rep));
    for (Int a = a_lo; a <= a_hi; a += 1) {
      std::vector<RatPolytope> next;
      for (const RatPolytope& c : chambers) {
        for (int side : {+1, -1}) {
          std::vector<Facet> fs = c.facets();
          fs.push_back({VecZ(Int(side) * rep), Rat(Int(side) * a)});
          auto half = RatPolytope::from_inequalities(n, fs);
          if (half && half->dim() == n) next.push_back(std::move(*half));
        }
      }
      chambers = std::move(next);
      if (static_cast<long long>(chambers.size()) > enum_budget())
        throw std::runtime_error("dicing_chambers: enumeration budget exceeded");
    }
  }
  std::sort(chambers.begin(), chambers.end(), polytope_less);
  return chambers;
}

Fan fan_sigma(const UnimodularSystem& r) {
  if (r.ambient_rank() < 1) throw std::invalid_argument("fan_sigma: ambient rank must be positive");
  return arrangement_fan(r.line_reps(), r.ambient_rank());
}

UnimodularSystem direct_sum(const UnimodularSystem& a, const UnimodularSystem& b) {
  const Index n1 = a.ambient_rank(), n2 = b.ambient_rank();
  std::vector<VecZ> vs;
  for (const VecZ& v : a.line_reps()) {
    VecZ w = VecZ::Zero(n1 + n2);
    w.head(n1) = v;
    vs.push_back(w);
  }
  for (const VecZ& v : b.line_reps()) {
    VecZ w = VecZ::Zero(n1 + n2);
    w.tail(n2) = v;
    vs.push_back(w);
  }
  // Unimodularity survives block direct sums, so revalidation is skipped.
  return UnimodularSystem::trusted(n1 + n2, vs);
}

UnimodularSystem project_along_root(const UnimodularSystem& r, const VecZ& root) {
  if (root.size() != r.ambient_rank() || !r.contains_root(root))
    throw std::invalid_argument("project_along_root: root not in system");
  const Index n = r.ambient_rank();

  MatZ col(n, 1);
  col.col(0) = root;
  SnfResult snf = smith_normal_form(col);
  if (snf.d.size() != 1 || snf.d[0] != 1)
    throw std::logic_error("project_along_root: root must be primitive");
  MatZ proj = snf.left.bottomRows(n - 1);  // kills exactly Z*root

  std::vector<VecZ> images;
  for (const VecZ& v : r.roots()) images.push_back(proj * v);
  auto res = validate_unimodular(n - 1, images);
  if (std::holds_alternative<UnimodularFailure>(res))
    throw std::logic_error("project_along_root: projected system must stay unimodular");
  return std::get<UnimodularSystem>(std::move(res));
}

Decomposition decompose_a1_a2(const UnimodularSystem& r) {
  if (!is_intersection_closed(flats(r))) return Decomposition{false, {}};

  const auto& reps = r.line_reps();
  const size_t m = reps.size();
  Decomposition out;
  out.closed = true;
  if (m == 0) return out;
  const Index n = r.ambient_rank();

  // Two root lines belong to one block iff their rank-2 flat holds a third.
  std::vector<size_t> uf(m);
  for (size_t i = 0; i < m; ++i) uf[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    return uf[x] == x ? x : uf[x] = find(uf[x]);
  };
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j) {
      Sublattice plane = saturation(sum_lattices(line_of(reps[i]), line_of(reps[j]))).sat;
      bool third = false;
      for (size_t k = 0; k < m && !third; ++k)
        third = k != i && k != j && plane.contains(reps[k]);
      if (third) uf[find(i)] = find(j);
    }

  std::vector<std::vector<size_t>> groups(m);
  for (size_t i = 0; i < m; ++i) groups[find(i)].push_back(i);

  Index rank_sum = 0;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    Decomposition::Block block;
    if (g.size() == 1) {
      block.type = "A1";
      rank_sum += 1;
    } else if (g.size() == 3) {
      // The third line must read +/-b1 +/- b2 in the first two lines' basis.
      MatQ b(n, 2);
      b.col(0) = to_rat(reps[g[0]]);
      b.col(1) = to_rat(reps[g[1]]);
      VecQ c;
      try {
        c = solve(b, to_rat(reps[g[2]]));
      } catch (const std::invalid_argument&) {
        throw std::logic_error("decompose_a1_a2: block contradicts intersection-closedness");
      }
      if (!is_integer(c[0]) || !is_integer(c[1]) || abs(num(c[0])) != 1 ||
          abs(num(c[1])) != 1)
        throw std::logic_error("decompose_a1_a2: block contradicts intersection-closedness");
      block.type = "A2";
      rank_sum += 2;
    } else {
      throw std::logic_error("decompose_a1_a2: block contradicts intersection-closedness");
    }
    std::vector<VecZ> roots;
    for (size_t i : g) {
      roots.push_back(reps[i]);
      roots.push_back(-reps[i]);
    }
    block.roots = columns_of(sorted_unique_columns(matrix_from_columns(roots, n)));
    out.blocks.push_back(std::move(block));
  }
  if (rank_sum != r.rank())
    throw std::logic_error("decompose_a1_a2: blocks do not span independently");

  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return lex_less(a.roots[0], b.roots[0]); });
  return out;
}

UnimodularSystem laminar_system(Index ground, const std::vector<std::vector<Index>>& family) {
  if (ground < 1) throw std::invalid_argument("laminar_system: ground set must be nonempty");

  std::set<std::vector<Index>> sets;
  for (auto t : family) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    for (Index i : t)
      if (i < 0 || i >= ground)
        throw std::invalid_argument("laminar_system: element out of range");
    if (!t.empty()) sets.insert(std::move(t));
  }

  std::vector<std::vector<Index>> list(sets.begin(), sets.end());
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = i + 1; j < list.size(); ++j) {
      std::vector<Index> meet;
      std::set_intersection(list[i].begin(), list[i].end(), list[j].begin(), list[j].end(),
                            std::back_inserter(meet));
      if (meet.empty() || meet == list[i] || meet == list[j]) continue;
      std::ostringstream msg;
      msg << "laminar_system: family is not laminar, witness {";
      for (size_t k = 0; k < list[i].size(); ++k) msg << (k ? "," : "") << list[i][k];
      msg << "} vs {";
      for (size_t k = 0; k < list[j].size(); ++k) msg << (k ? "," : "") << list[j][k];
      msg << "}";
      throw std::invalid_argument(msg.str());
    }

  for (Index i = 0; i < ground; ++i) sets.insert({i});
  std::vector<VecZ> vs;
  for (const auto& t : sets) {
    VecZ v = VecZ::Zero(ground);
    for (Index i : t) v[i] = 1;
    vs.push_back(v);
  }
  return validated_or_bug(ground, vs, "laminar_system");
}

}  // namespace dcx
