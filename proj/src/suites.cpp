#include "dcx/suites.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "dcx/dcclass.hpp"
#include "dcx/lattice.hpp"
#include "dcx/polymatroid.hpp"
#include "dcx/polytope.hpp"
#include "dcx/random.hpp"
#include "dcx/types.hpp"
#include "dcx/unimodular.hpp"

namespace dcx {

namespace {

// Accumulates "ok:"/"FAIL:" lines; the text depends only on the seed, never
// on timing or addresses, so reports are byte-identical across runs.
class Suite {
 public:
  void check(bool ok, const std::string& what) {
    out_ << (ok ? "ok: " : "FAIL: ") << what << "\n";
    passed_ = passed_ && ok;
  }
  void note(const std::string& what) { out_ << "note: " << what << "\n"; }

  SuiteResult finish(const std::string& name) && {
    return SuiteResult{name, std::move(out_).str(), passed_};
  }

 private:
  std::ostringstream out_;
  bool passed_ = true;
};

std::string plural(std::size_t n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

VecZ zvec(std::initializer_list<long> xs) {
  VecZ v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v[i++] = Int(x);
  return v;
}

VecQ qvec(std::initializer_list<long> xs) {
  VecQ v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v[i++] = Rat(x);
  return v;
}

Sublattice line_of(const VecZ& v) {
  MatZ m(v.size(), 1);
  m.col(0) = v;
  return Sublattice::from_generators(m);
}

VecZ indicator(unsigned mask, Index n) {
  VecZ v = VecZ::Zero(n);
  for (Index i = 0; i < n; ++i)
    if (mask & (1u << i)) v[i] = 1;
  return v;
}

RatPolytope translate(const RatPolytope& p, const VecZ& t) {
  std::vector<VecQ> pts;
  VecQ tq = to_rat(t);
  for (const VecQ& v : p.vertices()) pts.push_back(VecQ(v + tq));
  return RatPolytope::from_points(pts);
}

// Minkowski sum of root segments [lo_r * r, hi_r * r] with random two-sided
// integer bounds, translated by t; a root-edged polytope by construction.
RatPolytope random_zonotope(Rng& rng, const UnimodularSystem& r, long max_repeat,
                            const VecZ& t) {
  RatPolytope p = RatPolytope::from_points({to_rat(t)});
  for (const VecZ& rep : r.line_reps()) {
    long lo = -rng.range(0, max_repeat);
    long hi = rng.range(0, max_repeat);
    if (lo == 0 && hi == 0) continue;
    VecQ q = to_rat(rep);
    p = minkowski_sum(p, RatPolytope::from_points({Rat(lo) * q, Rat(hi) * q}));
  }
  return p;
}

// Random integer submodular function: a sum of weighted coverage terms
// w * [S hits A] (each submodular) and a modular part.
SetFunction random_submodular(Rng& rng, Index n, long max_weight, long modular_bound) {
  std::vector<std::pair<long, unsigned>> terms;
  const long count = rng.range(1, 2);
  for (long j = 0; j < count; ++j)
    terms.push_back({rng.range(0, max_weight), static_cast<unsigned>(rng.range(1, (1 << n) - 1))});
  VecZ x = random_vector(rng, n, -modular_bound, modular_bound);
  std::vector<Rat> v(1u << n);
  for (unsigned s = 0; s < v.size(); ++s) {
    Rat val(0);
    for (const auto& [w, covered] : terms)
      if (s & covered) val += Rat(w);
    for (Index i = 0; i < n; ++i)
      if (s & (1u << i)) val += to_rat(x[i]);
    v[s] = val;
  }
  return SetFunction(n, std::move(v));
}

SetFunction random_table(Rng& rng, Index n) {
  std::vector<Rat> v(1u << n);
  for (unsigned s = 1; s < v.size(); ++s) v[s] = Rat(rng.range(-3, 3));
  return SetFunction(n, std::move(v));
}

// Tight upper/lower set-function bounds of a polytope, read off its support
// values at +/- indicator vectors; a strong pair whenever q is root-edged.
std::pair<SetFunction, SetFunction> support_bounds(const RatPolytope& q) {
  const Index n = q.ambient_rank();
  std::vector<Rat> b(1u << n), a(1u << n);
  for (unsigned s = 1; s < b.size(); ++s) {
    VecZ ind = indicator(s, n);
    b[s] = support_value(q, ind);
    a[s] = -support_value(q, VecZ(-ind));
  }
  return {SetFunction(n, std::move(b)), SetFunction(n, std::move(a))};
}

// Restriction of a submodular function on {0..n} to {0..n-1}, paired with the
// complementary lower bound a(T) = b(full) - b(full minus T); always a valid
// bound pair, and its polytope is root-edged for the unit-and-difference
// system on n coordinates.
StrongPair restricted_pair(const SetFunction& b) {
  const Index n = b.ground_size() - 1;
  const unsigned full = (1u << b.ground_size()) - 1;
  std::vector<Rat> upper(1u << n), lower(1u << n);
  for (unsigned t = 0; t < (1u << n); ++t) {
    upper[t] = b.value(t);
    lower[t] = b.value(full) - b.value(full ^ t);
  }
  return StrongPair(SetFunction(n, std::move(upper)), SetFunction(n, std::move(lower)));
}

void suite_builtin_counts(Suite& s, Rng&) {
  for (const auto& [name, size, count] :
       {std::tuple<const char*, Index, std::size_t>{"E5", 5, 20},
        std::tuple<const char*, Index, std::size_t>{"D_K33", 4, 18}}) {
    UnimodularSystem r = builtin(name, size);
    s.check(r.roots().size() == count,
            std::string(name) + " carries " + plural(count, "nonzero root"));
    auto v = validate_unimodular(size, r.roots());
    s.check(std::holds_alternative<UnimodularSystem>(v),
            std::string(name) + " roots revalidate as a unimodular system");
  }
}

void suite_maximality(Suite& s, Rng&) {
  for (Index n : {2, 3, 4}) {
    s.check(is_maximal_unimodular(builtin("A_n", n)),
            "A_" + std::to_string(n) + " is maximal");
  }
  s.check(is_maximal_unimodular(builtin("E5", 5)), "E5 is maximal");
}

void suite_counterexample(Suite& s, Rng&) {
  LatticeSet x({zvec({0, 0}), zvec({1, 1})});
  LatticeSet y({zvec({0, 1}), zvec({1, 0})});
  s.check(is_pseudo_convex(x), "diagonal pair is pseudo-convex");
  s.check(is_pseudo_convex(y), "antidiagonal pair is pseudo-convex");
  bool disjoint = true;
  for (const VecZ& p : x.points()) disjoint = disjoint && !y.contains(p);
  s.check(disjoint, "the two sets share no point");

  SeparationResult sep = separate(x, y);
  s.check(!sep.separated(), "no integer functional separates them");
  VecQ half = VecQ::Constant(2, Rat(1, 2));
  s.check(sep.overlap_witness.has_value() && *sep.overlap_witness == half,
          "hull overlap witnessed at (1/2, 1/2)");

  s.check(!is_pseudo_convex(pointwise_sum(x, y)), "pointwise sum is not pseudo-convex");
  s.check(!check_add(x, y), "sum check rejects the pair");

  auto meet = intersect_polytopes(hull(x), hull(y));
  bool pinched = meet.has_value() && meet->vertices() == std::vector<VecQ>{half};
  s.check(pinched, "hull intersection is the single non-integer point (1/2, 1/2)");
}

void suite_saturation_index(Suite& s, Rng&) {
  Sublattice l1 = line_of(zvec({1, 1}));
  Sublattice l2 = line_of(zvec({1, -1}));
  SaturationResult sat = saturation(sum_lattices(l1, l2));
  s.check(sat.index == 2, "the two diagonal lines sum to an index-2 sublattice");
  s.check(sat.sat == Sublattice::full(2), "its saturation is the full lattice");
  s.check(!are_mutually_pure(l1, l2), "the diagonal lines are not mutually pure");
}

// One random integer root-edged polytope: a two-sided root zonotope or a
// bound-pair polytope from a restricted submodular function, both translated.
RatPolytope random_root_polytope(Rng& rng, const UnimodularSystem& r) {
  const Index n = r.ambient_rank();
  VecZ t = random_vector(rng, n, -1, 1);
  if (rng.flip()) return random_zonotope(rng, r, 1, t);
  SetFunction b = random_submodular(rng, n + 1, 2, 1);
  return translate(gpm_polytope(restricted_pair(b)), t);
}

void suite_random_pairs(Suite& s, Rng& rng) {
  for (Index n : {2, 3}) {
    UnimodularSystem r = builtin("A_n", n);
    const std::string label = "A_" + std::to_string(n);
    int in_class = 0, sums_ok = 0, meets = 0, meets_integer = 0;
    const int trials = 200;
    for (int trial = 0; trial < trials; ++trial) {
      RatPolytope p = random_root_polytope(rng, r);
      RatPolytope q = random_root_polytope(rng, r);
      if (is_r_polytope(p, r) && is_r_polytope(q, r)) ++in_class;

      LatticeSet sum = pointwise_sum(lattice_points(p), lattice_points(q));
      if (sum == lattice_points(minkowski_sum(p, q))) ++sums_ok;

      if (auto meet = intersect_polytopes(p, q)) {
        ++meets;
        if (is_lattice_polytope(*meet)) ++meets_integer;
      }
    }
    s.check(in_class == trials,
            label + ": all " + std::to_string(trials) + " sampled pairs are root-edged");
    s.check(sums_ok == trials, label + ": lattice points of every sum split as a pointwise sum");
    s.check(meets_integer == meets, label + ": all " + std::to_string(meets) +
                                        " nonempty intersections have integer vertices");
    s.check(meets >= 50, label + ": enough pairs actually intersect (" +
                             std::to_string(meets) + " of " + std::to_string(trials) + ")");
  }
}

// Independent block-shape oracle: group root lines by "their plane holds a
// third line"; the system splits into one- and three-line blocks of full
// combined rank iff components have size 1 or 3 and the ranks add up.
struct BlockShape {
  bool shaped = true;
  long singles = 0, triples = 0;
};

BlockShape block_shape(const UnimodularSystem& r) {
  const std::vector<VecZ> reps = r.line_reps();
  const std::size_t m = reps.size();
  std::vector<std::size_t> uf(m);
  std::iota(uf.begin(), uf.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    return uf[a] == a ? a : uf[a] = find(uf[a]);
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Sublattice plane = saturation(sum_lattices(line_of(reps[i]), line_of(reps[j]))).sat;
      for (std::size_t k = 0; k < m; ++k)
        if (k != i && k != j && plane.contains(reps[k])) {
          uf[find(i)] = find(j);
          break;
        }
    }

  std::vector<std::vector<std::size_t>> groups(m);
  for (std::size_t i = 0; i < m; ++i) groups[find(i)].push_back(i);

  BlockShape out;
  Index rank_sum = 0;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    if (g.size() == 1) {
      ++out.singles;
      rank_sum += 1;
    } else if (g.size() == 3) {
      MatZ three(r.ambient_rank(), 3);
      for (Index c = 0; c < 3; ++c) three.col(c) = reps[g[static_cast<std::size_t>(c)]];
      if (Sublattice::from_generators(three).rank() != 2) {
        out.shaped = false;
        return out;
      }
      ++out.triples;
      rank_sum += 2;
    } else {
      out.shaped = false;
      return out;
    }
  }
  out.shaped = rank_sum == r.rank();
  return out;
}

void suite_scan_rank3(Suite& s, Rng&) {
  // Lex-positive representatives of the 13 lines through nonzero {0,+-1}^3
  // vectors; every subset is tried as a candidate system.
  std::vector<VecZ> reps;
  for (long a = -1; a <= 1; ++a)
    for (long b = -1; b <= 1; ++b)
      for (long c = -1; c <= 1; ++c) {
        VecZ v = zvec({a, b, c});
        Index lead = 0;
        while (lead < 3 && v[lead] == 0) ++lead;
        if (lead < 3 && v[lead] == 1) reps.push_back(v);
      }
  s.check(reps.size() == 13, "13 sign classes of nonzero {0,+-1}^3 vectors");

  long valid = 0, closed_count = 0, mismatches = 0, block_mismatches = 0;
  for (unsigned mask = 1; mask < (1u << 13); ++mask) {
    std::vector<VecZ> chosen;
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (mask & (1u << i)) chosen.push_back(reps[i]);
    auto v = validate_unimodular(3, chosen);
    if (!std::holds_alternative<UnimodularSystem>(v)) continue;
    const UnimodularSystem& r = std::get<UnimodularSystem>(v);
    ++valid;

    bool closed = is_intersection_closed(flats(r));
    BlockShape shape = block_shape(r);
    if (closed != shape.shaped) ++mismatches;
    if (closed) ++closed_count;

    Decomposition dec = decompose_a1_a2(r);
    bool consistent = dec.closed == closed;
    if (consistent && closed) {
      long singles = 0, triples = 0;
      for (const auto& blk : dec.blocks) (blk.type == "A1" ? singles : triples)++;
      consistent = singles == shape.singles && triples == shape.triples;
    }
    if (!consistent) ++block_mismatches;
  }
  s.note(std::to_string(valid) + " of 8191 nonempty subsets validate as unimodular; " +
         std::to_string(closed_count) + " have intersection-closed flats");
  s.check(valid > 0 && mismatches == 0,
          "intersection-closed flats coincide with one/three-line block shape on every "
          "valid system");
  s.check(block_mismatches == 0, "the block decomposition agrees with the shape oracle");
}

void suite_orthogonal_purity(Suite& s, Rng& rng) {
  for (const auto& [label, sys] :
       {std::pair<const char*, UnimodularSystem>{"A_4", builtin("A_n", 4)},
        std::pair<const char*, UnimodularSystem>{"E5", builtin("E5", 5)}}) {
    PureSystem system_flats = flats(sys);
    const std::vector<Sublattice>& fl = system_flats.flats();
    int pure_pairs = 0, orthogonal_pure = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const Sublattice& l1 = fl[static_cast<std::size_t>(rng.below(static_cast<long>(fl.size())))];
      const Sublattice& l2 = fl[static_cast<std::size_t>(rng.below(static_cast<long>(fl.size())))];
      if (!are_mutually_pure(l1, l2)) continue;
      ++pure_pairs;
      if (are_mutually_pure(orthogonal_lattice(l1), orthogonal_lattice(l2))) ++orthogonal_pure;
    }
    s.check(pure_pairs == 50,
            std::string(label) + ": flats of one system are pairwise mutually pure");
    s.check(orthogonal_pure == pure_pairs,
            std::string(label) + ": all " + std::to_string(pure_pairs) +
                " orthogonal pairs are mutually pure");
  }
}

void suite_coroot_crossings(Suite& s, Rng&) {
  auto less = [](const VecZ& a, const VecZ& b) { return lex_less(a, b); };
  auto as_set = [&](std::vector<VecZ> vs) {
    std::sort(vs.begin(), vs.end(), less);
    return vs;
  };
  for (const auto& [name, size] :
       {std::pair<const char*, Index>{"A_n", 2}, {"A_n", 3}, {"A_n", 4}, {"E5", 5},
        {"D_K33", 4}}) {
    UnimodularSystem r = builtin(name, size);
    std::string label = std::string(name) == "A_n" ? "A_" + std::to_string(size) : name;
    std::vector<VecZ> cr = as_set(crossings(r));
    std::vector<VecZ> co;
    for (const VecZ& c : coroots(r))
      if (!c.isZero()) co.push_back(c);
    co = as_set(co);

    s.check(std::includes(co.begin(), co.end(), cr.begin(), cr.end(), less),
            label + ": every crossing is a coroot (" + std::to_string(cr.size()) + " of " +
                std::to_string(co.size()) + ")");
    if (std::string(name) == "A_n")
      s.check(co == cr, label + ": nonzero coroots are exactly the crossings");
    if (std::string(name) == "E5")
      s.check(co.size() > cr.size(), "E5: some coroot is not a crossing");

    LatticeSet star_points = lattice_points(star_polytope(r));
    s.check(star_points == LatticeSet(coroots(r)),
            label + ": box scan of the coroot polytope recovers the coroots");
  }
  s.note("A(N) spans a proper sublattice, so crossings are not defined for it");
}

void suite_e5_slices(Suite& s, Rng& rng) {
  UnimodularSystem e5 = builtin("E5", 5);
  MatZ gens(5, 4);
  gens.setZero();
  for (Index i = 0; i < 4; ++i) {
    gens(i, i) = 1;
    gens(i + 1, i) = -1;
  }
  Sublattice h = Sublattice::from_generators(gens);  // x1 + ... + x5 = 0

  PureSystem fl = flats(e5);
  bool all_pure = true;
  for (const Sublattice& l : fl.flats()) all_pure = all_pure && are_mutually_pure(h, l);
  s.check(all_pure, "the zero-sum hyperplane is mutually pure with all " +
                        plural(fl.flats().size(), "flat") + " of E5");

  Facet up{zvec({1, 1, 1, 1, 1}), Rat(0)};
  Facet down{zvec({-1, -1, -1, -1, -1}), Rat(0)};
  int sliced = 0, integer_slices = 0;
  for (int trial = 0; trial < 50; ++trial) {
    RatPolytope z = random_zonotope(rng, e5, 1, random_vector(rng, 5, -2, 2));
    std::vector<Facet> ineqs = z.facets();
    ineqs.push_back(up);
    ineqs.push_back(down);
    if (auto slice = RatPolytope::from_inequalities(5, ineqs)) {
      ++sliced;
      if (is_lattice_polytope(*slice)) ++integer_slices;
    }
  }
  s.check(integer_slices == sliced, "all " + std::to_string(sliced) +
                                        " nonempty zero-sum slices have integer vertices");
  s.check(sliced >= 30, "enough zonotopes meet the hyperplane (" + std::to_string(sliced) +
                            " of 50)");
}

void suite_submodular(Suite& s, Rng& rng) {
  int hulls_ok = 0, edges_ok = 0, extensions_ok = 0, extension_checks = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 2 + trial % 3;
    SetFunction b = random_submodular(rng, n, 4, 3);
    RatPolytope base = base_polytope(b);

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index(0));
    std::vector<VecQ> greedy;
    do {
      greedy.push_back(greedy_vertex(b, order));
    } while (std::next_permutation(order.begin(), order.end()));
    if (hull(greedy) == base) ++hulls_ok;

    if (is_r_polytope(base, builtin("A(N)", n))) ++edges_ok;

    for (int j = 0; j < 100; ++j) {
      VecQ p(n);
      for (Index i = 0; i < n; ++i) p[i] = make_rat(Int(rng.range(-6, 6)), Int(rng.range(1, 4)));
      Rat best = p.dot(base.vertices().front());
      for (const VecQ& v : base.vertices()) best = std::max(best, Rat(p.dot(v)));
      ++extension_checks;
      if (choquet_extension(b, p) == best) ++extensions_ok;
    }
  }
  s.check(hulls_ok == 30, "greedy vertices over all orders hull every base polytope");
  s.check(edges_ok == 30, "every base polytope has unit-difference edges only");
  s.check(extensions_ok == extension_checks,
          "the monotone-chain extension matches the base support value on " +
              std::to_string(extension_checks) + " arguments");
}

void suite_fan_pairs(Suite& s, Rng& rng) {
  UnimodularSystem a3 = builtin("A_n", 3);
  int agree = 0, strong = 0, loose = 0, integer_gpms = 0;
  for (int trial = 0; trial < 200; ++trial) {
    SetFunction b = random_table(rng, 3), a = random_table(rng, 3);
    if (trial % 2 == 0) {
      RatPolytope q = random_zonotope(rng, a3, 2, random_vector(rng, 3, -2, 2));
      auto bounds = support_bounds(q);
      b = bounds.first;
      a = bounds.second;
    }
    bool is_strong = is_strong_pair(b, a);
    FanCompatReport rep = fan_compat_check(fan_function_from_pair(b, a));
    if (rep.compatible == is_strong) ++agree;
    if (is_strong) {
      ++strong;
      if (is_lattice_polytope(gpm_polytope(StrongPair(b, a)))) ++integer_gpms;
    } else {
      ++loose;
    }
  }
  s.check(agree == 200, "fan compatibility matches the bound-pair criterion on 200 tables");
  s.check(strong >= 50 && loose >= 50, "both verdicts are exercised (" +
                                           std::to_string(strong) + " strong, " +
                                           std::to_string(loose) + " loose)");
  s.check(integer_gpms == strong, "all " + std::to_string(strong) +
                                      " integer bound-pair polytopes have integer vertices");
}

void suite_dicing(Suite& s, Rng& rng) {
  UnimodularSystem a2 = builtin("A_n", 2);
  std::vector<RatPolytope> cells = dicing_chambers(a2, zvec({0, 0}), zvec({1, 1}));
  s.check(cells.size() == 2, "the unit box splits into exactly 2 cells");
  bool triangles = true;
  Rat total(0);
  for (const RatPolytope& c : cells) {
    triangles = triangles && c.vertices().size() == 3 && is_lattice_polytope(c) &&
                lattice_volume(c) == Rat(1, 2);
    total += lattice_volume(c);
  }
  s.check(triangles, "both cells are integer unit triangles");
  s.check(total == 1, "cell areas sum to the box area");

  int tiled = 0;
  for (int trial = 0; trial < 10; ++trial) {
    VecZ lo(2), hi(2);
    Rat box(1);
    for (Index i = 0; i < 2; ++i) {
      lo[i] = rng.range(-3, 1);
      hi[i] = lo[i] + rng.range(1, 2);
      box *= to_rat(Int(hi[i] - lo[i]));
    }
    Rat sum(0);
    for (const RatPolytope& c : dicing_chambers(a2, lo, hi)) sum += lattice_volume(c);
    if (sum == box) ++tiled;
  }
  s.check(tiled == 10, "cell areas tile 10 random boxes");
}

using SuiteFn = void (*)(Suite&, Rng&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"builtin-counts", suite_builtin_counts},
      {"maximality", suite_maximality},
      {"counterexample", suite_counterexample},
      {"saturation-index", suite_saturation_index},
      {"random-pairs", suite_random_pairs},
      {"scan-rank3", suite_scan_rank3},
      {"orthogonal-purity", suite_orthogonal_purity},
      {"coroot-crossings", suite_coroot_crossings},
      {"e5-slices", suite_e5_slices},
      {"submodular", suite_submodular},
      {"fan-pairs", suite_fan_pairs},
      {"dicing", suite_dicing},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  for (const auto& [key, fn] : registry())
    if (key == name) {
      Suite s;
      Rng rng(seed);
      fn(s, rng);
      return std::move(s).finish(name);
    }
  throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

}  // namespace dcx
