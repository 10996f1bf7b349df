// Batch front end: loads JSON inputs, runs checks and constructions, and
// prints human-readable or --json reports. Exit codes: 0 clean verdicts,
// 1 property violations (a JSON witness goes to stdout), 2 unusable input.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "dcx/dcclass.hpp"
#include "dcx/json_io.hpp"
#include "dcx/lattice.hpp"
#include "dcx/polymatroid.hpp"
#include "dcx/polytope.hpp"
#include "dcx/suites.hpp"
#include "dcx/types.hpp"
#include "dcx/unimodular.hpp"

namespace {

using dcx::Json;

bool json_mode = false;

Json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return Json::parse(in);  // parse errors carry the byte position
}

void emit(const Json& machine, const std::string& human) {
  if (json_mode)
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << human;
}

std::string show(const dcx::VecZ& v) {
  std::ostringstream out;
  out << "(";
  for (dcx::Index i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ")";
  return out.str();
}

std::string show(const dcx::VecQ& v) {
  std::ostringstream out;
  out << "(";
  for (dcx::Index i = 0; i < v.size(); ++i) out << (i ? ", " : "") << dcx::rat_string(v[i]);
  out << ")";
  return out.str();
}

std::string show_vectors(const std::vector<dcx::VecZ>& vs) {
  std::ostringstream out;
  for (const dcx::VecZ& v : vs) out << show(v) << "\n";
  return out.str();
}

std::string show_polytope(const dcx::RatPolytope& p) {
  std::ostringstream out;
  out << p.vertices().size() << " vertices, dim " << p.dim() << "\n";
  for (const dcx::VecQ& v : p.vertices()) out << show(v) << "\n";
  return out.str();
}

dcx::UnimodularSystem load_system(const std::string& path) {
  return dcx::system_from_spec(dcx::system_spec_from_json(load(path)));
}

int cmd_check_unimodular(const std::string& path) {
  dcx::SystemSpec spec = dcx::system_spec_from_json(load(path));
  if (!spec.name) {
    auto v = dcx::validate_unimodular(spec.ambient, spec.roots);
    if (const auto* fail = std::get_if<dcx::UnimodularFailure>(&v)) {
      Json witness = Json::array();
      for (const dcx::VecZ& r : fail->violating) witness.push_back(dcx::vec_to_json(r));
      emit(Json{{"valid", false}, {"violating", witness}},
           "invalid: these vectors span a non-pure sublattice\n" +
               show_vectors(fail->violating));
      return 1;
    }
  }
  dcx::UnimodularSystem r = dcx::system_from_spec(spec);
  std::size_t n = r.roots().size();
  emit(Json{{"valid", true},
            {"roots", n},
            {"with_zero", n + 1},
            {"dim", r.rank()}},
       "valid, " + std::to_string(n) + " roots (" + std::to_string(n + 1) +
           " with zero), dim " + std::to_string(r.rank()) + "\n");
  return 0;
}

int cmd_flats(const std::string& path) {
  dcx::PureSystem fl = dcx::flats(load_system(path));
  Json arr = Json::array();
  std::ostringstream human;
  human << fl.flats().size() << " flats\n";
  for (const dcx::Sublattice& s : fl.flats()) {
    arr.push_back(dcx::sublattice_to_json(s));
    human << "rank " << s.rank() << ":";
    for (dcx::Index c = 0; c < s.basis().cols(); ++c)
      human << " " << show(dcx::VecZ(s.basis().col(c)));
    human << "\n";
  }
  emit(Json{{"ambient", fl.ambient_rank()}, {"flats", arr}}, human.str());
  return 0;
}

int cmd_maximal(const std::string& path) {
  bool m = dcx::is_maximal_unimodular(load_system(path));
  emit(Json{{"maximal", m}}, m ? "maximal\n" : "not maximal\n");
  return m ? 0 : 1;
}

int cmd_vector_list(const std::string& path, const std::string& kind) {
  dcx::UnimodularSystem r = load_system(path);
  std::vector<dcx::VecZ> vs = kind == "coroots" ? dcx::coroots(r) : dcx::crossings(r);
  Json arr = Json::array();
  for (const dcx::VecZ& v : vs) arr.push_back(dcx::vec_to_json(v));
  emit(Json{{kind, arr}}, std::to_string(vs.size()) + " " + kind + "\n" + show_vectors(vs));
  return 0;
}

int cmd_star(const std::string& path) {
  dcx::RatPolytope p = dcx::star_polytope(load_system(path));
  emit(dcx::polytope_to_json(p), show_polytope(p));
  return 0;
}

int cmd_chambers(const std::string& path, const std::string& box) {
  std::size_t dots = box.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument("--box wants the form a..b, got '" + box + "'");
  long lo = std::stol(box.substr(0, dots));
  long hi = std::stol(box.substr(dots + 2));
  if (lo >= hi) throw std::invalid_argument("--box wants a < b");

  dcx::UnimodularSystem r = load_system(path);
  dcx::VecZ lov = dcx::VecZ::Constant(r.ambient_rank(), dcx::Int(lo));
  dcx::VecZ hiv = dcx::VecZ::Constant(r.ambient_rank(), dcx::Int(hi));
  std::vector<dcx::RatPolytope> cells = dcx::dicing_chambers(r, lov, hiv);

  Json arr = Json::array();
  std::ostringstream human;
  human << cells.size() << " cells in [" << lo << ", " << hi << "]^" << r.ambient_rank() << "\n";
  for (const dcx::RatPolytope& c : cells) {
    arr.push_back(dcx::polytope_to_json(c));
    human << "volume " << dcx::rat_string(dcx::lattice_volume(c)) << ":";
    for (const dcx::VecQ& v : c.vertices()) human << " " << show(v);
    human << "\n";
  }
  emit(Json{{"count", cells.size()}, {"cells", arr}}, human.str());
  return 0;
}

int cmd_dc_check(const std::string& xpath, const std::string& ypath) {
  dcx::LatticeSet x = dcx::lattice_set_from_json(load(xpath));
  dcx::LatticeSet y = dcx::lattice_set_from_json(load(ypath));
  bool px = dcx::is_pseudo_convex(x), py = dcx::is_pseudo_convex(y);

  bool disjoint = true;
  for (const dcx::VecZ& p : x.points()) disjoint = disjoint && !y.contains(p);
  dcx::SeparationResult sep = dcx::separate(x, y);
  bool sep_ok = !disjoint || sep.separated();  // only disjoint sets need a functional
  bool add = dcx::check_add(x, y);
  bool meet = dcx::check_int(x, y);
  bool edm = dcx::check_edm(x, y);

  Json out{{"pseudo_convex", Json::array({px, py})}, {"add", add},
           {"sep", sep_ok},                          {"int", meet},
           {"edm", edm}};
  std::ostringstream human;
  human << "pseudo-convex: " << (px ? "ok" : "FAIL") << ", " << (py ? "ok" : "FAIL") << "\n";
  human << "add: " << (add ? "ok" : "FAIL") << "\n";
  human << "sep: " << (sep_ok ? "ok" : "FAIL") << "\n";
  human << "int: " << (meet ? "ok" : "FAIL") << "\n";
  human << "edm: " << (edm ? "ok" : "FAIL") << "\n";
  if (!sep_ok && sep.overlap_witness) {
    out["witness"] = dcx::qvec_to_json(*sep.overlap_witness);
    human << "witness: hulls meet at " << show(*sep.overlap_witness) << "\n";
  }
  emit(out, human.str());
  return px && py && add && sep_ok && meet && edm ? 0 : 1;
}

int cmd_separate(const std::string& xpath, const std::string& ypath) {
  dcx::SeparationResult sep = dcx::separate(dcx::lattice_set_from_json(load(xpath)),
                                            dcx::lattice_set_from_json(load(ypath)));
  if (sep.separated()) {
    emit(dcx::separation_to_json(sep),
         "separated by " + show(sep.separation->functional) + " with margin " +
             dcx::rat_string(sep.separation->margin) + "\n");
    return 0;
  }
  emit(dcx::separation_to_json(sep), "overlap at " + show(*sep.overlap_witness) + "\n");
  return 1;
}

int cmd_sum(const std::string& ppath, const std::string& qpath) {
  dcx::RatPolytope s = dcx::minkowski_sum(dcx::polytope_from_json(load(ppath)),
                                          dcx::polytope_from_json(load(qpath)));
  emit(dcx::polytope_to_json(s), show_polytope(s));
  return 0;
}

int cmd_intersect(const std::string& ppath, const std::string& qpath) {
  auto meet = dcx::intersect_polytopes(dcx::polytope_from_json(load(ppath)),
                                       dcx::polytope_from_json(load(qpath)));
  if (!meet) {
    emit(Json{{"empty", true}}, "empty\n");
    return 0;
  }
  emit(dcx::polytope_to_json(*meet), show_polytope(*meet));
  return 0;
}

int cmd_lattice_points(const std::string& path) {
  dcx::RatPolytope p = dcx::polytope_from_json(load(path));
  std::vector<dcx::VecZ> pts = dcx::integer_points_in(p);
  Json arr = Json::array();
  for (const dcx::VecZ& v : pts) arr.push_back(dcx::vec_to_json(v));
  emit(Json{{"ambient", p.ambient_rank()}, {"points", arr}},
       std::to_string(pts.size()) + " points\n" + show_vectors(pts));
  return 0;
}

int cmd_base_polytope(const std::string& path) {
  dcx::SetFunction b = dcx::setfunction_from_json(load(path));
  if (!dcx::is_submodular(b)) {
    emit(Json{{"submodular", false}}, "not submodular\n");
    return 1;
  }
  dcx::RatPolytope base = dcx::base_polytope(b);
  emit(dcx::polytope_to_json(base), show_polytope(base));
  return 0;
}

int cmd_gpm(const std::string& path) {
  dcx::RatPolytope p = dcx::gpm_polytope(dcx::strong_pair_from_json(load(path)));
  emit(dcx::polytope_to_json(p), show_polytope(p));
  return 0;
}

int cmd_choquet(const std::string& bpath, const std::string& ppath) {
  dcx::SetFunction b = dcx::setfunction_from_json(load(bpath));
  dcx::VecQ p = dcx::qvec_from_json(load(ppath));
  dcx::Rat v = dcx::choquet_extension(b, p);
  emit(Json{{"value", dcx::rat_string(v)}}, dcx::rat_string(v) + "\n");
  return 0;
}

int cmd_fan_check(const std::string& path) {
  dcx::FanCompatReport rep = dcx::fan_compat_check(dcx::fan_function_from_json(load(path)));
  if (rep.compatible) {
    emit(Json{{"compatible", true}}, "compatible\n");
    return 0;
  }
  Json involved = Json::array();
  for (const dcx::VecZ& v : rep.involved) involved.push_back(dcx::vec_to_json(v));
  emit(Json{{"compatible", false}, {"violation", rep.violation}, {"involved", involved}},
       "incompatible: " + rep.violation + "\n" + show_vectors(rep.involved));
  return 1;
}

int cmd_decompose(const std::string& path) {
  dcx::Decomposition dec = dcx::decompose_a1_a2(load_system(path));
  if (!dec.closed) {
    emit(Json{{"closed", false}},
         "flats are not intersection-closed; no block decomposition\n");
    return 1;
  }
  Json blocks = Json::array();
  std::ostringstream human;
  human << dec.blocks.size() << (dec.blocks.size() == 1 ? " block\n" : " blocks\n");
  for (const auto& blk : dec.blocks) {
    Json roots = Json::array();
    for (const dcx::VecZ& r : blk.roots) roots.push_back(dcx::vec_to_json(r));
    blocks.push_back(Json{{"type", blk.type}, {"roots", roots}});
    human << blk.type << ":";
    for (const dcx::VecZ& r : blk.roots) human << " " << show(r);
    human << "\n";
  }
  emit(Json{{"closed", true}, {"blocks", blocks}}, human.str());
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  std::vector<std::string> names;
  if (suite == "all")
    names = dcx::suite_names();
  else
    names.push_back(suite);

  Json arr = Json::array();
  std::ostringstream human;
  bool all_passed = true;
  for (const std::string& name : names) {
    dcx::SuiteResult result = dcx::run_suite(name, seed);
    all_passed = all_passed && result.passed;
    arr.push_back(Json{{"name", result.name},
                       {"passed", result.passed},
                       {"report", result.report}});
    human << result.report << "suite " << result.name << ": "
          << (result.passed ? "PASS" : "FAIL") << "\n";
  }
  emit(Json{{"seed", seed}, {"suites", arr}}, human.str());
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact toolkit for unimodular systems, discrete convexity checks, and "
      "polymatroid constructions. DCX_ENUM_BUDGET caps brute-force lattice scans."};
  app.require_subcommand(1);
  app.add_flag("--json", json_mode, "machine-readable output");

  // Each subcommand stores its arguments in shared state and queues an action.
  std::function<int()> action;
  auto arg = [](CLI::App* sub, const char* name, const char* desc) {
    auto value = std::make_shared<std::string>();
    sub->add_option(name, *value, desc)->required();
    return value;
  };

  auto* check = app.add_subcommand("check-unimodular", "validate a system spec");
  auto check_path = arg(check, "sys", "system JSON");
  check->callback([&action, check_path] { action = [=] { return cmd_check_unimodular(*check_path); }; });

  auto* fl = app.add_subcommand("flats", "saturated spans of root subsets");
  auto fl_path = arg(fl, "sys", "system JSON");
  fl->callback([&action, fl_path] { action = [=] { return cmd_flats(*fl_path); }; });

  auto* mx = app.add_subcommand("maximal", "test maximality among unimodular systems");
  auto mx_path = arg(mx, "sys", "system JSON");
  mx->callback([&action, mx_path] { action = [=] { return cmd_maximal(*mx_path); }; });

  for (const char* kind : {"coroots", "crossings"}) {
    auto* sub = app.add_subcommand(kind, std::string(kind) + " of a full-dimensional system");
    auto path = arg(sub, "sys", "system JSON");
    std::string k = kind;
    sub->callback([&action, path, k] { action = [=] { return cmd_vector_list(*path, k); }; });
  }

  auto* st = app.add_subcommand("star", "polytope of functionals bounded by 1 on roots");
  auto st_path = arg(st, "sys", "system JSON");
  st->callback([&action, st_path] { action = [=] { return cmd_star(*st_path); }; });

  auto* ch = app.add_subcommand("chambers", "dicing cells clipped to a box");
  auto ch_path = arg(ch, "sys", "system JSON");
  auto ch_box = std::make_shared<std::string>();
  ch->add_option("--box", *ch_box, "coordinate range a..b")->required();
  ch->callback([&action, ch_path, ch_box] { action = [=] { return cmd_chambers(*ch_path, *ch_box); }; });

  auto* dc = app.add_subcommand("dc-check", "pairwise discrete-convexity checks");
  auto dc_x = arg(dc, "X", "lattice set JSON");
  auto dc_y = arg(dc, "Y", "lattice set JSON");
  dc->callback([&action, dc_x, dc_y] { action = [=] { return cmd_dc_check(*dc_x, *dc_y); }; });

  auto* sp = app.add_subcommand("separate", "integer separating functional or overlap witness");
  auto sp_x = arg(sp, "X", "lattice set JSON");
  auto sp_y = arg(sp, "Y", "lattice set JSON");
  sp->callback([&action, sp_x, sp_y] { action = [=] { return cmd_separate(*sp_x, *sp_y); }; });

  auto* sm = app.add_subcommand("sum", "Minkowski sum of two polytopes");
  auto sm_p = arg(sm, "P", "polytope JSON");
  auto sm_q = arg(sm, "Q", "polytope JSON");
  sm->callback([&action, sm_p, sm_q] { action = [=] { return cmd_sum(*sm_p, *sm_q); }; });

  auto* in = app.add_subcommand("intersect", "intersection of two polytopes");
  auto in_p = arg(in, "P", "polytope JSON");
  auto in_q = arg(in, "Q", "polytope JSON");
  in->callback([&action, in_p, in_q] { action = [=] { return cmd_intersect(*in_p, *in_q); }; });

  auto* lp = app.add_subcommand("lattice-points", "integer points of a polytope");
  auto lp_path = arg(lp, "P", "polytope JSON");
  lp->callback([&action, lp_path] { action = [=] { return cmd_lattice_points(*lp_path); }; });

  auto* bp = app.add_subcommand("base-polytope", "base polytope of a submodular function");
  auto bp_path = arg(bp, "b", "set function JSON");
  bp->callback([&action, bp_path] { action = [=] { return cmd_base_polytope(*bp_path); }; });

  auto* gp = app.add_subcommand("gpm", "polytope of an upper/lower bound pair");
  auto gp_path = arg(gp, "pair", "bound pair JSON");
  gp->callback([&action, gp_path] { action = [=] { return cmd_gpm(*gp_path); }; });

  auto* cq = app.add_subcommand("choquet", "monotone-chain extension value");
  auto cq_b = arg(cq, "b", "set function JSON");
  auto cq_p = arg(cq, "p", "rational vector JSON");
  cq->callback([&action, cq_b, cq_p] { action = [=] { return cmd_choquet(*cq_b, *cq_p); }; });

  auto* fc = app.add_subcommand("fan-check", "linearity and wall conditions for fan values");
  auto fc_path = arg(fc, "f", "fan function JSON");
  fc->callback([&action, fc_path] { action = [=] { return cmd_fan_check(*fc_path); }; });

  auto* de = app.add_subcommand("decompose", "split into one- and three-line blocks");
  auto de_path = arg(de, "sys", "system JSON");
  de->callback([&action, de_path] { action = [=] { return cmd_decompose(*de_path); }; });

  auto* vf = app.add_subcommand("verify", "run a named verification suite");
  auto vf_suite = std::make_shared<std::string>();
  auto vf_seed = std::make_shared<std::uint64_t>(2026);
  std::vector<std::string> choices = dcx::suite_names();
  choices.push_back("all");
  vf->add_option("--suite", *vf_suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(choices));
  vf->add_option("--seed", *vf_seed, "RNG seed (fixed default keeps runs reproducible)");
  vf->callback([&action, vf_suite, vf_seed] { action = [=] { return cmd_verify(*vf_suite, *vf_seed); }; });

  try {
    app.parse(argc, argv);
    return action();
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Json::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
