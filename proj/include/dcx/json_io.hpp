#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "dcx/dcclass.hpp"
#include "dcx/lattice.hpp"
#include "dcx/polymatroid.hpp"
#include "dcx/polytope.hpp"
#include "dcx/types.hpp"
#include "dcx/unimodular.hpp"

namespace dcx {

// Insertion-ordered documents keep emitted key order fixed, so equal inputs
// serialize to identical bytes.
using Json = nlohmann::ordered_json;

// Integer entries travel as decimal strings to preserve bignums; rationals as
// "p/q" or "p". Matrices are arrays of rows. All readers throw
// std::invalid_argument naming the offending field; JSON syntax errors
// surface as nlohmann parse_error with position info.

Json vec_to_json(const VecZ& v);
VecZ vec_from_json(const Json& j);
Json mat_to_json(const MatZ& m);
MatZ mat_from_json(const Json& j);
Json qvec_to_json(const VecQ& v);
VecQ qvec_from_json(const Json& j);

// {"ambient": n, "basis": [[...],...]}
Json sublattice_to_json(const Sublattice& s);
Sublattice sublattice_from_json(const Json& j);

// {"ambient": n, "points": [[...],...]}
Json lattice_set_to_json(const LatticeSet& x);
LatticeSet lattice_set_from_json(const Json& j);

// {"vertices": [[...],...]} on output; input also accepts
// {"ambient": n, "facets": [{"normal": [...], "rhs": "p/q"},...]}.
Json polytope_to_json(const RatPolytope& p);
RatPolytope polytope_from_json(const Json& j);

// {"name"?: str, "ambient": n, "roots": [[...],...]} with one representative
// per +- pair; a bare name selects a built-in system.
struct SystemSpec {
  std::optional<std::string> name;
  Index ambient = 0;
  std::vector<VecZ> roots;
};
SystemSpec system_spec_from_json(const Json& j);
// Built-in lookup when named, validation otherwise; invalid root sets throw
// with the violating subset in the message.
UnimodularSystem system_from_spec(const SystemSpec& spec);
Json system_to_json(const UnimodularSystem& r);

// {"vertices": k, "edges": [[u,v],...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"ground": ["1","2",...], "values": {"{}": "0", "{1}": "1", ...}} with
// canonical subset keys (member labels joined in ground order).
Json setfunction_to_json(const SetFunction& b);
SetFunction setfunction_from_json(const Json& j);

// {"b": <set function>, "a": <set function>}
Json strong_pair_to_json(const StrongPair& pair);
StrongPair strong_pair_from_json(const Json& j);

// {"system": ..., "values": [{"crossing": [...], "value": "p/q"},...]}
Json fan_function_to_json(const FanFunction& f);
FanFunction fan_function_from_json(const Json& j);

// {"functional": [...], "margin": "p/q"} or {"overlap": ["p/q",...]}
Json separation_to_json(const SeparationResult& s);

}  // namespace dcx
