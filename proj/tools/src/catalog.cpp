#include <map>

#include <hwprobe/error.hpp>

#include "hwprobe_cli/job.hpp"

namespace hwprobe::cli {

namespace {

const std::map<std::string, const char*>& entries() {
  static const std::map<std::string, const char*> table = {
      {"a1-threefold-theta", R"json({
  "name": "a1-threefold-theta",
  "field": 101,
  "variables": ["x", "y", "z", "w"],
  "ideal": ["x*w - y*z"],
  "domain": true,
  "modules": [
    {"name": "M", "quotient": ["x", "z"]},
    {"name": "N", "quotient": ["x", "y"]},
    {"name": "M3", "syzygy": "M", "index": 3}
  ],
  "tasks": [
    {"op": "tor_lengths", "m": "M", "n": "N", "from": 1, "to": 6,
     "expect": {"lengths": [1, 0, 1, 0, 1, 0]}},
    {"op": "theta", "m": "M", "n": "N", "expect": {"value": -1, "certificate": -1}},
    {"op": "rigidity", "m": "M", "n": "N", "window": 6,
     "expect": {"gaps": {"contains": 2}, "anomaly": false}},
    {"op": "matrix_factorization", "module": "M3", "expect": {"size": 2, "verified": true}},
    {"op": "nonfree_locus", "module": "M3", "expect": {"dimension": 0}}
  ]
})json"},
      {"gasharov-peeva", R"json({
  "name": "gasharov-peeva",
  "field": 5,
  "variables": ["x1", "x2", "x3", "x4", "t"],
  "ideal": ["x1^2", "x2^2", "x3^2", "x4^2", "x3*x4", "x1*x4 + x2*x4", "2*x1*x3 + x2*x3"],
  "matrices": [
    {"name": "D1", "rows": [["x1", "2*x3 + x4"], ["0", "x2"]], "row_degrees": [0, 0]},
    {"name": "D2", "rows": [["x1", "4*x3 + x4"], ["0", "x2"]], "row_degrees": [1, 1]},
    {"name": "D3", "rows": [["x1", "3*x3 + x4"], ["0", "x2"]], "row_degrees": [2, 2]},
    {"name": "D4", "rows": [["x1", "x3 + x4"], ["0", "x2"]], "row_degrees": [3, 3]},
    {"name": "D5", "rows": [["x1", "2*x3 + x4"], ["0", "x2"]], "row_degrees": [4, 4]},
    {"name": "D6", "rows": [["x1", "4*x3 + x4"], ["0", "x2"]], "row_degrees": [5, 5]},
    {"name": "D7", "rows": [["x1", "3*x3 + x4"], ["0", "x2"]], "row_degrees": [6, 6]},
    {"name": "D8", "rows": [["x1", "x3 + x4"], ["0", "x2"]], "row_degrees": [7, 7]},
    {"name": "D9", "rows": [["x1", "2*x3 + x4"], ["0", "x2"]], "row_degrees": [8, 8]},
    {"name": "X", "rows": [["x1", "2*x3 + x4", "0", "0"], ["0", "x2", "0", "0"],
                           ["0", "0", "x1", "3*x3 + x4"], ["0", "0", "0", "x2"]],
     "row_degrees": [0, 0, 0, 0]}
  ],
  "modules": [
    {"name": "N", "coker": "D1"},
    {"name": "C2", "coker": "D2"},
    {"name": "C3", "coker": "D3"},
    {"name": "C4", "coker": "D4"},
    {"name": "C5", "coker": "D5"},
    {"name": "X", "coker": "X"}
  ],
  "tasks": [
    {"op": "exactness", "matrices": ["D1", "D2", "D3", "D4", "D5", "D6", "D7", "D8", "D9"],
     "expect": {"complex": true, "exact": true}},
    {"op": "is_isomorphic", "m": "N", "n": "C5", "expect": {"verdict": "ISO"}},
    {"op": "is_isomorphic", "m": "N", "n": "C2", "expect": {"verdict": "NOT_ISO"}},
    {"op": "is_isomorphic", "m": "N", "n": "C3", "expect": {"verdict": "NOT_ISO"}},
    {"op": "is_isomorphic", "m": "N", "n": "C4", "expect": {"verdict": "NOT_ISO"}},
    {"op": "periodicity", "module": "N", "q": 1, "expect": {"verdict": "NOT_ISO"}},
    {"op": "periodicity", "module": "N", "q": 2, "expect": {"verdict": "NOT_ISO"}},
    {"op": "periodicity", "module": "N", "q": 3, "expect": {"verdict": "NOT_ISO"}},
    {"op": "periodicity", "module": "N", "q": 4, "expect": {"verdict": "ISO"}},
    {"op": "complete_resolution", "module": "N", "expect": {"period": 4, "source": "detected"}},
    {"op": "periodicity", "module": "X", "q": 2, "expect": {"verdict": "ISO", "twist": -2}}
  ]
})json"},
      {"cusp-hw", R"json({
  "name": "cusp-hw",
  "field": 7,
  "variables": ["x", "y"],
  "weights": [3, 2],
  "ideal": ["x^2 - y^3"],
  "domain": true,
  "modules": [
    {"name": "k", "quotient": ["x", "y"]},
    {"name": "m", "syzygy": "k", "index": 1},
    {"name": "mdual", "dual": "m"},
    {"name": "Rx", "quotient": ["x"]}
  ],
  "tasks": [
    {"op": "hw_check", "module": "m",
     "expect": {"verdict": "CONJECTURE_HOLDS", "torsion_length": {"at_least": 1},
                "detectors_agree": true, "tate_tor0_nonzero": true, "ext1_nonzero": true}},
    {"op": "rank", "module": "m", "expect": {"value": 1}},
    {"op": "rank_by_minors", "module": "m", "expect": {"value": 1}},
    {"op": "torsion", "module": "Rx", "expect": {"length": 3}},
    {"op": "matrix_factorization", "module": "m", "expect": {"size": 2, "verified": true}},
    {"op": "tate_tor", "m": "m", "n": "mdual", "from": -2, "to": 2,
     "expect": {"lengths": [2, 2, 2, 2, 2]}},
    {"op": "depth_zero", "module": "m", "expect": {"depth": 0, "holds": true}},
    {"op": "complexity", "module": "k", "expect": {"class": "bounded"}},
    {"op": "tor1_transpose", "module": "m", "expect": {"nonzero": true}}
  ]
})json"},
      {"a1-surface-even-dim", R"json({
  "name": "a1-surface-even-dim",
  "field": 101,
  "variables": ["x", "y", "z"],
  "ideal": ["x*z - y^2"],
  "domain": true,
  "matrices": [
    {"name": "P", "rows": [["x", "y"], ["y", "z"]], "row_degrees": [0, 0]}
  ],
  "modules": [
    {"name": "M", "coker": "P"}
  ],
  "tasks": [
    {"op": "depth", "module": "M", "expect": {"value": 2}},
    {"op": "periodicity", "module": "M", "q": 2, "expect": {"verdict": "ISO"}},
    {"op": "matrix_factorization", "module": "M", "expect": {"size": 2, "verified": true}},
    {"op": "nonfree_locus", "module": "M", "expect": {"dimension": 0}},
    {"op": "even_dim_torsion", "module": "M", "expect": {"torsion_nonzero": true}}
  ]
})json"},
      {"fermat-style-dim1", R"json({
  "name": "fermat-style-dim1",
  "field": 101,
  "variables": ["x", "y"],
  "weights": [4, 3],
  "ideal": ["x^3 + y^4"],
  "domain": true,
  "modules": [
    {"name": "k", "quotient": ["x", "y"]},
    {"name": "m", "syzygy": "k", "index": 1}
  ],
  "tasks": [
    {"op": "hw_check", "module": "m",
     "expect": {"verdict": "CONJECTURE_HOLDS", "torsion_length": {"at_least": 1}, "detectors_agree": true}},
    {"op": "periodicity", "module": "m", "q": 2, "expect": {"verdict": "ISO"}},
    {"op": "depth_zero", "module": "m", "expect": {"holds": true}}
  ]
})json"},
      {"a4-curve-hw", R"json({
  "name": "a4-curve-hw",
  "field": 101,
  "variables": ["x", "y"],
  "weights": [5, 2],
  "ideal": ["x^2 - y^5"],
  "domain": true,
  "modules": [
    {"name": "k", "quotient": ["x", "y"]},
    {"name": "m", "syzygy": "k", "index": 1}
  ],
  "tasks": [
    {"op": "hw_check", "module": "m",
     "expect": {"verdict": "CONJECTURE_HOLDS", "torsion_length": {"at_least": 1}, "detectors_agree": true}},
    {"op": "periodicity", "module": "m", "q": 2, "expect": {"verdict": "ISO"}}
  ]
})json"},
  };
  return table;
}

}  // namespace

std::vector<std::string> catalogNames() {
  std::vector<std::string> names;
  for (const auto& [name, text] : entries()) names.push_back(name);
  return names;
}

JobSpec catalog(const std::string& name) {
  auto it = entries().find(name);
  if (it == entries().end()) {
    std::string list;
    for (const auto& n : catalogNames()) list += (list.empty() ? "" : ", ") + n;
    throw InputError("unknown catalog entry '" + name + "'; available: " + list);
  }
  return parseJob(it->second);
}

}  // namespace hwprobe::cli
