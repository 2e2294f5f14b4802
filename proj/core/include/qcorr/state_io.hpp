#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qcorr/measurement.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// How the state body was given in the input document.
enum class StateBody { Mixture, Matrix };

// A parsed and fully validated state description: the bipartite state plus
// the measurement bases (computational unless the document overrides them).
struct StateSpec {
    BipartiteState state;
    ProjectiveBasis basis_a;
    ProjectiveBasis basis_b;
    StateBody body;
};

// Parses a JSON state description:
//
//   {"dims": [dA, dB], "mixture": [{"w": 0.3, "i": 0, "j": 0}, ...]}
//   {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}
//
// Exactly one of "mixture"/"matrix" must be present. Optional "basisA" and
// "basisB" override the computational bases; each is a list of columns and
// each column a list of [re, im] pairs.
//
// Malformed documents raise SchemaError with a JSON pointer to the
// offending field; well-formed documents describing an invalid state raise
// ValidationError naming the violated invariant.
StateSpec parse_state_json(const std::string &text);

// parse_state_json over the contents of `path`; IoError when unreadable.
StateSpec parse_state_file(const std::filesystem::path &path);

// Bundled example states: a two-qubit mixture alpha|00><00| + (1-alpha)|11><11|
// and a two-qutrit mixture (|11><11| + |20><20| + |22><22|) / 3.
std::string qubit_fixture_json(double alpha);
std::string qutrit_fixture_json();

// Writes qubit_alpha.json (alpha = 0.3) and qutrit.json into `dir`,
// creating it if needed; returns the written paths.
std::vector<std::filesystem::path> write_fixture_files(const std::filesystem::path &dir);

}  // namespace qcorr
