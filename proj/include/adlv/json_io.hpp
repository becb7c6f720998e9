#ifndef ADLV_JSON_IO_HPP
#define ADLV_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "adlv/adlv.hpp"
#include "adlv/geom.hpp"
#include "adlv/oracle.hpp"

// Serialization of library results. Every schema carries a "schema" version
// tag; elements and labels are printed in the same word syntax the parsers
// accept, so output round-trips. Node indices are 1-based on the wire, like
// the generator names s1, s2, ...

namespace adlv {

inline const char* library_version() { return "0.1.0"; }

nlohmann::ordered_json nodeset_to_json(const RootSystem& R, const NodeSet& J);
nlohmann::ordered_json coweight_to_json(const Coweight& c);

nlohmann::ordered_json verdict_to_json(const RootSystem& R, const Verdict& v);
nlohmann::ordered_json pieces_to_json(const RootSystem& R, const PieceSet& p);
nlohmann::ordered_json labels_to_json(const RootSystem& R,
                                      const std::vector<GPieceLabel>& labels);
nlohmann::ordered_json table_to_json(const RootSystem& R, const EmptinessTable& t);
nlohmann::ordered_json reports_to_json(const std::vector<OracleReport>& reports);

// Status matrix with one header row of y-words and one header column of
// x-words.
std::string table_to_csv(const RootSystem& R, const EmptinessTable& t);

// Closure order on the given labels as a DOT digraph; only covering edges
// are emitted (the transitive reduction), pointing from the bigger stratum
// to the smaller one.
std::string closure_to_dot(const RootSystem& R,
                           const std::vector<GPieceLabel>& labels,
                           const Guards& g = Guards::from_env());
nlohmann::ordered_json closure_to_json(const RootSystem& R,
                                       const std::vector<GPieceLabel>& labels,
                                       const Guards& g = Guards::from_env());

} // namespace adlv

#endif
