#include "adlv/json_io.hpp"

#include <sstream>

#include "adlv/words.hpp"

namespace adlv {

using nlohmann::ordered_json;

nlohmann::ordered_json nodeset_to_json(const RootSystem& R, const NodeSet& J) {
  ordered_json arr = ordered_json::array();
  for (int i : J.nodes(R.rank())) arr.push_back(i + 1);
  return arr;
}

nlohmann::ordered_json coweight_to_json(const Coweight& c) {
  ordered_json arr = ordered_json::array();
  for (Int v : c.c) arr.push_back(v);
  return arr;
}

nlohmann::ordered_json verdict_to_json(const RootSystem& R, const Verdict& v) {
  ordered_json j;
  j["schema"] = "adlv.verdict/1";
  j["library"] = library_version();
  j["system"] = R.name();
  j["element"] = print_affine(R, v.source);
  j["status"] = status_name(v.status);
  j["rule"] = rule_name(v.rule);
  ordered_json ev = ordered_json::object();
  if (v.nf) {
    ordered_json nf;
    nf["J"] = nodeset_to_json(R, v.nf->J);
    nf["lambda"] = coweight_to_json(v.nf->lambda);
    nf["x"] = print_finite(R, v.nf->x);
    nf["y"] = print_finite(R, v.nf->y);
    ev["normal_form"] = nf;
  }
  if (!v.pieces.empty() || v.rule == Rule::Main2Empty) {
    ordered_json arr = ordered_json::array();
    for (const AffineElt& m : v.pieces) arr.push_back(print_affine(R, m));
    ev["pieces"] = arr;
  }
  if (v.witness) ev["witness"] = print_affine(R, *v.witness);
  if (v.qr) {
    ordered_json qr;
    qr["holds"] = v.qr->quasi_regular;
    qr["bound"] = v.qr->bound;
    ev["quasi_regular"] = qr;
  }
  if (v.main3_bound > 0) {
    ordered_json m3;
    m3["pairing_floor"] = v.main3_bound;
    m3["support_stable"] = v.main3_support_stable;
    ev["deep_coweight"] = m3;
  }
  j["evidence"] = ev;
  return j;
}

nlohmann::ordered_json pieces_to_json(const RootSystem& R, const PieceSet& p) {
  ordered_json j;
  j["schema"] = "adlv.pieces/1";
  j["library"] = library_version();
  j["system"] = R.name();
  j["source"] = print_affine(R, p.source);
  ordered_json arr = ordered_json::array();
  for (const AffineElt& m : p.members) arr.push_back(print_affine(R, m));
  j["members"] = arr;
  return j;
}

namespace {

ordered_json label_to_json(const RootSystem& R, const GPieceLabel& l) {
  ordered_json j;
  j["J"] = nodeset_to_json(R, l.J);
  j["w"] = print_finite(R, l.w);
  return j;
}

} // namespace

nlohmann::ordered_json labels_to_json(const RootSystem& R,
                                      const std::vector<GPieceLabel>& labels) {
  ordered_json j;
  j["schema"] = "adlv.labels/1";
  j["library"] = library_version();
  j["system"] = R.name();
  ordered_json arr = ordered_json::array();
  for (const GPieceLabel& l : labels) arr.push_back(label_to_json(R, l));
  j["labels"] = arr;
  return j;
}

nlohmann::ordered_json table_to_json(const RootSystem& R, const EmptinessTable& t) {
  ordered_json j;
  j["schema"] = "adlv.table/1";
  j["library"] = library_version();
  j["system"] = R.name();
  j["lambda"] = coweight_to_json(t.lambda);
  j["J"] = nodeset_to_json(R, t.J);
  ordered_json xs = ordered_json::array();
  for (const WeylElt& x : t.xs) xs.push_back(print_finite(R, x));
  j["xs"] = xs;
  ordered_json ys = ordered_json::array();
  for (const WeylElt& y : t.ys) ys.push_back(print_finite(R, y));
  j["ys"] = ys;
  ordered_json statuses = ordered_json::array();
  ordered_json rules = ordered_json::array();
  for (const auto& row : t.cells) {
    ordered_json srow = ordered_json::array();
    ordered_json rrow = ordered_json::array();
    for (const Verdict& v : row) {
      srow.push_back(status_name(v.status));
      rrow.push_back(rule_name(v.rule));
    }
    statuses.push_back(srow);
    rules.push_back(rrow);
  }
  j["statuses"] = statuses;
  j["rules"] = rules;
  return j;
}

nlohmann::ordered_json reports_to_json(const std::vector<OracleReport>& reports) {
  ordered_json j;
  j["schema"] = "adlv.report/1";
  j["library"] = library_version();
  ordered_json arr = ordered_json::array();
  bool all = true;
  for (const OracleReport& r : reports) {
    ordered_json rj;
    rj["check"] = r.check_name;
    rj["instances"] = r.instance_count;
    rj["mismatches"] = r.mismatches;
    rj["passed"] = r.passed();
    all = all && r.passed();
    arr.push_back(rj);
  }
  j["reports"] = arr;
  j["passed"] = all;
  return j;
}

std::string table_to_csv(const RootSystem& R, const EmptinessTable& t) {
  std::ostringstream os;
  os << "x\\y";
  for (const WeylElt& y : t.ys) os << ',' << print_finite(R, y);
  os << '\n';
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    os << print_finite(R, t.xs[i]);
    for (std::size_t j = 0; j < t.ys.size(); ++j)
      os << ',' << status_name(t.cells[i][j].status);
    os << '\n';
  }
  return os.str();
}

namespace {

// Pairwise order relation, then covering edges only.
std::vector<std::pair<std::size_t, std::size_t>> covering_edges(
    const RootSystem& R, const std::vector<GPieceLabel>& labels, const Guards& g) {
  std::size_t n = labels.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      leq[i][j] = gpiece_closure_contains(R, labels[i], labels[j], g);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covered = false;
      for (std::size_t k = 0; k < n && !covered; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) covered = true;
      if (!covered) edges.emplace_back(i, j);
    }
  return edges;
}

} // namespace

std::string closure_to_dot(const RootSystem& R,
                           const std::vector<GPieceLabel>& labels, const Guards& g) {
  std::ostringstream os;
  os << "digraph closure {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    os << "  n" << i << " [label=\"" << print_nodeset(labels[i].J, R.rank()) << ' '
       << print_finite(R, labels[i].w) << "\"];\n";
  for (auto [i, j] : covering_edges(R, labels, g))
    os << "  n" << i << " -> n" << j << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json closure_to_json(const RootSystem& R,
                                       const std::vector<GPieceLabel>& labels,
                                       const Guards& g) {
  ordered_json j;
  j["schema"] = "adlv.closure/1";
  j["library"] = library_version();
  j["system"] = R.name();
  ordered_json arr = ordered_json::array();
  for (const GPieceLabel& l : labels) arr.push_back(label_to_json(R, l));
  j["labels"] = arr;
  ordered_json edges = ordered_json::array();
  for (auto [a, b] : covering_edges(R, labels, g)) {
    ordered_json e = ordered_json::array();
    e.push_back(a);
    e.push_back(b);
    edges.push_back(e);
  }
  j["edges"] = edges;
  return j;
}

} // namespace adlv
