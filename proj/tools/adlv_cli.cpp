#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "adlv/json_io.hpp"
#include "adlv/selfcheck.hpp"
#include "adlv/words.hpp"

using namespace adlv;

namespace {

RootSystem build_system(const std::string& type, int rank) {
  if (type.size() != 1) throw InvalidInput("type must be a single letter");
  return RootSystem::build(type[0], rank);
}

BranchPolicy parse_policy(const std::string& p) {
  return p == "largest" ? BranchPolicy::LargestIndex : BranchPolicy::SmallestIndex;
}

// Either a single affine word or the x / y / lambda triple (missing parts
// default to the identity and the zero coweight).
AffineElt element_from_opts(const RootSystem& R, const std::string& elt,
                            const std::string& x, const std::string& y,
                            const std::string& lambda) {
  bool triple = !x.empty() || !y.empty() || !lambda.empty();
  if (!elt.empty() && triple)
    throw InvalidInput("give either --elt or --x/--y/--lambda, not both");
  if (!elt.empty()) return parse_affine(R, elt);
  if (!triple) throw InvalidInput("an element is required: --elt or --x/--y/--lambda");
  WeylElt wx = x.empty() ? identity(R) : parse_finite(R, x);
  WeylElt wy = y.empty() ? identity(R) : parse_finite(R, y);
  Coweight l = lambda.empty() ? Coweight(std::vector<Int>(R.rank(), 0))
                              : parse_coweight(R, lambda);
  AffineElt a = aff_mul(R, from_finite(R, wx), from_translation(R, neg(l)));
  return aff_mul(R, a, aff_inv(R, from_finite(R, wy)));
}

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_selfcheck_cmd(bool deep, std::uint64_t seed, const std::string& format) {
  std::vector<OracleReport> reports = run_selfcheck(deep, seed);
  bool all = true;
  for (const OracleReport& r : reports) all = all && r.passed();
  if (format == "json") {
    emit(reports_to_json(reports));
  } else {
    for (const OracleReport& r : reports) {
      std::cout << (r.passed() ? "ok   " : "FAIL ") << r.check_name << " ("
                << r.instance_count << " instances)\n";
      for (const std::string& m : r.mismatches) std::cout << "     " << m << "\n";
    }
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonemptiness of affine Deligne-Lusztig sets X_w(1)"};
  app.set_version_flag("--version", library_version());
  app.require_subcommand(1);

  std::string type = "A", x_word, y_word, lambda_word, elt_word;
  std::string policy = "smallest", format;
  int rank = 2;
  bool deep = false;
  std::uint64_t seed = 1;

  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--type", type, "root system type letter")->capture_default_str();
    cmd->add_option("--rank", rank, "root system rank")->capture_default_str();
  };
  auto add_element = [&](CLI::App* cmd) {
    cmd->add_option("--x", x_word, "finite word, minimal coset part");
    cmd->add_option("--y", y_word, "finite word, twisting part");
    cmd->add_option("--lambda", lambda_word,
                    "dominant coweight, comma-separated pairings");
    cmd->add_option("--elt", elt_word, "affine word, alternative to the triple");
    cmd->add_option("--policy", policy, "branch tie-break: smallest|largest")
        ->check(CLI::IsMember({"smallest", "largest"}));
  };

  CLI::App* decide_cmd = app.add_subcommand("decide", "decide X_w(1) emptiness");
  add_system(decide_cmd);
  add_element(decide_cmd);
  decide_cmd->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* pieces_cmd = app.add_subcommand("pieces", "list the pieces of an element");
  add_system(pieces_cmd);
  add_element(pieces_cmd);
  pieces_cmd->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* boundary_cmd =
      app.add_subcommand("boundary", "boundary strata with full support");
  add_system(boundary_cmd);
  boundary_cmd->add_option("--format", format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App* closure_cmd =
      app.add_subcommand("closure", "closure order on all strata");
  add_system(closure_cmd);
  closure_cmd->add_option("--format", format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* table_cmd = app.add_subcommand("table", "verdict per (x, y) pair");
  add_system(table_cmd);
  table_cmd->add_option("--lambda", lambda_word,
                        "dominant coweight, comma-separated pairings")
      ->required();
  table_cmd->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI::App* self_cmd = app.add_subcommand("selfcheck", "run the validation sweep");
  self_cmd->add_flag("--deep", deep, "widen every sweep");
  self_cmd->add_option("--seed", seed, "sampling seed")->capture_default_str();
  self_cmd->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*decide_cmd) {
      RootSystem R = build_system(type, rank);
      AffineElt a = element_from_opts(R, elt_word, x_word, y_word, lambda_word);
      Verdict v = decide(R, a, parse_policy(policy));
      if (format == "text") {
        std::cout << "element: " << print_affine(R, a) << "\n"
                  << "status: " << status_name(v.status) << "\n"
                  << "rule: " << rule_name(v.rule) << "\n";
      } else {
        emit(verdict_to_json(R, v));
      }
    } else if (*pieces_cmd) {
      RootSystem R = build_system(type, rank);
      AffineElt a = element_from_opts(R, elt_word, x_word, y_word, lambda_word);
      PieceSet p = kpieces(R, a, parse_policy(policy));
      if (format == "text") {
        for (const AffineElt& m : p.members) std::cout << print_affine(R, m) << "\n";
      } else {
        emit(pieces_to_json(R, p));
      }
    } else if (*boundary_cmd) {
      RootSystem R = build_system(type, rank);
      std::vector<GPieceLabel> labels = steinberg_boundary(R);
      if (format == "text") {
        for (const GPieceLabel& l : labels)
          std::cout << print_nodeset(l.J, R.rank()) << " " << print_finite(R, l.w)
                    << "\n";
      } else {
        emit(labels_to_json(R, labels));
      }
    } else if (*closure_cmd) {
      RootSystem R = build_system(type, rank);
      std::vector<GPieceLabel> labels = enumerate_gpieces(R);
      if (format == "json")
        emit(closure_to_json(R, labels));
      else
        std::cout << closure_to_dot(R, labels);
    } else if (*table_cmd) {
      RootSystem R = build_system(type, rank);
      EmptinessTable t = emptiness_table(R, parse_coweight(R, lambda_word));
      if (format == "json")
        emit(table_to_json(R, t));
      else
        std::cout << table_to_csv(R, t);
    } else if (*self_cmd) {
      return run_selfcheck_cmd(deep, seed, format);
    }
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
