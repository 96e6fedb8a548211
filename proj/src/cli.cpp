#include "polyexp/cli.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "polyexp/branching.hpp"
#include "polyexp/characters.hpp"
#include "polyexp/polytope.hpp"
#include "polyexp/products.hpp"

namespace polyexp::cli {

using nlohmann::json;

namespace {

struct Input {
  RootSystemData rs;
  Weight weight;
};

Weight parse_weight_for(const RootSystemData& rs, const std::string& text, bool dominant = true) {
  Weight w = Weight::parse(text);
  if (w.rank() != rs.rank())
    throw std::invalid_argument("weight " + text + " has " + std::to_string(w.rank()) + " labels; " + rs.name() +
                                " needs " + std::to_string(rs.rank()));
  if (dominant && !w.is_dominant()) throw std::invalid_argument("weight " + text + " is not dominant");
  return w;
}

json document(const std::string& command, const RootSystemData& rs, json inputs, json result) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"algebra", rs.name()},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)}};
}

template <class Map>
json weight_table(const Map& m, const char* value_key) {
  json rows = json::array();
  for (const auto& [w, v] : m) rows.push_back({{"weight", w.str()}, {value_key, v}});
  return rows;
}

// Rows in dominance-compatible order (highest first), only nonzero entries.
json ordered_table(const RootSystemData& rs, const Weight& top, const std::map<Weight, Int>& m,
                   const char* value_key) {
  json rows = json::array();
  for (const auto& mu : dominant_cone_below(rs, top)) {
    auto it = m.find(mu);
    if (it != m.end() && it->second != 0) rows.push_back({{"weight", mu.str()}, {value_key, it->second}});
  }
  return rows;
}

json tensor_json(const RootSystemData& rs, const TensorDecomposition& t) {
  json rows = json::array();
  for (auto it = t.coeffs.rbegin(); it != t.coeffs.rend(); ++it)
    rows.push_back({{"weight", it->first.str()}, {"multiplicity", it->second}, {"dim", dim(rs, it->first)}});
  return rows;
}

json branching_json(const Embedding& emb, const BranchingResult& b) {
  json rows = json::array();
  for (auto it = b.coeffs.rbegin(); it != b.coeffs.rend(); ++it)
    rows.push_back({{"weight", it->first.str()}, {"multiplicity", it->second}, {"dim", emb.child.dim(it->first)}});
  return rows;
}

}  // namespace

json cmd_mults(const std::string& algebra, const std::string& weight, std::optional<std::int64_t> height_bound) {
  RootSystemData rs = build_algebra(algebra);
  Weight lambda = parse_weight_for(rs, weight);
  auto freud = mult_freudenthal(rs, lambda);

  auto cone = dominant_cone_below(rs, lambda);
  Int needed = 0;
  for (const auto& mu : cone) needed = std::max(needed, kostant_height_bound(rs, lambda, mu));
  Int bound = height_bound.value_or(needed);
  if (bound < needed)
    throw std::invalid_argument("--height-bound " + std::to_string(bound) + " is below the required " +
                                std::to_string(needed));
  auto k = kostant_table(rs, bound);
  bool agree = true;
  json rows = json::array();
  Int total = 0;
  for (const auto& mu : cone) {
    Int m = freud(mu);
    Int mk = mult_kostant(rs, lambda, mu, k);
    agree = agree && (m == mk);
    auto orbit_size = static_cast<Int>(orbit(rs, mu).size());
    total = checked_add(total, checked_mul(m, orbit_size));
    rows.push_back({{"weight", mu.str()}, {"mult", m}, {"orbit_size", orbit_size}});
  }
  Int d = dim(rs, lambda);
  json result{{"dim", d},
              {"dominant_multiplicities", rows},
              {"kostant_height_bound", bound},
              {"kostant_agrees", agree},
              {"weight_count", total}};
  json inputs{{"weight", lambda.str()}};
  if (height_bound) inputs["height_bound"] = *height_bound;
  json doc = document("mults", rs, inputs, result);
  if (!agree || total != d) throw CrossCheckFailure("Freudenthal and Kostant multiplicities disagree", doc);
  return doc;
}

json cmd_polytope(const std::string& algebra, const std::string& weight) {
  RootSystemData rs = build_algebra(algebra);
  Weight lambda = parse_weight_for(rs, weight);
  auto ainv = ainv_matrix(rs, lambda);
  PolytopeMultMap pm = polytope_mults(rs, lambda);
  auto recovered = recover_mults(rs, pm);
  auto freud = mult_freudenthal(rs, lambda);
  Int b = polytope_dimension(rs, lambda);
  auto points = static_cast<Int>(polytope_sum(rs, lambda).size());
  bool nonneg = true;
  for (const auto& [mu, a] : pm.polyts) nonneg = nonneg && a >= 0;
  bool match = recovered == freud;

  json result{{"polytope_multiplicities", ordered_table(rs, lambda, pm.polyts, "polyt")},
              {"ainv_row", ordered_table(rs, lambda, ainv.row(lambda), "value")},
              {"polytope_dimension", b},
              {"lattice_points", points},
              {"recovered_multiplicities", ordered_table(rs, lambda, recovered.mults, "mult")},
              {"recovered_match_freudenthal", match},
              {"non_negative", nonneg}};
  json doc = document("polytope", rs, json{{"weight", lambda.str()}}, result);
  if (!match || !nonneg || b != points) throw CrossCheckFailure("polytope expansion cross-check failed", doc);
  return doc;
}

json cmd_tensor(const std::string& algebra, const std::string& left, const std::string& right,
                const std::string& method) {
  RootSystemData rs = build_algebra(algebra);
  Weight lambda = parse_weight_for(rs, left);
  Weight mu = parse_weight_for(rs, right);
  json inputs{{"left", lambda.str()}, {"right", mu.str()}, {"method", method}};
  const Int expected = checked_mul(dim(rs, lambda), dim(rs, mu));

  std::optional<TensorDecomposition> result;
  json methods = json::object();
  bool agree = true;
  auto run = [&](const std::string& name, auto fn) {
    TensorDecomposition t = fn(rs, lambda, mu);
    methods[name] = tensor_json(rs, t);
    if (result && !(*result == t)) agree = false;
    if (!result) result = t;
  };
  if (method == "brute" || method == "all") run("brute", tensor_bruteforce);
  if (method == "rs" || method == "all") run("rs", tensor_racah_speiser);
  if (method == "polytope" || method == "all") run("polytope", tensor_polytope);
  if (!result) throw std::invalid_argument("unknown method '" + method + "' (brute|rs|polytope|all)");

  Int total = decomposition_dimension(rs, *result);
  json out{{"decomposition", tensor_json(rs, *result)},
           {"dimension_product", expected},
           {"dimension_check", total == expected}};
  if (method == "all") {
    out["agreement"] = agree;
    out["methods"] = methods;
  }
  json doc = document("tensor", rs, inputs, out);
  if (!agree || total != expected) throw CrossCheckFailure("tensor product methods disagree", doc);
  return doc;
}

json cmd_branch(const std::string& algebra, const std::string& embedding, const std::string& weight,
                const std::string& method) {
  RootSystemData rs = build_algebra(algebra);
  Embedding emb = resolve_embedding(rs, embedding);
  Weight lambda = parse_weight_for(rs, weight);
  json inputs{{"embedding", emb.label}, {"weight", lambda.str()}, {"method", method}};

  std::optional<BranchingResult> result;
  json methods = json::object();
  bool agree = true;
  auto run = [&](const std::string& name, auto fn) {
    BranchingResult b = fn(emb, lambda);
    methods[name] = branching_json(emb, b);
    if (result && !(*result == b)) agree = false;
    if (!result) result = b;
  };
  if (method == "brute" || method == "all") run("brute", branch_bruteforce);
  if (method == "orbits" || method == "all") run("orbits", branch_via_orbits);
  if (method == "polytopes" || method == "all") run("polytopes", branch_via_polytopes);
  if (!result) throw std::invalid_argument("unknown method '" + method + "' (brute|orbits|polytopes|all)");

  const Int d = dim(rs, lambda);
  const Int total = branching_dimension(emb, *result);
  json out{{"child", emb.child.name()},
           {"coefficients", branching_json(emb, *result)},
           {"dim", d},
           {"dimension_check", total == d}};
  if (method == "all") {
    out["agreement"] = agree;
    out["methods"] = methods;
  }
  json doc = document("branch", rs, inputs, out);
  if (!agree || total != d) throw CrossCheckFailure("branching routes disagree", doc);
  return doc;
}

json cmd_brion_check(const std::string& algebra, const std::string& weight, std::uint64_t seed, int samples) {
  RootSystemData rs = build_algebra(algebra);
  Weight lambda = parse_weight_for(rs, weight);
  if (samples < 1) throw std::invalid_argument("--samples must be positive");
  std::mt19937_64 rng(seed);
  json rows = json::array();
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    auto c = sample_generic_direction(rs, rng);
    auto [lhs, rhs] = brion_check(rs, lambda, c);
    double err = std::fabs(lhs - rhs) / std::max(std::fabs(lhs), 1.0);
    worst = std::max(worst, err);
    rows.push_back({{"direction", c}, {"lhs", lhs}, {"rhs", rhs}, {"relative_error", err}});
  }
  bool passed = worst < kBrionTolerance;
  json doc = document("brion-check", rs,
                      json{{"weight", lambda.str()}, {"seed", seed}, {"samples", samples}},
                      json{{"samples", rows}, {"max_relative_error", worst}, {"tolerance", kBrionTolerance},
                           {"passed", passed}});
  if (!passed) throw CrossCheckFailure("vertex-cone sum does not match the polytope sum", doc);
  return doc;
}

std::string render_pretty(const json& doc) {
  std::ostringstream os;
  os << doc.at("command").get<std::string>() << "  " << doc.at("algebra").get<std::string>() << "  ";
  for (const auto& [k, v] : doc.at("inputs").items()) os << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump()) << ' ';
  os << '\n';
  for (const auto& [key, value] : doc.at("result").items()) {
    if (value.is_array() && !value.empty() && value.front().is_object() && value.front().contains("weight")) {
      os << key << ":\n";
      for (const auto& row : value) {
        os << "  " << std::setw(14) << std::left << ("(" + row.at("weight").get<std::string>() + ")");
        for (const auto& [k, v] : row.items())
          if (k != "weight") os << "  " << k << ' ' << v.dump();
        os << '\n';
      }
    } else if (value.is_object()) {
      os << key << ":\n";
      for (const auto& [k, v] : value.items()) {
        os << "  " << k << ":";
        for (const auto& row : v) os << " (" << row.at("weight").get<std::string>() << ")x" << row.at("multiplicity");
        os << '\n';
      }
    } else if (key == "samples") {
      os << key << ": " << value.size() << '\n';
    } else {
      os << key << ": " << value.dump() << '\n';
    }
  }
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polytope expansion of simple Lie algebra characters"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Human-readable tables instead of JSON");

  std::string algebra, weight, weight2, embedding, method;
  std::optional<std::int64_t> height_bound;
  std::uint64_t seed = 1;
  int samples = 20;

  auto* mults = app.add_subcommand("mults", "Dominant weight multiplicities and dimension");
  mults->add_option("algebra", algebra, "Algebra, e.g. A2")->required();
  mults->add_option("weight", weight, "Highest weight as Dynkin labels, e.g. 1,3")->required();
  mults->add_option("--height-bound", height_bound, "Height bound of the Kostant partition table");

  auto* polytope = app.add_subcommand("polytope", "Polytope multiplicities of a character");
  polytope->add_option("algebra", algebra)->required();
  polytope->add_option("weight", weight)->required();

  auto* tensor = app.add_subcommand("tensor", "Tensor product decomposition");
  tensor->add_option("algebra", algebra)->required();
  tensor->add_option("left", weight)->required();
  tensor->add_option("right", weight2)->required();
  tensor->add_option("--method", method, "brute|rs|polytope|all")
      ->default_val("all")
      ->check(CLI::IsMember({"brute", "rs", "polytope", "all"}));

  auto* branch = app.add_subcommand("branch", "Branching rule to a subalgebra");
  branch->add_option("algebra", algebra)->required();
  branch->add_option("embedding", embedding, "principal-a1, subdiagram:i,j,... or a JSON file")->required();
  branch->add_option("weight", weight)->required();
  branch->add_option("--method", method, "brute|orbits|polytopes|all")
      ->default_val("all")
      ->check(CLI::IsMember({"brute", "orbits", "polytopes", "all"}));

  auto* brion = app.add_subcommand("brion-check", "Numeric check of the vertex-cone formula for B_lambda");
  brion->add_option("algebra", algebra)->required();
  brion->add_option("weight", weight)->required();
  brion->add_option("--seed", seed, "Seed for the random directions")->default_val(1);
  brion->add_option("--samples", samples, "Number of random directions")->default_val(20);

  for (auto* sub : {mults, polytope, tensor, branch, brion})
    sub->add_flag("--pretty", pretty, "Human-readable tables instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const json& doc) {
    if (pretty) out << render_pretty(doc);
    else out << doc.dump(2) << '\n';
  };
  try {
    json doc;
    if (mults->parsed()) doc = cmd_mults(algebra, weight, height_bound);
    else if (polytope->parsed()) doc = cmd_polytope(algebra, weight);
    else if (tensor->parsed()) doc = cmd_tensor(algebra, weight, weight2, method);
    else if (branch->parsed()) doc = cmd_branch(algebra, embedding, weight, method);
    else doc = cmd_brion_check(algebra, weight, seed, samples);
    emit(doc);
    return 0;
  } catch (const CrossCheckFailure& e) {
    emit(e.document);
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    // invalid_argument / domain_error / length_error are input problems
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e) ||
        dynamic_cast<const std::length_error*>(&e)) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    err << "internal check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace polyexp::cli
