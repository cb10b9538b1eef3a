// Command-line front end: branching multiplicities, isotypic
// decompositions, block tilings, path enumeration, characters and the
// invariant verification sweeps, with text and JSON output.
//
// Exit codes: 0 success, 1 verification failure (or internal consistency
// error), 2 usage or input error.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "branchblocks/branchblocks.hpp"

namespace bb = branchblocks;

namespace {

// "8,5,2,0" -> entries; the empty string is the rank-0 weight.
std::vector<bb::Int> parse_entries(const std::string& text) {
  std::vector<bb::Int> entries;
  if (text.empty()) return entries;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string token = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    // Tolerate surrounding spaces, as in "8, 5".
    const std::size_t first = token.find_first_not_of(' ');
    const std::size_t last = token.find_last_not_of(' ');
    token = first == std::string::npos ? std::string()
                                       : token.substr(first, last - first + 1);
    try {
      entries.emplace_back(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + token + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return entries;
}

bb::Family parse_family(const std::string& name) {
  if (name == "GL") return bb::Family::GL;
  if (name == "Sp") return bb::Family::Sp;
  if (name == "SOodd") return bb::Family::SOodd;
  if (name == "SOeven") return bb::Family::SOeven;
  throw std::invalid_argument("unknown family '" + name +
                              "' (expected GL, Sp, SOodd or SOeven)");
}

bb::DominantWeight make_weight(bb::Family family, const std::string& text) {
  std::vector<bb::Int> entries = parse_entries(text);
  // Take the rank before the move: argument evaluation order is unspecified.
  const bb::GroupFamily group(family, entries.size());
  return bb::DominantWeight(group, std::move(entries));
}

std::string twist_text(const bb::Int& twist) {
  return "det^" + twist.str();
}

void print_json(const nlohmann::json& value) {
  std::cout << value.dump(2) << "\n";
}

// Header + staggered layout for one tiling.
void print_tiling(const bb::Tiling& t) {
  std::cout << "path: " << t.path.to_string()
            << "  blocks: " << t.sigma.to_string()
            << "  lambda: " << t.lambda.to_string()
            << "  mu: " << t.mu.to_string()
            << "  twist: " << twist_text(-t.mu.sum()) << "\n"
            << bb::render_tiling(t) << "\n";
}

int g_exit_code = 0;

void setup_multiplicity(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "multiplicity", "Branching multiplicity for one (lambda, mu) pair");
  auto family = std::make_shared<std::string>("GL");
  auto lambda_text = std::make_shared<std::string>();
  auto mu_text = std::make_shared<std::string>();
  auto json = std::make_shared<bool>(false);
  cmd->add_option("--family", *family, "GL, Sp, SOodd or SOeven")
      ->capture_default_str();
  cmd->add_option("--lambda", *lambda_text, "source weight, comma-separated")
      ->required();
  cmd->add_option("--mu", *mu_text,
                  "target weight, comma-separated (\"\" for rank 0)")
      ->required();
  cmd->add_flag("--json", *json, "emit JSON");
  cmd->callback([family, lambda_text, mu_text, json] {
    const bb::Family f = parse_family(*family);
    const bb::DominantWeight lambda = make_weight(f, *lambda_text);
    const bb::DominantWeight mu = make_weight(f, *mu_text);
    bb::BranchingResult result = [&] {
      switch (f) {
        case bb::Family::GL: return bb::gl_multiplicity(lambda, mu);
        case bb::Family::Sp: return bb::sp_multiplicity(lambda, mu);
        case bb::Family::SOodd: return bb::so_odd_multiplicity(lambda, mu);
        case bb::Family::SOeven: return bb::so_even_multiplicity(lambda, mu);
      }
      throw std::invalid_argument("unknown family");
    }();
    if (*json) {
      print_json(bb::branching_result_json(result));
      return;
    }
    std::cout << "multiplicity: " << result.multiplicity.str();
    if (result.sigma) std::cout << ", blocks: " << result.sigma->to_string();
    if (result.twist) std::cout << ", twist: " << twist_text(*result.twist);
    std::cout << "\n";
  });
}

void setup_decompose(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "decompose", "Full isotypic decomposition of one restriction");
  auto family = std::make_shared<std::string>("GL");
  auto lambda_text = std::make_shared<std::string>();
  auto json = std::make_shared<bool>(false);
  cmd->add_option("--family", *family, "GL, Sp, SOodd or SOeven")
      ->capture_default_str();
  cmd->add_option("--lambda", *lambda_text, "source weight, comma-separated")
      ->required();
  cmd->add_flag("--json", *json, "emit JSON");
  cmd->callback([family, lambda_text, json] {
    const bb::Family f = parse_family(*family);
    const bb::DominantWeight lambda = make_weight(f, *lambda_text);
    const bb::Decomposition decomposition = [&] {
      switch (f) {
        case bb::Family::GL: return bb::gl_decompose(lambda);
        case bb::Family::Sp: return bb::sp_decompose(lambda);
        case bb::Family::SOodd: return bb::so_odd_decompose(lambda);
        case bb::Family::SOeven: return bb::so_even_decompose(lambda);
      }
      throw std::invalid_argument("unknown family");
    }();
    if (*json) {
      print_json(bb::decomposition_json(decomposition));
      return;
    }
    std::string line;
    for (const bb::BranchingResult& r : decomposition.components) {
      if (!line.empty()) line += ", ";
      line += r.target.to_string() + ": " + r.multiplicity.str();
    }
    std::cout << line << "\n";
  });
}

void setup_tilings(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "tilings", "Block tilings for a (lambda, mu) pair or a sigma chain");
  auto lambda_text = std::make_shared<std::optional<std::string>>();
  auto mu_text = std::make_shared<std::optional<std::string>>();
  auto sigma_text = std::make_shared<std::optional<std::string>>();
  auto all_paths = std::make_shared<bool>(false);
  auto json = std::make_shared<bool>(false);
  auto* lambda_opt =
      cmd->add_option("--lambda", *lambda_text, "upper row, comma-separated");
  auto* mu_opt = cmd->add_option(
      "--mu", *mu_text, "lower row, comma-separated (\"\" for rank 0)");
  auto* sigma_opt = cmd->add_option(
      "--sigma", *sigma_text, "flat chain x1,z1,x2,z2,... instead of rows");
  sigma_opt->excludes(lambda_opt)->excludes(mu_opt);
  lambda_opt->needs(mu_opt);
  mu_opt->needs(lambda_opt);
  cmd->add_flag("--all-paths", *all_paths,
                "lay the blocks along every path, not just the canonical one");
  cmd->add_flag("--json", *json, "emit JSON");
  cmd->callback([lambda_text, mu_text, sigma_text, all_paths, json] {
    std::vector<bb::Tiling> tilings;
    if (*sigma_text) {
      const bb::SigmaSequence sigma =
          bb::SigmaSequence::from_flat(parse_entries(**sigma_text));
      for (const bb::DirectedPath& path :
           bb::enumerate_paths(sigma.size() + 1))
        tilings.push_back(bb::path_to_tiling(path, sigma));
    } else if (*lambda_text && *mu_text) {
      const bb::DominantWeight lambda =
          make_weight(bb::Family::GL, **lambda_text);
      const bb::DominantWeight mu = make_weight(bb::Family::GL, **mu_text);
      const bb::SigmaSequence sigma = bb::merge_sigma(lambda, mu);
      if (*all_paths) {
        // Every path whose tiling reproduces these rows; more than one
        // exactly when sigma has tied entries.
        for (const bb::DirectedPath& path :
             bb::enumerate_paths(lambda.rank())) {
          bb::Tiling t = bb::path_to_tiling(path, sigma);
          if (t.lambda == lambda && t.mu == mu) tilings.push_back(std::move(t));
        }
      } else {
        tilings.push_back(
            bb::path_to_tiling(bb::canonical_path(lambda, mu), sigma));
      }
    } else {
      throw std::invalid_argument(
          "tilings: need either --sigma or both --lambda and --mu");
    }
    if (*json) {
      nlohmann::json out = nlohmann::json::array();
      for (const bb::Tiling& t : tilings) out.push_back(bb::tiling_json(t));
      print_json(out);
      return;
    }
    for (const bb::Tiling& t : tilings) print_tiling(t);
    std::cout << (tilings.size() == 1 ? "1 tiling" :
                  std::to_string(tilings.size()) + " tilings") << "\n";
  });
}

void setup_paths(CLI::App& app) {
  auto* cmd =
      app.add_subcommand("paths", "Enumerate the directed paths on n columns");
  auto n = std::make_shared<int>(0);
  auto json = std::make_shared<bool>(false);
  cmd->add_option("n", *n, "number of columns (>= 2)")->required();
  cmd->add_flag("--json", *json, "emit JSON");
  cmd->callback([n, json] {
    if (*n < 2)
      throw std::invalid_argument("paths: n must be >= 2, got " +
                                  std::to_string(*n));
    const std::vector<bb::DirectedPath> paths =
        bb::enumerate_paths(static_cast<std::size_t>(*n));
    if (*json) {
      nlohmann::json out = nlohmann::json::array();
      for (const bb::DirectedPath& p : paths) out.push_back(bb::path_json(p));
      print_json(out);
      return;
    }
    for (const bb::DirectedPath& p : paths)
      std::cout << p.to_string() << "\n";
    std::cout << paths.size() << " paths\n";
  });
}

void setup_character(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "character",
      "GL(2) block character or the full branching-space character");
  auto gl2_text = std::make_shared<std::optional<std::string>>();
  auto lambda_text = std::make_shared<std::optional<std::string>>();
  auto mu_text = std::make_shared<std::optional<std::string>>();
  auto sl2 = std::make_shared<bool>(false);
  auto json = std::make_shared<bool>(false);
  auto* gl2_opt =
      cmd->add_option("--gl2", *gl2_text, "one block as x,z");
  auto* lambda_opt =
      cmd->add_option("--lambda", *lambda_text, "upper row, comma-separated");
  auto* mu_opt = cmd->add_option(
      "--mu", *mu_text, "lower row, comma-separated (\"\" for rank 0)");
  gl2_opt->excludes(lambda_opt)->excludes(mu_opt);
  lambda_opt->needs(mu_opt);
  mu_opt->needs(lambda_opt);
  cmd->add_flag("--sl2", *sl2, "restrict to SL(2): t1 -> t, t2 -> 1/t");
  cmd->add_flag("--json", *json, "emit JSON");
  cmd->callback([gl2_text, lambda_text, mu_text, sl2, json] {
    bb::LaurentPolynomial<2> character;
    if (*gl2_text) {
      const std::vector<bb::Int> entries = parse_entries(**gl2_text);
      if (entries.size() != 2)
        throw std::invalid_argument("--gl2 needs exactly two entries");
      character = bb::gl2_character(entries[0], entries[1]);
    } else if (*lambda_text && *mu_text) {
      const bb::DominantWeight lambda =
          make_weight(bb::Family::GL, **lambda_text);
      const bb::DominantWeight mu = make_weight(bb::Family::GL, **mu_text);
      character = bb::branching_character(lambda, mu);
    } else {
      throw std::invalid_argument(
          "character: need either --gl2 or both --lambda and --mu");
    }
    if (*sl2) {
      const bb::LaurentPolynomial<1> restricted =
          bb::restrict_to_sl2(character);
      if (*json)
        print_json(bb::polynomial_json(restricted));
      else
        std::cout << restricted.to_string() << "\n";
      return;
    }
    if (*json)
      print_json(bb::polynomial_json(character));
    else
      std::cout << character.to_string() << "\n";
  });
}

void setup_verify(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "verify", "Run the invariant sweeps and report per-check counts");
  auto suite = std::make_shared<std::string>("small");
  auto json = std::make_shared<bool>(false);
  cmd->add_option("--suite", *suite, "small or full")
      ->check(CLI::IsMember({"small", "full"}))
      ->capture_default_str();
  cmd->add_flag("--json", *json, "emit JSON");
  cmd->callback([suite, json] {
    const bb::VerificationReport report = bb::run_verification(*suite == "full");
    if (*json) {
      nlohmann::json checks = nlohmann::json::array();
      for (const bb::VerificationCheck& c : report.checks) {
        nlohmann::json entry = {
            {"name", c.name}, {"cases", c.cases}, {"passed", c.passed}};
        if (!c.passed) entry["counterexample"] = c.counterexample;
        checks.push_back(entry);
      }
      print_json({{"suite", *suite}, {"ok", report.ok()}, {"checks", checks}});
    } else {
      std::string line;
      for (const bb::VerificationCheck& c : report.checks) {
        if (!line.empty()) line += "; ";
        line += c.name + ": " +
                (c.passed ? std::to_string(c.cases) + " cases OK" : "FAILED");
      }
      std::cout << line << "\n";
      for (const bb::VerificationCheck& c : report.checks)
        if (!c.passed)
          std::cout << c.name << " counterexample: " << c.counterexample
                    << "\n";
    }
    if (!report.ok()) g_exit_code = 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Branching multiplicities, block tilings and characters for the "
      "classical groups"};
  app.require_subcommand(1);
  setup_multiplicity(app);
  setup_decompose(app);
  setup_tilings(app);
  setup_paths(app);
  setup_character(app);
  setup_verify(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return g_exit_code;
}
