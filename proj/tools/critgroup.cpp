// critgroup: command-line front end for the critical group library.
//
// Exit codes: 0 success, 1 usage or parse error, 2 mathematical precondition
// violated, 3 enumeration cap exceeded.

#include "report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace {

using namespace critgroup;
using report::ordered_json;

enum Exit { ok = 0, usage = 1, precondition = 2, cap = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

template <typename T>
T number(std::string_view tok, const char* what) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw UsageError(std::string("bad ") + what + " '" + std::string(tok) + "'");
  return value;
}

// "1,1,0" or, for single digits, "110": the chips on each non-bank vertex.
std::vector<Chips> parse_config(std::string_view text) {
  std::vector<Chips> out;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw UsageError("bad configuration '" + std::string(text) + "'");
      out.push_back(ch - '0');
    }
    return out;
  }
  for (auto tok : split(text, ',')) out.push_back(number<Chips>(tok, "configuration entry"));
  return out;
}

// "0,3,6;1,4,7;2,5,8" or, avoiding shell quoting, "0,3,6/1,4,7/2,5,8"
Partition parse_blocks(std::string_view text) {
  Partition blocks;
  const char sep = text.find('/') != std::string_view::npos ? '/' : ';';
  for (auto blk : split(text, sep)) {
    blocks.emplace_back();
    for (auto tok : split(blk, ',')) blocks.back().push_back(number<Vertex>(tok, "vertex"));
  }
  return blocks;
}

// "v:w,v:w"
std::vector<std::pair<Vertex, Vertex>> parse_pairs(std::string_view text) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto tok : split(text, ',')) {
    const auto parts = split(tok, ':');
    if (parts.size() != 2) throw UsageError("bad pair '" + std::string(tok) + "', expected v:w");
    out.emplace_back(number<Vertex>(parts[0], "vertex"), number<Vertex>(parts[1], "vertex"));
  }
  return out;
}

bool bundled_file(const std::string& path) {
  return std::filesystem::path(path).parent_path().filename() == "paper";
}

// Indented key/value rendering of a report.
void render(std::ostream& os, const ordered_json& j, int depth = 0) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  auto scalar = [](const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const ordered_json& a) {
    return std::all_of(a.begin(), a.end(), [](const auto& x) { return x.is_primitive(); });
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (it.key() == "schema_version" || it.key() == "command") continue;
    if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render(os, v, depth + 1);
    } else if (v.is_array() && !flat(v)) {
      os << pad << it.key() << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          render(os, e, depth + 1);
          os << '\n';
        } else {
          os << pad << "  " << e.dump() << '\n';
        }
      }
    } else if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
      os << pad << it.key() << ":\n";
      std::istringstream lines(v.get<std::string>());
      for (std::string line; std::getline(lines, line);) os << pad << "  " << line << '\n';
    } else if (v.is_array()) {
      os << pad << it.key() << ": " << v.dump() << '\n';
    } else {
      os << pad << it.key() << ": " << scalar(v) << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical groups of directed multigraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::size_t cap_value = 0;
  std::uint64_t seed = 1;
  app.add_flag("--json", json, "Emit machine-readable JSON");
  app.add_option("--cap", cap_value, "Enumeration cap (stable configurations, group elements)");
  app.add_option("--seed", seed, "Random seed for experiment");

  std::string file, file2, config, blocks, pairs, mode = "identify";
  Vertex bank = 0;
  bool coarsest = false, force = false;

  auto* group = app.add_subcommand("group", "Critical group, invariant counts, tree count");
  group->add_option("file", file, "Graph file")->required();

  auto* activities = app.add_subcommand("activities", "Vertex activity vector of a strongly connected graph");
  activities->add_option("file", file, "Graph file")->required();

  auto* dollar = app.add_subcommand("dollar", "The dollar game");
  dollar->add_option("file", file, "Graph file")->required();
  dollar->add_option("--bank", bank, "Bank vertex");
  dollar->require_subcommand(1);
  auto* stab = dollar->add_subcommand("stabilize", "Stabilize a configuration");
  stab->add_option("config", config, "Non-bank chips, e.g. 110 or 1,-2,0")->required();
  auto* succ = dollar->add_subcommand("successor", "Successor of a stable configuration");
  succ->add_option("config", config, "Non-bank chips")->required();
  auto* census = dollar->add_subcommand("census", "Coevalence classes of critical configurations");
  auto* classify = dollar->add_subcommand("classify", "Small / fair-not-small / unfair bank");

  auto* quotient = app.add_subcommand("quotient", "Equitable quotient and the map between dual groups");
  quotient->add_option("file", file, "Graph file")->required();
  quotient->add_option("--blocks", blocks, "Partition, e.g. 0,3,6;1,4,7;2,5,8 or 0,3,6/1,4,7/2,5,8");
  quotient->add_flag("--coarsest", coarsest, "Refine (--blocks or the trivial partition) to the coarsest equitable one");

  auto* surgery = app.add_subcommand("surgery", "Vertex identification and two-vertex twisting");
  surgery->add_option("G", file, "Graph file G")->required();
  surgery->add_option("H", file2, "Graph file H")->required();
  surgery->add_option("--pairs", pairs, "Glued pairs v:w (vertex of G : vertex of H)")->required();
  surgery->add_option("--mode", mode, "identify or twist")->check(CLI::IsMember({"identify", "twist"}));
  surgery->add_flag("--force", force, "Compute even when hypotheses fail");

  std::size_t n = 0, trials = 0;
  double p = 0;
  auto* experiment = app.add_subcommand("experiment", "Random graph statistics for G(n,p)");
  experiment->add_option("--n", n, "Vertices")->required();
  experiment->add_option("--p", p, "Edge probability")->required();
  experiment->add_option("--trials", trials, "Samples")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  report::Caps caps;
  if (cap_value > 0) caps.enumeration = caps.trees = cap_value;

  try {
    ordered_json out;
    const bool bundled = !file.empty() && bundled_file(file);
    if (group->parsed()) {
      out = report::group_report(load_graph(file), bundled);
    } else if (activities->parsed()) {
      out = report::activities_report(load_graph(file), bundled);
    } else if (dollar->parsed()) {
      const GameState gs(load_graph(file), bank);
      if (stab->parsed())
        out = report::stabilize_report(gs, Configuration::from_nonbank(gs.size(), bank, parse_config(config)), bundled);
      else if (succ->parsed())
        out = report::successor_report(gs, Configuration::from_nonbank(gs.size(), bank, parse_config(config)), bundled);
      else if (census->parsed())
        out = report::census_report(gs, caps, bundled);
      else if (classify->parsed())
        out = report::classify_report(gs, caps, bundled);
    } else if (quotient->parsed()) {
      const Digraph g = load_graph(file);
      if (blocks.empty() && !coarsest) throw UsageError("quotient needs --blocks or --coarsest");
      const Partition seed_blocks = blocks.empty() ? trivial_partition(g.size()) : parse_blocks(blocks);
      const auto ep = coarsest ? coarsest_equitable(g, seed_blocks) : check_equitable(g, seed_blocks);
      out = report::quotient_report(g, ep, caps, bundled);
    } else if (surgery->parsed()) {
      const SurgerySpec spec{load_graph(file), load_graph(file2), parse_pairs(pairs)};
      const bool labels = bundled || bundled_file(file2);
      out = mode == "twist" ? report::twist_report(spec, force, labels) : report::identify_report(spec, force, labels);
    } else if (experiment->parsed()) {
      out = report::experiment_report(run_experiment(n, p, trials, seed));
    }

    if (json)
      std::cout << out.dump(2) << '\n';
    else
      render(std::cout, out);
    return ok;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << " (raise --cap)\n";
    return cap;
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << " (use --force to compute anyway)\n";
    return precondition;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return precondition;
  }
}
