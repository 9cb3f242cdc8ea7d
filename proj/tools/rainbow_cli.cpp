#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rainbow/oracles.hpp"
#include "rainbow/rainbow.hpp"
#include "rainbow/report.hpp"

namespace {

using namespace rainbow;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInputError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!out) throw UsageError("cannot write " + path);
}

ColouredGraph load_graph(const std::string& path) {
  return parse_coloured_graph(read_file(path));
}

ColouredGraph generate(const std::string& family, int n, std::uint64_t seed) {
  if (family == "one-factorization") return gen_one_factorization(n);
  if (family == "random-proper") return gen_random_proper(n, seed);
  if (family == "rainbow") return gen_rainbow(n);
  throw UsageError("unknown family '" + family + "'");
}

Ratio parse_ratio(const std::string& text, const char* name) {
  try {
    return Ratio::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --") + name + ": " + e.what());
  }
}

Mode parse_mode(const std::string& text) {
  if (text == "paper") return Mode::Paper;
  if (text == "practical") return Mode::Practical;
  throw UsageError("--mode must be paper or practical");
}

std::vector<std::vector<EdgeIndex>> edge_lists(const DecompositionResult& res) {
  std::vector<std::vector<EdgeIndex>> out;
  for (const auto& t : res.trees) out.push_back(t.edges);
  return out;
}

// "4,6,8", "6:20" or "6:20:2"; an empty string is an empty list.
std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::vector<int> parts;
    std::stringstream is(item);
    std::string p;
    try {
      while (std::getline(is, p, ':')) parts.push_back(std::stoi(p));
    } catch (const std::exception&) {
      throw UsageError("bad n list item '" + item + "'");
    }
    if (parts.size() == 1) {
      out.push_back(parts[0]);
    } else if (parts.size() == 2 || parts.size() == 3) {
      const int step = parts.size() == 3 ? parts[2] : 1;
      if (step <= 0) throw UsageError("range step must be positive");
      for (int n = parts[0]; n <= parts[1]; n += step) out.push_back(n);
    } else {
      throw UsageError("bad n list item '" + item + "'");
    }
  }
  return out;
}

struct DecomposeArgs {
  std::string in;
  std::string out;
  std::string mode = "practical";
  std::string alpha = "1/8";
  std::string beta = "1/19200";
  std::optional<std::int64_t> ell;
  std::optional<int> limit;
  std::uint64_t seed = 0;
  bool timings = false;
};

PipelineParams make_params(const DecomposeArgs& a) {
  PipelineParams p;
  p.mode = parse_mode(a.mode);
  p.alpha = parse_ratio(a.alpha, "alpha");
  p.beta = parse_ratio(a.beta, "beta");
  p.ell = a.ell;
  p.limit = a.limit;
  p.seed = a.seed;
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

int run_gen(const std::string& kind, int n, std::uint64_t seed, const std::string& out) {
  const ColouredGraph g = generate(kind, n, seed);
  write_output(out, serialize_coloured_graph(g));
  auto& log = (out.empty() || out == "-") ? std::cerr : std::cout;
  log << "n=" << g.vertex_count() << " edges=" << g.edge_count() << " colours=" << g.colour_count() << "\n";
  return kOk;
}

int run_decompose(const DecomposeArgs& a) {
  const PipelineParams params = make_params(a);
  const ColouredGraph g = load_graph(a.in);
  const DecompositionResult res = decompose(g, params);
  const VerificationReport report = verify_decomposition(g, edge_lists(res));
  if (!report.ok()) {
    std::cerr << "verification failed: " << report.first_failure.value_or("unknown") << "\n";
    return kVerifyFailed;
  }
  ResultDocumentOptions opts;
  opts.input = a.in;
  opts.include_timings = a.timings;
  write_output(a.out, result_to_json(g, res, report, opts).dump(2) + "\n");
  std::cerr << "branch=" << to_string(res.branch) << " trees=" << res.trees.size();
  if (res.stats.degenerate) std::cerr << " (degenerate)";
  std::cerr << "\n";
  return kOk;
}

int run_verify(const std::string& graph_path, const std::string& result_path) {
  const ColouredGraph g = load_graph(graph_path);
  ResultTrees rt;
  try {
    rt = trees_from_json(nlohmann::json::parse(read_file(result_path)));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("result is not valid JSON: ") + e.what());
  }
  if (rt.n != g.vertex_count()) {
    throw UsageError("result has n=" + std::to_string(rt.n) + " but graph has n=" + std::to_string(g.vertex_count()));
  }
  const VerificationReport report = verify_decomposition(g, rt.trees);
  std::cout << verification_to_json(report).dump(2) << "\n";
  if (!report.ok()) {
    std::cerr << "FAIL: " << report.first_failure.value_or("unknown") << "\n";
    return kVerifyFailed;
  }
  std::cerr << "OK: " << report.tree_count << " tree(s)\n";
  return kOk;
}

int run_oracle(const std::string& in, const std::string& which) {
  const ColouredGraph g = load_graph(in);
  if (which == "partition-condition") {
    const PartitionCheck pc = partition_condition_holds(g);
    std::cout << (pc.holds ? "true" : "false") << "\n";
    if (pc.witness) {
      for (const VertexSet& part : *pc.witness) {
        for (std::size_t i = 0; i < part.size(); ++i) std::cout << (i ? " " : "") << part[i];
        std::cout << "\n";
      }
    }
  } else if (which == "tree-packing") {
    const int n = g.vertex_count();
    const int limit = n <= 1 ? 0 : g.edge_count() / (n - 1);
    std::cout << brute_force_tree_packing(g, limit) << "\n";
  } else if (which == "max-matching") {
    std::cout << brute_force_matching_number(g) << "\n";
  } else {
    throw UsageError("unknown oracle '" + which + "'");
  }
  return kOk;
}

int run_bench(const std::string& family, const std::string& n_list, int seeds, const std::string& mode) {
  PipelineParams params;
  params.mode = parse_mode(mode);
  if (seeds < 0) throw UsageError("--seeds must be non-negative");
  const std::vector<int> ns = parse_n_list(n_list);
  for (int n : ns) generate(family, n, 0);  // reject bad cells before any output

  std::cout << "n,seed,family,mode,branch,tree_count,millis\n";
  for (int n : ns) {
    for (int s = 0; s < seeds; ++s) {
      const auto seed = static_cast<std::uint64_t>(s);
      const ColouredGraph g = generate(family, n, seed);
      params.seed = seed;
      const auto start = std::chrono::steady_clock::now();
      const DecompositionResult res = decompose(g, params);
      const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      const VerificationReport report = verify_decomposition(g, edge_lists(res));
      if (!report.ok()) {
        std::cerr << "verification failed at n=" << n << " seed=" << seed << ": " << report.first_failure.value_or("unknown") << "\n";
        return kVerifyFailed;
      }
      std::cout << n << "," << seed << "," << family << "," << mode << "," << to_string(res.branch) << "," << res.trees.size()
                << "," << millis << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-disjoint rainbow spanning trees in properly edge-coloured complete graphs"};
  app.require_subcommand(1);

  std::string gen_kind;
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a generated .rcg graph");
  gen->add_option("kind", gen_kind, "one-factorization | random-proper | rainbow")->required();
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--seed", gen_seed, "seed for random-proper");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  DecomposeArgs dec;
  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a graph and write the JSON result");
  decompose_cmd->add_option("in", dec.in, ".rcg input")->required();
  decompose_cmd->add_option("--mode", dec.mode, "paper | practical");
  decompose_cmd->add_option("--alpha", dec.alpha, "alpha as p/q or decimal");
  decompose_cmd->add_option("--beta", dec.beta, "beta as p/q or decimal");
  decompose_cmd->add_option("--ell", dec.ell, "override tree target");
  decompose_cmd->add_option("--limit", dec.limit, "practical-mode tree cap");
  decompose_cmd->add_option("--seed", dec.seed, "random seed");
  decompose_cmd->add_option("--out", dec.out, "output path (default stdout)");
  decompose_cmd->add_flag("--timings", dec.timings, "include per-stage timings (output is then not reproducible)");

  std::string ver_graph, ver_result;
  auto* verify_cmd = app.add_subcommand("verify", "Check a JSON result against its graph");
  verify_cmd->add_option("graph", ver_graph, ".rcg input")->required();
  verify_cmd->add_option("result", ver_result, "JSON result")->required();

  std::string or_in, or_which;
  auto* oracle_cmd = app.add_subcommand("oracle", "Run an exhaustive oracle on a small graph");
  oracle_cmd->add_option("in", or_in, ".rcg input")->required();
  oracle_cmd->add_option("--which", or_which, "partition-condition | tree-packing | max-matching")->required();

  std::string bench_family = "one-factorization", bench_n, bench_mode = "practical";
  int bench_seeds = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Sweep n and seeds, printing CSV");
  bench_cmd->add_option("--family", bench_family, "one-factorization | random-proper | rainbow");
  bench_cmd->add_option("--n", bench_n, "list such as 4,6,8 or range 6:20[:step]");
  bench_cmd->add_option("--seeds", bench_seeds, "seeds 0..k-1 per n");
  bench_cmd->add_option("--mode", bench_mode, "paper | practical");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen) return run_gen(gen_kind, gen_n, gen_seed, gen_out);
    if (*decompose_cmd) return run_decompose(dec);
    if (*verify_cmd) return run_verify(ver_graph, ver_result);
    if (*oracle_cmd) return run_oracle(or_in, or_which);
    if (*bench_cmd) return run_bench(bench_family, bench_n, bench_seeds, bench_mode);
  } catch (const OracleRefused& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
