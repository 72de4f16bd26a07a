// kzeck: command-line front end for the k-bonacci vector Zeckendorf library.
// Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
// 2 validation or usage error, 3 internal invariant failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kzeck/bench.hpp"
#include "kzeck/core_sequences.hpp"
#include "kzeck/errors.hpp"
#include "kzeck/genfunc.hpp"
#include "kzeck/minimality.hpp"
#include "kzeck/representations.hpp"
#include "kzeck/spectral.hpp"
#include "kzeck/sr_solver.hpp"
#include "kzeck/statistics.hpp"

using namespace kzeck;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitInvariant = 3;

VecZ parse_vector(const std::string& text, int k) {
  std::vector<BigInt> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    BigInt e;
    if (item.empty() || e.set_str(item[0] == '+' ? item.substr(1) : item, 10) != 0) {
      throw ValidationError("malformed vector entry '" + item + "' in '" + text + "'");
    }
    entries.push_back(std::move(e));
  }
  if (!text.empty() && text.back() == ',') throw ValidationError("trailing comma in vector '" + text + "'");
  if (entries.size() != static_cast<std::size_t>(k - 1)) {
    throw DimensionMismatch("vector '" + text + "' has " + std::to_string(entries.size()) + " entries, expected " +
                            std::to_string(k - 1));
  }
  return VecZ(std::move(entries));
}

std::string rational_decimal(const Rational& q, int digits = 12) {
  std::ostringstream os;
  os.precision(digits);
  os << q.get_d();
  return os.str();
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw ValidationError("cannot open output file '" + path + "'");
  return file;
}

void require_k(int k, int lo) {
  if (k < lo) throw ValidationError("--k must be at least " + std::to_string(lo));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-bonacci vector Zeckendorf representations"};
  app.require_subcommand(1);

  int k = 3;
  std::string v_text;
  std::string strategy_name;
  bool as_json = false, as_csv = false;
  long n = 0;
  std::string out_path;

  auto add_k = [&](CLI::App* cmd) { cmd->add_option("--k", k, "recurrence order")->required(); };
  auto add_v = [&](CLI::App* cmd) {
    cmd->add_option("--v", v_text, "comma-separated integer vector with k-1 entries")->required();
  };

  auto* decompose = app.add_subcommand("decompose", "satisfying representation of a vector");
  add_k(decompose);
  add_v(decompose);
  decompose->add_option("--strategy", strategy_name, "small|large|reference|brute")->default_val("large");
  decompose->add_flag("--json", as_json, "emit {\"indices\":[...]}");

  auto* jbound = app.add_subcommand("jbound", "upper bound on the largest SR index");
  add_k(jbound);
  add_v(jbound);
  jbound->add_option("--strategy", strategy_name, "small|large")->required();
  jbound->add_flag("--json", as_json, "emit {\"strategy\",\"j\"}");

  auto* project = app.add_subcommand("project", "projection S_n(v)");
  add_k(project);
  add_v(project);
  project->add_option("--n", n, "modulus index")->required();
  project->add_flag("--json", as_json, "emit {\"n\",\"value\"}");

  auto* layer = app.add_subcommand("layer-stats", "summand-count statistics of layers 1..n");
  add_k(layer);
  layer->add_option("--n", n, "largest layer")->required();
  layer->add_flag("--csv", as_csv, "CSV rows per layer");
  layer->add_flag("--json", as_json, "JSON array per layer");

  auto* gaps = app.add_subcommand("gaps", "gap histogram of layer n against the limiting law");
  add_k(gaps);
  gaps->add_option("--n", n, "layer")->required();
  gaps->add_flag("--csv", as_csv, "CSV rows l,count,probability,limit");
  gaps->add_flag("--json", as_json, "JSON object");

  auto* genfunc = app.add_subcommand("genfunc", "exact layer moments from generating functions");
  add_k(genfunc);
  genfunc->add_option("--n-max", n, "largest n")->required();
  genfunc->add_flag("--csv", as_csv, "CSV rows n,A,mean,mean_exact,variance,variance_exact");
  genfunc->add_flag("--json", as_json, "JSON array");

  auto* spectral = app.add_subcommand("spectral", "characteristic roots and derived constants (JSON)");
  add_k(spectral);
  spectral->add_flag("--json", as_json, "JSON output (default)");

  int min_layer = 0;
  long max_index = 0;
  auto* minimality = app.add_subcommand("minimality", "search for representations shorter than the SR (JSON)");
  add_k(minimality);
  minimality->add_option("--layer", min_layer, "verify every SR with depths <= layer")->required();
  minimality->add_option("--max-index", max_index, "largest depth allowed in the search")->required();
  minimality->add_flag("--json", as_json, "JSON output (default)");

  SampleSpec sample{3, 0, 0, 0};
  auto* bench = app.add_subcommand("bench", "instrumented runs of every strategy (CSV)");
  add_k(bench);
  bench->add_option("--norm-bound", sample.norm_bound, "sample box half-width")->required();
  bench->add_option("--count", sample.count, "number of vectors")->required();
  bench->add_option("--seed", sample.seed, "mt19937_64 seed")->required();
  bench->add_option("--out", out_path, "CSV path, '-' for stdout")->required();
  bench->add_flag("--csv", as_csv, "CSV output (default)");

  double c = 0, d = 0;
  long sample_count = 0;
  auto* scatter = app.add_subcommand("scatter", "check j_lsb <= c ln||v||_2 + d (CSV)");
  add_k(scatter);
  scatter->add_option("--norm-bound", sample.norm_bound, "box half-width")->required();
  scatter->add_option("--c", c, "slope")->required();
  scatter->add_option("--d", d, "intercept")->required();
  scatter->add_option("--count", sample_count, "sample this many vectors instead of the whole box");
  scatter->add_option("--seed", sample.seed, "seed used with --count");
  scatter->add_flag("--csv", as_csv, "CSV output (default)");
  scatter->add_flag("--json", as_json, "summary JSON instead of CSV");

  auto* dn_points = app.add_subcommand("dn-points", "every vector of D_n with its J (CSV)");
  add_k(dn_points);
  dn_points->add_option("--n", n, "largest depth")->required();
  dn_points->add_option("--out", out_path, "CSV path, '-' for stdout")->required();
  dn_points->add_flag("--csv", as_csv, "CSV output (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*decompose) {
      require_k(k, 3);
      const auto strategy = parse_strategy(strategy_name);
      if (!strategy) throw ValidationError("unknown strategy '" + strategy_name + "'");
      const KBonacciContext ctx(k);
      const IndexSet sr = find_sr(ctx, parse_vector(v_text, k), *strategy);
      if (as_json) {
        std::cout << json{{"indices", sr}}.dump() << '\n';
      } else {
        std::cout << sr.to_string() << '\n';
      }
    } else if (*jbound) {
      require_k(k, 3);
      const auto strategy = parse_strategy(strategy_name);
      if (!strategy || (*strategy != Strategy::small_steps && *strategy != Strategy::large_steps)) {
        throw ValidationError("jbound strategy must be small or large");
      }
      const KBonacciContext ctx(k);
      const VecZ v = parse_vector(v_text, k);
      const long j = *strategy == Strategy::small_steps ? small_steps_bound(ctx, v).value
                                                        : large_steps_decomposition(ctx, v).bound.value;
      if (as_json) {
        std::cout << json{{"strategy", to_string(*strategy)}, {"j", j}}.dump() << '\n';
      } else {
        std::cout << j << '\n';
      }
    } else if (*project) {
      require_k(k, 3);
      const KBonacciContext ctx(k);
      const BigInt value = project_Sn(ctx, parse_vector(v_text, k), n);
      // Values can exceed 64 bits, so the JSON number is written directly.
      if (as_json) {
        std::cout << "{\"n\":" << n << ",\"value\":" << value << "}\n";
      } else {
        std::cout << value << '\n';
      }
    } else if (*layer) {
      require_k(k, 2);
      const KBonacciContext ctx(k);
      if (n < 1) throw IndexOutOfDomain("--n must be at least 1");
      std::vector<LayerStats> rows;
      for (int i = 1; i <= n; ++i) rows.push_back(layer_stats(ctx, i));
      if (as_json) {
        json out = json::array();
        for (const LayerStats& s : rows) {
          out.push_back({{"n", s.n},
                         {"count", s.count},
                         {"mean", s.mean.get_d()},
                         {"mean_exact", s.mean.get_str()},
                         {"variance", s.variance.get_d()},
                         {"variance_exact", s.variance.get_str()},
                         {"skewness", s.skewness},
                         {"excess_kurtosis", s.excess_kurtosis}});
        }
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "n,count,mean,mean_exact,variance,variance_exact,skewness,excess_kurtosis\n";
        std::cout.precision(12);
        for (const LayerStats& s : rows) {
          std::cout << s.n << ',' << s.count << ',' << rational_decimal(s.mean) << ',' << s.mean << ','
                    << rational_decimal(s.variance) << ',' << s.variance << ',' << s.skewness << ','
                    << s.excess_kurtosis << '\n';
        }
      }
    } else if (*gaps) {
      require_k(k, 2);
      const KBonacciContext ctx(k);
      const GapHistogram h = gap_histogram(ctx, static_cast<int>(n));
      const SpectralData sd = spectral_data(k);
      if (as_json) {
        json rows = json::array();
        for (int l = 0; l < h.n; ++l) {
          rows.push_back({{"l", l},
                          {"count", h.counts[static_cast<std::size_t>(l)]},
                          {"probability", h.probability(l)},
                          {"limit", limiting_gap_law(sd, l)}});
        }
        std::cout << json{{"k", k}, {"n", h.n}, {"n_gaps", h.n_gaps}, {"gaps", rows}}.dump(2) << '\n';
      } else {
        std::cout << "l,count,probability,limit\n";
        std::cout.precision(12);
        for (int l = 0; l < h.n; ++l) {
          std::cout << l << ',' << h.counts[static_cast<std::size_t>(l)] << ',' << h.probability(l) << ','
                    << limiting_gap_law(sd, l) << '\n';
        }
      }
    } else if (*genfunc) {
      require_k(k, 2);
      if (n < 1) throw ValidationError("--n-max must be at least 1");
      const MomentTable table = moment_table(k, static_cast<std::size_t>(n));
      if (as_json) {
        json out = json::array();
        for (long i = 1; i <= n; ++i) {
          const Rational m = table.mean(i), var = table.variance(i);
          out.push_back({{"n", i},
                         {"A", table.a[static_cast<std::size_t>(i)].get_str()},
                         {"mean", m.get_d()},
                         {"mean_exact", m.get_str()},
                         {"variance", var.get_d()},
                         {"variance_exact", var.get_str()}});
        }
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "n,A,mean,mean_exact,variance,variance_exact\n";
        for (long i = 1; i <= n; ++i) {
          const Rational m = table.mean(i), var = table.variance(i);
          std::cout << i << ',' << table.a[static_cast<std::size_t>(i)] << ',' << rational_decimal(m) << ',' << m
                    << ',' << rational_decimal(var) << ',' << var << '\n';
        }
      }
    } else if (*spectral) {
      require_k(k, 2);
      std::cout << json(spectral_data(k)).dump(2) << '\n';
    } else if (*minimality) {
      require_k(k, 3);
      const KBonacciContext ctx(k);
      std::cout << json(verify_layer_minimality(ctx, min_layer, max_index)).dump(2) << '\n';
    } else if (*bench) {
      require_k(k, 3);
      sample.k = k;
      const auto records = run_benchmark(sample);
      std::ofstream file;
      write_bench_csv(open_output(out_path, file), k, records);
      std::clog << "bench: " << records.size() << " records\n";
    } else if (*scatter) {
      require_k(k, 3);
      std::optional<SampleSpec> spec;
      if (sample_count > 0) spec = SampleSpec{k, sample.norm_bound, sample_count, sample.seed};
      const ScatterResult result = jbound_scatter(k, sample.norm_bound, spec, c, d);
      if (as_json) {
        json violations = json::array();
        for (const VecZ& v : result.violations) violations.push_back(v.to_string());
        std::cout << json{{"k", k},
                          {"norm_bound", sample.norm_bound},
                          {"c", c},
                          {"d", d},
                          {"points", result.points.size()},
                          {"violations", violations},
                          {"max_ratio", result.max_ratio}}
                         .dump(2)
                  << '\n';
      } else {
        write_scatter_csv(std::cout, result);
      }
      std::clog << "scatter: " << result.points.size() << " points, " << result.violations.size()
                << " violations\n";
    } else if (*dn_points) {
      require_k(k, 3);
      if (n < 0 || n > kMaxLayer) throw IndexOutOfDomain("--n must lie in [0, 30]");
      const KBonacciContext ctx(k);
      std::ofstream file;
      std::ostream& os = open_output(out_path, file);
      for (int i = 1; i < k; ++i) os << (i > 1 ? "," : "") << 'v' << i;
      os << ",J\n";
      for (int i = 1; i < k; ++i) os << "0,";
      os << "0\n";
      for (int layer_n = 1; layer_n <= n; ++layer_n) {
        enumerate_layer(ctx, layer_n, [&](const IndexSet& s) {
          const VecZ v = evaluate_vector(ctx, s);
          for (const BigInt& e : v.entries()) os << e << ',';
          os << layer_n << '\n';
        });
      }
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const ConvergenceFailure& e) {
    std::cerr << "invariant failure: " << e.what() << '\n';
    return kExitInvariant;
  }
  return 0;
}
