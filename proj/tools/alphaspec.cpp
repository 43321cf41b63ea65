#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "alphaspec/bounds.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/errors.hpp"
#include "alphaspec/generators.hpp"
#include "alphaspec/graph6.hpp"
#include "alphaspec/json_io.hpp"
#include "alphaspec/parallel.hpp"
#include "alphaspec/spectral.hpp"
#include "alphaspec/verify.hpp"

using namespace alphaspec;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Source {
  std::string graph6;
  std::string file;
  std::string family;

  void add_to(CLI::App* cmd) {
    auto* g = cmd->add_option("-g,--graph", graph6, "graph6 string");
    auto* f = cmd->add_option("-f,--file", file, "file with one graph6 string per line")->check(CLI::ExistingFile);
    auto* fam = cmd->add_option("--family", family, "family spec such as Snpe:6, Tnd:10,4, Cn:10");
    g->excludes(f, fam);
    f->excludes(fam);
  }

  std::vector<Graph> load() const {
    if (!graph6.empty()) return {graph6_decode(graph6)};
    if (!family.empty()) return {parse_family(family)};
    if (file.empty()) throw GraphError("give a graph with --graph, --file or --family");
    std::ifstream in(file);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.push_back(graph6_decode(line));
    }
    if (out.empty()) throw GraphError("no graphs in " + file);
    return out;
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw GraphError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// One graph gives an object, several give an array.
Json collapse(std::vector<Json> items) {
  if (items.size() == 1) return std::move(items.front());
  Json arr = Json::array();
  for (auto& j : items) arr.push_back(std::move(j));
  return arr;
}

std::string csv_optional(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

int run_spectrum(const Source& src, double alpha, const std::string& format, const std::string& out_path) {
  const Alpha a(alpha);
  std::vector<Json> items;
  Output out(out_path);
  for (const Graph& g : src.load()) {
    if (format == "text") {
      const auto s = spectrum(g, a);
      out.stream() << graph6_encode(g) << " alpha=" << format_number(alpha) << " rho=" << format_number(s.rho)
                   << " least=" << format_number(s.least) << '\n';
      continue;
    }
    items.push_back(spectrum_document(g, a));
  }
  if (format == "json") out.stream() << collapse(std::move(items)).dump(2) << '\n';
  return 0;
}

int run_bounds(const Source& src, double alpha, const std::string& format, const std::string& out_path) {
  const Alpha a(alpha);
  Output out(out_path);
  std::vector<Json> items;
  bool header = true;
  for (const Graph& g : src.load()) {
    if (format == "csv") {
      const auto evs = all_bounds(g, a);
      auto& os = out.stream();
      if (header) {
        os << "graph6,alpha,bound_id,parameter,applicable,direction,strict,target,value,target_value,slack,"
              "attained,equality_class\n";
        header = false;
      }
      for (const auto& ev : evs) {
        os << graph6_encode(g) << ',' << format_number(alpha) << ',' << ev.bound_id << ','
           << csv_optional(ev.parameter) << ',' << (ev.applicable ? "true" : "false") << ','
           << to_string(ev.direction) << ',' << (ev.strict ? "true" : "false") << ',' << ev.target << ',';
        if (ev.applicable) {
          os << format_number(ev.value) << ',' << format_number(ev.target_value) << ','
             << format_number(ev.slack);
        } else {
          os << ",,";
        }
        os << ',' << (ev.attained() ? "true" : "false") << ',' << ev.equality_class.value_or("") << '\n';
      }
      continue;
    }
    items.push_back(bounds_document(g, a));
  }
  if (format == "json") out.stream() << collapse(std::move(items)).dump(2) << '\n';
  return 0;
}

int run_indices(const Source& src, double alpha, const std::string& out_path) {
  const Alpha a(alpha);
  Output out(out_path);
  std::vector<Json> items;
  for (const Graph& g : src.load()) {
    items.push_back(indices_document(g, a));
  }
  out.stream() << collapse(std::move(items)).dump(2) << '\n';
  return 0;
}

int run_enumerate(const std::string& cls, int n, const std::string& format, const std::string& out_path) {
  const auto graphs = enumerate({n, parse_graph_class(cls)});
  Output out(out_path);
  auto& os = out.stream();
  if (format == "count") {
    os << graphs.size() << '\n';
  } else if (format == "json") {
    Json arr = Json::array();
    for (const auto& g : graphs) arr.push_back(graph_document(g));
    os << arr.dump(2) << '\n';
  } else {
    for (const auto& g : graphs) os << graph6_encode(g) << '\n';
  }
  return 0;
}

struct VerifyArgs {
  std::string theorem;
  std::string n;
  std::string alphas = "default";
  std::string json;
  std::string checkpoint;
  int workers = 0;
  std::uint64_t seed = VerifyOptions{}.seed;
  double margin = kStrictMargin;
  double window = kEqualityWindow;
  double deadband = VerifyOptions{}.perron_deadband;
  bool no_certify = false;
  bool quiet = false;
};

int run_verify(const VerifyArgs& args) {
  VerifyOptions opt;
  opt.alphas = parse_alpha_list(args.alphas);
  opt.strict_margin = args.margin;
  opt.equality_window = args.window;
  opt.perron_deadband = args.deadband;
  opt.certify_ties = !args.no_certify;
  opt.workers = args.workers > 0 ? args.workers : default_workers();
  opt.seed = args.seed;
  opt.checkpoint_dir = args.checkpoint;
  std::optional<NRange> range;
  if (!args.n.empty()) range = parse_n_range(args.n);

  std::vector<std::string> ids;
  if (args.theorem == "all") {
    for (const auto& t : known_theorems()) ids.push_back(t.id);
  } else {
    ids.push_back(resolve_theorem_id(args.theorem));
  }

  std::vector<Json> reports;
  bool failed = false;
  for (const auto& id : ids) {
    const TheoremReport rep = run_theorem(id, range, opt);
    failed = failed || !rep.passed();
    if (!args.quiet) {
      std::cout << rep.status() << ' ' << rep.theorem_id << " checked=" << rep.instances_checked
                << " skipped=" << rep.instances_skipped << " certified=" << rep.certified_ties
                << " violations=" << rep.violations.size();
      if (rep.smallest_gap) std::cout << " smallest_gap=" << format_number(*rep.smallest_gap);
      std::cout << '\n';
      for (const auto& v : rep.violations) {
        std::cout << "  " << v.kind << ' ' << v.check << ' ' << v.graph6;
        if (v.partner) std::cout << " vs " << *v.partner;
        std::cout << " alpha=" << format_number(v.alpha) << " value=" << format_number(v.value) << '\n';
      }
    }
    reports.push_back(to_json(rep));
  }
  if (!args.json.empty()) {
    Output out(args.json);
    out.stream() << collapse(std::move(reports)).dump(2) << '\n';
  }
  return failed ? kExitViolations : 0;
}

int run_scan(const Source& src, int steps, const std::string& alphas, const std::string& out_path) {
  std::vector<double> grid;
  if (!alphas.empty()) {
    std::stringstream ss(alphas);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(Alpha(std::stod(item)).value());
  } else {
    for (int k = 0; k <= steps; ++k) grid.push_back(static_cast<double>(k) / steps);
  }
  const auto graphs = src.load();
  Output out(out_path);
  auto& os = out.stream();
  os << "alpha";
  for (const auto& g : graphs) os << ',' << (graphs.size() == 1 ? std::string("rho") : graph6_encode(g));
  os << '\n';
  for (double a : grid) {
    os << format_number(a);
    for (const auto& g : graphs) os << ',' << format_number(alpha_spectral_radius(g, Alpha(a)));
    os << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-spectral radius toolkit: spectra, bounds, enumeration and exhaustive verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "alphaspec 0.1.0");

  Source src;
  double alpha = 0.0;
  std::string format;
  std::string out_path;

  auto* spec = app.add_subcommand("spectrum", "eigenvalues, rho and Perron vector of A_alpha");
  src.add_to(spec);
  spec->add_option("-a,--alpha", alpha, "alpha in [0, 1]")->check(CLI::Range(0.0, 1.0));
  spec->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  spec->add_option("-o,--output", out_path, "write here instead of stdout");

  auto* bounds = app.add_subcommand("bounds", "every bound with slack and equality classification");
  src.add_to(bounds);
  bounds->add_option("-a,--alpha", alpha, "alpha in [0, 1]")->check(CLI::Range(0.0, 1.0));
  bounds->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* csv_flag = bounds->add_flag("--csv", "same as --format csv");
  bounds->add_option("-o,--output", out_path, "write here instead of stdout");

  auto* idx = app.add_subcommand("indices", "alpha-energy, alpha-Estrada index, Zagreb index and their bounds");
  src.add_to(idx);
  idx->add_option("-a,--alpha", alpha, "alpha in [0, 1]")->check(CLI::Range(0.0, 1.0));
  idx->add_option("-o,--output", out_path, "write here instead of stdout");

  std::string cls = "trees";
  int n = 1;
  auto* en = app.add_subcommand("enumerate", "one graph per isomorphism class");
  en->add_option("--class", cls, "trees, unicyclic, connected, all, connected-nonbipartite");
  en->add_option("-n,--n", n, "order")->required()->check(CLI::PositiveNumber);
  en->add_option("--format", format, "graph6, json or count")->check(CLI::IsMember({"graph6", "json", "count"}));
  en->add_option("-o,--output", out_path, "write here instead of stdout");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "exhaustive verification of one theorem, or all");
  ver->add_option("-t,--theorem", va.theorem, "theorem id or alias, or 'all'")->required();
  ver->add_option("-n,--n", va.n, "order or range A..B (default: the theorem's standard range)");
  ver->add_option("--alphas", va.alphas, "'default' or a comma list of values in [0, 1)");
  ver->add_option("--json", va.json, "write the TheoremReport JSON here");
  ver->add_option("--checkpoint", va.checkpoint, "directory for resumable progress files");
  ver->add_option("-w,--workers", va.workers, "worker threads (default: ALPHASPEC_WORKERS or all cores)")
      ->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", va.seed, "seed for the random corpora");
  ver->add_option("--margin", va.margin, "margin a strict inequality must clear")->check(CLI::NonNegativeNumber);
  ver->add_option("--window", va.window, "equality window")->check(CLI::NonNegativeNumber);
  ver->add_option("--deadband", va.deadband, "Perron entries closer than this count as ties")
      ->check(CLI::NonNegativeNumber);
  ver->add_flag("--no-certify", va.no_certify, "report near ties instead of settling them in extended precision");
  ver->add_flag("-q,--quiet", va.quiet, "no per-theorem summary on stdout");

  int steps = 100;
  std::string scan_alphas;
  auto* scan = app.add_subcommand("scan-alpha", "rho_alpha over an alpha grid as CSV");
  src.add_to(scan);
  scan->add_option("--steps", steps, "grid k/steps for k = 0..steps")->check(CLI::PositiveNumber);
  scan->add_option("--alphas", scan_alphas, "explicit comma list instead of --steps");
  scan->add_option("-o,--output", out_path, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (spec->parsed()) return run_spectrum(src, alpha, format.empty() ? "json" : format, out_path);
    if (bounds->parsed()) {
      if (csv_flag->count() > 0) format = "csv";
      return run_bounds(src, alpha, format.empty() ? "json" : format, out_path);
    }
    if (idx->parsed()) return run_indices(src, alpha, out_path);
    if (en->parsed()) return run_enumerate(cls, n, format.empty() ? "graph6" : format, out_path);
    if (ver->parsed()) return run_verify(va);
    if (scan->parsed()) return run_scan(src, steps, scan_alphas, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
