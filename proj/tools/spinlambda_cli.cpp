// Command-line front end: presets and datum files, norm queries,
// transversal inspection, window scans with figure emission, and datum
// validation.
//
// Exit codes: 0 success, 1 usage/parse/IO error, 2 mathematically invalid
// datum or inadmissible query (including exceeded caps), 3 internal
// consistency failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <spinlambda/spinlambda.hpp>

namespace {

using namespace spinlambda;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DatumSource {
  std::string preset;
  std::string file;
};

void add_source_options(CLI::App* cmd, DatumSource& src) {
  auto* p = cmd->add_option("--preset", src.preset, "built-in datum: sl2r, sp4r, g2s");
  auto* f = cmd->add_option("--datum", src.file, "path to a datum JSON file");
  p->excludes(f);
  f->excludes(p);
}

PairDatum load_source(const DatumSource& src) {
  if (!src.preset.empty()) {
    try {
      return build_preset(src.preset);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!src.file.empty()) return load_datum_file(src.file);
  throw UsageError("exactly one of --preset or --datum is required");
}

std::vector<std::pair<long, long>> parse_window(const std::string& text) {
  std::vector<std::pair<long, long>> bounds;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto colon = part.find(':');
    if (colon == std::string::npos)
      throw UsageError("window range '" + part + "' is not of the form lo:hi");
    try {
      std::size_t used = 0;
      const long lo = std::stol(part.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(part);
      const std::string hi_text = part.substr(colon + 1);
      const long hi = std::stol(hi_text, &used);
      if (used != hi_text.size()) throw std::invalid_argument(part);
      bounds.emplace_back(lo, hi);
    } catch (const std::logic_error&) {
      throw UsageError("window range '" + part + "' is not of the form lo:hi");
    }
    if (bounds.back().first > bounds.back().second)
      throw UsageError("window range '" + part + "' has lower bound above upper bound");
  }
  if (bounds.empty()) throw UsageError("empty window");
  return bounds;
}

std::string describe_element(const Context& ctx, const WeylElement& w) {
  std::ostringstream os;
  os << word_string(w) << "   w(rho) = " << w.apply(ctx.rho_g) << "\n" << w.mat;
  return os.str();
}

double approx(const Rat& q) { return q.get_d(); }

void print_norm_report(const Context& ctx, const std::vector<long>& coords,
                       const NormReport& rep, std::ostream& os) {
  os << "datum: " << (ctx.datum.name.empty() ? "(unnamed)" : ctx.datum.name) << "\n";
  os << "lattice coords: [";
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? ", " : "") << coords[i];
  os << "]\n";
  os << "mu = " << rep.mu << "\n";
  os << "lambda^2       = " << to_string(rep.lambda_sq) << "  (~" << approx(rep.lambda_sq)
     << ")\n";
  os << "intermediate^2 = " << to_string(rep.intermediate_sq) << "  (~"
     << approx(rep.intermediate_sq) << ")\n";
  os << "spin^2         = " << to_string(rep.spin_sq) << "  (~" << approx(rep.spin_sq)
     << ")\n";
  os << "verdict: " << (rep.verdict.strict ? "strict (unpainted)" : "equality (painted)")
     << "\n";

  if (rep.verdict.cond_a)
    os << "  (a) holds: mu + 2 rho_c is orthogonal to the root "
       << *rep.verdict.annihilating_root << "\n";
  else
    os << "  (a) fails: mu + 2 rho_c is regular\n";

  if (rep.verdict.cond_b) {
    os << "  (b) holds: mu - w rho + rho_c leaves the compact chamber for every "
          "admissible w:\n";
    for (const auto& check : rep.verdict.shift_checks)
      os << "      w = " << word_string(check.w) << ": violates "
         << *check.violated_k_root << "\n";
  } else if (rep.verdict.dominant_witness) {
    os << "  (b) fails: w = " << word_string(*rep.verdict.dominant_witness)
       << " keeps mu - w rho + rho_c dominant\n";
  }
  os << "spin witness: w = " << word_string(rep.spin.witness) << " attaining "
     << rep.spin.attaining << "\n";
  os << "lambda chamber: w = " << word_string(rep.lambda.chamber_witness)
     << ", projection " << rep.lambda.projected << "\n";
}

int cmd_norms(const DatumSource& src, const std::vector<long>& coords, std::size_t cap) {
  const Context ctx = Context::build(load_source(src), cap);
  if (coords.size() != ctx.datum.lattice.rank())
    throw UsageError("expected " + std::to_string(ctx.datum.lattice.rank()) +
                     " lattice coordinates, got " + std::to_string(coords.size()));
  Weight mu = ctx.weight_from_lattice(coords);
  const NormReport rep = norm_report(ctx, mu);
  print_norm_report(ctx, coords, rep, std::cout);
  return 0;
}

int cmd_w1(const DatumSource& src, std::size_t cap) {
  const Context ctx = Context::build(load_source(src), cap);
  std::cout << "|W1| = " << ctx.w1.size() << "\n";
  for (std::size_t i = 0; i < ctx.w1.size(); ++i)
    std::cout << "[" << i << "] " << describe_element(ctx, ctx.w1[i]) << "\n";
  return 0;
}

int cmd_scan(const DatumSource& src, const std::string& window, const std::string& format,
             const std::string& out_path, std::size_t cap, unsigned jobs,
             std::size_t max_points) {
  const Context ctx = Context::build(load_source(src), cap);
  WindowSpec win;
  win.bounds = parse_window(window);
  win.max_points = max_points;
  if (win.bounds.size() != ctx.datum.lattice.rank())
    throw UsageError("window arity " + std::to_string(win.bounds.size()) +
                     " does not match the lattice rank " +
                     std::to_string(ctx.datum.lattice.rank()));
  EmitFormat fmt;
  try {
    fmt = emit_format_from_string(format);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto records = classify(ctx, win, jobs);
  const auto part = partition_report(ctx, records);
  // Serialize fully before touching the sink so failures never leave
  // partial output behind.
  const std::string document = emit_string(ctx, records, part, fmt);
  if (out_path.empty()) {
    std::cout << document;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << document;
  }
  return 0;
}

int cmd_validate(const DatumSource& src) {
  const PairDatum datum = load_source(src);
  const ValidationReport rep = validate(datum);
  if (!rep.ok) {
    std::cout << "datum is invalid:\n";
    for (const auto& e : rep.errors) std::cout << "  - " << e << "\n";
    return 2;
  }
  std::cout << "datum is valid\n";
  std::cout << "simple roots of g:";
  for (const auto& a : rep.simple_g) std::cout << " " << a;
  std::cout << "\nsimple roots of k:";
  for (const auto& a : rep.simple_k) std::cout << " " << a;
  std::cout << "\nrho   = " << rep.rho_g << "\n";
  std::cout << "rho_c = " << rep.rho_c << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lambda/spin norm computations over root-system pair data"};
  app.require_subcommand(1);

  DatumSource src;
  std::size_t cap = kDefaultWeylCap;
  unsigned jobs = 1;
  std::size_t max_points = 1'000'000;

  auto* norms_cmd = app.add_subcommand("norms", "norm report for one K-type");
  add_source_options(norms_cmd, src);
  norms_cmd->add_option("--cap", cap, "Weyl group enumeration cap");
  std::vector<long> coords;
  norms_cmd->add_option("coords", coords, "lattice coordinates of the highest weight");

  auto* w1_cmd = app.add_subcommand("w1", "list the chamber transversal");
  add_source_options(w1_cmd, src);
  w1_cmd->add_option("--cap", cap, "Weyl group enumeration cap");

  auto* scan_cmd = app.add_subcommand("scan", "classify a window of K-types");
  add_source_options(scan_cmd, src);
  std::string window, format = "ascii", out_path;
  scan_cmd->add_option("--window", window, "bounds lo:hi[,lo:hi...] per lattice coordinate")
      ->required();
  scan_cmd->add_option("--format", format, "csv|json|ascii|svg");
  scan_cmd->add_option("--out", out_path, "output path (default: standard output)");
  scan_cmd->add_option("--cap", cap, "Weyl group enumeration cap");
  scan_cmd->add_option("--jobs", jobs, "classification threads");
  scan_cmd->add_option("--max-points", max_points, "window size cap");

  auto* validate_cmd = app.add_subcommand("validate", "check a datum and print derived data");
  add_source_options(validate_cmd, src);

  try {
    app.parse(argc, argv);
    if (norms_cmd->parsed()) return cmd_norms(src, coords, cap);
    if (w1_cmd->parsed()) return cmd_w1(src, cap);
    if (scan_cmd->parsed())
      return cmd_scan(src, window, format, out_path, cap, jobs, max_points);
    if (validate_cmd->parsed()) return cmd_validate(src);
    return 1;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const DatumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "datum parse error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "datum parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
