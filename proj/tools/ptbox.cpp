// Copyright 2026 The ptbox Authors
// SPDX-License-Identifier: Apache-2.0

// ptbox: spectra of the PT-symmetric particle in a box with V = i a x^p y^q,
// block-diagonalized by point-group symmetry.

#include <CLI11.hpp>

#include <algorithm>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "ptbox/assembler.hpp"
#include "ptbox/boxbasis.hpp"
#include "ptbox/csv.hpp"
#include "ptbox/matelem.hpp"
#include "ptbox/parallel.hpp"
#include "ptbox/perturbation.hpp"
#include "ptbox/pointgroup.hpp"
#include "ptbox/spectral.hpp"
#include "ptbox/sweep.hpp"

namespace {

using namespace ptbox;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;        // validation: flags, names, config files
constexpr int kExitNumerical = 2;    // non-convergence or internal failure
constexpr int kExitCheckFailed = 3;  // a property check reported a violation

PotentialFamily parse_family(const std::string& name) {
  if (name == "xy") return PotentialFamily::xy();
  if (name == "xyy") return PotentialFamily::xyy();
  throw CLI::ValidationError("--family", "expected 'xy' or 'xyy'");
}

// "-" means stdout.
class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_)
        throw std::invalid_argument("cannot open output file: " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void add_config(CLI::App* sub) {
  sub->add_option("--config",
                  "flat key=value file with this subcommand's options; "
                  "explicit flags override config keys");
}

std::string strip_ws(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Expands `--config FILE` into `--key=value` tokens appended after the
// explicit arguments of the parsed subcommand, skipping every key that was
// already given as a flag (flags override config-file keys). Keys are the
// long option names, with or without the leading dashes.
std::vector<std::string> expand_config_args(CLI::App& app,
                                            std::vector<std::string> args) {
  CLI::App* sub = nullptr;
  std::size_t sub_pos = args.size();
  const auto subs = app.get_subcommands([](CLI::App*) { return true; });
  for (std::size_t i = 0; i < args.size() && !sub; ++i)
    for (CLI::App* s : subs)
      if (s->get_name() == args[i]) {
        sub = s;
        sub_pos = i;
        break;
      }
  if (!sub) return args;

  std::string path;
  for (std::size_t i = sub_pos + 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size())
      path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0)
      path = args[i].substr(9);
  }
  if (path.empty()) return args;

  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);

  const auto given = [&](const std::string& flag) {
    for (std::size_t i = sub_pos + 1; i < args.size(); ++i)
      if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) return true;
    return false;
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_ws(line);
    if (line.empty() || line[0] == '#') continue;
    const auto where = path + ":" + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: " + where +
                                  ": expected key=value, got '" + line + "'");
    std::string key = strip_ws(line.substr(0, eq));
    const std::string value = strip_ws(line.substr(eq + 1));
    while (!key.empty() && key.front() == '-') key.erase(key.begin());
    if (key.empty())
      throw std::invalid_argument("config: " + where + ": empty key");
    if (key == "config")
      throw std::invalid_argument("config: " + where +
                                  ": nested config files are not supported");
    const std::string flag = "--" + key;
    if (!sub->get_option_no_throw(flag))
      throw std::invalid_argument("config: " + where + ": unknown key '" +
                                  key + "' for '" + sub->get_name() + "'");
    if (!given(flag)) args.push_back(flag + "=" + value);
  }
  return args;
}

// ---------------------------------------------------------------- matelem --

struct MatelemOpts {
  int p = 1;
  int max_index = 8;
  std::string out = "-";
};

int run_matelem(const MatelemOpts& o) {
  OneDimElementTable table(o.p, o.max_index);
  OutputStream os(o.out);
  os.get() << "k,m,value\n";
  for (int k = 1; k <= o.max_index; ++k)
    for (int m = 1; m <= o.max_index; ++m)
      os.get() << k << ',' << m << ',' << csv::g17(table(k, m)) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- classify --

struct ClassifyOpts {
  std::string group = "C4v";
  int max_index = 4;
};

int run_classify(const ClassifyOpts& o) {
  const Group group = parse_group(o.group);
  const BasisSpec spec{o.max_index};
  int total = 0;
  for (Irrep irrep : irreps_of(group)) {
    const auto basis = build_basis(spec, {group, irrep});
    std::cout << to_string(IrrepLabel{group, irrep}) << " (" << basis.size()
              << " functions)\n";
    for (const auto& f : basis) {
      std::cout << "  " << to_string(f)
                << "  E0=" << csv::g17(unperturbed_energy(f)) << '\n';
    }
    total += int(basis.size());
  }
  std::cout << "total " << total << " of " << basis_size(spec)
            << " product modes\n";
  if (total != basis_size(spec)) {
    std::cerr << "irrep bases do not span the product basis\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- spectrum --

struct SpectrumOpts {
  std::string family = "xy";
  double a = 1.0;
  int max_index = 20;
  std::string block;  // empty: all blocks
  bool full = false;
  std::string out = "-";
  int threads = 0;
};

int run_spectrum(const SpectrumOpts& o) {
  const PotentialFamily family = parse_family(o.family);
  const BasisSpec spec{o.max_index};
  const ElementTables tables(o.max_index);
  const Group group = symmetry_group(family);
  OutputStream os(o.out);
  csv::write_spectrum_header(os.get());

  std::vector<IrrepLabel> labels;
  if (!o.block.empty() && o.block != "all") {
    // Accept both the bare irrep name ("B1") and the labeled form the CSV
    // output uses ("C2v/B1"); the group half must match the family's group.
    const auto slash = o.block.find('/');
    if (slash != std::string::npos) {
      const Group named = parse_group(o.block.substr(0, slash));
      if (named != group)
        throw std::invalid_argument("block group " + o.block.substr(0, slash) +
                                    " does not match the " + o.family +
                                    " family (" + to_string(group) + ")");
      labels.push_back({group, parse_irrep(o.block.substr(slash + 1))});
    } else {
      labels.push_back({group, parse_irrep(o.block)});
    }
    if (!irrep_valid(group, labels.back().irrep))
      throw std::invalid_argument("irrep " + to_string(labels.back().irrep) +
                                  " is not carried by " + to_string(group));
  } else if (!o.full) {
    for (Irrep irrep : irreps_of(group)) labels.push_back({group, irrep});
  }
  for (const IrrepLabel& label : labels) {
    const auto block = assemble_block(spec, label, family.at(o.a), tables, o.threads);
    const auto s = spectral::eigen(block, true);
    csv::write_spectrum_rows(os.get(), to_string(label), s);
  }
  if (o.full) {
    const auto block = assemble_full(spec, family.at(o.a), tables, o.threads);
    const auto s = spectral::eigen(block, true);
    csv::write_spectrum_rows(os.get(), "full", s);
  }
  return kExitOk;
}

// ----------------------------------------------------------------- perturb --

struct PerturbOpts {
  std::string family = "xy";
  int max_index = 8;
  double a = 1.0;
  std::string group;  // "m,n": only the degenerate group containing this mode
};

Mode parse_mode_pair(const std::string& s, int max_index) {
  const auto comma = s.find(',');
  Mode mode{};
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) throw std::invalid_argument(s);
    mode.m = std::stoi(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    const std::string rest = s.substr(comma + 1);
    mode.n = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("--group expects 'm,n', got '" + s + "'");
  }
  if (mode.m < 1 || mode.n < 1 || mode.m > max_index || mode.n > max_index)
    throw std::invalid_argument("--group mode (" + s +
                                ") is outside the truncated basis");
  return mode;
}

void print_group_line(const DegenerateGroup& group,
                      const FirstOrderResult& fo) {
  std::cout << "E0=" << csv::g17(group.energy) << "  members=";
  for (size_t i = 0; i < group.members.size(); ++i)
    std::cout << (i ? " " : "") << '(' << group.members[i].m << ','
              << group.members[i].n << ')';
  std::cout << "  weights=";
  for (int k = 0; k < fo.weights.size(); ++k)
    std::cout << (k ? " " : "") << csv::g17(fo.weights[k]);
  std::cout << '\n';
}

int run_perturb(const PerturbOpts& o) {
  const PotentialFamily family = parse_family(o.family);
  const BasisSpec spec{o.max_index};
  const ElementTables tables(o.max_index);
  const PotentialSpec pot = family.at(o.a);

  if (!o.group.empty()) {
    const Mode mode = parse_mode_pair(o.group, o.max_index);
    for (const auto& group : degenerate_groups(spec)) {
      if (std::find(group.members.begin(), group.members.end(), mode) ==
          group.members.end())
        continue;
      const auto fo = first_order(group, pot, tables);
      print_group_line(group, fo);
      if (group.kind == GroupKind::SymmetryPair) {
        // Closed form for the weight magnitude of the pair (m, n): X_p(m, n)
        // X_q(m, n) if the exponent parities allow it, else exactly zero.
        const Mode lo = group.members.front();
        double closed = 0.0;
        if (family == PotentialFamily::xy() && (lo.n - lo.m) % 2 != 0)
          closed = pair_splitting_magnitude(lo.m, (lo.n - lo.m - 1) / 2);
        std::cout << "closed form: +-" << csv::g17(closed);
        const double worst =
            std::max(std::abs(fo.weights[0] + closed),
                     std::abs(fo.weights[1] - closed));
        std::cout << "  (computed deviation " << csv::g17(worst) << ")\n";
      }
      return kExitOk;
    }
    throw std::invalid_argument("no degenerate group contains mode (" +
                                o.group + ")");
  }

  for (const auto& group : degenerate_groups(spec))
    print_group_line(group, first_order(group, pot, tables));
  const auto verdict = classify_phase_transition(family, spec, tables);
  std::cout << "phase: " << to_string(verdict.kind) << " (" << verdict.summary
            << ")\n";
  return kExitOk;
}

// ------------------------------------------------------------------- sweep --

struct SweepOpts {
  std::string family = "xy";
  double a_min = 0.0;
  double a_max = 100.0;
  double step = 0.5;
  int max_index = 20;
  int max_halvings = 8;
  int threads = 0;
  std::string out = "sweep.csv";
};

SweepResult compute_sweep(const SweepOpts& o, const ElementTables& tables) {
  SweepConfig cfg;
  cfg.a_min = o.a_min;
  cfg.a_max = o.a_max;
  cfg.step = o.step;
  cfg.max_halvings = o.max_halvings;
  cfg.threads = o.threads;
  return sweep(parse_family(o.family), BasisSpec{o.max_index}, cfg, tables);
}

int run_sweep(const SweepOpts& o) {
  const ElementTables tables(o.max_index);
  const auto sr = compute_sweep(o, tables);
  OutputStream os(o.out);
  csv::write_sweep(os.get(), sr);
  std::cerr << "swept " << sr.point_count() << " couplings, "
            << sr.block_count() << " blocks\n";
  return kExitOk;
}

// ---------------------------------------------------------------------- ep --

struct EpOpts {
  SweepOpts sweep;
  double im_threshold = 1e-9;
  double bracket = 1e-6;
  int max_label = 16;
  std::string out = "ep.csv";
};

int run_ep(const EpOpts& o) {
  const ElementTables tables(o.sweep.max_index);
  const auto sr = compute_sweep(o.sweep, tables);
  EpScanConfig cfg;
  cfg.im_threshold = o.im_threshold;
  cfg.bracket_target = o.bracket;
  cfg.max_label = o.max_label;
  cfg.threads = o.sweep.threads;
  const auto eps = find_exceptional_points(sr, tables, cfg);
  OutputStream os(o.out);
  csv::write_ep(os.get(), eps);
  for (const auto& ep : eps)
    std::cerr << to_string(ep.irrep) << " labels " << ep.label_low << '-'
              << ep.label_high << "  a_c=" << csv::g17(ep.a_c)
              << "  bracket=" << csv::g17(ep.bracket_width) << '\n';
  if (eps.empty()) std::cerr << "no exceptional points in range\n";
  return kExitOk;
}

// ----------------------------------------------------------------- figures --

struct FiguresOpts {
  std::string outdir = "figures";
  int max_index = 20;
  double a_max = 100.0;
  double step = 0.5;
  double small_a = 0.1;
  int threads = 0;
};

int run_figures(const FiguresOpts& o) {
  namespace fs = std::filesystem;
  fs::create_directories(o.outdir);
  const ElementTables tables(o.max_index);
  const BasisSpec spec{o.max_index};

  for (const std::string name : {"xy", "xyy"}) {
    const PotentialFamily family = parse_family(name);
    SweepConfig cfg;
    cfg.a_max = o.a_max;
    cfg.step = o.step;
    cfg.threads = o.threads;
    const auto sr = sweep(family, spec, cfg, tables);
    {
      std::ofstream f(fs::path(o.outdir) / ("sweep_" + name + ".csv"),
                      std::ios::binary);
      csv::write_sweep(f, sr);
    }
    EpScanConfig ecfg;
    ecfg.threads = o.threads;
    const auto eps = find_exceptional_points(sr, tables, ecfg);
    {
      std::ofstream f(fs::path(o.outdir) / ("ep_" + name + ".csv"),
                      std::ios::binary);
      csv::write_ep(f, eps);
    }
    {
      std::ofstream f(fs::path(o.outdir) / ("spectrum_" + name + "_small_a.csv"),
                      std::ios::binary);
      csv::write_spectrum_header(f);
      const Group group = symmetry_group(family);
      for (Irrep irrep : irreps_of(group)) {
        const IrrepLabel label{group, irrep};
        const auto block =
            assemble_block(spec, label, family.at(o.small_a), tables, o.threads);
        csv::write_spectrum_rows(f, to_string(label), spectral::eigen(block, true));
      }
    }
    std::cerr << name << ": sweep, ep, spectrum written\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------------- check --

struct CheckOpts {
  int max_index = 10;
  int threads = 0;
};

int run_check(const CheckOpts& o) {
  int failures = 0;
  const auto report = [&](const std::string& name, bool ok,
                          const std::string& detail) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << " (" << detail << ")\n";
    if (!ok) ++failures;
  };
  const int M = o.max_index;
  const ElementTables tables(M);
  const BasisSpec spec{M};

  {
    double worst = 0.0;
    for (int p = 0; p <= 2; ++p)
      for (int k = 1; k <= M; ++k)
        for (int m = 1; m <= M; ++m)
          worst = std::max(worst, std::abs(tables.table(p)(k, m) -
                                           quadrature_oracle(p, k, m)));
    report("1d elements vs quadrature", worst <= 1e-12,
           "max abs err " + csv::g17(worst));
  }
  {
    const double rxy = cross_irrep_residual(spec, PotentialSpec::xy(1.0), tables);
    const double rxyy = cross_irrep_residual(spec, PotentialSpec::xyy(1.0), tables);
    report("cross-irrep couplings vanish", rxy == 0.0 && rxyy == 0.0,
           "xy " + csv::g17(rxy) + ", xyy " + csv::g17(rxyy));
  }
  {
    double worst = 0.0;
    for (Group g : {Group::C4v, Group::C2v, Group::C2}) {
      const auto U = adaptation_matrix(spec, g);
      worst = std::max(worst, (U.transpose() * U -
                               Eigen::MatrixXd::Identity(U.cols(), U.cols()))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    report("adaptation matrices orthogonal", worst <= 1e-14,
           "max dev " + csv::g17(worst));
  }
  for (const std::string name : {"xy", "xyy"}) {
    const PotentialFamily family = parse_family(name);
    const auto full = assemble_full(spec, family.at(1.0), tables, o.threads);
    const auto sfull = spectral::eigen(full, true);
    Eigen::VectorXcd stacked(full.dim());
    int pos = 0;
    const Group group = symmetry_group(family);
    for (Irrep irrep : irreps_of(group)) {
      const auto blk =
          assemble_block(spec, {group, irrep}, family.at(1.0), tables, o.threads);
      const auto s = spectral::eigen(blk);
      for (int i = 0; i < blk.dim(); ++i) stacked[pos++] = s.eigenvalues[i];
    }
    const double dist =
        spectral::multiset_distance(sfull.eigenvalues, stacked);
    report("block union matches full spectrum (" + name + ")", dist <= 1e-9,
           "multiset distance " + csv::g17(dist));
    report("eigenpair residuals small (" + name + ")",
           sfull.residuals.maxCoeff() <= 1e-10,
           "max residual " + csv::g17(sfull.residuals.maxCoeff()));
  }
  {
    const auto b1 = spectral::eigen(assemble_block(
        spec, {Group::C2v, Irrep::B1}, PotentialSpec::xy(1.0), tables, o.threads));
    const auto b2 = spectral::eigen(assemble_block(
        spec, {Group::C2v, Irrep::B2}, PotentialSpec::xy(1.0), tables, o.threads));
    const auto pairing = spectral::conjugation_pairing(b1, b2, 1e-8);
    report("B1/B2 spectra conjugate", pairing.matched,
           "worst pair distance " + csv::g17(pairing.worst_distance));
  }
  {
    double worst = 0.0;
    for (int m = 1; m <= 4; ++m)
      for (int j = 0; j <= 2; ++j) {
        const int n = m + 2 * j + 1;
        if (n > M) continue;
        DegenerateGroup g{unperturbed_energy({m, n}),
                          {{m, n}, {n, m}},
                          GroupKind::SymmetryPair};
        const auto fo = first_order(g, PotentialSpec::xy(1.0), tables);
        const double expect = pair_splitting_magnitude(m, j);
        worst = std::max(worst,
                         std::abs(fo.weights[1] - expect) / expect);
      }
    report("first-order pair splittings match closed form", worst <= 1e-12,
           "max rel err " + csv::g17(worst));
  }
  {
    const auto vxy = classify_phase_transition(PotentialFamily::xy(), spec, tables);
    const auto vxyy = classify_phase_transition(PotentialFamily::xyy(), spec, tables);
    report("phase dichotomy",
           vxy.kind == PhaseKind::BrokenAtOrigin &&
               vxyy.kind == PhaseKind::RealWindowExpected,
           "xy " + to_string(vxy.kind) + ", xyy " + to_string(vxyy.kind));
  }

  std::cout << (failures ? "CHECK FAILED\n" : "all checks passed\n");
  return failures ? kExitCheckFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ptbox: symmetry-adapted spectra of H = p^2 + i a x^p y^q on the square "
      "box"};
  app.require_subcommand(1);
  int rc = kExitOk;

  MatelemOpts mo;
  auto* matelem = app.add_subcommand(
      "matelem", "print a 1-d element table <phi_k|x^p|phi_m> as CSV");
  matelem->add_option("--p", mo.p, "exponent p >= 0")->capture_default_str();
  matelem->add_option("--max-index,--M", mo.max_index, "table size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  matelem->add_option("--out,--output_path", mo.out, "output file or - for stdout")
      ->capture_default_str();
  add_config(matelem);
  matelem->callback([&] { rc = run_matelem(mo); });

  ClassifyOpts co;
  auto* classify = app.add_subcommand(
      "classify", "list the symmetry-adapted basis of each irrep");
  classify->add_option("--group", co.group, "C4v, C2v or C2")
      ->capture_default_str();
  classify->add_option("--max-index,--M", co.max_index, "basis truncation")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  add_config(classify);
  classify->callback([&] { rc = run_classify(co); });

  SpectrumOpts so;
  auto* spectrum = app.add_subcommand(
      "spectrum", "eigenvalues and residuals at one coupling, as CSV");
  spectrum->add_option("--family,--potential", so.family, "xy or xyy")->capture_default_str();
  spectrum->add_option("--a", so.a, "coupling strength a in g = i a")
      ->capture_default_str();
  spectrum->add_option("--max-index,--M", so.max_index, "basis truncation")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  spectrum->add_option("--block,--irrep", so.block,
                       "restrict to one irrep block ('all': every block)");
  spectrum->add_flag("--full", so.full, "solve the full product basis instead");
  spectrum->add_option("--out,--output_path", so.out, "output file or - for stdout")
      ->capture_default_str();
  spectrum->add_option("--threads", so.threads, "worker threads (0: auto)")
      ->capture_default_str();
  add_config(spectrum);
  spectrum->callback([&] { rc = run_spectrum(so); });

  PerturbOpts po;
  auto* perturb = app.add_subcommand(
      "perturb", "degenerate first-order corrections per group");
  perturb->add_option("--family,--potential", po.family, "xy or xyy")->capture_default_str();
  perturb->add_option("--max-index,--M", po.max_index, "basis truncation")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  perturb->add_option("--a", po.a, "coupling strength")->capture_default_str();
  perturb->add_option("--group", po.group,
                      "only the degenerate group containing mode m,n");
  add_config(perturb);
  perturb->callback([&] { rc = run_perturb(po); });

  SweepOpts wo;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "labeled eigenvalue trajectories over a coupling grid");
  auto add_sweep_opts = [](CLI::App* sub, SweepOpts& opts) {
    sub->add_option("--family,--potential", opts.family, "xy or xyy")->capture_default_str();
    sub->add_option("--a-min", opts.a_min, "grid start")->capture_default_str();
    sub->add_option("--a-max", opts.a_max, "grid end")->capture_default_str();
    sub->add_option("--step", opts.step, "grid step")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-index,--M", opts.max_index, "basis truncation")
        ->check(CLI::Range(2, 1000))
        ->capture_default_str();
    sub->add_option("--max-halvings", opts.max_halvings,
                    "refinement depth cap per interval")
        ->capture_default_str();
    sub->add_option("--threads", opts.threads, "worker threads (0: auto)")
        ->capture_default_str();
  };
  add_sweep_opts(sweep_cmd, wo);
  sweep_cmd->add_option("--out,--output_path", wo.out, "output CSV")->capture_default_str();
  add_config(sweep_cmd);
  sweep_cmd->callback([&] { rc = run_sweep(wo); });

  EpOpts eo;
  auto* ep = app.add_subcommand(
      "ep", "locate exceptional points by scan plus bisection");
  add_sweep_opts(ep, eo.sweep);
  ep->add_option("--im-threshold", eo.im_threshold,
                 "|Im E| above this counts as complex")
      ->capture_default_str();
  ep->add_option("--bracket", eo.bracket, "target bracket width")
      ->capture_default_str();
  ep->add_option("--max-label", eo.max_label,
                 "scan trajectories with label below this")
      ->capture_default_str();
  ep->add_option("--out,--output_path", eo.out, "output CSV")->capture_default_str();
  add_config(ep);
  ep->callback([&] { rc = run_ep(eo); });

  FiguresOpts fo;
  auto* figures = app.add_subcommand(
      "figures", "write the reproduction dataset (sweeps, EPs, spectra)");
  figures->add_option("--outdir,--output_path", fo.outdir, "output directory")
      ->capture_default_str();
  figures->add_option("--max-index,--M", fo.max_index, "basis truncation")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  figures->add_option("--a-max", fo.a_max, "sweep end")->capture_default_str();
  figures->add_option("--step", fo.step, "sweep step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  figures->add_option("--small-a", fo.small_a,
                      "coupling for the small-a spectra")
      ->capture_default_str();
  figures->add_option("--threads", fo.threads, "worker threads (0: auto)")
      ->capture_default_str();
  add_config(figures);
  figures->callback([&] { rc = run_figures(fo); });

  CheckOpts ko;
  auto* check = app.add_subcommand("check", "fast self-consistency checks");
  check->add_option("--max-index,--M", ko.max_index, "basis truncation")
      ->check(CLI::Range(2, 1000))
      ->capture_default_str();
  check->add_option("--threads", ko.threads, "worker threads (0: auto)")
      ->capture_default_str();
  add_config(check);
  check->callback([&] { rc = run_check(ko); });

  try {
    app.name(argv[0]);
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config_args(app, args);
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const spectral::EigenSolveError& e) {
    std::cerr << "eigensolver failure: " << e.what() << " (info " << e.info
              << ")\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return rc;
}
