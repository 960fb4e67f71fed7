#include "spinring/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "spinring/concurrence.hpp"
#include "spinring/errors.hpp"
#include "spinring/hamiltonian.hpp"
#include "spinring/mg_analytics.hpp"
#include "spinring/observables.hpp"
#include "spinring/spectra.hpp"
#include "spinring/sweep.hpp"
#include "spinring/util.hpp"

namespace spinring::cli {
namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOpts {
  int n_sites = 0;
  double j0 = 1.0;
  double j = 0.0;
  double j1 = 0.0;
  double j2 = 0.0;
  CLI::Option* opt_j = nullptr;
  CLI::Option* opt_j1 = nullptr;
  CLI::Option* opt_j2 = nullptr;
  std::string convention = convention_name(kDefaultConvention);
  std::string format;
  std::string out_path;
  std::string config_path;
  int threads = 0;
  bool sites_required = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, const char* default_format,
                bool sites_required) {
  // Requiredness of --n-sites is enforced in make_params, after the config
  // file merge, so a config file can satisfy it.
  o.sites_required = sites_required;
  cmd->add_option("--n-sites,--n_sites", o.n_sites, "Even ring size, 4..32");
  cmd->add_option("--j0", o.j0, "Nearest-neighbour coupling")
      ->capture_default_str();
  o.opt_j =
      cmd->add_option("--j", o.j, "Next-nearest coupling, sets j1 = j2");
  o.opt_j1 = cmd->add_option("--j1", o.j1, "Next-nearest coupling on bonds starting at even sites");
  o.opt_j2 = cmd->add_option("--j2", o.j2, "Next-nearest coupling on bonds starting at odd sites");
  o.opt_j->excludes(o.opt_j1);
  o.opt_j->excludes(o.opt_j2);
  o.format = default_format;
  cmd->add_option("--convention", o.convention,
                  "Pair-sum convention for concurrence totals")
      ->check(CLI::IsMember({"paper-literal", "ring", "unique-pairs"}))
      ->capture_default_str();
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "Write output to PATH instead of stdout");
  cmd->add_option("--threads", o.threads,
                  "Worker threads; 0 falls back to SPINRING_THREADS, then "
                  "hardware concurrency");
  cmd->add_option("--config", o.config_path,
                  "key=value file of long option names; explicit flags win")
      ->check(CLI::ExistingFile);
}

// CLI11's own config machinery does not reach subcommand options when the
// config flag sits on the subcommand, so the merge is done here: every
// key=value line feeds the matching option unless that option was already
// given on the command line.
void apply_config(CLI::App* cmd, const CommonOpts& o) {
  if (o.config_path.empty()) return;
  std::ifstream file(o.config_path);
  if (!file) throw UsageError("cannot read config file: " + o.config_path);

  const auto strip = [](const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
  };

  std::string line;
  int line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    line = strip(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(line_no) +
                       " is not key=value");
    const std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (value.size() >= 2 && value.back() == value.front() &&
        (value.front() == '"' || value.front() == '\''))
      value = value.substr(1, value.size() - 2);

    CLI::Option* opt =
        key == "config" ? nullptr : cmd->get_option_no_throw("--" + key);
    if (opt == nullptr)
      throw UsageError("unknown config key '" + key + "'");
    if (opt->count() > 0) continue;
    opt->add_result(value);
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

CouplingParams make_params(const CommonOpts& o) {
  if (o.sites_required && o.n_sites == 0)
    throw UsageError("--n-sites is required");
  if (o.n_sites < 4 || o.n_sites > 32 || o.n_sites % 2 != 0)
    throw UsageError("--n-sites must be even and within [4, 32]");
  const bool has_split = (o.opt_j1 && o.opt_j1->count() > 0) ||
                         (o.opt_j2 && o.opt_j2->count() > 0);
  // CLI11's excludes() only sees command-line flags; config-fed values are
  // re-checked here.
  if (o.opt_j && o.opt_j->count() > 0 && has_split)
    throw UsageError("--j excludes --j1/--j2");
  CouplingParams params;
  params.n_sites = o.n_sites;
  params.j0 = o.j0;
  if (has_split) {
    params.j1 = o.j1;
    params.j2 = o.j2;
  } else {
    params.j1 = o.j;
    params.j2 = o.j;
  }
  return params;
}

std::vector<double> parse_scan_grid(const std::string& text) {
  if (text.empty()) throw UsageError("--grid is required");
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw UsageError("--grid expects lo:hi:step");
  double lo = 0.0, hi = 0.0, step = 0.0;
  try {
    lo = std::stod(text.substr(0, first));
    hi = std::stod(text.substr(first + 1, second - first - 1));
    step = std::stod(text.substr(second + 1));
  } catch (const std::exception&) {
    throw UsageError("--grid expects numeric lo:hi:step");
  }
  if (!(step > 0.0) || hi < lo) throw UsageError("--grid needs step > 0 and hi >= lo");
  const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) grid[i] = lo + i * step;
  return grid;
}

std::pair<int, int> parse_surface_grid(const std::string& text) {
  const auto cross = text.find('x');
  if (cross == std::string::npos) throw UsageError("--grid expects NTHETAxNPHI");
  int nt = 0, np = 0;
  try {
    nt = std::stoi(text.substr(0, cross));
    np = std::stoi(text.substr(cross + 1));
  } catch (const std::exception&) {
    throw UsageError("--grid expects integer NTHETAxNPHI");
  }
  if (nt < 2 || np < 2) throw UsageError("--grid needs at least 2 points per axis");
  return {nt, np};
}

std::pair<double, double> parse_bracket(const std::string& text) {
  if (text.empty()) throw UsageError("--bracket is required");
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--bracket expects lo,hi");
  double lo = 0.0, hi = 0.0;
  try {
    lo = std::stod(text.substr(0, comma));
    hi = std::stod(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw UsageError("--bracket expects numeric lo,hi");
  }
  if (!(lo < hi)) throw UsageError("--bracket needs lo < hi");
  return {lo, hi};
}

double num(double x) { return round_12(x); }

void emit(const std::string& out_path, const std::function<void(std::ostream&)>& body) {
  if (out_path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error("cannot open output file: " + out_path);
  body(file);
}

void dump_json(std::ostream& os, const ordered_json& doc) {
  os << doc.dump(2) << '\n';
}

ordered_json params_json(const CouplingParams& params) {
  ordered_json j;
  j["n_sites"] = params.n_sites;
  j["j0"] = num(params.j0);
  j["j1"] = num(params.j1);
  j["j2"] = num(params.j2);
  return j;
}

ordered_json jump_json(const JumpReport& report) {
  ordered_json j;
  j["j_critical"] = num(report.j_critical);
  ordered_json deltas = ordered_json::array();
  for (double d : report.delta_per_alpha) deltas.push_back(num(d));
  j["delta_per_alpha"] = std::move(deltas);
  j["delta_total"] = num(report.delta_total);
  j["left_momentum"] = report.left_momentum;
  j["right_momentum"] = report.right_momentum;
  j["convention"] = convention_name(report.convention);
  return j;
}

const char* label_name(CrossingPoint::Label label) {
  switch (label) {
    case CrossingPoint::Label::A:
      return "A";
    case CrossingPoint::Label::B:
      return "B";
    default:
      return "other";
  }
}

// Sz-resolved dense spectrum for couplings without translation symmetry
// (j1 != j2). Momenta are measured from the eigenvectors; -1 marks vectors
// that are not translation eigenstates.
struct DenseRow {
  double energy;
  int sz_twice;
  StateVector vector;
};

std::vector<DenseRow> dense_lowest_rows(const CouplingParams& params, int m) {
  std::vector<DenseRow> rows;
  for (int sz = 0; sz <= params.n_sites; sz += 2) {
    auto basis = std::make_shared<SzBasis>(params.n_sites, sz);
    const Eigen::MatrixXd block = sz_block_matrix(params, sz, kDenseCap);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block);
    if (es.info() != Eigen::Success)
      throw SolverError("dense eigensolver failed", 0.0);
    const Eigen::Index take = std::min<Eigen::Index>(m, block.rows());
    for (Eigen::Index i = 0; i < take; ++i)
      rows.push_back(
          {es.eigenvalues()[i], sz,
           StateVector(basis,
                       es.eigenvectors().col(i).cast<std::complex<double>>())});
  }
  std::sort(rows.begin(), rows.end(), [](const DenseRow& a, const DenseRow& b) {
    return std::tie(a.energy, a.sz_twice) < std::tie(b.energy, b.sz_twice);
  });
  if (rows.size() > static_cast<std::size_t>(m))
    rows.erase(rows.begin() + m, rows.end());
  return rows;
}

StateVector ground_state(const CouplingParams& params, int threads) {
  if (params.uniform_nnn()) {
    RingSolver solver(params.n_sites);
    SpectrumResult spectrum = solver.lowest_levels(params, 1, threads);
    return spectrum.levels.front().vector;
  }
  return dense_lowest_rows(params, 1).front().vector;
}

void cmd_spectrum(const CommonOpts& o, int n_levels) {
  if (n_levels < 1) throw UsageError("--levels must be positive");
  const CouplingParams params = make_params(o);

  struct Row {
    double energy;
    int sz_twice;
    int momentum;
    int group;
  };
  std::vector<Row> rows;
  if (params.uniform_nnn()) {
    RingSolver solver(params.n_sites);
    const SpectrumResult spectrum =
        solver.lowest_levels(params, n_levels, o.threads);
    for (const EigenLevel& level : spectrum.levels)
      rows.push_back({level.energy, level.sector.sz_twice,
                      level.sector.momentum_index, level.degeneracy_group});
  } else {
    const std::vector<DenseRow> dense = dense_lowest_rows(params, n_levels);
    int group = 0;
    double group_start = dense.empty() ? 0.0 : dense.front().energy;
    for (const DenseRow& row : dense) {
      if (row.energy - group_start > degeneracy_tolerance(group_start)) {
        ++group;
        group_start = row.energy;
      }
      const MomentumMeasurement mm = measure_momentum(row.vector);
      rows.push_back({row.energy, row.sz_twice,
                      mm.is_eigenstate ? mm.momentum_index : -1, group});
    }
  }

  emit(o.out_path, [&](std::ostream& os) {
    if (o.format == "csv") {
      os << "energy,sz,momentum_index,degeneracy_group\n";
      for (const Row& row : rows)
        os << format_double(row.energy) << ',' << row.sz_twice / 2 << ','
           << row.momentum << ',' << row.group << '\n';
      return;
    }
    ordered_json doc;
    doc["schema"] = 1;
    doc["params"] = params_json(params);
    ordered_json levels = ordered_json::array();
    for (const Row& row : rows) {
      ordered_json level;
      level["energy"] = num(row.energy);
      level["sz"] = row.sz_twice / 2;
      level["momentum_index"] = row.momentum;
      level["degeneracy_group"] = row.group;
      levels.push_back(std::move(level));
    }
    doc["levels"] = std::move(levels);
    dump_json(os, doc);
  });
}

void cmd_scan(const CommonOpts& o, const std::string& grid_text) {
  const CouplingParams params = make_params(o);
  const std::vector<double> grid = parse_scan_grid(grid_text);
  const SumConvention convention = parse_convention(o.convention);
  const std::vector<ScanPoint> points = scan(params, grid, convention, o.threads);
  const int n_alpha = params.n_sites / 2;

  emit(o.out_path, [&](std::ostream& os) {
    if (o.format == "csv") {
      os << "J,E_g,E_1st,momentum";
      for (int a = 1; a <= n_alpha; ++a) os << ",C_" << a;
      os << ",C_T\n";
      for (const ScanPoint& p : points) {
        os << format_double(p.j_over_j0 * params.j0) << ','
           << format_double(p.e_ground) << ','
           << format_double(p.e_first_excited) << ',' << p.ground_momentum;
        for (double c : p.concurrences.per_alpha) os << ',' << format_double(c);
        os << ',' << format_double(p.concurrences.total) << '\n';
      }
      return;
    }
    ordered_json doc;
    doc["schema"] = 1;
    doc["params"] = params_json(params);
    doc["convention"] = o.convention;
    ordered_json rows = ordered_json::array();
    for (const ScanPoint& p : points) {
      ordered_json row;
      row["j"] = num(p.j_over_j0 * params.j0);
      row["j_over_j0"] = num(p.j_over_j0);
      row["e_ground"] = num(p.e_ground);
      row["e_first_excited"] = num(p.e_first_excited);
      row["momentum"] = p.ground_momentum;
      ordered_json cs = ordered_json::array();
      for (double c : p.concurrences.per_alpha) cs.push_back(num(c));
      row["c_alpha"] = std::move(cs);
      row["c_total"] = num(p.concurrences.total);
      rows.push_back(std::move(row));
    }
    doc["points"] = std::move(rows);
    dump_json(os, doc);
  });
}

CrossingPoint solve_crossing(const CommonOpts& o, const std::string& bracket_text,
                             double jump_epsilon) {
  const CouplingParams params = make_params(o);
  const auto [lo, hi] = parse_bracket(bracket_text);
  const SumConvention convention = parse_convention(o.convention);
  CrossingPoint crossing =
      locate_crossing(params, lo * params.j0, hi * params.j0, convention);
  if (jump_epsilon > 0.0) {
    const double eps = jump_epsilon * params.j0;
    crossing.jump =
        concurrence_jump(params.with_j(crossing.j_c - eps),
                         params.with_j(crossing.j_c + eps), convention);
  }
  return crossing;
}

void cmd_crossing(const CommonOpts& o, const std::string& bracket_text,
                  double jump_epsilon) {
  const CouplingParams params = make_params(o);
  const CrossingPoint crossing = solve_crossing(o, bracket_text, jump_epsilon);

  emit(o.out_path, [&](std::ostream& os) {
    if (o.format == "csv") {
      os << "label,j_c,left_sz_twice,left_momentum,right_sz_twice,"
            "right_momentum";
      for (std::size_t a = 1; a <= crossing.jump.delta_per_alpha.size(); ++a)
        os << ",delta_alpha" << a;
      os << ",delta_total\n";
      os << label_name(crossing.label) << ',' << format_double(crossing.j_c)
         << ',' << crossing.left_sector.sz_twice << ','
         << crossing.left_sector.momentum_index << ','
         << crossing.right_sector.sz_twice << ','
         << crossing.right_sector.momentum_index;
      for (double d : crossing.jump.delta_per_alpha)
        os << ',' << format_double(d);
      os << ',' << format_double(crossing.jump.delta_total) << '\n';
      return;
    }
    ordered_json doc;
    doc["schema"] = 1;
    doc["params"] = params_json(params);
    doc["label"] = label_name(crossing.label);
    doc["j_c"] = num(crossing.j_c);
    doc["j_c_over_j0"] = num(crossing.j_c / params.j0);
    doc["left_sector"] = {{"sz_twice", crossing.left_sector.sz_twice},
                          {"momentum_index", crossing.left_sector.momentum_index}};
    doc["right_sector"] = {
        {"sz_twice", crossing.right_sector.sz_twice},
        {"momentum_index", crossing.right_sector.momentum_index}};
    doc["jump"] = jump_json(crossing.jump);
    dump_json(os, doc);
  });
}

void cmd_jump(const CommonOpts& o, const std::string& bracket_text,
              double jump_epsilon) {
  const CouplingParams params = make_params(o);
  const CrossingPoint crossing = solve_crossing(o, bracket_text, jump_epsilon);

  emit(o.out_path, [&](std::ostream& os) {
    if (o.format == "csv") {
      os << "j_critical,left_momentum,right_momentum";
      for (std::size_t a = 1; a <= crossing.jump.delta_per_alpha.size(); ++a)
        os << ",delta_alpha" << a;
      os << ",delta_total\n";
      os << format_double(crossing.jump.j_critical) << ','
         << crossing.jump.left_momentum << ',' << crossing.jump.right_momentum;
      for (double d : crossing.jump.delta_per_alpha)
        os << ',' << format_double(d);
      os << ',' << format_double(crossing.jump.delta_total) << '\n';
      return;
    }
    ordered_json doc;
    doc["schema"] = 1;
    doc["params"] = params_json(params);
    doc["jump"] = jump_json(crossing.jump);
    dump_json(os, doc);
  });
}

void cmd_surface(const CommonOpts& o, const std::string& point,
                 const std::string& grid_text, const std::string& bracket_text) {
  if (point != "A" && point != "B")
    throw UsageError("--point must be A or B");
  CouplingParams params = make_params(o);
  const auto [n_theta, n_phi] = parse_surface_grid(grid_text);

  StateVector psi1 = StateVector::zero_full(4);
  StateVector psi2 = StateVector::zero_full(4);
  if (point == "A") {
    params = params.with_j(0.5 * params.j0);
    auto pair = mg_ground_states(params.n_sites);
    psi1 = std::move(pair.first);
    psi2 = std::move(pair.second);
  } else {
    const auto [lo, hi] = parse_bracket(bracket_text);
    const CrossingPoint crossing =
        find_point_b(params, lo, hi, parse_convention(o.convention));
    params = params.with_j(crossing.j_c);
    const SectorSolver left(params.n_sites, crossing.left_sector);
    const SectorSolver right(params.n_sites, crossing.right_sector);
    auto l = left.lowest(params, 1);
    auto r = right.lowest(params, 1);
    psi1 = StateVector(left.basis_ptr(), std::move(l.front().vector));
    psi2 = StateVector(right.basis_ptr(), std::move(r.front().vector));
  }

  const SurfaceResult surface =
      difference_surface(params, psi1, psi2, n_theta, n_phi, o.threads);
  const int n_alpha = params.n_sites / 2;

  emit(o.out_path, [&](std::ostream& os) {
    if (o.format == "csv") {
      os << "theta,phi";
      for (int a = 1; a <= n_alpha; ++a) os << ",d_alpha" << a;
      os << ",d_total\n";
      for (std::size_t t = 0; t < surface.thetas.size(); ++t)
        for (std::size_t p = 0; p < surface.phis.size(); ++p) {
          os << format_double(surface.thetas[t]) << ','
             << format_double(surface.phis[p]);
          for (int a = 0; a < n_alpha; ++a)
            os << ','
               << format_double(surface.per_alpha[a](
                      static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(p)));
          os << ','
             << format_double(surface.total(static_cast<Eigen::Index>(t),
                                            static_cast<Eigen::Index>(p)))
             << '\n';
        }
      return;
    }
    ordered_json doc;
    doc["schema"] = 1;
    doc["params"] = params_json(params);
    doc["point"] = point;
    ordered_json thetas = ordered_json::array();
    for (double t : surface.thetas) thetas.push_back(num(t));
    ordered_json phis = ordered_json::array();
    for (double p : surface.phis) phis.push_back(num(p));
    doc["thetas"] = std::move(thetas);
    doc["phis"] = std::move(phis);
    const auto matrix_json = [](const Eigen::MatrixXd& m) {
      ordered_json rows = ordered_json::array();
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(num(m(r, c)));
        rows.push_back(std::move(row));
      }
      return rows;
    };
    ordered_json per_alpha = ordered_json::array();
    for (const Eigen::MatrixXd& m : surface.per_alpha)
      per_alpha.push_back(matrix_json(m));
    doc["per_alpha"] = std::move(per_alpha);
    doc["total"] = matrix_json(surface.total);
    dump_json(os, doc);
  });
}

void cmd_table1(const CommonOpts& o) {
  std::vector<int> sizes;
  if (o.n_sites > 0) {
    if (o.n_sites < 4 || o.n_sites > 32 || o.n_sites % 2 != 0)
      throw UsageError("--n-sites must be even and within [4, 32]");
    sizes.push_back(o.n_sites);
  } else {
    sizes = {8, 10, 12};
  }
  const SumConvention convention = parse_convention(o.convention);
  const std::vector<Table1Row> rows = table1(sizes, o.j0, convention);

  emit(o.out_path, [&](std::ostream& os) {
    if (o.format == "csv") {
      std::size_t max_alpha = 0;
      for (const Table1Row& row : rows)
        max_alpha = std::max(max_alpha, row.delta_per_alpha.size());
      os << "n_sites,j_c";
      for (std::size_t a = 1; a <= max_alpha; ++a) os << ",delta_alpha" << a;
      os << ",delta_total,left_momentum,right_momentum\n";
      for (const Table1Row& row : rows) {
        os << row.n_sites << ',' << format_double(row.j_c);
        for (std::size_t a = 0; a < max_alpha; ++a) {
          os << ',';
          if (a < row.delta_per_alpha.size())
            os << format_double(row.delta_per_alpha[a]);
        }
        os << ',' << format_double(row.delta_total) << ',' << row.left_momentum
           << ',' << row.right_momentum << '\n';
      }
      return;
    }
    ordered_json doc;
    doc["schema"] = 1;
    doc["j0"] = num(o.j0);
    doc["convention"] = o.convention;
    ordered_json out_rows = ordered_json::array();
    for (const Table1Row& row : rows) {
      ordered_json r;
      r["n_sites"] = row.n_sites;
      r["j_c"] = num(row.j_c);
      r["j_c_over_j0"] = num(row.j_c / o.j0);
      for (std::size_t a = 0; a < row.delta_per_alpha.size(); ++a)
        r["delta_alpha" + std::to_string(a + 1)] = num(row.delta_per_alpha[a]);
      r["delta_total"] = num(row.delta_total);
      r["left_momentum"] = row.left_momentum;
      r["right_momentum"] = row.right_momentum;
      out_rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(out_rows);
    dump_json(os, doc);
  });
}

void cmd_correlators(const CommonOpts& o) {
  const CouplingParams params = make_params(o);
  const StateVector ground = ground_state(params, o.threads);
  const CorrelatorReport report = correlator_report(ground);

  emit(o.out_path, [&](std::ostream& os) {
    if (o.format == "csv") {
      os << "alpha,sigma_dot_sigma,concurrence_spin0\n";
      for (std::size_t a = 0; a < report.g_dot.size(); ++a)
        os << a + 1 << ',' << format_double(report.g_dot[a]) << ','
           << format_double(concurrence_from_correlator(report.g_dot[a]))
           << '\n';
      return;
    }
    ordered_json doc;
    doc["schema"] = 1;
    doc["params"] = params_json(params);
    ordered_json rows = ordered_json::array();
    for (std::size_t a = 0; a < report.g_dot.size(); ++a) {
      ordered_json row;
      row["alpha"] = a + 1;
      row["sigma_dot_sigma"] = num(report.g_dot[a]);
      row["concurrence_spin0"] =
          num(concurrence_from_correlator(report.g_dot[a]));
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    doc["h0"] = num(report.h0);
    doc["h"] = num(report.h);
    dump_json(os, doc);
  });
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Frustrated spin-1/2 ring: spectra, concurrence jumps, "
               "groundstate reconstruction surfaces"};
  app.require_subcommand(1);

  CommonOpts spectrum_opts;
  int spectrum_levels = 6;
  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "Lowest eigenlevels with sz/momentum labels");
  add_common(spectrum_cmd, spectrum_opts, "json", true);
  spectrum_cmd->add_option("--levels", spectrum_levels, "Number of levels")
      ->capture_default_str();

  CommonOpts scan_opts;
  std::string scan_grid;
  auto* scan_cmd = app.add_subcommand(
      "scan", "Sweep J/j0, tracking energies, momentum and concurrences");
  add_common(scan_cmd, scan_opts, "csv", true);
  scan_cmd->add_option("--grid", scan_grid, "J/j0 grid as lo:hi:step");

  CommonOpts crossing_opts;
  std::string crossing_bracket;
  double crossing_eps = 0.0;
  auto* crossing_cmd = app.add_subcommand(
      "crossing", "Bisect a groundstate level crossing inside a bracket");
  add_common(crossing_cmd, crossing_opts, "json", true);
  crossing_cmd->add_option("--bracket", crossing_bracket,
                           "J/j0 bracket as lo,hi");
  crossing_cmd->add_option(
      "--jump-epsilon", crossing_eps,
      "Override the j_c offset (units of j0) used for the jump, default 1e-6");

  CommonOpts jump_opts;
  std::string jump_bracket;
  double jump_eps = 0.0;
  auto* jump_cmd = app.add_subcommand(
      "jump", "Concurrence jump across the crossing inside a bracket");
  add_common(jump_cmd, jump_opts, "json", true);
  jump_cmd->add_option("--bracket", jump_bracket, "J/j0 bracket as lo,hi");
  jump_cmd->add_option(
      "--jump-epsilon", jump_eps,
      "Override the j_c offset (units of j0) used for the jump, default 1e-6");

  CommonOpts surface_opts;
  std::string surface_point;
  std::string surface_grid = "101x101";
  std::string surface_bracket = "0.55,3.0";
  auto* surface_cmd = app.add_subcommand(
      "surface", "Concurrence-difference surfaces over the degenerate pair");
  add_common(surface_cmd, surface_opts, "csv", true);
  surface_cmd
      ->add_option("--point", surface_point,
                   "A: dimer point j=0.5 j0; B: sized level crossing")
      ->check(CLI::IsMember({"A", "B"}));
  surface_cmd->add_option("--grid", surface_grid, "Grid as NTHETAxNPHI")
      ->capture_default_str();
  surface_cmd
      ->add_option("--bracket", surface_bracket,
                   "J/j0 search bracket for point B")
      ->capture_default_str();

  CommonOpts table1_opts;
  auto* table1_cmd = app.add_subcommand(
      "table1", "Point-B jump table (default sizes 8, 10, 12)");
  add_common(table1_cmd, table1_opts, "json", false);

  CommonOpts correlators_opts;
  auto* correlators_cmd = app.add_subcommand(
      "correlators", "Groundstate sigma.sigma per separation plus bond sums");
  add_common(correlators_cmd, correlators_opts, "csv", true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (spectrum_cmd->parsed()) {
      apply_config(spectrum_cmd, spectrum_opts);
      cmd_spectrum(spectrum_opts, spectrum_levels);
    } else if (scan_cmd->parsed()) {
      apply_config(scan_cmd, scan_opts);
      cmd_scan(scan_opts, scan_grid);
    } else if (crossing_cmd->parsed()) {
      apply_config(crossing_cmd, crossing_opts);
      cmd_crossing(crossing_opts, crossing_bracket, crossing_eps);
    } else if (jump_cmd->parsed()) {
      apply_config(jump_cmd, jump_opts);
      cmd_jump(jump_opts, jump_bracket, jump_eps);
    } else if (surface_cmd->parsed()) {
      apply_config(surface_cmd, surface_opts);
      cmd_surface(surface_opts, surface_point, surface_grid, surface_bracket);
    } else if (table1_cmd->parsed()) {
      apply_config(table1_cmd, table1_opts);
      cmd_table1(table1_opts);
    } else if (correlators_cmd->parsed()) {
      apply_config(correlators_cmd, correlators_opts);
      cmd_correlators(correlators_opts);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("spinring");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace spinring::cli
