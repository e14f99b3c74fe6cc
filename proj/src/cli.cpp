#include "uqfi/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "uqfi/channel_model.hpp"
#include "uqfi/errors.hpp"
#include "uqfi/fisher.hpp"
#include "uqfi/parse.hpp"
#include "uqfi/sweep.hpp"
#include "uqfi/teleportation.hpp"
#include "uqfi/unruh_channel.hpp"
#include "uqfi/verify.hpp"

namespace uqfi {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// shared flag groups

struct ChannelFlags {
  std::string preset = "bell-phi-plus";
  std::optional<double> werner_f;
  std::optional<double> c11, c22, c33;

  void add(CLI::App* app) {
    app->add_option("--preset", preset, "bell-phi-plus | bell-psi-minus | werner | x-state");
    app->add_option("--werner-f", werner_f, "Werner parameter F in [0,1]");
    app->add_option("--c11", c11);
    app->add_option("--c22", c22);
    app->add_option("--c33", c33);
  }

  ChannelPreset resolve(const CLI::App* app) const {
    const bool explicit_c = c11 || c22 || c33;
    PresetKind kind = parse_preset_name(preset);
    if (explicit_c && app->count("--preset") == 0) kind = PresetKind::XState;
    switch (kind) {
      case PresetKind::BellPhiPlus: return ChannelPreset::bell_phi_plus();
      case PresetKind::BellPsiMinus: return ChannelPreset::bell_psi_minus();
      case PresetKind::Werner:
        if (!werner_f) throw DomainError("werner preset needs --werner-f");
        return ChannelPreset::werner(*werner_f);
      case PresetKind::XState:
        if (!(c11 && c22 && c33)) throw DomainError("x-state needs --c11, --c22 and --c33");
        return ChannelPreset::x_state(*c11, *c22, *c33);
    }
    throw DomainError("invalid preset");
  }
};

struct UnruhFlags {
  std::string mode = "wsma";
  std::optional<std::string> qr, ql;

  void add(CLI::App* app) {
    app->add_option("--mode", mode, "wsma | bsma");
    app->add_option("--qr", qr, "explicit right-mode weight, e.g. 0.6+0.8i");
    app->add_option("--ql", ql, "explicit left-mode weight");
  }

  UnruhMode resolve() const {
    if (qr || ql) {
      if (!(qr && ql)) throw DomainError("--qr and --ql must be given together");
      return UnruhMode::explicit_weights(parse_complex(*qr), parse_complex(*ql));
    }
    return UnruhMode::from_preset(parse_mode_preset(mode));
  }
};

struct RFlags {
  std::optional<std::string> r;
  std::optional<double> omega, accel;
  double c = 299792458.0;

  void add(CLI::App* app) {
    app->add_option("--r", r, "Rindler parameter in [0, pi/4], e.g. pi/8");
    app->add_option("--omega", omega, "mode angular frequency (rad/s)");
    app->add_option("--accel", accel, "proper acceleration (m/s^2)");
    app->add_option("--c", c, "speed of light (m/s)");
  }

  std::optional<double> resolve() const {
    if (omega || accel) {
      if (r) throw DomainError("give either --r or --omega/--accel, not both");
      if (!(omega && accel)) throw DomainError("--omega and --accel must be given together");
      return r_from_acceleration(*omega, *accel, c);
    }
    if (r) return parse_angle(*r);
    return std::nullopt;
  }
};

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const Eigen::MatrixXcd& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += "  ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " %+.6f%+.6fi", m(i, j).real(), m(i, j).imag());
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void write_text(const std::string& body, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError(path, "cannot open output file");
  f << body;
  f.close();
  if (!f) throw IoError(path, "failed writing output file");
}

void set_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

// --grid N or NxM
std::vector<int> parse_grid(const std::string& text) {
  std::vector<int> counts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, 'x');) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(part, &used);
      if (used != part.size() || n < 2) throw DomainError("");
      counts.push_back(n);
    } catch (const std::exception&) {
      throw DomainError("bad --grid '" + text + "' (expected N or NxM, N >= 2)");
    }
  }
  if (counts.empty() || counts.size() > 2) {
    throw DomainError("bad --grid '" + text + "' (expected N or NxM)");
  }
  return counts;
}

void apply_grid(SweepSpec& spec, const std::string& grid) {
  const auto counts = parse_grid(grid);
  for (std::size_t a = 0; a < spec.axes.size(); ++a) {
    spec.axes[a].count = counts.size() == 1 ? counts[0] : counts.at(std::min(a, counts.size() - 1));
  }
}

// name=start:stop:count
Axis parse_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw DomainError("bad --axis '" + text + "'");
  Axis a;
  a.var = parse_variable(text.substr(0, eq));
  std::vector<std::string> parts;
  std::stringstream ss(text.substr(eq + 1));
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw DomainError("bad --axis '" + text + "' (name=start:stop:count)");
  a.start = parse_angle(parts[0]);
  a.stop = parse_angle(parts[1]);
  try {
    a.count = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw DomainError("bad axis count in '" + text + "'");
  }
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError(path, "cannot open file");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Teleportation through an Unruh-accelerated channel and the quantum Fisher "
               "information of the teleported state"};
  app.name("uqfi");
  app.require_subcommand(1);

  ChannelFlags chf;
  UnruhFlags unf;
  RFlags rf;
  std::string theta_s = "0", phi_s = "0";
  std::string format;
  std::string out_path;
  std::string norm = "normalized", method = "analytic", param = "theta";
  std::string route = "analytic";
  int threads = 0;

  auto* channel_cmd = app.add_subcommand("channel", "initial and accelerated two-qubit channel");
  auto* teleport_cmd = app.add_subcommand("teleport", "Bob's state for Alice's outcome 00");
  auto* fisher_cmd = app.add_subcommand("fisher", "Fisher information at one point");
  auto* sweep_cmd = app.add_subcommand("sweep", "Fisher information over a 1-2 axis grid");
  auto* figures_cmd = app.add_subcommand("figures", "emit figure-preset datasets");
  auto* verify_cmd = app.add_subcommand("verify", "run every oracle cross-check");

  for (auto* cmd : {channel_cmd, teleport_cmd, fisher_cmd, sweep_cmd}) {
    chf.add(cmd);
    unf.add(cmd);
  }
  for (auto* cmd : {channel_cmd, teleport_cmd, fisher_cmd, sweep_cmd}) rf.add(cmd);
  for (auto* cmd : {teleport_cmd, fisher_cmd, sweep_cmd}) {
    cmd->add_option("--theta", theta_s, "weight angle in [0, pi]");
    cmd->add_option("--phi", phi_s, "phase angle in [0, 2pi]");
  }
  for (auto* cmd : {fisher_cmd, sweep_cmd, figures_cmd}) {
    cmd->add_option("--norm", norm, "normalized | as-published");
    cmd->add_option("--method", method, "analytic | fd");
  }
  for (auto* cmd : {fisher_cmd, sweep_cmd}) cmd->add_option("--param", param, "theta | phi | r");
  for (auto* cmd : {channel_cmd, teleport_cmd, fisher_cmd, sweep_cmd, figures_cmd, verify_cmd}) {
    cmd->add_option("--format", format, "json | text (point commands), csv | json (sweeps)");
    cmd->add_option("--out", out_path, "output path ('-' for stdout)");
    cmd->add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
  }
  teleport_cmd->add_option("--route", route, "analytic | circuit");

  std::vector<std::string> axes;
  std::string grid, spec_path;
  sweep_cmd->add_option("--axis", axes, "name=start:stop:count (repeat for a second axis)");
  sweep_cmd->add_option("--grid", grid, "override counts: N or NxM");
  sweep_cmd->add_option("--spec", spec_path, "load the sweep spec from a JSON file");

  std::string figure_id;
  bool list_figures = false;
  figures_cmd->add_option("--id", figure_id, "figure preset id or 'all'");
  figures_cmd->add_option("--grid", grid, "grid points per axis: N or NxM (default 64)");
  figures_cmd->add_flag("--list", list_figures, "list preset ids");

  int trials = 1000;
  std::uint64_t seed = 42;
  bool inject = false;
  verify_cmd->add_option("--trials", trials, "random draws per check");
  verify_cmd->add_option("--seed", seed, "generator seed");
  verify_cmd->add_flag("--inject-printed-b7", inject,
                       "use the as-printed B7 coefficient (mutation test)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    set_threads(threads);
    const bool point_text = format == "text";
    if (!format.empty() && format != "text" && format != "json" && format != "csv") {
      throw DomainError("unknown format '" + format + "'");
    }

    if (*channel_cmd) {
      const CLI::App* cmd = channel_cmd;
      const ChannelPreset preset = chf.resolve(cmd);
      const CorrelationDyadic d = preset_dyadic(preset);
      const PhysicalityVerdict v = validate_physical(d);
      const Density4 rho = dyadic_to_density(d);
      json j = {{"preset", preset_name(preset.kind)},
                {"dyadic", {{"c11", d.c11}, {"c22", d.c22}, {"c33", d.c33}}},
                {"physical", v.physical},
                {"min_eigenvalue", v.min_eigenvalue},
                {"density", matrix_json(rho)}};
      std::string text = "preset  " + std::string(preset_name(preset.kind)) + "\n" +
                         "dyadic  (" + format_double(d.c11) + ", " + format_double(d.c22) + ", " +
                         format_double(d.c33) + ")\nphysical " + (v.physical ? "yes" : "no") +
                         "  min eigenvalue " + format_double(v.min_eigenvalue) + "\ndensity\n" +
                         matrix_text(rho);
      if (const auto r = rf.resolve()) {
        const UnruhMode m = unf.resolve();
        const UnruhParams u = make_unruh(*r, m.qr, m.ql);
        const AcceleratedChannel ch = accelerate(d, u);
        json b = json::array();
        for (const cplx& z : ch.b) b.push_back(complex_json(z));
        j["r"] = u.r;
        j["B"] = b;
        j["accelerated_density"] = matrix_json(accelerated_density(ch));
        text += "r       " + format_double(u.r) + "\naccelerated density\n" +
                matrix_text(accelerated_density(ch));
      }
      write_text(point_text ? text : j.dump(2) + "\n", out_path, out);
      return v.physical ? kExitOk : kExitValidation;
    }

    if (*teleport_cmd || *fisher_cmd) {
      const CLI::App* cmd = *teleport_cmd ? teleport_cmd : fisher_cmd;
      const CorrelationDyadic d = preset_dyadic(chf.resolve(cmd));
      const UnruhMode m = unf.resolve();
      const UnruhParams u = make_unruh(rf.resolve().value_or(0.0), m.qr, m.ql);
      const InputState in{parse_angle(theta_s), parse_angle(phi_s)};
      validate(in);

      if (*teleport_cmd) {
        BobState bob;
        if (route == "analytic") {
          bob = teleport_analytic(in, accelerate(d, u));
        } else if (route == "circuit") {
          bob = teleport_circuit_oracle(in, bogoliubov_oracle(d, u));
        } else {
          throw DomainError("unknown route '" + route + "' (expected analytic|circuit)");
        }
        const BlochVector s = bloch_of(bob.rho_normalized);
        if (point_text) {
          char buf[160];
          std::snprintf(buf, sizeof buf, "outcome_prob %.17g\nbloch        (%.12f, %.12f, %.12f)\n",
                        bob.outcome_prob, s.x, s.y, s.z);
          write_text("rho\n" + matrix_text(bob.rho) + "rho_normalized\n" +
                         matrix_text(bob.rho_normalized) + buf,
                     out_path, out);
        } else {
          json j = {{"route", route},
                    {"theta", in.theta},
                    {"phi", in.phi},
                    {"r", u.r},
                    {"rho", matrix_json(bob.rho)},
                    {"rho_normalized", matrix_json(bob.rho_normalized)},
                    {"outcome_prob", bob.outcome_prob},
                    {"bloch", {s.x, s.y, s.z}}};
          write_text(j.dump(2) + "\n", out_path, out);
        }
        return kExitOk;
      }

      DerivativeMethod dm = parse_method(method);
      const FisherResult f = fisher(in, d, u, parse_normalization(norm), parse_estimand(param), dm);
      json j = {{"value", f.value},
                {"param", estimand_name(f.param)},
                {"mode", normalization_name(f.mode)},
                {"method", method_name(f.method)},
                {"pure_branch_taken", f.pure_branch_taken},
                {"clamped", f.clamped},
                {"point", {{"theta", in.theta}, {"phi", in.phi}, {"r", u.r}}}};
      if (f.method.kind == DerivativeMethod::Kind::CentralDifference) j["h"] = f.method.h;
      if (point_text) {
        write_text("F_" + std::string(estimand_name(f.param)) + " = " + format_double(f.value) +
                       "  (" + std::string(normalization_name(f.mode)) + ", " +
                       std::string(method_name(f.method)) +
                       (f.pure_branch_taken ? ", pure branch" : "") +
                       (f.clamped ? ", clamped" : "") + ")\n",
                   out_path, out);
        return kExitOk;
      }
      write_text(j.dump(2) + "\n", out_path, out);
      return kExitOk;
    }

    if (*sweep_cmd || *figures_cmd) {
      const OutputFormat fmt = parse_format(format.empty() ? "csv" : format);

      if (*figures_cmd) {
        if (list_figures) {
          for (const auto& id : figure_ids()) out << id << "\n";
          return kExitOk;
        }
        if (figure_id.empty()) throw DomainError("figures needs --id <preset>|all or --list");
        const Normalization mode = figures_cmd->count("--norm") ? parse_normalization(norm)
                                                                : Normalization::AsPublished;
        std::vector<std::string> ids =
            figure_id == "all" ? figure_ids() : std::vector<std::string>{figure_id};
        if (ids.size() > 1 && (out_path.empty() || out_path == "-")) {
          throw DomainError("--id all needs --out <directory>");
        }
        for (const auto& id : ids) {
          SweepSpec spec = figure_spec(id, kDefaultGrid, mode);
          spec.method = parse_method(method);
          if (!grid.empty()) apply_grid(spec, grid);
          const auto rows = run_sweep(spec);
          std::string path = out_path;
          if (ids.size() > 1) {
            std::error_code ec;
            std::filesystem::create_directories(out_path, ec);
            if (ec) throw IoError(out_path, "cannot create directory");
            path = (std::filesystem::path(out_path) /
                    ("fig" + id + (fmt == OutputFormat::Csv ? ".csv" : ".json")))
                       .string();
          }
          if (path.empty() || path == "-") {
            out << (fmt == OutputFormat::Csv ? to_csv(spec, rows) : to_json(spec, rows));
          } else {
            emit(spec, rows, fmt, path);
          }
        }
        return kExitOk;
      }

      SweepSpec spec;
      if (!spec_path.empty()) {
        json j;
        try {
          j = json::parse(read_file(spec_path));
        } catch (const json::exception& e) {
          throw DomainError(std::string("spec file is not valid JSON: ") + e.what());
        }
        spec = spec_from_json(j.contains("spec") ? j.at("spec") : j);
      } else {
        if (axes.empty()) throw DomainError("sweep needs --axis (or --spec)");
        spec.estimand = parse_estimand(param);
        spec.mode = parse_normalization(norm);
        spec.method = parse_method(method);
        spec.channel = chf.resolve(sweep_cmd);
        spec.unruh = unf.resolve();
        for (const auto& a : axes) spec.axes.push_back(parse_axis(a));
        std::array<bool, 3> swept{};
        for (const Axis& a : spec.axes) swept[static_cast<std::size_t>(a.var)] = true;
        if (!swept[0]) spec.fixed[0] = parse_angle(theta_s);
        if (!swept[1]) spec.fixed[1] = parse_angle(phi_s);
        if (!swept[2]) spec.fixed[2] = rf.resolve().value_or(0.0);
      }
      if (!grid.empty()) apply_grid(spec, grid);
      const auto rows = run_sweep(spec);
      if (out_path.empty() || out_path == "-") {
        out << (fmt == OutputFormat::Csv ? to_csv(spec, rows) : to_json(spec, rows));
      } else {
        emit(spec, rows, fmt, out_path);
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      const VerifyReport rep = verify({trials, seed, inject});
      write_text(rep.text(), out_path, out);
      return rep.passed() ? kExitOk : kExitVerification;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace uqfi
