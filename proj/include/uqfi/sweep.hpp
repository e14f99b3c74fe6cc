#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "uqfi/channel_model.hpp"
#include "uqfi/fisher.hpp"
#include "uqfi/unruh_channel.hpp"

namespace uqfi {

enum class Variable { Theta = 0, Phi = 1, R = 2 };

std::string_view variable_name(Variable v);  // theta | phi | r
Variable parse_variable(std::string_view s);

/// Inclusive grid along one variable: start + i (stop - start)/(count - 1).
struct Axis {
  Variable var = Variable::Theta;
  double start = 0.0;
  double stop = 0.0;
  int count = 2;

  double point(int i) const;
};

/// Mode weights for a sweep: a named preset or explicit (qR, qL).
struct UnruhMode {
  std::optional<ModePreset> preset = ModePreset::Wsma;
  cplx qr = 1.0;
  cplx ql = 0.0;

  static UnruhMode from_preset(ModePreset p);
  static UnruhMode explicit_weights(cplx qr, cplx ql) { return {std::nullopt, qr, ql}; }
};

struct SweepSpec {
  Estimand estimand = Estimand::Theta;
  Normalization mode = Normalization::Normalized;
  DerivativeMethod method = DerivativeMethod::analytic();
  ChannelPreset channel = ChannelPreset::bell_phi_plus();
  UnruhMode unruh = UnruhMode::from_preset(ModePreset::Wsma);
  std::vector<Axis> axes;                       // one or two, outer axis first
  std::array<std::optional<double>, 3> fixed;   // indexed by Variable
  std::optional<std::string> figure;            // set for figure presets
};

/// Throws DomainError if the axes/fixed values do not partition
/// {theta, phi, r}, a range leaves its domain, count < 2, or the channel is
/// unphysical.
void validate(const SweepSpec& spec);

struct SweepRow {
  std::vector<double> coords;  // one per axis, in axis order
  double fisher = 0.0;
  bool pure_branch = false;
};

/// Grid evaluation parallelized with OpenMP. Row order is the row-major
/// order of the axes and does not depend on the thread count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Single-threaded reference for run_sweep.
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec);

inline constexpr int kDefaultGrid = 64;

/// 1a 1b 2a 2c 3a 3c 4a 4b 4c 4d 5a 5c 6a 6b 6c 6d
const std::vector<std::string>& figure_ids();
SweepSpec figure_spec(std::string_view id, int grid = kDefaultGrid,
                      Normalization mode = Normalization::AsPublished);

enum class OutputFormat { Csv, Json };
OutputFormat parse_format(std::string_view s);

nlohmann::json spec_to_json(const SweepSpec& spec);
SweepSpec spec_from_json(const nlohmann::json& j);

std::string to_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);
std::string to_json(const SweepSpec& spec, const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_csv(std::string_view text);
std::vector<SweepRow> parse_json_rows(std::string_view text);

/// Serializes and writes rows to `path` ("-" writes to stdout). Throws
/// IoError naming the path when it cannot be written.
void emit(const SweepSpec& spec, const std::vector<SweepRow>& rows, OutputFormat format,
          const std::string& path);

}  // namespace uqfi
