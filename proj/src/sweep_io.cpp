#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "uqfi/errors.hpp"
#include "uqfi/parse.hpp"
#include "uqfi/sweep.hpp"

namespace uqfi {

using nlohmann::json;

namespace {

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw DomainError("complex value must be [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

std::vector<std::string> column_names(const SweepSpec& spec) {
  std::vector<std::string> cols;
  for (const Axis& a : spec.axes) cols.emplace_back(variable_name(a.var));
  cols.emplace_back("fisher");
  cols.emplace_back("pure_branch");
  return cols;
}

}  // namespace

OutputFormat parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw DomainError("unknown format '" + std::string(s) + "' (expected csv|json)");
}

json spec_to_json(const SweepSpec& spec) {
  json j;
  if (spec.figure) j["figure"] = *spec.figure;
  j["estimand"] = estimand_name(spec.estimand);
  j["normalization"] = normalization_name(spec.mode);
  j["method"] = {{"kind", method_name(spec.method)}};
  if (spec.method.kind == DerivativeMethod::Kind::CentralDifference) {
    j["method"]["h"] = spec.method.h;
  }

  const CorrelationDyadic d = preset_dyadic(spec.channel);
  const ChannelWeights w = channel_weights(d);
  json ch = {{"preset", preset_name(spec.channel.kind)},
             {"c11", d.c11},
             {"c22", d.c22},
             {"c33", d.c33},
             {"A1", w.a1},
             {"A2", w.a2},
             {"A3", w.a3},
             {"A4", w.a4}};
  if (spec.channel.kind == PresetKind::Werner) ch["F"] = spec.channel.werner_f;
  j["channel"] = ch;

  j["unruh"] = {{"mode", spec.unruh.preset ? std::string(mode_preset_name(*spec.unruh.preset))
                                           : std::string("explicit")},
                {"qr", complex_to_json(spec.unruh.qr)},
                {"ql", complex_to_json(spec.unruh.ql)}};

  json axes = json::array();
  for (const Axis& a : spec.axes) {
    axes.push_back({{"name", variable_name(a.var)},
                    {"start", a.start},
                    {"stop", a.stop},
                    {"count", a.count}});
  }
  j["axes"] = axes;
  json fixed = json::object();
  for (std::size_t k = 0; k < 3; ++k) {
    if (spec.fixed[k]) fixed[std::string(variable_name(static_cast<Variable>(k)))] = *spec.fixed[k];
  }
  j["fixed"] = fixed;
  return j;
}

SweepSpec spec_from_json(const json& j) {
  try {
    SweepSpec spec;
    if (j.contains("figure")) spec.figure = j.at("figure").get<std::string>();
    spec.estimand = parse_estimand(j.at("estimand").get<std::string>());
    spec.mode = parse_normalization(j.value("normalization", std::string("normalized")));
    if (j.contains("method")) {
      const json& m = j.at("method");
      spec.method = parse_method(m.at("kind").get<std::string>());
      if (spec.method.kind == DerivativeMethod::Kind::CentralDifference && m.contains("h")) {
        spec.method.h = m.at("h").get<double>();
      }
    }

    const json& ch = j.at("channel");
    switch (parse_preset_name(ch.at("preset").get<std::string>())) {
      case PresetKind::BellPhiPlus: spec.channel = ChannelPreset::bell_phi_plus(); break;
      case PresetKind::BellPsiMinus: spec.channel = ChannelPreset::bell_psi_minus(); break;
      case PresetKind::Werner: spec.channel = ChannelPreset::werner(ch.at("F").get<double>()); break;
      case PresetKind::XState:
        spec.channel = ChannelPreset::x_state(ch.at("c11").get<double>(), ch.at("c22").get<double>(),
                                              ch.at("c33").get<double>());
        break;
    }

    const json& un = j.at("unruh");
    const std::string mode = un.value("mode", std::string("explicit"));
    if (mode == "explicit") {
      spec.unruh = UnruhMode::explicit_weights(complex_from_json(un.at("qr")),
                                               complex_from_json(un.at("ql")));
    } else {
      spec.unruh = UnruhMode::from_preset(parse_mode_preset(mode));
    }

    spec.axes.clear();
    for (const json& a : j.at("axes")) {
      spec.axes.push_back({parse_variable(a.at("name").get<std::string>()),
                           a.at("start").get<double>(), a.at("stop").get<double>(),
                           a.at("count").get<int>()});
    }
    if (j.contains("fixed")) {
      for (const auto& [name, value] : j.at("fixed").items()) {
        spec.fixed[static_cast<std::size_t>(parse_variable(name))] = value.get<double>();
      }
    }
    validate(spec);
    return spec;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed sweep spec: ") + e.what());
  }
}

std::string to_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  std::string out;
  const auto cols = column_names(spec);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (k) out += ',';
    out += cols[k];
  }
  out += '\n';
  for (const SweepRow& row : rows) {
    for (double x : row.coords) {
      out += format_double(x);
      out += ',';
    }
    out += format_double(row.fisher);
    out += row.pure_branch ? ",1\n" : ",0\n";
  }
  return out;
}

std::string to_json(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  json j;
  j["spec"] = spec_to_json(spec);
  json arr = json::array();
  for (const SweepRow& row : rows) {
    json r = json::object();
    for (std::size_t a = 0; a < spec.axes.size(); ++a) {
      r[std::string(variable_name(spec.axes[a].var))] = row.coords[a];
    }
    r["fisher"] = row.fisher;
    r["pure_branch"] = row.pure_branch;
    arr.push_back(std::move(r));
  }
  j["rows"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::vector<SweepRow> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw DomainError("empty CSV");
  std::size_t ncols = 1;
  for (char ch : line) ncols += ch == ',';
  if (ncols < 3) throw DomainError("CSV header needs at least 3 columns");

  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != ncols) throw DomainError("CSV row has wrong column count: " + line);
    SweepRow row;
    for (std::size_t k = 0; k + 2 < ncols; ++k) row.coords.push_back(std::stod(fields[k]));
    row.fisher = std::stod(fields[ncols - 2]);
    row.pure_branch = fields[ncols - 1] == "1";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> parse_json_rows(std::string_view text) {
  const json j = json::parse(text);
  const json& spec = j.at("spec");
  std::vector<std::string> axes;
  for (const json& a : spec.at("axes")) axes.push_back(a.at("name").get<std::string>());
  std::vector<SweepRow> rows;
  for (const json& r : j.at("rows")) {
    SweepRow row;
    for (const auto& name : axes) row.coords.push_back(r.at(name).get<double>());
    row.fisher = r.at("fisher").get<double>();
    row.pure_branch = r.at("pure_branch").get<bool>();
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(const SweepSpec& spec, const std::vector<SweepRow>& rows, OutputFormat format,
          const std::string& path) {
  if (rows.empty()) throw DomainError("nothing to emit: sweep produced no rows");
  const std::string body = format == OutputFormat::Csv ? to_csv(spec, rows) : to_json(spec, rows);
  if (path.empty() || path == "-") {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot open output file");
  out << body;
  out.close();
  if (!out) throw IoError(path, "failed writing output file");
}

}  // namespace uqfi
