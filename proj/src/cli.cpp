#include "torusfan/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json_support.hpp"
#include "torusfan/io.hpp"
#include "torusfan/pdivisor.hpp"
#include "torusfan/quotients.hpp"

namespace torusfan {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

json cone_json(const Cone& c) {
  return {{"rays", detail::vectors_json(c.rays())}, {"lineality", detail::vectors_json(c.lineality())}};
}

json fan_json(const Fan& f, const FanMeta& meta = {}) { return json::parse(emit_fan(f, meta)); }

RatVector parse_int_list(const std::string& text) {
  RatVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const Rat q = parse_rat(item);
    if (q.get_den() != 1) throw InputError("expected integers in '" + text + "'");
    v.push_back(q);
  }
  if (v.empty()) throw InputError("empty integer list");
  return v;
}

struct Options {
  std::string input;
  std::string out;
  std::string which;
  std::string section = "auto";
  std::string normal;
  std::string level;
  int bound = 0;  // 0: automatic
  int cap = 64;
};

std::optional<int> bound_option(const Options& o, bool given) {
  if (!given) return std::nullopt;
  if (o.bound < 1) throw InputError("--bound must be at least 1");
  return o.bound;
}

int cmd_gitfan(const Options& o, std::ostream& out, std::ostream& err) {
  const Scenario s = parse_scenario(read_file(o.input));
  if (s.downgrade.warning()) err << "warning: " << *s.downgrade.warning() << '\n';
  const GitFan g = git_fan(s.downgrade);
  json doc;
  doc["name"] = s.name;
  doc["weight_cone"] = cone_json(g.weight_cone);
  doc["orbit_cones"] = json::array();
  for (const auto& c : g.orbit_cones) doc["orbit_cones"].push_back(cone_json(c));
  doc["git_cones"] = json::array();
  for (const auto& c : g.git_cones) doc["git_cones"].push_back(cone_json(c));
  doc["q0"] = json::array();
  for (const auto& c : g.q0) doc["q0"].push_back(cone_json(c));
  doc["fan"] = fan_json(g.fan, {"git", std::nullopt, std::nullopt});
  write_output(o.out, doc.dump(2) + "\n", out);
  return kOk;
}

int cmd_quotient_fan(const Options& o, bool bound_given, std::ostream& out, std::ostream& err) {
  const Scenario s = parse_scenario(read_file(o.input));
  const TorusDowngrade& d = s.downgrade;
  if (d.warning()) err << "warning: " << *d.warning() << '\n';
  const auto bound = bound_option(o, bound_given);
  const GitFan g = git_fan(d);

  auto hilbert = [&] { return bound ? hilbert_main_fan(d, g, *bound) : hilbert_main_fan_auto(d, g, o.cap); };
  Fan fan;
  FanMeta meta{o.which, std::nullopt, std::nullopt};
  if (o.which.rfind("git:", 0) == 0) {
    std::size_t idx = 0;
    try {
      idx = std::stoul(o.which.substr(4));
    } catch (const std::exception&) {
      throw InputError("--which git:<index> needs a non-negative index");
    }
    if (idx >= g.q0.size())
      throw InputError("--which " + o.which + ": only " + std::to_string(g.q0.size()) + " cones in q0");
    fan = git_quotient_fan(d, g, g.q0[idx]);
  } else if (o.which == "chow") {
    fan = chow_quotient_fan(d, g);
  } else if (o.which == "ah") {
    fan = ah_fan(d, chow_quotient_fan(d, g));
  } else if (o.which == "hilbert" || o.which == "universal") {
    const HilbertResult h = hilbert();
    fan = o.which == "hilbert" ? h.fan : universal_main_fan(d, h.fan);
    meta.bound = h.bound;
    meta.stabilized = h.stabilized;
  } else {
    throw InputError("--which must be git:<index>, chow, ah, hilbert or universal");
  }
  write_output(o.out, emit_fan(fan, meta), out);
  return kOk;
}

int cmd_pdivisor(const Options& o, std::ostream& out, std::ostream& err) {
  const Scenario s = parse_scenario(read_file(o.input));
  const TorusDowngrade& d = s.downgrade;
  if (d.warning()) err << "warning: " << *d.warning() << '\n';
  RatMatrix section = d.section();
  if (o.section.rfind("random:", 0) == 0) {
    std::mt19937_64 rng(std::stoull(o.section.substr(7)));
    section = random_section(d, rng);
  } else if (o.section != "auto") {
    throw InputError("--section must be 'auto' or 'random:<seed>'");
  }
  const PolyhedralDivisor pd = downgrade_divisor(d, chow_quotient_fan(d), section);
  json doc;
  doc["name"] = s.name;
  doc["base"] = fan_json(pd.base, {"chow", std::nullopt, std::nullopt});
  doc["section"] = detail::vectors_json(section.row_list());
  doc["tail"] = cone_json(pd.tail);
  doc["coefficients"] = json::array();
  for (std::size_t i = 0; i < pd.coefficients.size(); ++i) {
    const Polyhedron& p = pd.coefficients[i];
    doc["coefficients"].push_back({{"ray", detail::vector_json(pd.base.rays()[i])},
                                   {"vertices", detail::vectors_json(p.vertices())},
                                   {"rays", detail::vectors_json(p.rays())},
                                   {"lineality", detail::vectors_json(p.lineality())}});
  }
  write_output(o.out, doc.dump(2) + "\n", out);
  return kOk;
}

int cmd_check_diagram(const Options& o, bool bound_given, std::ostream& out, std::ostream& err) {
  const Scenario s = parse_scenario(read_file(o.input));
  if (s.downgrade.warning()) err << "warning: " << *s.downgrade.warning() << '\n';
  const QuotientBundle b = compute_quotients(s.downgrade, bound_option(o, bound_given), o.cap);
  const DiagramReport r = verify_diagram(s.downgrade, b);
  std::string text = s.name.empty() ? "" : "scenario: " + s.name + "\n";
  text += r.to_text();
  write_output(o.out, text, out);
  return r.all_passed() ? kOk : kVerificationFailed;
}

int cmd_slice(const Options& o, std::ostream& out) {
  const FanFile f = parse_fan(read_file(o.input));
  write_output(o.out, svg_slice(f.fan, parse_int_list(o.normal), parse_rat(o.level)), out);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fans of quotients of affine toric varieties by subtori", "torusfan"};
  app.require_subcommand(1);
  Options o;

  auto* gitfan = app.add_subcommand("gitfan", "weight cone, orbit cones and GIT fan");
  gitfan->add_option("scenario", o.input, "scenario file")->required();
  gitfan->add_option("--out", o.out, "output path (default stdout)");

  auto* qfan = app.add_subcommand("quotient-fan", "one of the quotient fans as a fan file");
  qfan->add_option("scenario", o.input, "scenario file")->required();
  qfan->add_option("--which", o.which, "git:<index into q0> | chow | ah | hilbert | universal")->required();
  auto* qbound = qfan->add_option("--bound", o.bound, "enumeration bound for hilbert/universal");
  qfan->add_option("--cap", o.cap, "largest bound tried by the automatic scheme");
  qfan->add_option("--out", o.out, "output path (default stdout)");

  auto* pdiv = app.add_subcommand("pdivisor", "polyhedral divisor over the Chow quotient fan");
  pdiv->add_option("scenario", o.input, "scenario file")->required();
  pdiv->add_option("--section", o.section, "auto | random:<seed>");
  pdiv->add_option("--out", o.out, "output path (default stdout)");

  auto* check = app.add_subcommand("check-diagram", "verify the fan-level diagram; exit 2 on failure");
  check->add_option("scenario", o.input, "scenario file")->required();
  auto* cbound = check->add_option("--bound", o.bound, "enumeration bound for the Hilbert fan");
  check->add_option("--cap", o.cap, "largest bound tried by the automatic scheme");
  check->add_option("--out", o.out, "output path (default stdout)");

  auto* slice = app.add_subcommand("slice", "SVG slice of a fan file by a hyperplane");
  slice->add_option("fan", o.input, "fan file")->required();
  slice->add_option("--normal", o.normal, "comma separated integers")->required();
  slice->add_option("--level", o.level, "right-hand side, integer or p/q")->required();
  slice->add_option("--out", o.out, "output path (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gitfan) return cmd_gitfan(o, out, err);
    if (*qfan) return cmd_quotient_fan(o, qbound->count() > 0, out, err);
    if (*pdiv) return cmd_pdivisor(o, out, err);
    if (*check) return cmd_check_diagram(o, cbound->count() > 0, out, err);
    if (*slice) return cmd_slice(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace torusfan
