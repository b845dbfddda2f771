#include "polytoric/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "polytoric/bounds.hpp"
#include "polytoric/errors.hpp"
#include "polytoric/json_io.hpp"
#include "polytoric/svg.hpp"
#include "polytoric/toric.hpp"

namespace polytoric::cli {
namespace {

const std::map<std::string, Format> kFormats = {
    {"json", Format::Json}, {"tsv", Format::Tsv}, {"svg", Format::Svg}};

// Verbs whose result is about a single polygon and can therefore be drawn.
bool single_polygon_verb(const std::string& verb) {
  return verb == "width" || verb == "area" || verb == "fan" || verb == "delzant" ||
         verb == "equiv-p0" || verb == "bounds" || verb == "qk";
}

std::size_t expected_inputs(const std::string& verb) {
  if (verb == "mixed") return 2;
  if (verb == "qk" || verb == "ratio-table" || verb == "gap-scan") return 0;
  return 1;
}

void write_tsv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i].first;
  out << "\n";
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i].second;
  out << "\n";
}

void draw(const Command& cmd, const Polygon& p, const std::optional<WidthCertificate>& cert,
          std::ostream& out) {
  if (cmd.out) {
    emit_svg(p, cert, *cmd.out);
  } else {
    out << render_svg(p, cert);
  }
}

int run_gap_scan(const Command& cmd, std::ostream& out) {
  std::int64_t equivalent = 0, strict = 0, exceptions = 0;
  if (cmd.format == Format::Tsv) out << "index\tseed\tvertices\twidth\tarea\tequivalent\tstrict\n";
  for (std::int64_t i = 0; i < cmd.count; ++i) {
    const std::uint64_t seed = cmd.seed + static_cast<std::uint64_t>(i);
    const Polygon p = random_lattice_polygon({cmd.box, cmd.points, seed});
    const VolumeGap gap = volume_gap_check(p);
    equivalent += gap.equivalent;
    strict += gap.strict_inequality;
    exceptions += !gap.consistent();
    if (cmd.format == Format::Tsv) {
      out << i << "\t" << seed << "\t" << p.size() << "\t" << to_string(gap.width) << "\t"
          << to_string(gap.area) << "\t" << gap.equivalent << "\t" << gap.strict_inequality
          << "\n";
    }
  }
  if (cmd.format == Format::Json) {
    Json j{{"params", {{"count", cmd.count}, {"seed", cmd.seed}, {"box", cmd.box},
                       {"points", cmd.points}}},
           {"equivalent", equivalent},
           {"strict", strict},
           {"exceptions", exceptions}};
    out << j.dump() << "\n";
  }
  return exceptions == 0 ? kExitOk : kExitVerification;
}

int run_ratio_table(const Command& cmd, std::ostream& out) {
  const auto rows = ratio_table(cmd.k_max);
  std::optional<std::int64_t> first;
  if (cmd.eps) first = first_k_below(rows, parse_rational(*cmd.eps));
  if (cmd.format == Format::Tsv) {
    out << "k\tgromov\twidth\tratio\tratio_approx\n";
    for (const auto& r : rows) {
      out << r.k << "\t" << to_string(r.gromov) << "\t" << to_string(r.width) << "\t"
          << to_string(r.ratio) << "\t" << approx_string(r.ratio) << "\n";
    }
    if (cmd.eps) out << "# first_k_below\t" << (first ? std::to_string(*first) : "none") << "\n";
    return kExitOk;
  }
  Json table = Json::array();
  for (const auto& r : rows) {
    table.push_back(Json{{"k", r.k},
                         {"gromov", to_json(r.gromov)},
                         {"width", to_json(r.width)},
                         {"ratio", to_json(r.ratio)}});
  }
  Json j{{"rows", std::move(table)}};
  if (cmd.eps) {
    j["eps"] = to_json(parse_rational(*cmd.eps));
    j["first_k_below"] = first ? Json(*first) : Json(nullptr);
  }
  out << j.dump() << "\n";
  return kExitOk;
}

int run_qk(const Command& cmd, std::ostream& out) {
  const QkInstance inst = qk(cmd.k);
  if (cmd.format == Format::Svg) {
    draw(cmd, inst.polygon, inst.width, out);
    return kExitOk;
  }
  Json j = to_json(inst);
  if (cmd.verify) {
    // qk() already rebuilt the Minkowski sum and checked vertices and width.
    if (cmd.k >= 1) {
      const SeshadriChain chain = qk_seshadri_chain(cmd.k);
      if (chain.exact != *inst.gromov_exact) {
        throw VerificationError(VerificationError::Kind::ChainBroken,
                                "chain value differs from (3k+9)/2");
      }
      j["chain"] = to_json(chain);
    }
    j["verified"] = true;
  }
  if (cmd.format == Format::Tsv) {
    write_tsv(out, {{"k", std::to_string(inst.k)},
                    {"width", to_string(inst.width.width)},
                    {"gromov_exact", inst.gromov_exact ? to_string(*inst.gromov_exact) : ""},
                    {"ratio", inst.ratio ? to_string(*inst.ratio) : ""},
                    {"vertices", to_string(inst.polygon)}});
  } else {
    out << j.dump() << "\n";
  }
  return kExitOk;
}

int run_polygon_verb(const Command& cmd, std::ostream& out) {
  const Polygon p = parse_polygon_file(cmd.inputs.at(0));
  const std::string& verb = cmd.verb;

  if (cmd.format == Format::Svg) {
    std::optional<WidthCertificate> cert;
    if (verb == "width" || verb == "bounds") cert = lattice_width(p);
    draw(cmd, p, cert, out);
    return kExitOk;
  }
  const bool tsv = cmd.format == Format::Tsv;

  if (verb == "width") {
    const auto c = lattice_width(p);
    if (tsv) {
      write_tsv(out, {{"width", to_string(c.width)},
                      {"direction", std::to_string(c.direction.a) + "," + std::to_string(c.direction.b)},
                      {"search_bound", std::to_string(c.search_bound)},
                      {"width_approx", approx_string(c.width)}});
    } else {
      out << to_json(c).dump() << "\n";
    }
  } else if (verb == "area") {
    const Rational a = area(p);
    if (tsv) {
      write_tsv(out, {{"area", to_string(a)}, {"degree", to_string(degree(p))},
                      {"area_approx", approx_string(a)}});
    } else {
      out << Json{{"area", to_json(a)}, {"degree", to_json(degree(p))}}.dump() << "\n";
    }
  } else if (verb == "fan") {
    const auto fan = normal_fan(p);
    if (tsv) {
      out << "normal_a\tnormal_b\tsupport\n";
      for (const auto& r : fan.rays) {
        out << r.normal.a << "\t" << r.normal.b << "\t" << to_string(r.support) << "\n";
      }
    } else {
      out << to_json(fan).dump() << "\n";
    }
  } else if (verb == "delzant") {
    const auto d = delzant_check(p);
    if (tsv) {
      out << "vertex\tdeterminant\tsmooth\n";
      for (const auto& c : d.vertices) {
        out << to_string(c.vertex) << "\t" << c.determinant << "\t" << c.smooth() << "\n";
      }
    } else {
      out << to_json(d).dump() << "\n";
    }
  } else if (verb == "equiv-p0") {
    const auto w = equiv_scaled_p0(p);
    Json j{{"equivalent", w.has_value()}, {"witness", w ? to_json(*w) : Json(nullptr)}};
    if (tsv) {
      write_tsv(out, {{"equivalent", w ? "1" : "0"}, {"t", w ? to_string(w->t) : ""}});
    } else {
      out << j.dump() << "\n";
    }
  } else if (verb == "bounds") {
    const auto r = bounds_report(p);
    if (tsv) {
      auto opt = [](const std::optional<Rational>& v) -> std::string { return v ? to_string(*v) : ""; };
      write_tsv(out, {{"width", to_string(r.width.width)},
                      {"area", to_string(r.area)},
                      {"seshadri_lower", to_string(r.seshadri_lower)},
                      {"seshadri_upper", to_string(r.seshadri_upper)},
                      {"seshadri_exact", r.seshadri_exact ? to_string(r.seshadri_exact->value) : ""},
                      {"delzant", r.delzant ? "1" : "0"},
                      {"gromov_lower", opt(r.gromov_lower)},
                      {"gromov_upper", opt(r.gromov_upper)},
                      {"gromov_exact", opt(r.gromov_exact)}});
    } else {
      out << to_json(r).dump() << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

Format default_format() {
  if (const char* env = std::getenv("POLYTORIC_FORMAT")) {
    if (auto it = kFormats.find(env); it != kFormats.end()) return it->second;
  }
  return Format::Json;
}

ParseOutcome parse_command(const std::vector<std::string>& args, std::ostream& out,
                           std::ostream& err) {
  CLI::App app{"Exact lattice-width, toric intersection and Seshadri/Gromov bound toolkit",
               "polytoric"};
  app.require_subcommand(1);

  Command cmd;
  cmd.format = default_format();
  std::string format, out_path, eps;
  std::vector<std::string> inputs;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-f,--format", format, "json, tsv or svg")
        ->check(CLI::IsMember({"json", "tsv", "svg"}));
    sub->add_option("-o,--out", out_path, "SVG output path");
  };
  const std::pair<const char*, const char*> polygon_verbs[] = {
      {"width", "certified lattice width"},
      {"area", "exact area and self-intersection degree"},
      {"fan", "normal fan with support numbers"},
      {"delzant", "per-vertex smoothness check"},
      {"equiv-p0", "test equivalence to a multiple of P_0"},
      {"bounds", "Seshadri and Gromov-width bounds report"}};
  for (const auto& [verb, help] : polygon_verbs) {
    auto* sub = app.add_subcommand(verb, help);
    sub->add_option("polygon", inputs, "polygon JSON file")->required()->expected(1);
    add_common(sub);
  }
  auto* mixed = app.add_subcommand("mixed", "mixed degree of two polygons");
  mixed->add_option("polygons", inputs, "two polygon JSON files")->required()->expected(2);
  add_common(mixed);

  auto* qk_cmd = app.add_subcommand("qk", "the Q_k family member");
  qk_cmd->add_option("--k", cmd.k, "family index")->required()->check(CLI::NonNegativeNumber);
  qk_cmd->add_flag("--verify", cmd.verify, "recompute and cross-check every invariant");
  add_common(qk_cmd);

  auto* ratio = app.add_subcommand("ratio-table", "Gromov width / width ratios of Q_1..Q_kmax");
  ratio->add_option("--kmax", cmd.k_max)->check(CLI::PositiveNumber);
  ratio->add_option("--eps", eps, "report the first k with ratio < 3/4 + eps (p/q)");
  add_common(ratio);

  auto* gap = app.add_subcommand("gap-scan", "volume-gap check over random lattice polygons");
  gap->add_option("--count", cmd.count)->check(CLI::PositiveNumber);
  gap->add_option("--seed", cmd.seed);
  gap->add_option("--box", cmd.box)->check(CLI::PositiveNumber);
  gap->add_option("--points", cmd.points)->check(CLI::Range(3, 1000));
  add_common(gap);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitInput};
  }

  cmd.verb = app.get_subcommands().front()->get_name();
  if (!format.empty()) cmd.format = kFormats.at(format);
  cmd.inputs.assign(inputs.begin(), inputs.end());
  if (!out_path.empty()) cmd.out = out_path;
  if (!eps.empty()) cmd.eps = eps;
  if (cmd.format == Format::Svg && !single_polygon_verb(cmd.verb)) {
    err << "svg output is only available for single-polygon verbs\n";
    return {std::nullopt, kExitInput};
  }
  return {std::move(cmd), kExitOk};
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.inputs.size() != expected_inputs(cmd.verb)) {
      err << cmd.verb << ": expected " << expected_inputs(cmd.verb) << " input file(s)\n";
      return kExitInput;
    }
    if (cmd.verb == "gap-scan") return run_gap_scan(cmd, out);
    if (cmd.verb == "ratio-table") return run_ratio_table(cmd, out);
    if (cmd.verb == "qk") return run_qk(cmd, out);
    if (cmd.verb == "mixed") {
      const Polygon p = parse_polygon_file(cmd.inputs.at(0));
      const Polygon q = parse_polygon_file(cmd.inputs.at(1));
      const Rational m = mixed_degree(p, q);
      if (cmd.format == Format::Tsv) {
        write_tsv(out, {{"mixed_degree", to_string(m)}, {"mixed_degree_approx", approx_string(m)}});
      } else {
        out << Json{{"mixed_degree", to_json(m)}}.dump() << "\n";
      }
      return kExitOk;
    }
    if (single_polygon_verb(cmd.verb)) return run_polygon_verb(cmd, out);
    err << "unknown verb " << cmd.verb << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    err << "parse error";
    if (e.line() > 0) err << " at line " << e.line() << ", column " << e.column();
    err << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_command(args, out, err);
  if (!parsed.command) return parsed.exit_code;
  return run(*parsed.command, out, err);
}

}  // namespace polytoric::cli
