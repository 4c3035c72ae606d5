#pragma once

#include <CLI11.hpp>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gmk/braid.hpp"
#include "gmk/canonical.hpp"
#include "gmk/error.hpp"
#include "gmk/gauss_code.hpp"
#include "gmk/json_io.hpp"
#include "gmk/meander.hpp"
#include "gmk/meander_builder.hpp"
#include "gmk/meander_matrix.hpp"
#include "gmk/realizability.hpp"
#include "gmk/svg.hpp"

// Command-line front end. run() never touches std::cout / std::cerr directly
// so tests can drive it with string streams.
//
// Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage or
// input error.

namespace gmk::cli {

inline constexpr int exit_true = 0;
inline constexpr int exit_false = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw error(errc::parse_error, "expected a comma-separated list of integers, got \"" + text + "\"");
    }
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
    if (used != token.size()) throw error(errc::parse_error, "bad integer \"" + token + "\"");
    out.push_back(v);
  }
  return out;
}

inline void write_or_print(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error(errc::parse_error, "cannot write " + path);
  f << text;
}

inline std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

inline std::string describe(const realizability_report& r) {
  std::string s = to_string(r.result);
  if (r.witness) s += " (witness: " + r.witness->describe() + ")";
  if (r.via == method::oracle && r.genus) s += " (genus " + std::to_string(*r.genus) + ")";
  return s;
}

inline json meander_json(const meander_record& r, bool with_orbit) {
  json j = r;
  if (with_orbit) {
    const auto o = orbit_of(j.at("visitation").get<std::vector<int>>());
    j["orbit"] = json{{"size", o.size}, {"duals", o.duals}};
  }
  return j;
}

inline meander_record record_of(const meander_reconstruction& rec) {
  return {encode_meander(rec), std::vector<std::size_t>(rec.visitation.begin(), rec.visitation.end())};
}

}  // namespace detail

/// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gauss diagram realizability and meander matrices", "gmk"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print machine-readable records instead of text");
  app.set_help_all_flag("--help-all", "Expand all help");

  int status = exit_true;

  // check
  auto* check = app.add_subcommand("check", "Decide whether a Gauss code is realizable by a planar curve");
  std::string check_code;
  std::string check_method = "thm34";
  bool check_strict = false;
  check->add_option("code", check_code, "Gauss code: \"abcabc\" or \"1 2 1 2\"")->required();
  check->add_option("--method", check_method, "Decision procedure")->check(CLI::IsMember({"thm34", "oracle", "both"}));
  check->add_flag("--strict", check_strict, "Reject chords that interlace nothing instead of deleting them");
  check->add_flag("--json", as_json, "Print a JSON record");

  // audit
  auto* audit = app.add_subcommand("audit", "Compare the smoothing criterion with the genus oracle exhaustively");
  std::size_t audit_min = 2, audit_max = 6;
  bool audit_all = false;
  audit->add_option("--max-n", audit_max, "Largest chord count")->required();
  audit->add_option("--min-n", audit_min, "Smallest chord count");
  audit->add_flag("--include-isolated", audit_all, "Also audit words with a chord that interlaces nothing");
  audit->add_flag("--json", as_json, "Emit JSONL disagreement records");

  // smooth
  auto* smooth = app.add_subcommand("smooth", "Smooth one chord of a Gauss code");
  std::string smooth_code, smooth_label;
  smooth->add_option("code", smooth_code, "Gauss code")->required();
  smooth->add_option("label", smooth_label, "Chord label")->required();
  smooth->add_flag("--json", as_json, "Print a JSON record");

  // matrix
  auto* matrix = app.add_subcommand("matrix", "Interlacement matrix of a Gauss code and its parity conditions");
  std::string matrix_code;
  matrix->add_option("code", matrix_code, "Gauss code")->required();
  matrix->add_flag("--json", as_json, "Print {\"size\", \"rows\"}");

  // braid
  auto* braid = app.add_subcommand("braid", "Inversion set and positive braid word of a permutation");
  std::string braid_pi;
  braid->add_option("permutation", braid_pi, "Images pi(1),...,pi(n) as a comma list")->required();
  braid->add_flag("--json", as_json, "Print a JSON record");

  // is-meander-matrix
  auto* is_mm = app.add_subcommand("is-meander-matrix", "Test a matrix file against the meander-matrix conditions");
  std::string is_mm_file;
  is_mm->add_option("file", is_mm_file, "JSON matrix file")->required();
  is_mm->add_flag("--json", as_json, "Print a JSON record");

  // meanders
  auto* meanders = app.add_subcommand("meanders", "Enumerate meander matrices with N points on the line");
  std::size_t meanders_n = 0;
  bool meanders_count = false, meanders_oracle = false, meanders_canonical = false;
  std::string meanders_prefix;
  meanders->add_option("N", meanders_n, "Number of points (even)")->required();
  meanders->add_flag("--count-only", meanders_count, "Print only the number of matrices");
  meanders->add_flag("--oracle", meanders_oracle, "Enumerate by brute force over visitation orders instead");
  meanders->add_option("--prefix", meanders_prefix, "Force the first visited points, e.g. 5,2,3");
  meanders->add_flag("--canonical", meanders_canonical,
                     "Keep one record per reversal/reflection orbit and list its even-start duals");
  meanders->add_flag("--json", as_json, "Records are always JSONL; accepted for uniformity");

  // reconstruct
  auto* reconstruct = app.add_subcommand("reconstruct", "Recover the meander encoded by a meander matrix");
  std::string reconstruct_file;
  reconstruct->add_option("file", reconstruct_file, "JSON matrix file")->required();
  reconstruct->add_flag("--json", as_json, "The output is a JSON record either way");

  // render
  auto* render = app.add_subcommand("render", "Draw a chord diagram or a meander as SVG");
  render->require_subcommand(1);
  render_spec spec;
  std::string render_out;
  const auto add_geometry = [&](CLI::App* sub) {
    sub->add_option("-o,--output", render_out, "Write the SVG here instead of standard output");
    sub->add_option("--width", spec.width, "Canvas width");
    sub->add_option("--height", spec.height, "Canvas height");
    sub->add_option("--margin", spec.margin, "Canvas margin");
    sub->add_option("--stroke", spec.stroke, "Stroke width");
    sub->add_option("--arc-samples", spec.arc_samples, "Polyline segments per arc (0 = exact arcs)");
  };
  auto* render_chord = render->add_subcommand("chord", "Chord diagram of a Gauss code");
  std::string render_code;
  render_chord->add_option("code", render_code, "Gauss code")->required();
  add_geometry(render_chord);
  auto* render_meander_cmd = render->add_subcommand("meander", "Meander from a matrix, record or visitation");
  std::string render_file, render_visitation;
  render_meander_cmd->add_option("file", render_file, "JSON matrix or meander record");
  render_meander_cmd->add_option("--visitation", render_visitation, "Visitation order, e.g. 3,4,5,2,1,6");
  add_geometry(render_meander_cmd);

  check->callback([&] {
    const auto code = parse_gauss_code(check_code);
    const chord_diagram d(code);
    check_record rec{code, {}};
    if (check_method != "oracle") rec.reports.push_back(theorem34_realizable(d, {check_strict}));
    if (check_method != "thm34") rec.reports.push_back(oracle_report(code));
    bool all = true;
    for (const auto& r : rec.reports) all = all && r.realizable();
    if (as_json) {
      out << json(rec).dump() << '\n';
    } else if (rec.reports.size() == 1) {
      out << detail::describe(rec.reports.front()) << '\n';
    } else {
      for (const auto& r : rec.reports) out << to_string(r.via) << ": " << detail::describe(r) << '\n';
    }
    status = all ? exit_true : exit_false;
  });

  audit->callback([&] {
    if (audit_min > audit_max) throw error(errc::invalid_n, "--min-n exceeds --max-n");
    std::size_t checked = 0, disagreements = 0;
    for (std::size_t n = audit_min; n <= audit_max; ++n) {
      enumerate_codes(n, !audit_all, [&](const canonical_form& f) {
        const auto code = f.to_code();
        const bool thm = theorem34_realizable(chord_diagram(code)).realizable();
        const bool orc = oracle_realizable(code).realizable;
        ++checked;
        if (thm == orc) return;
        ++disagreements;
        const audit_record a{f.to_string(), thm, orc};
        if (as_json) {
          out << json(a).dump() << '\n';
        } else {
          out << a.code << ": thm34 " << (thm ? "realizable" : "not-realizable") << ", oracle "
              << (orc ? "realizable" : "not-realizable") << '\n';
        }
      });
    }
    if (!as_json) out << checked << " codes checked, " << disagreements << " disagreements\n";
    status = disagreements == 0 ? exit_true : exit_false;
  });

  smooth->callback([&] {
    const auto code = parse_gauss_code(smooth_code);
    const chord_diagram d(code);
    const auto smoothed = smooth_word(code, d.require_chord(smooth_label));
    const auto canon = canonicalize(smoothed);
    if (as_json) {
      out << json{{"code", code}, {"chord", smooth_label}, {"smoothed", smoothed}, {"canonical", canon.to_string()}}
                 .dump()
          << '\n';
    } else {
      out << smoothed.to_string() << " (canonical " << canon.to_string() << ")\n";
    }
  });

  matrix->callback([&] {
    const auto code = parse_gauss_code(matrix_code);
    const auto m = chord_diagram(code).interlacement();
    if (as_json) {
      out << json(m).dump() << '\n';
      return;
    }
    out << m.to_string();
    const auto report = matrix_conditions(m);
    for (int k = 1; k <= 3; ++k)
      out << "condition (" << k << "): " << (report.satisfies(k) ? "holds" : "fails") << '\n';
  });

  braid->callback([&] {
    const auto rec = braid_record::of(permutation(detail::parse_int_list(braid_pi)));
    if (as_json) {
      out << json(rec).dump() << '\n';
      return;
    }
    out << "R = {";
    bool first = true;
    for (auto [i, j] : rec.inversions.pairs) {
      out << (first ? "" : ", ") << '(' << i << ',' << j << ')';
      first = false;
    }
    out << "}\nword =";
    if (rec.word.generators.empty()) out << " (empty)";
    for (int g : rec.word.generators) out << " s" << g;
    out << '\n';
  });

  is_mm->callback([&] {
    const auto m = matrix_from_json(parse_json(detail::read_file(is_mm_file)));
    const auto v = is_meander_matrix(m);
    if (as_json) {
      out << json{{"definition", v.definition}, {"characterization", v.characterization}, {"violations", v.violations}}
                 .dump()
          << '\n';
    } else if (v.is_meander()) {
      out << "meander matrix\n";
    } else {
      out << "not a meander matrix: " << v.violations.front() << '\n';
    }
    status = v.is_meander() ? exit_true : exit_false;
  });

  meanders->callback([&] {
    std::vector<std::size_t> prefix;
    if (!meanders_prefix.empty()) {
      for (int p : detail::parse_int_list(meanders_prefix)) {
        if (p < 1) throw error(errc::index_out_of_range, "prefix entries are points 1..N");
        prefix.push_back(static_cast<std::size_t>(p));
      }
    }
    std::size_t count = 0;
    const auto emit = [&](const meander_record& r) {
      if (meanders_canonical) {
        const std::vector<int> w(r.visitation.begin(), r.visitation.end());
        if (orbit_of(w).representative != w) return;
      }
      ++count;
      if (!meanders_count) out << detail::meander_json(r, meanders_canonical).dump() << '\n';
    };
    if (meanders_oracle) {
      oracle_enumerate_meanders(meanders_n, [&](const meander_reconstruction& rec) {
        if (prefix.size() > rec.visitation.size()) return;
        for (std::size_t k = 0; k < prefix.size(); ++k)
          if (static_cast<std::size_t>(rec.visitation[k]) != prefix[k]) return;
        emit(detail::record_of(rec));
      });
    } else {
      if (prefix.size() > meanders_n) throw error(errc::index_out_of_range, "prefix is longer than N");
      enumerate_meander_matrices(meanders_n, prefix, emit);
    }
    if (meanders_count) out << count << '\n';
  });

  reconstruct->callback([&] {
    const auto m = matrix_from_json(parse_json(detail::read_file(reconstruct_file)));
    out << json(reconstruct_meander(m)).dump() << '\n';
  });

  render_chord->callback(
      [&] { detail::write_or_print(render_chord_diagram(parse_gauss_code(render_code), spec), render_out, out); });

  render_meander_cmd->callback([&] {
    if (render_file.empty() == render_visitation.empty())
      throw CLI::ValidationError("render meander", "give exactly one of a file or --visitation");
    meander_reconstruction rec;
    if (!render_visitation.empty()) {
      rec = reconstruction_from_visitation(detail::parse_int_list(render_visitation));
    } else {
      const auto j = parse_json(detail::read_file(render_file));
      rec = j.is_object() && j.contains("visitation") ? j.get<meander_reconstruction>()
                                                      : reconstruct_meander(matrix_from_json(j));
    }
    const auto problems = meander_problems(rec);
    if (!problems.empty()) throw error(errc::reconstruction_inconsistent, problems.front());
    detail::write_or_print(render_meander(rec, spec), render_out, out);
  });

  std::vector<std::string> argv_storage{"gmk"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "gmk: " << e.what() << " (run 'gmk --help' for usage)\n";
    return exit_usage;
  } catch (const error& e) {
    err << "gmk: " << e.what() << '\n';
    return exit_usage;
  } catch (const nlohmann::json::exception& e) {
    err << "gmk: ParseError: " << e.what() << '\n';
    return exit_usage;
  }
  return status;
}

}  // namespace gmk::cli
