#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xw/conditions.hpp"
#include "xw/enumeration.hpp"
#include "xw/voiding.hpp"

namespace xw::cli {

namespace detail {

inline std::string read_input(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    std::ostringstream os;
    os << stdin_stream.rdbuf();
    return os.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw error(errc::bad_input, "cannot open '" + path + "'");
  std::ostringstream os;
  os << file.rdbuf();
  return os.str();
}

/// Grid inputs may be the '.'/'#' text or the {"n", "voids"} json form.
inline grid load_grid(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
    if (c == '{') return grid_from_json(nlohmann::json::parse(text));
    break;
  }
  return parse_grid(text);
}

inline bit_multigraph load_graph(const std::string& text) {
  return bitgraph_from_json(nlohmann::json::parse(text));
}

inline coord parse_cell(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw error(errc::bad_input, "cell '" + text + "' is not of the form i,j");
  }
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw error(errc::bad_input, "cell '" + text + "' is not of the form i,j");
  }
}

inline std::string describe_answer(const answer& a) {
  std::ostringstream os;
  os << orientation_name(a.dir) << " " << (a.dir == orientation::across ? "row " : "column ")
     << a.line << " length " << a.length() << " from (" << a.coords.front().i << ","
     << a.coords.front().j << ") to (" << a.coords.back().i << "," << a.coords.back().j << ")";
  return os.str();
}

inline bool parse_error_code(errc c) {
  return c == errc::non_square || c == errc::even_side || c == errc::invalid_character ||
         c == errc::bad_input;
}

}  // namespace detail

/// Runs one CLI invocation. Exit codes: 0 success (and valid/pass where the
/// command checks something), 1 failed validation/check or a failed
/// operation, 2 usage or input parse errors.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"crossword grid <-> bit multigraph toolkit"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format;
  std::string stage = "multigraph";
  int n = 2;
  int jobs = 1;
  int limit = default_exhaustive_limit;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> sample;
  bool strip = false;
  std::vector<std::string> cells;

  auto* validate_cmd = app.add_subcommand("validate", "check the five grid structure rules");
  validate_cmd->add_option("input", input, "grid file or - for stdin");
  validate_cmd->add_option("--format", format, "text or json");

  auto* answers_cmd = app.add_subcommand("answers", "list the maximal runs of a grid");
  answers_cmd->add_option("input", input, "grid file or - for stdin");
  answers_cmd->add_option("--format", format, "text or json");

  auto* graph_cmd = app.add_subcommand("graph", "build a graph representation of a grid");
  graph_cmd->add_option("input", input, "grid file or - for stdin");
  graph_cmd->add_option("--stage", stage, "licn, fundamental, multigraph or voided")
      ->check(CLI::IsMember({"licn", "fundamental", "multigraph", "voided"}));
  graph_cmd->add_option("--format", format, "json, dot or text");

  auto* void_cmd = app.add_subcommand("void", "void cells of the all-white template graph");
  void_cmd->add_option("--n", n, "half size of the template")->required();
  void_cmd->add_option("cells", cells, "region cells to void, each as i,j");
  void_cmd->add_option("--format", format, "text, json or dot");

  auto* reconstruct_cmd =
      app.add_subcommand("reconstruct", "rebuild the grid of a bit multigraph");
  reconstruct_cmd->add_option("input", input, "graph json file or - for stdin");
  reconstruct_cmd->add_option("--format", format, "text or json");

  auto* check_cmd = app.add_subcommand("check", "run the 13 necessary-condition checks");
  check_cmd->add_option("input", input, "graph json file or - for stdin");
  check_cmd->add_option("--format", format, "text or json");

  auto* canonical_cmd = app.add_subcommand("canonical", "canonicalize a bit multigraph");
  canonical_cmd->add_option("input", input, "graph json file or - for stdin");
  canonical_cmd->add_flag("--strip-isolated", strip, "drop isolated vertices first");

  auto* count_cmd = app.add_subcommand("count", "count valid grids of a given size");
  count_cmd->add_option("--n", n, "half size")->required();
  count_cmd->add_option("--jobs", jobs, "worker threads");
  count_cmd->add_option("--limit", limit, "exhaustive size limit");
  count_cmd->add_option("--sample", sample, "sample masks instead of enumerating");
  count_cmd->add_option("--seed", seed, "sampling seed");

  auto* experiment_cmd = app.add_subcommand("experiment", "run a validation experiment");
  std::string kind;
  experiment_cmd->add_option("kind", kind, "necessity, sufficiency or roundtrip")
      ->required()
      ->check(CLI::IsMember({"necessity", "sufficiency", "roundtrip"}));
  experiment_cmd->add_option("--n", n, "half size")->required();
  experiment_cmd->add_option("--sample", sample, "sampled valid grids instead of exhaustive");
  experiment_cmd->add_option("--seed", seed, "sampling seed");
  experiment_cmd->add_option("--jobs", jobs, "worker threads");
  experiment_cmd->add_option("--limit", limit, "exhaustive size limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate_cmd) {
      grid g = detail::load_grid(detail::read_input(input, in));
      structure_report rep = validate(g);
      if (format == "json") {
        out << structure_report_to_json(rep).dump(2) << "\n";
      } else {
        auto line = [&](const char* name, const rule_verdict& v) {
          out << "  " << name << ": " << (v.pass ? "pass" : "FAIL");
          if (v.coord_witness) out << "  at (" << v.coord_witness->i << "," << v.coord_witness->j << ")";
          if (v.answer_witness) out << "  " << detail::describe_answer(*v.answer_witness);
          out << "\n";
        };
        line("Connectivity", rep.connectivity);
        line("RotationalSymmetry", rep.rotational_symmetry);
        line("AnswerLength", rep.answer_length);
        line("KeyedSquares", rep.keyed_squares);
        line("FullDimension", rep.full_dimension);
        out << (rep.valid() ? "valid" : "invalid") << "\n";
      }
      return rep.valid() ? 0 : 1;
    }

    if (*answers_cmd) {
      grid g = detail::load_grid(detail::read_input(input, in));
      std::vector<answer> all = answers(g);
      if (format == "json") {
        nlohmann::json ja = nlohmann::json::array();
        for (const answer& a : all) {
          nlohmann::json coords = nlohmann::json::array();
          for (coord c : a.coords) coords.push_back({c.i, c.j});
          ja.push_back({{"orientation", orientation_name(a.dir)},
                        {"line", a.line},
                        {"length", a.length()},
                        {"coords", coords}});
        }
        out << ja.dump(2) << "\n";
      } else {
        for (const answer& a : all) out << detail::describe_answer(a) << "\n";
      }
      return 0;
    }

    if (*graph_cmd) {
      grid g = detail::load_grid(detail::read_input(input, in));
      auto summary = [&](std::size_t across, std::size_t down, std::size_t edges) {
        out << stage << ": " << across << " across vertices, " << down << " down vertices, "
            << edges << " edges\n";
      };
      if (stage == "licn" || stage == "fundamental") {
        licn l = build_licn(g);
        if (stage == "licn") {
          if (format == "dot") out << licn_to_dot(l);
          else if (format == "text") summary(l.across.size(), l.down.size(), l.edges.size());
          else out << licn_to_json(l).dump(2) << "\n";
        } else {
          fundamental_graph f = fundamental(l);
          if (format == "dot") out << fundamental_to_dot(f);
          else if (format == "text") summary(f.across.size(), f.down.size(), f.edges.size());
          else out << fundamental_to_json(f).dump(2) << "\n";
        }
      } else {
        bit_multigraph m = stage == "voided"
                               ? voided_from_grid(g)
                               : crossword_multigraph(fundamental(build_licn(g)));
        if (format == "dot") out << bitgraph_to_dot(m);
        else if (format == "text") summary(m.part_a.size(), m.part_b.size(), m.edges.size());
        else out << bitgraph_to_json(m).dump(2) << "\n";
      }
      return 0;
    }

    if (*void_cmd) {
      bit_multigraph g = unvoided_graph(n);
      std::vector<void_step> steps;
      for (const std::string& cell_text : cells) {
        coord c = detail::parse_cell(cell_text);
        void_step step;
        g = void_edge(g, edge_for_cell(g, c), &step);
        steps.push_back(std::move(step));
      }
      if (format == "json") {
        nlohmann::json js = nlohmann::json::array();
        for (const void_step& s : steps) js.push_back(void_step_to_json(s));
        out << nlohmann::json{{"steps", js}, {"graph", bitgraph_to_json(g)}}.dump(2) << "\n";
      } else if (format == "dot") {
        out << bitgraph_to_dot(g);
      } else {
        for (const void_step& s : steps) out << format_void_step(s);
        out << bitgraph_to_json(g).dump(2) << "\n";
      }
      return 0;
    }

    if (*reconstruct_cmd) {
      bit_multigraph g = detail::load_graph(detail::read_input(input, in));
      grid back = reconstruct_grid(g);
      if (format == "json") out << grid_to_json(back).dump(2) << "\n";
      else out << serialize_grid(back);
      return 0;
    }

    if (*check_cmd) {
      bit_multigraph g = detail::load_graph(detail::read_input(input, in));
      condition_report rep = check_all(g);
      if (format == "json") out << condition_report_to_json(rep).dump(2) << "\n";
      else out << condition_report_to_text(rep);
      return rep.overall() ? 0 : 1;
    }

    if (*canonical_cmd) {
      bit_multigraph g = detail::load_graph(detail::read_input(input, in));
      if (strip) g = strip_isolated(g);
      out << bitgraph_to_json(canonicalize(g)).dump(2) << "\n";
      return 0;
    }

    if (*count_cmd) {
      if (sample) {
        std::uint64_t hits = count_valid_sampled(n, *sample, seed);
        out << nlohmann::json{{"n", n}, {"sample", *sample}, {"seed", seed}, {"valid_in_sample", hits}}
                   .dump(2)
            << "\n";
      } else {
        std::uint64_t count = count_valid_grids(n, jobs, limit);
        out << nlohmann::json{{"n", n},
                              {"masks", 1ULL << region_bit_count(n)},
                              {"valid_grids", count}}
                   .dump(2)
            << "\n";
      }
      return 0;
    }

    if (*experiment_cmd) {
      auto summarize = [&](const experiment_result& res) {
        err << kind << " n=" << res.n << ": examined " << res.total_examined << ", valid "
            << res.valid_grids << ", condition pass " << res.condition_pass << ", mismatches "
            << res.mismatches.size() << " (" << res.elapsed_seconds << " s)\n";
      };
      if (kind == "roundtrip") {
        roundtrip_report rep = reconstruct_roundtrip_experiment(n, sample, seed, limit);
        out << roundtrip_report_to_json(rep).dump(2) << "\n";
        err << "roundtrip n=" << rep.n << ": examined " << rep.examined << ", failures "
            << rep.failures.size() << " (" << rep.elapsed_seconds << " s)\n";
        return rep.failures.empty() ? 0 : 1;
      }
      if (kind == "necessity") {
        experiment_result res = necessity_experiment(n, sample, seed, jobs, limit);
        out << experiment_result_to_json(res).dump(2) << "\n";
        summarize(res);
        return res.mismatches.empty() ? 0 : 1;
      }
      experiment_result res = sufficiency_experiment(n, jobs, limit);
      out << experiment_result_to_json(res).dump(2) << "\n";
      summarize(res);
      for (const experiment_mismatch& m : res.mismatches) {
        if (m.structure.valid() && !m.conditions.overall()) return 1;
        if (!m.pipelines_equivalent) return 1;
      }
      return 0;
    }
  } catch (const error& e) {
    err << e.what() << "\n";
    return detail::parse_error_code(e.code()) ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    err << "json: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace xw::cli
