#pragma once

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linstrand/clutter.hpp"
#include "linstrand/error.hpp"
#include "linstrand/hochster.hpp"
#include "linstrand/ideal.hpp"
#include "linstrand/instance_io.hpp"
#include "linstrand/linalg.hpp"
#include "linstrand/linearity.hpp"
#include "linstrand/lyubeznik.hpp"
#include "linstrand/strand.hpp"
#include "linstrand/verify.hpp"

namespace linstrand::cli {

enum ExitCode : int {
  kOk = 0,
  kConsistencyFailure = 1,
  kParseError = 2,
  kGuardViolation = 3,
};

struct Options {
  std::string command;
  std::string input;
  std::string field = "q";
  std::string format = "text";
  std::size_t max_vertices = kEnumerationGuard;
  std::optional<std::size_t> degree_cap;
  bool matrices = false;
  bool cross_check = false;
};

namespace detail {

using nlohmann::json;

inline json names_list(const VertexTable& t, const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (VertexSet s : sets) out.push_back(t.names(s));
  return out;
}

inline std::string monomial(const VertexTable& t, VertexSet s) {
  if (s.empty()) return "1";
  std::string out;
  for (VertexId v : s) {
    if (!out.empty()) out += '*';
    out += t.name(v);
  }
  return out;
}

inline std::string join(const std::vector<std::size_t>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(xs[k]);
  }
  return out;
}

// Strand commands accept unpartitioned ideals by discovering an admissible
// sequence and reducing to C|_W.
inline Clutter partitioned_or_reduced(const Clutter& c) {
  if (c.has_partition()) return c;
  const SquarefreeIdeal ideal(c.table(), c.edges());
  auto seq = find_admissible_sequence(ideal);
  if (!seq) throw InvalidInput("no admissible regular sequence exists for this ideal");
  return reduce_to_w(ideal, *seq);
}

inline std::string betti_diagram(const BettiTable& table) {
  int max_i = table.projective_dimension();
  if (max_i < 0) return "(zero ideal)\n";
  int min_row = 1 << 20;
  int max_row = -(1 << 20);
  for (const auto& [key, v] : table.graded_entries()) {
    min_row = std::min(min_row, key.second - key.first);
    max_row = std::max(max_row, key.second - key.first);
  }
  std::ostringstream os;
  os << std::setw(6) << "";
  for (int i = 0; i <= max_i; ++i) os << std::setw(6) << i;
  os << '\n';
  for (int r = min_row; r <= max_row; ++r) {
    os << std::setw(5) << r << ':';
    for (int i = 0; i <= max_i; ++i) {
      const std::size_t v = table.graded(i, i + r);
      os << std::setw(6) << (v == 0 ? std::string(".") : std::to_string(v));
    }
    os << '\n';
  }
  return os.str();
}

inline json certificate_json(const VertexTable& t, const LinearityCertificate& cert) {
  return json{{"edges", names_list(t, {cert.first_edge, cert.second_edge})},
              {"parts", cert.parts},
              {"side", to_string(cert.side)},
              {"projected_edges", names_list(t, cert.projected_edges)}};
}

}  // namespace detail

// Runs one command; returns the exit code and writes the result to `out`
// in one piece.
inline int run(const Options& opt, std::ostream& out, std::ostream& err) {
  using detail::json;
  const bool as_json = opt.format == "json";
  std::ostringstream text;
  json payload = json::object();
  payload["command"] = opt.command;

  try {
    const Field field = Field::parse(opt.field);
    const Clutter instance = read_instance_file(opt.input);
    if (instance.num_vertices() > opt.max_vertices) {
      throw GuardError("instance has " + std::to_string(instance.num_vertices()) +
                       " vertices, limit is " + std::to_string(opt.max_vertices));
    }
    const VertexTable& table = instance.table();
    int code = kOk;

    if (opt.command == "dual") {
      const SquarefreeIdeal dual = alexander_dual(SquarefreeIdeal(table, instance.edges()));
      payload["generators"] = detail::names_list(table, dual.generators());
      for (VertexSet g : dual.generators()) text << detail::monomial(table, g) << '\n';
    } else if (opt.command == "complement") {
      const Clutter comp = d_partite_complement(instance);
      payload["instance"] = serialize_instance(comp);
      for (VertexSet e : comp.edges()) text << detail::monomial(table, e) << '\n';
    } else if (opt.command == "covers") {
      const auto covers = minimal_vertex_covers(instance);
      payload["covers"] = detail::names_list(table, covers);
      for (VertexSet c : covers) text << detail::monomial(table, c) << '\n';
    } else if (opt.command == "betti") {
      const BettiTable betti =
          betti_table(SquarefreeIdeal(table, instance.edges()), field, opt.degree_cap, opt.max_vertices);
      json graded = json::array();
      for (const auto& [key, v] : betti.graded_entries()) {
        graded.push_back({{"i", key.first}, {"j", key.second}, {"value", v}});
      }
      json multi = json::array();
      for (const auto& [key, v] : betti.multigraded_entries()) {
        multi.push_back({{"i", key.first}, {"support", table.names(key.second)}, {"value", v}});
      }
      payload["betti"] = {{"graded", graded}, {"multigraded", multi}};
      payload["field"] = field.to_string();
      text << detail::betti_diagram(betti);
    } else if (opt.command == "strand") {
      const Clutter c = detail::partitioned_or_reduced(instance);
      const StrandComplex strand = first_linear_strand(c);
      if (!strand.skeleton_complex().squares_to_zero()) {
        throw ConsistencyError("strand differential does not square to zero");
      }
      payload["ranks"] = strand.ranks();
      payload["d"] = strand.d();
      payload["n"] = strand.n();
      text << "ranks: " << detail::join(strand.ranks()) << '\n';
      if (opt.matrices) {
        json levels = json::array();
        json maps = json::array();
        for (std::size_t i = 0; i < strand.num_levels(); ++i) {
          levels.push_back(detail::names_list(strand.table(), strand.level(i)));
          text << "F_" << i << ":";
          for (VertexSet a : strand.level(i)) text << ' ' << strand.table().format(a);
          text << '\n';
        }
        for (std::size_t i = 1; i < strand.num_levels(); ++i) {
          json entries = json::array();
          text << "d_" << i << ":\n";
          for (const StrandEntry& e : strand.differential(i)) {
            entries.push_back({{"row", e.target},
                               {"col", e.source},
                               {"sign", e.sign},
                               {"multiplier", strand.table().name(e.multiplier)}});
            text << "  " << strand.table().format(strand.level(i)[e.source]) << " -> "
                 << (e.sign > 0 ? "+" : "-") << strand.table().name(e.multiplier) << " * "
                 << strand.table().format(strand.level(i - 1)[e.target]) << '\n';
          }
          maps.push_back({{"level", i}, {"entries", entries}});
        }
        payload["levels"] = levels;
        payload["differentials"] = maps;
      }
    } else if (opt.command == "lyubeznik") {
      const LyubeznikColumn column = lyubeznik_last_column(instance, field);
      payload["lyubeznik_column"] = column.values;
      payload["n"] = column.n;
      payload["d"] = column.d;
      payload["field"] = field.to_string();
      text << "lambda_{p," << column.last_index() << "}, p = 0.." << column.last_index() << ": "
           << detail::join(column.values) << '\n';
      if (opt.cross_check) {
        const BettiCrossCheck check = cross_check_betti(instance, field);
        json rows = json::array();
        for (const auto& r : check.rows) {
          rows.push_back({{"p", r.p}, {"lyubeznik", r.lyubeznik}, {"betti", r.betti}, {"agrees", r.agrees()}});
          text << "  p=" << r.p << "  lambda=" << r.lyubeznik << "  beta_{p-1,1}(I(C^c))=" << r.betti
               << (r.agrees() ? "" : "  MISMATCH") << '\n';
        }
        payload["cross_check"] = rows;
        if (!check.all_agree()) code = kConsistencyFailure;
      }
    } else if (opt.command == "linear") {
      const LinearityVerdict verdict = is_linear(instance);
      payload["verdict"] = verdict.linear ? "linear" : "not_linear";
      payload["certificate"] =
          verdict.certificate ? detail::certificate_json(table, *verdict.certificate) : json(nullptr);
      text << (verdict.linear ? "linear" : "not linear") << '\n';
      if (verdict.certificate) {
        const auto& cert = *verdict.certificate;
        text << "  edges " << table.format(cert.first_edge) << ", " << table.format(cert.second_edge)
             << "; parts {" << detail::join(cert.parts, ",") << "}; side " << to_string(cert.side)
             << "; projection " << table.format(cert.projected_edges[0]) << " | "
             << table.format(cert.projected_edges[1]) << '\n';
      }
    } else if (opt.command == "verify") {
      const VerificationReport report = verify_instance(instance, field);
      json checks = json::array();
      for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        text << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
      }
      payload["checks"] = checks;
      payload["passed"] = report.passed();
      if (!report.passed()) code = kConsistencyFailure;
    } else {
      throw InvalidInput("unknown command '" + opt.command + "'");
    }

    out << (as_json ? payload.dump(2) + "\n" : text.str());
    return code;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kGuardViolation;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kConsistencyFailure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"First linear strands, Lyubeznik columns and linearity of d-partite edge ideals"};
  app.require_subcommand(1);
  Options opt;

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"dual", "Alexander dual of the edge ideal"},
      {"complement", "d-partite complement"},
      {"covers", "minimal vertex covers"},
      {"betti", "Betti numbers by Hochster's formula"},
      {"strand", "first linear strand ranks (and matrices with --matrices)"},
      {"lyubeznik", "last column of the Lyubeznik table of the cover ideal"},
      {"linear", "linear-resolution test by ranked projections"},
      {"verify", "run every cross-check on the instance"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", opt.input, "instance JSON file")->required();
    sub->add_option("--field", opt.field, "coefficient field: q or fp:<prime>");
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-vertices", opt.max_vertices, "vertex limit for exhaustive enumeration");
    if (std::string(name) == "betti") {
      sub->add_option("--degree-cap", opt.degree_cap, "only multidegrees of total degree <= cap");
    }
    if (std::string(name) == "strand") {
      sub->add_flag("--matrices", opt.matrices, "also print bases and differentials");
    }
    if (std::string(name) == "lyubeznik") {
      sub->add_flag("--cross-check", opt.cross_check, "compare with Betti numbers of I(C^c)");
    }
    sub->callback([&opt, sub] { opt.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return kParseError;
  }
  return run(opt, out, err);
}

}  // namespace linstrand::cli
