// perctool: formulas, simulations, constructions, certificates and searches
// for r-edge / r-neighbor bootstrap percolation on Hamming graphs.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <tuple>

#include "perc/certifier.hpp"
#include "perc/constructions.hpp"
#include "perc/formulas.hpp"
#include "perc/graph.hpp"
#include "perc/percolation.hpp"
#include "perc/search.hpp"

namespace {

constexpr const char* kToolVersion = "perctool 1.0";

// exit codes: 0 success/percolated, 1 negative result, 2 usage, 3 budget
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Range {
  long lo = 0;
  long hi = 0;
};

Range parse_range(const std::string& s) {
  Range r;
  auto pos = s.find("..");
  try {
    if (pos == std::string::npos) {
      r.lo = r.hi = std::stol(s);
    } else {
      r.lo = std::stol(s.substr(0, pos));
      r.hi = std::stol(s.substr(pos + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected an integer or a..b range: " + s);
  }
  if (r.lo > r.hi) throw CLI::ValidationError("empty range: " + s);
  return r;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

struct TableRow {
  long n, d, r;
  std::string me_nested, me_recur, me_an, closed_low, closed_top, me_k2;
  bool agree = true;
};

TableRow evaluate_point(long n, long d, long r) {
  TableRow row{n, d, r, "", "", "", "", "", "", true};
  perc::BigCount nested = perc::me_nested_sum(n, d, r);
  perc::BigCount recur = perc::me_recurrence(n, d, r);
  perc::BigCount via_an = perc::me_via_an(n, d, r);
  row.me_nested = nested.get_str();
  row.me_recur = recur.get_str();
  row.me_an = via_an.get_str();
  row.agree = (nested == recur) && (nested == via_an);
  if (r <= n - 1) {
    perc::BigCount low = perc::me_closed_low(n, d, r);
    row.closed_low = low.get_str();
    row.agree = row.agree && (low == nested);
  }
  if (r >= (n - 1) * (d - 1)) {
    perc::BigCount top = perc::me_closed_top(n, d, r);
    row.closed_top = top.get_str();
    row.agree = row.agree && (top == nested);
  }
  if (n == 2) {
    perc::BigCount k2 = perc::me_k2(d, r);
    row.me_k2 = k2.get_str();
    row.agree = row.agree && (k2 == nested);
  }
  return row;
}

void write_table_csv(const std::vector<TableRow>& rows, std::ostream& out,
                     const std::string& config) {
  out << "# " << kToolVersion << " " << config << "\n";
  out << "n,d,r,me_nested,me_recur,me_an,closed_low,closed_top,me_k2,agree\n";
  for (const auto& row : rows) {
    out << row.n << "," << row.d << "," << row.r << "," << row.me_nested << ","
        << row.me_recur << "," << row.me_an << "," << row.closed_low << ","
        << row.closed_top << "," << row.me_k2 << ","
        << (row.agree ? "true" : "false") << "\n";
  }
}

void write_table_json(const std::vector<TableRow>& rows, std::ostream& out,
                      const std::string& config) {
  nlohmann::json j;
  j["tool"] = kToolVersion;
  j["config"] = config;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    j["rows"].push_back({{"n", row.n},
                         {"d", row.d},
                         {"r", row.r},
                         {"me_nested", row.me_nested},
                         {"me_recur", row.me_recur},
                         {"me_an", row.me_an},
                         {"closed_low", row.closed_low},
                         {"closed_top", row.closed_top},
                         {"me_k2", row.me_k2},
                         {"agree", row.agree}});
  }
  out << j.dump(2) << "\n";
}

// Minimal SVG: one m_e-vs-r polyline per (n, d).
void write_table_svg(const std::vector<TableRow>& rows, std::ostream& out) {
  const double width = 640, height = 480, margin = 50;
  double max_r = 1, max_me = 1;
  for (const auto& row : rows) {
    max_r = std::max(max_r, static_cast<double>(row.r));
    max_me = std::max(max_me, std::stod(row.me_nested));
  }
  auto x_of = [&](double r) { return margin + r / max_r * (width - 2 * margin); };
  auto y_of = [&](double v) {
    return height - margin - v / max_me * (height - 2 * margin);
  };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
      << width - margin << "\" y2=\"" << height - margin
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
      << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
  const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                           "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  std::map<std::pair<long, long>, std::vector<const TableRow*>> curves;
  for (const auto& row : rows) curves[{row.n, row.d}].push_back(&row);
  int color_idx = 0;
  for (auto& [key, pts] : curves) {
    std::sort(pts.begin(), pts.end(),
              [](const TableRow* a, const TableRow* b) { return a->r < b->r; });
    out << "<polyline fill=\"none\" stroke=\""
        << palette[color_idx % 8] << "\" points=\"";
    for (const auto* p : pts) {
      out << x_of(p->r) << "," << y_of(std::stod(p->me_nested)) << " ";
    }
    out << "\"/>\n";
    out << "<text x=\"" << width - margin + 4 << "\" y=\""
        << margin + 16 * color_idx << "\" font-size=\"12\" fill=\""
        << palette[color_idx % 8] << "\">K_" << key.first << "^" << key.second
        << "</text>\n";
    ++color_idx;
  }
  out << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
      << "\" font-size=\"12\">r</text>\n";
  out << "<text x=\"8\" y=\"" << height / 2 << "\" font-size=\"12\">m_e</text>\n";
  out << "</svg>\n";
}

std::vector<TableRow> evaluate_grid(const Range& nr, const Range& dr,
                                    const Range& rr, bool clamp_r_to_valid) {
  std::vector<std::tuple<long, long, long>> points;
  for (long n = nr.lo; n <= nr.hi; ++n) {
    for (long d = dr.lo; d <= dr.hi; ++d) {
      long r_hi = clamp_r_to_valid ? std::min(rr.hi, (n - 1) * d) : rr.hi;
      for (long r = rr.lo; r <= r_hi; ++r) points.emplace_back(n, d, r);
    }
  }
  std::vector<TableRow> rows(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i) {
    auto [n, d, r] = points[i];
    if (r <= (n - 1) * d) {
      rows[i] = evaluate_point(n, d, r);
    } else {
      // past the max degree every edge is needed
      rows[i] = TableRow{n, d, r, "", "", "", "", "", "", true};
      rows[i].me_nested = perc::hamming_edge_count(n, d).get_str();
      rows[i].me_recur = perc::me_recurrence(n, d, r).get_str();
      rows[i].agree = rows[i].me_nested == rows[i].me_recur;
    }
  }
  return rows;
}

perc::GenericGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return perc::read_edge_list(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bootstrap percolation on Hamming graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string n_spec = "2", d_spec = "1", r_spec = "0";
  std::string mode_str = "edge";
  std::string format = "csv";
  std::string out_path, svg_path, seed_file, graph_file;
  std::uint64_t budget_nodes = 50'000'000;
  double budget_seconds = 600.0;

  auto add_grid_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n", n_spec, "alphabet size, value or a..b");
    cmd->add_option("--d", d_spec, "dimension, value or a..b");
    cmd->add_option("--r", r_spec, "threshold, value or a..b");
  };

  auto* formula = app.add_subcommand("formula", "evaluate m_e formulas on a grid");
  add_grid_flags(formula);
  formula->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  formula->add_option("--out", out_path);

  auto* table = app.add_subcommand("table", "emit the full cross-check table");
  add_grid_flags(table);
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path);
  table->add_option("--svg", svg_path, "also render m_e vs r curves as SVG");

  auto* simulate = app.add_subcommand("simulate", "run a percolation process");
  simulate->add_option("--seed-file", seed_file, "seed JSON (as exported by construct)")
      ->required();
  simulate->add_option("--graph", graph_file, "edge-list graph file (overrides n,d)");
  simulate->add_option("--r", r_spec, "threshold override");
  simulate->add_option("--mode", mode_str)->check(CLI::IsMember({"edge", "vertex"}));
  simulate->add_option("--out", out_path);

  auto* construct = app.add_subcommand("construct", "build a percolating seed");
  add_grid_flags(construct);
  construct->add_option("--mode", mode_str)->check(CLI::IsMember({"edge", "vertex"}));
  construct->add_option("--out", out_path);

  auto* certify = app.add_subcommand("certify", "algebraic lower-bound certificate");
  add_grid_flags(certify);
  certify->add_option("--out", out_path);

  auto* search = app.add_subcommand("search", "exact minimum percolating set");
  add_grid_flags(search);
  bool edge_flag = false, vertex_flag = false;
  search->add_flag("--edge", edge_flag, "edge mode");
  search->add_flag("--vertex", vertex_flag, "vertex mode");
  search->add_option("--mode", mode_str)->check(CLI::IsMember({"edge", "vertex"}));
  search->add_option("--graph", graph_file, "edge-list graph file (overrides n,d)");
  search->add_option("--budget-nodes", budget_nodes);
  search->add_option("--budget-seconds", budget_seconds);
  search->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify-identities",
                                    "check the binomial identities on their grids");
  verify->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    std::ofstream file;

    if (formula->parsed() || table->parsed()) {
      Range nr = parse_range(n_spec), dr = parse_range(d_spec), rr = parse_range(r_spec);
      if (nr.lo < 2 || dr.lo < 0 || rr.lo < 0) {
        std::cerr << "invalid grid: need n >= 2, d >= 0, r >= 0\n";
        return kExitUsage;
      }
      auto rows = evaluate_grid(nr, dr, rr, false);
      std::ostringstream config;
      config << "formula n=" << n_spec << " d=" << d_spec << " r=" << r_spec;
      std::ostream& out = open_output(file, out_path);
      if (format == "json") {
        write_table_json(rows, out, config.str());
      } else {
        write_table_csv(rows, out, config.str());
      }
      for (const auto& row : rows) {
        if (row.r > (row.n - 1) * row.d) {
          std::cerr << "note: (" << row.n << "," << row.d << "," << row.r
                    << "): r exceeds (n-1)d; |E| returned\n";
        }
      }
      if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) throw std::runtime_error("cannot open " + svg_path);
        write_table_svg(rows, svg);
      }
      for (const auto& row : rows) {
        if (!row.agree) return kExitNegative;
      }
      return kExitOk;
    }

    if (simulate->parsed()) {
      std::ifstream sf(seed_file);
      if (!sf) {
        std::cerr << "cannot open seed file: " << seed_file << "\n";
        return kExitUsage;
      }
      nlohmann::json sj;
      try {
        sf >> sj;
      } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad seed file: " << e.what() << "\n";
        return kExitUsage;
      }
      perc::GenericGraph g;
      std::string graph_name;
      if (!graph_file.empty()) {
        g = load_graph_file(graph_file);
        graph_name = graph_file;
      } else {
        int n = sj.at("n").get<int>(), d = sj.at("d").get<int>();
        g = perc::materialize(perc::HammingGraph(n, d));
        graph_name = "K_" + std::to_string(n) + "^" + std::to_string(d);
      }
      int r = simulate->count("--r") ? static_cast<int>(parse_range(r_spec).lo)
                                     : sj.at("r").get<int>();
      std::string mode = simulate->count("--mode")
                             ? mode_str
                             : sj.value("mode", std::string("edge"));
      auto seed = sj.at("indices").get<std::vector<std::uint32_t>>();
      perc::PercState state = mode == "vertex" ? perc::close_vertices(g, seed, r)
                                               : perc::close_edges(g, seed, r);
      std::ostream& out = open_output(file, out_path);
      out << perc::trace_json(state, graph_name) << "\n";
      return state.percolated ? kExitOk : kExitNegative;
    }

    if (construct->parsed()) {
      Range nr = parse_range(n_spec), dr = parse_range(d_spec), rr = parse_range(r_spec);
      std::ostream& out = open_output(file, out_path);
      if (mode_str == "edge") {
        for (long n = nr.lo; n <= nr.hi; ++n)
          for (long d = dr.lo; d <= dr.hi; ++d)
            for (long r = rr.lo; r <= rr.hi; ++r)
              out << perc::seed_json(perc::edge_percolating_set(
                         static_cast<int>(n), static_cast<int>(d),
                         static_cast<int>(r)))
                  << "\n";
      } else {
        for (long n = nr.lo; n <= nr.hi; ++n)
          for (long d = dr.lo; d <= dr.hi; ++d)
            for (long r = rr.lo; r <= rr.hi; ++r)
              out << perc::seed_json(perc::vertex_percolating_set(
                         static_cast<int>(n), static_cast<int>(d),
                         static_cast<int>(r)))
                  << "\n";
      }
      return kExitOk;
    }

    if (certify->parsed()) {
      Range nr = parse_range(n_spec), dr = parse_range(d_spec), rr = parse_range(r_spec);
      std::ostream& out = open_output(file, out_path);
      bool all_equal = true;
      for (long n = nr.lo; n <= nr.hi; ++n) {
        for (long d = dr.lo; d <= dr.hi; ++d) {
          for (long r = rr.lo; r <= rr.hi; ++r) {
            perc::Certificate cert = perc::certify(
                static_cast<int>(n), static_cast<int>(d), static_cast<int>(r));
            out << perc::certificate_json(cert) << "\n";
            all_equal = all_equal && cert.verdict == "equal";
          }
        }
      }
      return all_equal ? kExitOk : kExitNegative;
    }

    if (search->parsed()) {
      if (edge_flag) mode_str = "edge";
      if (vertex_flag) mode_str = "vertex";
      Range nr = parse_range(n_spec), dr = parse_range(d_spec), rr = parse_range(r_spec);
      long r = rr.lo;
      perc::GenericGraph g;
      std::uint64_t lower = 0;
      if (!graph_file.empty()) {
        g = load_graph_file(graph_file);
      } else {
        g = perc::materialize(perc::HammingGraph(static_cast<int>(nr.lo),
                                                 static_cast<int>(dr.lo)));
        // seed the search with the proved bound for the instance
        if (mode_str == "edge") {
          perc::Certificate cert = perc::certify(static_cast<int>(nr.lo),
                                                 static_cast<int>(dr.lo),
                                                 static_cast<int>(r));
          lower = static_cast<std::uint64_t>(cert.dim);
        } else if (r >= 1) {
          auto [lo, hi] = perc::m_bounds(nr.lo, dr.lo, r);
          lower = lo.get_ui();
        }
      }
      perc::SearchBudget budget{budget_nodes, budget_seconds};
      perc::SearchResult res =
          mode_str == "edge" ? perc::min_edge_percolating(g, static_cast<int>(r),
                                                          budget, lower)
                             : perc::min_vertex_percolating(
                                   g, static_cast<int>(r), budget, lower);
      std::ostream& out = open_output(file, out_path);
      out << perc::search_json(res) << "\n";
      return res.status == "optimal" ? kExitOk : kExitBudget;
    }

    if (verify->parsed()) {
      std::ostream& out = open_output(file, out_path);
      bool ok = true;
      for (long m = 0; m <= 8; ++m) {
        for (long k = 1; k <= 8; ++k) {
          auto [lhs, rhs] = perc::identity_prop(m, k);
          if (lhs != rhs) {
            out << "identity_prop mismatch at m=" << m << " k=" << k << "\n";
            ok = false;
          }
        }
      }
      for (long n = 2; n <= 4; ++n) {
        for (long d = 0; d <= 5; ++d) {
          for (long r = (n - 1) * (d - 1) + 1; r <= (n - 1) * d; ++r) {
            if (r < 0) continue;
            auto [fl, fr] = perc::identity_frac(n, d, r);
            auto [bl, br] = perc::identity_binom(n, d, r);
            if (fl != fr) {
              out << "identity_frac mismatch at n=" << n << " d=" << d
                  << " r=" << r << "\n";
              ok = false;
            }
            if (bl != br) {
              out << "identity_binom mismatch at n=" << n << " d=" << d
                  << " r=" << r << "\n";
              ok = false;
            }
          }
        }
      }
      out << (ok ? "all identities hold\n" : "identity check FAILED\n");
      return ok ? kExitOk : kExitNegative;
    }
  } catch (const perc::BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return kExitBudget;
  } catch (const perc::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
