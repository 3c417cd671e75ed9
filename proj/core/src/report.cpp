#include <alc/report.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace alc {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2); }

json fraction(const Rational& r) { return to_fraction_string(r); }

template <typename Grid>
json fraction_grid(const Grid& grid) {
  json rows = json::array();
  for (const auto& row : grid) {
    json cells = json::array();
    for (const auto& cell : row) cells.push_back(fraction(cell));
    rows.push_back(std::move(cells));
  }
  return rows;
}

template <typename Grid>
std::string fraction_csv(const Grid& grid, const std::string& row_label,
                         const std::string& col_prefix) {
  std::ostringstream out;
  out << row_label;
  for (std::size_t c = 0; c < grid[0].size(); ++c) out << ',' << col_prefix << c;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    out << '\n' << r;
    for (const auto& cell : grid[r]) out << ',' << to_short_string(cell);
  }
  return out.str();
}

template <typename Grid, typename Cell>
std::string aligned_table(const Grid& grid, const std::string& corner,
                          const std::string& col_prefix, Cell cell_text) {
  const std::size_t rows = grid.size(), cols = grid[0].size();
  std::vector<std::vector<std::string>> text(rows + 1, std::vector<std::string>(cols + 1));
  text[0][0] = corner;
  for (std::size_t c = 0; c < cols; ++c) text[0][c + 1] = col_prefix + std::to_string(c);
  for (std::size_t r = 0; r < rows; ++r) {
    text[r + 1][0] = std::to_string(r);
    for (std::size_t c = 0; c < cols; ++c) text[r + 1][c + 1] = cell_text(grid[r][c]);
  }
  std::vector<std::size_t> width(cols + 1, 0);
  for (const auto& row : text)
    for (std::size_t c = 0; c <= cols; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (std::size_t r = 0; r <= rows; ++r) {
    for (std::size_t c = 0; c <= cols; ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - text[r][c].size(), ' ') << text[r][c];
    }
    if (r < rows) out << '\n';
  }
  return out.str();
}

template <typename Grid>
json out_of_range_cells(const Grid& grid) {
  json cells = json::array();
  for (std::size_t r = 0; r < grid.size(); ++r)
    for (std::size_t c = 0; c < grid[r].size(); ++c)
      if (!in_unit_interval(grid[r][c])) cells.push_back(json::array({r, c}));
  return cells;
}

json strategy_json(const EncodingStrategy& st) {
  json j;
  j["kind"] = to_string(st.kind);
  j["n_strings"] = st.n_strings;
  j["shared_state"] = st.shared_state ? json(*st.shared_state) : json(nullptr);
  json a = json::array(), b = json::array();
  for (int i = 0; i < st.n_strings; ++i) {
    a.push_back(st.alice_assign[i]);
    b.push_back(st.bob_assign[i]);
  }
  j["alice_assign"] = std::move(a);
  j["bob_assign"] = std::move(b);
  j["code"] = st.code();
  return j;
}

json weights_json(const RVector& w) {
  json arr = json::array();
  for (std::size_t i = 0; i < w.size(); ++i) arr.push_back(fraction(w[i]));
  return arr;
}

json classical_strategy_json(const PureClassicalStrategy& s) {
  json j;
  j["alice_enc"] = s.alice_enc;
  j["bob_enc"] = s.bob_enc;
  j["decoder"] = s.decoder;
  j["code"] = s.code();
  return j;
}

}  // namespace

std::string table3_json(const Table3& table) {
  json j;
  j["entries"] = fraction_grid(table);
  j["out_of_range_cells"] = out_of_range_cells(table);
  return dump(j);
}

std::string table4_json(const Table4& table) {
  json j;
  j["entries"] = fraction_grid(table);
  j["out_of_range_cells"] = out_of_range_cells(table);
  return dump(j);
}

std::string table5_json(const Table5& table) {
  json rows = json::array();
  for (const auto& row : table) {
    json cells = json::array();
    for (int cell : row) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  json j;
  j["entries"] = std::move(rows);
  return dump(j);
}

std::string table3_csv(const Table3& table) { return fraction_csv(table, "state", "e"); }
std::string table4_csv(const Table4& table) { return fraction_csv(table, "state", "e"); }

std::string table5_csv(const Table5& table) {
  std::ostringstream out;
  out << "bob";
  for (std::size_t c = 0; c < table[0].size(); ++c) out << ",a" << c;
  for (std::size_t r = 0; r < table.size(); ++r) {
    out << '\n' << r;
    for (int cell : table[r]) out << ',' << cell;
  }
  return out.str();
}

std::string table3_pretty(const Table3& table) {
  return aligned_table(table, "state\\effect", "e",
                       [](const Rational& r) { return to_short_string(r); });
}

std::string table4_pretty(const Table4& table) {
  return aligned_table(table, "state\\effect", "e",
                       [](const Rational& r) { return to_short_string(r); });
}

std::string table5_pretty(const Table5& table) {
  return aligned_table(table, "bob\\alice", "a", [](int v) { return std::to_string(v); });
}

std::string classical_json(const ClassicalOptimum& optimum,
                           const std::vector<ReferenceStrategy>& references) {
  json j;
  j["optimum"] = fraction(optimum.value);
  j["maximizer_count"] = optimum.maximizers.size();
  json maximizers = json::array();
  for (const auto& s : optimum.maximizers) maximizers.push_back(classical_strategy_json(s));
  j["maximizers"] = std::move(maximizers);
  json refs = json::array();
  for (const auto& ref : references) {
    json r;
    r["label"] = ref.label;
    r["strategy"] = classical_strategy_json(ref.strategy);
    r["value"] = fraction(ref.value);
    refs.push_back(std::move(r));
  }
  j["reference_strategies"] = std::move(refs);
  return dump(j);
}

std::string classical_pretty(const ClassicalOptimum& optimum,
                             const std::vector<ReferenceStrategy>& references) {
  std::ostringstream out;
  out << "classical optimum: " << to_short_string(optimum.value) << " ("
      << optimum.maximizers.size() << " maximizers)\n";
  for (const auto& s : optimum.maximizers) out << "  " << s.describe() << '\n';
  out << "reference strategies:";
  for (const auto& ref : references)
    out << "\n  " << ref.label << ": " << ref.strategy.describe() << " -> "
        << to_short_string(ref.value);
  return out.str();
}

std::string search_report_json(const SearchReport& report, bool include_timing) {
  json j;
  j["model"] = report.model;
  j["n_strings"] = report.n_strings;
  j["families"] = report.families;
  j["strategies_examined"] = report.strategies_examined;
  j["collisions_pruned"] = report.collisions_pruned;
  j["lp_feasibility_calls"] = report.lp_feasibility_calls;
  j["lp_value_calls"] = report.lp_value_calls;
  if (report.perfect) {
    json p;
    p["strategy"] = strategy_json(report.perfect->strategy);
    p["witness"] = {{"p", weights_json(report.perfect->witness.p_weights)},
                    {"q", weights_json(report.perfect->witness.q_weights)}};
    j["perfect"] = std::move(p);
  } else {
    j["perfect"] = nullptr;
  }
  j["best_value"] = fraction(report.best_value);
  j["best_strategy"] = report.best_strategy ? strategy_json(*report.best_strategy) : json(nullptr);
  if (report.audit) {
    json a;
    a["samples"] = report.audit->samples;
    a["collisions_confirmed"] = report.audit->collisions_confirmed;
    a["lp_infeasible_confirmed"] = report.audit->lp_infeasible_confirmed;
    a["certificates_valid"] = report.audit->certificates_valid;
    j["audit"] = std::move(a);
  } else {
    j["audit"] = nullptr;
  }
  if (include_timing) j["wall_seconds"] = report.wall_seconds;
  return dump(j);
}

std::string search_report_pretty(const SearchReport& report) {
  std::ostringstream out;
  out << report.model << " n=" << report.n_strings << " families=" << report.families << '\n';
  out << "  strategies examined: " << report.strategies_examined << '\n';
  out << "  collisions pruned:   " << report.collisions_pruned << '\n';
  out << "  feasibility solves:  " << report.lp_feasibility_calls << '\n';
  out << "  value solves:        " << report.lp_value_calls << '\n';
  if (report.perfect) {
    const auto& st = report.perfect->strategy;
    out << "  perfect protocol: yes (kind=" << to_string(st.kind);
    if (st.shared_state) out << ", shared=" << *st.shared_state;
    out << ", code=" << st.code() << ")\n";
  } else {
    out << "  perfect protocol: no\n";
  }
  out << "  best value: " << to_short_string(report.best_value);
  if (report.audit)
    out << "\n  audit: " << report.audit->samples << " samples, "
        << report.audit->collisions_confirmed << " collisions confirmed, "
        << report.audit->lp_infeasible_confirmed << " infeasible confirmed, "
        << report.audit->certificates_valid << " certificates valid";
  return out.str();
}

std::string bell_json(const BellProtocolResult& result) {
  json j;
  json rows = json::array();
  for (const auto& row : result.pair_success) {
    json cells = json::array();
    for (double v : row) cells.push_back(v);
    rows.push_back(std::move(cells));
  }
  j["pair_success"] = std::move(rows);
  j["overall"] = result.overall;
  j["min_pair"] = result.min_pair;
  return dump(j);
}

std::string bell_pretty(const BellProtocolResult& result) {
  std::ostringstream out;
  out << "bell protocol pair success (alice rows, bob columns):\n";
  for (const auto& row : result.pair_success) {
    out << " ";
    for (double v : row) out << ' ' << v;
    out << '\n';
  }
  out << "overall: " << result.overall << ", min pair: " << result.min_pair;
  return out.str();
}

std::string seesaw_json(const SeesawResult& result) {
  json j;
  j["seed"] = result.seed;
  j["restarts"] = result.restarts;
  j["iterations"] = result.iterations;
  j["best_value"] = result.best_value;
  j["best_restart"] = result.best_restart;
  j["all_monotone"] = result.all_monotone;
  j["decoder_valid"] = result.decoder_valid;
  json per = json::array();
  for (const auto& r : result.per_restart) {
    json e;
    e["final_value"] = r.final_value;
    e["iterations_run"] = r.iterations_run;
    e["monotone"] = r.monotone;
    per.push_back(std::move(e));
  }
  j["per_restart"] = std::move(per);
  return dump(j);
}

std::string seesaw_pretty(const SeesawResult& result) {
  std::ostringstream out;
  out << "seesaw over product strategies: seed=" << result.seed
      << " restarts=" << result.restarts << " iterations=" << result.iterations << '\n';
  out << "  best value: " << result.best_value << " (restart " << result.best_restart << ")\n";
  out << "  all restarts monotone: " << (result.all_monotone ? "yes" : "no") << '\n';
  out << "  best decoder is a POVM: " << (result.decoder_valid ? "yes" : "no");
  return out.str();
}

std::string toy_json(const ToyProtocolResult& result) {
  json j;
  json composed = json::array();
  for (const auto& row : result.composed_index) {
    json cells = json::array();
    for (int v : row) cells.push_back(v);
    composed.push_back(std::move(cells));
  }
  j["composed_index"] = std::move(composed);
  j["composition_is_xor"] = result.composition_is_xor;
  j["equal_probability"] = fraction_grid(result.equal_probability);
  j["overall_success"] = fraction(result.overall_success);
  j["perfect"] = result.perfect;
  return dump(j);
}

std::string toy_pretty(const ToyProtocolResult& result) {
  std::ostringstream out;
  out << "toy-bit protocol: composed state index (alice rows, bob columns):\n";
  for (const auto& row : result.composed_index) {
    out << " ";
    for (int v : row) out << ' ' << v;
    out << '\n';
  }
  out << "composition is xor: " << (result.composition_is_xor ? "yes" : "no") << '\n';
  out << "overall success: " << to_short_string(result.overall_success)
      << (result.perfect ? " (perfect)" : " (not perfect)");
  return out.str();
}

std::string json_string(const std::string& s) { return json(s).dump(); }
std::string json_bool(bool b) { return json(b).dump(); }
std::string json_int(long long v) { return json(v).dump(); }

std::string compose_json_object(const std::vector<std::pair<std::string, std::string>>& members) {
  json j = json::object();
  for (const auto& [key, value] : members) j[key] = json::parse(value);
  return dump(j);
}

}  // namespace alc
