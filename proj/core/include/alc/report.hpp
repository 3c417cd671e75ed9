// Rendering layer: every artifact the tools print goes through here so output
// is canonical — JSON with two-space indent and sorted keys, rationals as
// "p/q" strings, CSV in the short fraction form, and aligned pretty tables.
// None of the functions append a trailing newline; identical inputs render
// byte-identically.
#pragma once

#include <alc/classical.hpp>
#include <alc/engine.hpp>
#include <alc/quantum.hpp>
#include <alc/spekkens.hpp>
#include <alc/squarebit.hpp>

#include <string>
#include <utility>
#include <vector>

namespace alc {

std::string table3_json(const Table3& table);
std::string table4_json(const Table4& table);
std::string table5_json(const Table5& table);
std::string table3_csv(const Table3& table);
std::string table4_csv(const Table4& table);
std::string table5_csv(const Table5& table);
std::string table3_pretty(const Table3& table);
std::string table4_pretty(const Table4& table);
std::string table5_pretty(const Table5& table);

std::string classical_json(const ClassicalOptimum& optimum,
                           const std::vector<ReferenceStrategy>& references);
std::string classical_pretty(const ClassicalOptimum& optimum,
                             const std::vector<ReferenceStrategy>& references);

std::string search_report_json(const SearchReport& report, bool include_timing);
std::string search_report_pretty(const SearchReport& report);

std::string bell_json(const BellProtocolResult& result);
std::string bell_pretty(const BellProtocolResult& result);
std::string seesaw_json(const SeesawResult& result);
std::string seesaw_pretty(const SeesawResult& result);

std::string toy_json(const ToyProtocolResult& result);
std::string toy_pretty(const ToyProtocolResult& result);

// JSON value fragments for composing larger documents.
std::string json_string(const std::string& s);
std::string json_bool(bool b);
std::string json_int(long long v);

// Splices pre-rendered JSON values under their keys (sorted) into one
// canonical object. Every value must itself be valid JSON text.
std::string compose_json_object(const std::vector<std::pair<std::string, std::string>>& members);

}  // namespace alc
