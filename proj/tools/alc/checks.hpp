// Accumulates named pass/fail checks and renders them as one JSON object.
// Every command embeds its expected values as checks; --check turns a failed
// list into a nonzero exit code.
#pragma once

#include <json.hpp>

#include <string>
#include <utility>

namespace alc {

struct CheckList {
  nlohmann::json items = nlohmann::json::array();
  bool passed = true;

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    nlohmann::json item;
    item["name"] = name;
    item["passed"] = ok;
    if (!detail.empty()) item["detail"] = detail;
    items.push_back(std::move(item));
    passed = passed && ok;
  }

  void merge(const CheckList& other) {
    for (const auto& item : other.items) items.push_back(item);
    passed = passed && other.passed;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["passed"] = passed;
    j["items"] = items;
    return j;
  }
};

}  // namespace alc
