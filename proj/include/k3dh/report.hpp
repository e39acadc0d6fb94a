#pragma once

// Check records with exact string-valued expectations. A check passes exactly
// when its expected and computed strings coincide.

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "k3dh/errors.hpp"

namespace k3dh {

using ojson = nlohmann::ordered_json;

struct Check {
  std::string id;
  std::string description;
  std::string topic;
  std::string expected;
  std::string computed;

  bool passed() const { return expected == computed; }
};

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

class Report {
 public:
  static constexpr int schema_version = 1;

  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }

  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(std::string id, std::string description, std::string topic, std::string expected, std::string computed) {
    checks_.push_back({std::move(id), std::move(description), std::move(topic), std::move(expected),
                       std::move(computed)});
  }
  void add_flag(std::string id, std::string description, std::string topic, bool holds) {
    add(std::move(id), std::move(description), std::move(topic), "true", bool_str(holds));
  }
  void append(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  std::size_t passed_count() const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.passed();
    return n;
  }
  std::size_t failed_count() const { return checks_.size() - passed_count(); }
  bool all_passed() const { return failed_count() == 0; }

  const Check* find(const std::string& id) const {
    for (const auto& c : checks_)
      if (c.id == id) return &c;
    return nullptr;
  }

  ojson to_json() const {
    ojson j;
    j["schema_version"] = schema_version;
    j["title"] = title_;
    j["checks"] = ojson::array();
    for (const auto& c : checks_) {
      ojson r;
      r["id"] = c.id;
      r["description"] = c.description;
      r["topic"] = c.topic;
      r["expected"] = c.expected;
      r["computed"] = c.computed;
      r["passed"] = c.passed();
      j["checks"].push_back(std::move(r));
    }
    j["summary"] = {{"total", checks_.size()}, {"passed", passed_count()}, {"failed", failed_count()}};
    return j;
  }

  static Report from_json(const ojson& j) {
    try {
      if (j.at("schema_version").get<int>() != schema_version) throw ParseError("unsupported report schema version");
      Report r(j.at("title").get<std::string>());
      for (const auto& c : j.at("checks")) {
        r.add(c.at("id").get<std::string>(), c.at("description").get<std::string>(), c.at("topic").get<std::string>(),
              c.at("expected").get<std::string>(), c.at("computed").get<std::string>());
        if (c.at("passed").get<bool>() != r.checks_.back().passed())
          throw ParseError("report check '" + c.at("id").get<std::string>() + "' has an inconsistent pass flag");
      }
      return r;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed report: ") + e.what());
    }
  }

  std::string to_text() const {
    std::ostringstream os;
    if (!title_.empty()) os << title_ << '\n';
    for (const auto& c : checks_) {
      os << (c.passed() ? "PASS " : "FAIL ") << c.id << "  " << c.description;
      if (!c.topic.empty()) os << "  [" << c.topic << "]";
      os << "\n     expected: " << c.expected << "\n     computed: " << c.computed << '\n';
    }
    os << passed_count() << "/" << checks_.size() << " checks passed\n";
    return os.str();
  }

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace k3dh
