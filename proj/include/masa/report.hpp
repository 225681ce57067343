#pragma once

#include <string>

#include <json.hpp>

namespace masa {

/// Machine-readable result of one verification check.
struct CheckReport {
  std::string check;
  std::string paper_eq;
  nlohmann::json inputs;
  std::string lhs;
  std::string rhs;
  bool exact = false;
  bool pass = false;
  nlohmann::json witness;

  nlohmann::json to_json() const {
    return {{"check", check},   {"paper_eq", paper_eq}, {"inputs", inputs},
            {"lhs", lhs},       {"rhs", rhs},           {"exact", exact},
            {"pass", pass},     {"witness", witness}};
  }
};

}  // namespace masa
