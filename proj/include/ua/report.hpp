#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

namespace ua {

using Json = nlohmann::ordered_json;

// Outcome of checking one property; the witness is null when it holds.
struct Report {
  Report() = default;
  explicit Report(std::string c) : claim(std::move(c)) {}

  std::string claim;
  bool holds = true;
  Json witness;
  Json details;

  Json to_json() const {
    Json j;
    j["claim"] = claim;
    j["holds"] = holds;
    j["witness"] = witness;
    if (!details.is_null()) j["details"] = details;
    return j;
  }

  void fail(Json w) {
    if (holds) witness = std::move(w);
    holds = false;
  }
};

/// a required property does not hold: CLI exit code 1
class PropertyError : public std::runtime_error {
 public:
  PropertyError(const std::string& what, Json witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const Json& witness() const { return witness_; }

 private:
  Json witness_;
};

}  // namespace ua
