#ifndef TREEARR_CERTIFICATE_HPP
#define TREEARR_CERTIFICATE_HPP

#include <string>

#include "json.hpp"

namespace treearr {

/// Outcome of a computational check of one claim, with whatever data
/// witnesses it (determinants, counterexamples, dimensions).
struct Certificate {
  std::string claim;
  bool pass = false;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const {
    return {{"claim", claim}, {"status", pass ? "pass" : "fail"}, {"witness", witness}};
  }

  std::string to_text() const {
    std::string out = claim + ": " + (pass ? "pass" : "fail");
    for (const auto& [key, value] : witness.items()) {
      out += "\n  " + key + " = " + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    return out;
  }
};

}  // namespace treearr

#endif  // TREEARR_CERTIFICATE_HPP
