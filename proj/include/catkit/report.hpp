#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace catkit {

// Outcome of a law check.  A check walks every in-universe instance of each
// law; instances whose table lookups fall outside a truncated universe are
// skipped and counted, never silently dropped.
struct LawReport {
  std::vector<std::string> violations;
  std::size_t checked = 0;
  std::size_t skipped = 0;

  bool ok() const { return violations.empty(); }

  void fail(std::string witness) { violations.push_back(std::move(witness)); }

  void instance(bool pass, const std::string& witness) {
    ++checked;
    if (!pass) violations.push_back(witness);
  }

  void absorb(const LawReport& sub, const std::string& prefix) {
    checked += sub.checked;
    skipped += sub.skipped;
    for (const auto& v : sub.violations) violations.push_back(prefix + v);
  }

  std::string summary() const {
    if (ok())
      return "pass (" + std::to_string(checked) + " instances, " +
             std::to_string(skipped) + " skipped)";
    return "FAIL: " + violations.front() + " [" +
           std::to_string(violations.size()) + " violation(s)]";
  }
};

struct CatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MalformedTable : CatError { using CatError::CatError; };
struct UnknownId : CatError { using CatError::CatError; };
struct ShapeMismatch : CatError { using CatError::CatError; };
struct SizeLimitExceeded : CatError { using CatError::CatError; };
struct BaseNotCocartesian : CatError { using CatError::CatError; };
struct UniverseOverflow : CatError { using CatError::CatError; };
struct ParseError : CatError { using CatError::CatError; };

}  // namespace catkit
