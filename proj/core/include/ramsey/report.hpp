#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsey/interval.hpp"

namespace ramsey {

using Json = nlohmann::json;

struct Clause {
  std::string id;    // stable identifier, e.g. "I.alpha[0].G1" or "chain.final.y_hypothesis"
  std::string text;  // the inequality being checked, in plain notation
  Tri verdict = Tri::Indecisive;
  Json evidence = Json::object();
  /// Non-gating clauses are recorded but do not enter the overall verdict
  /// (e.g. a proof branch that another branch already closes).
  bool gating = true;
};

/// Pass/fail record of a theorem's preconditions or of a proof's inequality chain.
class HypothesisReport {
public:
  HypothesisReport() = default;
  explicit HypothesisReport(std::string theorem) : theorem_(std::move(theorem)) {}

  const std::string& theorem() const { return theorem_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::vector<std::string>& notes() const { return notes_; }

  Clause& add(Clause c) {
    clauses_.push_back(std::move(c));
    return clauses_.back();
  }
  Clause& add(std::string id, std::string text, Tri verdict, Json evidence = Json::object()) {
    return add(Clause{std::move(id), std::move(text), verdict, std::move(evidence), true});
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void append(const HypothesisReport& other, const std::string& prefix);

  /// Conjunction over gating clauses.
  Tri overall() const;
  bool passed() const { return overall() == Tri::True; }
  bool decisive() const;
  const Clause* first_failure() const;
  const Clause* find(const std::string& id) const;

  mpfr_prec_t precision = 0;
  Json to_json() const;

private:
  std::string theorem_;
  std::vector<Clause> clauses_;
  std::vector<std::string> notes_;
};

std::string verdict_string(Tri t);

struct PrecisionPolicy {
  mpfr_prec_t start = 128;
  mpfr_prec_t cap = 1024;
};

/// Reads RAMSEY_PRECISION for the starting precision if set.
PrecisionPolicy default_precision_policy();

/// Re-runs build(precision) with doubled precision while any gating clause is
/// indecisive; throws PrecisionError past the cap.
template <typename Build>
HypothesisReport evaluate_with_precision(Build&& build, const PrecisionPolicy& policy) {
  for (mpfr_prec_t p = policy.start; p <= policy.cap; p *= 2) {
    HypothesisReport r = build(p);
    r.precision = p;
    if (r.decisive()) return r;
  }
  HypothesisReport last = build(policy.cap);
  std::string id = "?";
  for (const auto& c : last.clauses())
    if (c.gating && c.verdict == Tri::Indecisive) {
      id = c.id;
      break;
    }
  throw PrecisionError(last.theorem() + ": clause " + id + " indecisive at " + std::to_string(policy.cap) + " bits");
}

/// Interval endpoints as outward-rounded decimal strings.
Json interval_json(const Interval& x);

}  // namespace ramsey
