#include "ramsey/report.hpp"

#include <cstdlib>

namespace ramsey {

std::string verdict_string(Tri t) {
  switch (t) {
    case Tri::True:
      return "pass";
    case Tri::False:
      return "fail";
    case Tri::Indecisive:
      return "indecisive";
  }
  return "indecisive";
}

void HypothesisReport::append(const HypothesisReport& other, const std::string& prefix) {
  for (Clause c : other.clauses_) {
    c.id = prefix + c.id;
    clauses_.push_back(std::move(c));
  }
  for (const auto& n : other.notes_) notes_.push_back(n);
}

Tri HypothesisReport::overall() const {
  Tri t = Tri::True;
  for (const auto& c : clauses_)
    if (c.gating) t = tri_and(t, c.verdict);
  return t;
}

bool HypothesisReport::decisive() const {
  for (const auto& c : clauses_)
    if (c.gating && c.verdict == Tri::Indecisive) return false;
  return true;
}

const Clause* HypothesisReport::first_failure() const {
  for (const auto& c : clauses_)
    if (c.gating && c.verdict == Tri::False) return &c;
  return nullptr;
}

const Clause* HypothesisReport::find(const std::string& id) const {
  for (const auto& c : clauses_)
    if (c.id == id) return &c;
  return nullptr;
}

Json HypothesisReport::to_json() const {
  Json clauses = Json::array();
  for (const auto& c : clauses_) {
    clauses.push_back({{"id", c.id},
                       {"text", c.text},
                       {"verdict", verdict_string(c.verdict)},
                       {"gating", c.gating},
                       {"evidence", c.evidence}});
  }
  Json out{{"theorem", theorem_}, {"overall", verdict_string(overall())}, {"clauses", clauses}};
  if (precision > 0) out["precision"] = precision;
  if (!notes_.empty()) out["notes"] = notes_;
  if (const Clause* f = first_failure()) out["first_failure"] = f->id;
  return out;
}

PrecisionPolicy default_precision_policy() {
  PrecisionPolicy p;
  if (const char* env = std::getenv("RAMSEY_PRECISION")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 32) p.start = v;
    if (p.cap < p.start) p.cap = p.start;
  }
  return p;
}

Json interval_json(const Interval& x) {
  return Json{{"lo", x.lo_string()}, {"hi", x.hi_string()}, {"precision", std::to_string(x.precision())}};
}

}  // namespace ramsey
