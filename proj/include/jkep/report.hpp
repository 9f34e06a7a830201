#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "jkep/jordan.hpp"
#include "jkep/rational.hpp"

namespace jkep {

using json = nlohmann::json;

struct RelationTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<json> counterexamples;
};

/// Pass/fail tallies keyed by relation name, with a few counterexamples kept
/// per relation. Keys are sorted, so serialisation is deterministic.
class Report {
 public:
  static constexpr std::size_t kMaxCounterexamples = 5;

  Report() = default;
  Report(std::string suite, std::string subject) : suite_(std::move(suite)), subject_(std::move(subject)) {}

  const std::string& suite() const { return suite_; }
  const std::string& subject() const { return subject_; }

  /// Records one trial. The witness callback runs only on failure.
  void record(const std::string& relation, bool ok, const std::function<json()>& witness = {}) {
    auto& t = relations_[relation];
    if (ok) {
      ++t.passed;
      return;
    }
    ++t.failed;
    if (t.counterexamples.size() < kMaxCounterexamples) t.counterexamples.push_back(witness ? witness() : json());
  }

  void fail(const std::string& relation, const std::string& message) {
    record(relation, false, [&] { return json{{"error", message}}; });
  }

  void set_info(const std::string& key, json value) { info_[key] = std::move(value); }
  const json& info() const { return info_; }

  bool ok() const {
    for (const auto& [name, t] : relations_)
      if (t.failed != 0) return false;
    return !relations_.empty();
  }

  const std::map<std::string, RelationTally>& relations() const { return relations_; }

  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& [name, t] : relations_) f += t.failed;
    return f;
  }

  json to_json() const {
    json rel = json::object();
    for (const auto& [name, t] : relations_) {
      json r{{"pass", t.passed}, {"fail", t.failed}};
      if (!t.counterexamples.empty()) r["counterexamples"] = t.counterexamples;
      rel[name] = std::move(r);
    }
    json out{{"suite", suite_}, {"subject", subject_}, {"ok", ok()}, {"relations", std::move(rel)}};
    if (!info_.is_null()) out["info"] = info_;
    return out;
  }

 private:
  std::string suite_;
  std::string subject_;
  std::map<std::string, RelationTally> relations_;
  json info_;
};

inline json to_json(const Rational& q) { return to_pq(q); }

inline json to_json(const Element<>& a) {
  json arr = json::array();
  for (const auto& c : a.coords()) arr.push_back(to_pq(c));
  return arr;
}

/// Structure constants export: {"family", "n", "dim", "c": [[[...]]], "gram": [...]}.
inline json algebra_to_json(const Algebra& alg) {
  const std::size_t d = alg.dim();
  json c = json::array();
  for (std::size_t a = 0; a < d; ++a) {
    json ca = json::array();
    for (std::size_t b = 0; b < d; ++b) {
      json cab = json::array();
      for (std::size_t g = 0; g < d; ++g) cab.push_back(to_pq(alg.structure_constant(a, b, g)));
      ca.push_back(std::move(cab));
    }
    c.push_back(std::move(ca));
  }
  json gram = json::array();
  for (const auto& g : alg.gram()) gram.push_back(to_pq(g));
  json out{{"family", family_name(alg.family())}, {"dim", d}, {"c", std::move(c)}, {"gram", std::move(gram)}};
  out["n"] = (alg.family() == Family::Real || alg.family() == Family::Albert) ? json(nullptr) : json(alg.n());
  return out;
}

}  // namespace jkep
