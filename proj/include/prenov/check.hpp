#pragma once

#include <map>
#include <string>
#include <vector>

namespace prenov {

struct Witness {
  std::string axiom;                // stable axiom id, e.g. "pN-3"
  std::vector<std::string> tuple;   // basis labels (and exponents, when graded)
  std::string residual;             // canonical rendering of the nonzero residual
};

struct CheckOptions {
  int witness_cap = 5;  // per axiom
};

/// Result of a residual-based verification: PASS, or witnesses pointing at
/// the exact basis tuples where an identity breaks.
class CheckReport {
 public:
  bool passed() const { return witnesses_.empty(); }
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::vector<std::string>& axiom_catalog() const { return catalog_; }

  void declare_axiom(const std::string& id) {
    for (const auto& a : catalog_)
      if (a == id) return;
    catalog_.push_back(id);
  }

  /// Records a witness unless the per-axiom cap is exhausted. The axiom still
  /// counts as failed either way.
  void add_witness(const CheckOptions& opts, Witness w) {
    declare_axiom(w.axiom);
    failed_[w.axiom] = true;
    int& n = counts_[w.axiom];
    if (n >= opts.witness_cap) {
      ++suppressed_;
      return;
    }
    ++n;
    witnesses_.push_back(std::move(w));
  }

  bool axiom_failed(const std::string& id) const {
    auto it = failed_.find(id);
    return it != failed_.end() && it->second;
  }

  std::vector<std::string> failed_axioms() const {
    std::vector<std::string> out;
    for (const auto& a : catalog_)
      if (axiom_failed(a)) out.push_back(a);
    return out;
  }

  int suppressed_witnesses() const { return suppressed_; }

  void merge(const CheckReport& o) {
    for (const auto& a : o.catalog_) declare_axiom(a);
    for (const auto& [a, f] : o.failed_)
      if (f) failed_[a] = true;
    for (const auto& w : o.witnesses_) witnesses_.push_back(w);
    for (const auto& [a, n] : o.counts_) counts_[a] += n;
    suppressed_ += o.suppressed_;
  }

 private:
  std::vector<std::string> catalog_;
  std::vector<Witness> witnesses_;
  std::map<std::string, bool> failed_;
  std::map<std::string, int> counts_;
  int suppressed_ = 0;
};

}  // namespace prenov
