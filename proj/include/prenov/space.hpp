#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace prenov {

/// A named finite-dimensional space with a distinguished basis.
class BasisSpace {
 public:
  BasisSpace() = default;
  BasisSpace(std::string name, std::vector<std::string> labels)
      : name_(std::move(name)), labels_(std::move(labels)) {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (labels_.empty() || seen.size() != labels_.size())
      throw std::invalid_argument("basis labels of '" + name_ +
                                  "' must be nonempty and distinct");
  }

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::string& label(int i) const {
    if (i < 0 || i >= dim())
      throw std::invalid_argument("basis index out of range in '" + name_ + "'");
    return labels_[static_cast<size_t>(i)];
  }

  int index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
      throw std::invalid_argument("unknown basis label '" + label + "' in '" +
                                  name_ + "'");
    return static_cast<int>(it - labels_.begin());
  }

  bool operator==(const BasisSpace& o) const = default;

 private:
  std::string name_;
  std::vector<std::string> labels_;
};

/// Dual space: appends '*' to the name and every label, or strips it again,
/// so dualizing twice round-trips exactly.
inline BasisSpace dual_space(const BasisSpace& s) {
  auto toggle = [](const std::string& t) {
    if (!t.empty() && t.back() == '*') return t.substr(0, t.size() - 1);
    return t + "*";
  };
  std::vector<std::string> labels;
  labels.reserve(s.labels().size());
  for (const auto& l : s.labels()) labels.push_back(toggle(l));
  return BasisSpace(toggle(s.name()), std::move(labels));
}

/// Product space A⊗B with the basis {a_i⊗b_p} ordered lexicographically by
/// (left index, right index).
inline BasisSpace product_space(const BasisSpace& a, const BasisSpace& b) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(a.dim()) * static_cast<size_t>(b.dim()));
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back(la + "⊗" + lb);
  return BasisSpace(a.name() + "⊗" + b.name(), std::move(labels));
}

/// Integer degree attached to each basis element of a space.
struct Grading {
  std::vector<long> degrees;

  long degree(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= degrees.size())
      throw std::invalid_argument("grading index out of range");
    return degrees[static_cast<size_t>(i)];
  }
};

}  // namespace prenov
