#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lingapprox/error.hpp"

namespace lingapprox {

// Ordered sample grid shared by every set of one problem.
class Universe {
 public:
  Universe(std::string name, std::vector<double> points,
           std::optional<std::string> unit = std::nullopt);

  // Expands min..max by step. The count comes from rounding so repeated
  // addition never drifts.
  static Universe from_range(std::string name, double min, double max,
                             double step,
                             std::optional<std::string> unit = std::nullopt);

  const std::string& name() const { return name_; }
  const std::vector<double>& points() const { return points_; }
  const std::optional<std::string>& unit() const { return unit_; }
  std::size_t size() const { return points_.size(); }
  double front() const { return points_.front(); }
  double back() const { return points_.back(); }

  bool operator==(const Universe& other) const {
    return points_ == other.points_ && name_ == other.name_ &&
           unit_ == other.unit_;
  }

 private:
  std::string name_;
  std::vector<double> points_;
  std::optional<std::string> unit_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(Universe u);

class FuzzySet;
enum class PointwiseOp { Complement, Intersect, Union };
FuzzySet pointwise(PointwiseOp op, const FuzzySet& a, const FuzzySet* b);

class FuzzySet {
 public:
  FuzzySet(UniversePtr universe, std::vector<double> memberships);

  static FuzzySet zeros(UniversePtr universe);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<double>& memberships() const { return mu_; }
  std::size_t size() const { return mu_.size(); }
  double operator[](std::size_t i) const { return mu_[i]; }

  bool same_universe(const FuzzySet& other) const;

  // Pointwise equality of memberships on the same universe.
  bool operator==(const FuzzySet& other) const {
    return same_universe(other) && mu_ == other.mu_;
  }

 private:
  friend FuzzySet pointwise(PointwiseOp op, const FuzzySet& a, const FuzzySet* b);

  UniversePtr universe_;
  std::vector<double> mu_;
  // Memberships this set is the complement of. 1 - (1 - x) rounds for most
  // x below 0.5, so complementing again restores these instead.
  std::shared_ptr<const std::vector<double>> complement_of_;
};

void require_same_universe(const FuzzySet& a, const FuzzySet& b);


FuzzySet pointwise(PointwiseOp op, const FuzzySet& a,
                   const FuzzySet* b = nullptr);

FuzzySet complement(const FuzzySet& a);
FuzzySet intersect(const FuzzySet& a, const FuzzySet& b);
FuzzySet unite(const FuzzySet& a, const FuzzySet& b);

double height(const FuzzySet& a);

struct AlphaCut {
  double level;
  std::vector<std::size_t> indices;
};

AlphaCut alpha_cut(const FuzzySet& a, double level);

double sigma_count(const FuzzySet& a);
double relative_sigma_count(const FuzzySet& a, const FuzzySet& x);

}  // namespace lingapprox
