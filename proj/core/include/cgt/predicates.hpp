#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cgt/snapshot.hpp"

namespace cgt::coarse {

// Point selector over normal-form labels. Grammar (terms joined with '&'):
//   all                  every point
//   prefix=STR           label starts with STR
//   coord[i] OP INT      i-th signed integer embedded in the label,
//                        OP in { < <= > >= = != }
// A coord term is false when the label has no i-th integer.
class PointPredicate {
 public:
  bool matches(const std::string& label) const;
  const std::string& text() const { return text_; }

  struct Term;
  PointPredicate(std::string text, std::vector<Term> terms);
  ~PointPredicate();
  PointPredicate(const PointPredicate&);
  PointPredicate& operator=(const PointPredicate&);
  PointPredicate(PointPredicate&&) noexcept;
  PointPredicate& operator=(PointPredicate&&) noexcept;

 private:
  std::string text_;
  std::vector<Term> terms_;
};

PointPredicate parse_predicate(const std::string& text);

// Indices of snapshot points whose label matches, in point order.
std::vector<int> select_points(const MetricSnapshot& snapshot, const PointPredicate& predicate);

// Signed integers embedded in a label, left to right.
std::vector<long> label_coordinates(const std::string& label);

}  // namespace cgt::coarse
