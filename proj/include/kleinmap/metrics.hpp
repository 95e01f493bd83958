#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kleinmap/graph.hpp"

namespace kleinmap {

// Distance-regularity parameters {b_0,...,b_{d-1}; c_1,...,c_d}.
struct IntersectionArray {
  std::vector<int> b;
  std::vector<int> c;

  std::string str() const;  // "{3,2,2,1;1,1,1,2}"
  bool operator==(const IntersectionArray& o) const { return b == o.b && c == o.c; }
};

// (n, degree set, lambda set over adjacent pairs, mu set over non-adjacent pairs),
// each set being exactly the attained values.
struct WeaklyRegularParams {
  int order = 0;
  std::set<int> degrees;
  std::set<int> lambda_set;
  std::set<int> mu_set;

  std::string str() const;  // "(28,(3),(0),(0,1))"
  bool operator==(const WeaklyRegularParams& o) const {
    return order == o.order && degrees == o.degrees && lambda_set == o.lambda_set &&
           mu_set == o.mu_set;
  }
};

// All-pairs hop distances; throws if the graph is disconnected.
std::vector<std::vector<int>> distance_matrix(const Graph& g);
int diameter(const Graph& g);

// The intersection array iff g is distance-regular; nullopt otherwise
// (including disconnected or irregular inputs — refusal is a value).
std::optional<IntersectionArray> intersection_array(const Graph& g);

WeaklyRegularParams weakly_regular_params(const Graph& g);

}  // namespace kleinmap
