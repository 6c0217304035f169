#pragma once

#include "pwl/rational.hpp"

#include <doctest.h>

#include <set>
#include <vector>

namespace pwl::test {

inline std::set<QVec> as_set(const std::vector<QVec>& v) { return {v.begin(), v.end()}; }

inline QVec v(std::initializer_list<long> xs) { return qvec(xs); }

inline QVec vq(std::initializer_list<Q> xs) { return QVec(xs); }

}  // namespace pwl::test
