#pragma once

#include <initializer_list>
#include <vector>

#include "montes/ff.hpp"

namespace helpers {

// Polynomial over K from small integers, ascending.
inline montes::FFPoly ffp(const montes::FieldHandle& K, std::initializer_list<long> cs) {
  std::vector<montes::FFElem> v;
  for (long c : cs) v.push_back(K->from_int(c));
  return montes::FFPoly(K, v);
}

}  // namespace helpers
