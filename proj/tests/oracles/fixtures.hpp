#pragma once

#include <vector>

#include "dimred/arrangement.hpp"

namespace fixtures {

/// Every shipped family at sizes with at most 10 hyperplanes.
inline std::vector<dimred::Arrangement> small_arrangements() {
  using dimred::Arrangement;
  return {
      Arrangement::braid(2),      Arrangement::braid(3),          Arrangement::braid(4),
      Arrangement::braid(5),      Arrangement::coxeter_d(2),      Arrangement::coxeter_d(3),
      Arrangement::coxeter_b(1),  Arrangement::coxeter_b(2),      Arrangement::coxeter_b(3),
      Arrangement::threshold(3),  Arrangement::threshold(4),      Arrangement::dowling(2, 2),
      Arrangement::dowling(3, 2), Arrangement::dowling(2, 3),     Arrangement::dowling(3, 3),
      Arrangement::dowling(2, 4), Arrangement::widom_rowlinson({1, 1}), Arrangement::widom_rowlinson({2, 1}),
      Arrangement::widom_rowlinson({2, 2}), Arrangement::widom_rowlinson({1, 1, 1}),
  };
}

}  // namespace fixtures
