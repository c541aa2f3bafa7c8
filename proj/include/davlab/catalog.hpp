#pragma once

#include <string>
#include <vector>

#include "davlab/group.hpp"
#include "davlab/solvers.hpp"

namespace davlab {

/// One expected-value row of the verification catalog.
struct CatalogEntry {
  GroupSpec spec;
  ConstantKind kind = ConstantKind::D;
  int k = 1;
  long long expected = 0;
  std::string source;  // which known result pins this value
  bool full_tier_only = false;
};

/// The verification catalog.  `full` includes the slower rows
/// (order-21 metacyclic, the holomorph of Z_5).
std::vector<CatalogEntry> catalog(bool full);

}  // namespace davlab
