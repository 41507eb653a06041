#ifndef BRANCHKIT_BRANCHKIT_HPP
#define BRANCHKIT_BRANCHKIT_HPP

#include "branchkit/constraint.hpp"
#include "branchkit/cost.hpp"
#include "branchkit/domain.hpp"
#include "branchkit/engine.hpp"
#include "branchkit/filtering.hpp"
#include "branchkit/heuristics.hpp"
#include "branchkit/lattice.hpp"
#include "branchkit/model.hpp"
#include "branchkit/oracle.hpp"
#include "branchkit/precision.hpp"
#include "branchkit/report.hpp"
#include "branchkit/store.hpp"

#endif  // BRANCHKIT_BRANCHKIT_HPP
