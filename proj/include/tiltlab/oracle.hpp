#pragma once

// Brute-force torsion, torsionfree and thick subcategories of a small census,
// straight from the closure definitions. Shares no code with bijectlab.

#include <cstddef>
#include <vector>

#include "tiltlab/census.hpp"
#include "tiltlab/scan.hpp"

namespace tiltlab {

enum class ClosureKind { torsion, torsionfree, thick };

struct ClosureSpec {
  ClosureKind kind = ClosureKind::torsion;
  int dim_bound = kDefaultSubRepBound;  // for sub_reps
  int max_indecs = 12;                  // 2^n subsets are scanned
  int max_multiplicity = 2;             // thick: morphisms X^a -> Y^b with a, b <= this
};

// Summands produced by one object or one ordered pair, as census positions.
struct ClosureTables {
  std::vector<IndexSet> quotients;                // all summands of X/U over subreps U
  std::vector<IndexSet> subobjects;               // all summands of subreps U of X
  std::vector<std::vector<IndexSet>> extensions;  // [X][Y]: middle terms of 0 -> Y -> E -> X -> 0
  std::vector<std::vector<IndexSet>> morphisms;   // [X][Y]: kernels, images, cokernels of X^a -> Y^b
};

// Throws InputError ("oracle-bound") when the census exceeds the ClosureSpec limits.
ClosureTables closure_tables(const Census& c, const ClosureSpec& spec, Exec exec = Exec::serial);

bool is_closed(const ClosureTables& t, ClosureKind kind, const IndexSet& s);

std::vector<IndexSet> all_closed_classes(const Census& c, const ClosureSpec& spec, Exec exec = Exec::serial);
std::vector<IndexSet> all_torsion_classes(const Census& c, Exec exec = Exec::serial);
std::vector<IndexSet> all_torsionfree_classes(const Census& c, Exec exec = Exec::serial);
std::vector<IndexSet> all_thick_subcategories(const Census& c, Exec exec = Exec::serial);

}  // namespace tiltlab
