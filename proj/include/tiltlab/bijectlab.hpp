#pragma once

// The seven families attached to a Dynkin quiver and the maps between them:
//
//   (1) exceptional antichains          (5) torsion classes
//   (2) thick subcategories             (6) conormal self-orthogonal classes
//   (3) normal self-orthogonal classes  (7) torsionfree classes
//   (4) support-tilting classes
//
// Module classes are multiplicity-free sets of census positions.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tiltlab/census.hpp"
#include "tiltlab/scan.hpp"

namespace tiltlab {

using ModuleClass = IndexSet;

// Vertices carrying a nonzero space in some member.
IndexSet support(const Census& c, const ModuleClass& mc);
int support_rank(const Census& c, const ModuleClass& mc);

// The evaluation map from sums of members onto y is surjective.
bool generates(const Census& c, const ModuleClass& x, const Representation& y);
bool generates(const Census& c, const ModuleClass& x, int y);
// The coevaluation map from y into sums of members is injective.
bool cogenerates(const Census& c, const ModuleClass& x, const Representation& y);
bool cogenerates(const Census& c, const ModuleClass& x, int y);

ModuleClass gen_class(const Census& c, const ModuleClass& t);
ModuleClass cogen_class(const Census& c, const ModuleClass& f);

bool is_antichain(const Census& c, const ModuleClass& a);
// The Ext-quiver (edge i -> j when Ext(A_i, A_j) != 0) has no directed cycle.
bool is_exceptional(const Census& c, const ModuleClass& a);
std::vector<ModuleClass> antichains(const Census& c, Exec exec = Exec::serial);

// Indecomposables filtered by members of a.
ModuleClass filt_closure(const Census& c, const ModuleClass& a);
ModuleClass simples_of_thick(const Census& c, const ModuleClass& s);
// Throws InternalError if the count differs from the number of simples.
ModuleClass projective_generator(const Census& c, const ModuleClass& s);
ModuleClass injective_cogenerator_of(const Census& c, const ModuleClass& s);

// Indecomposables X with an exact P1 -> P0 -> X -> 0, P0 and P1 in add p.
ModuleClass presentation_closure(const Census& c, const ModuleClass& p);
// Dually 0 -> X -> I0 -> I1 with I0 and I1 in add i.
ModuleClass copresentation_closure(const Census& c, const ModuleClass& i);

bool is_self_orthogonal(const Census& c, const ModuleClass& mc);
bool is_normal(const Census& c, const ModuleClass& mc);
bool is_conormal(const Census& c, const ModuleClass& mc);
// Removes generated members, lowest census position first.
ModuleClass normalization(const Census& c, const ModuleClass& mc);
ModuleClass conormalization(const Census& c, const ModuleClass& mc);

// Cokernel of the trace of the other members in each member.
ModuleClass delta_antichain(const Census& c, const ModuleClass& n);

bool is_support_tilting(const Census& c, const ModuleClass& mc);
std::vector<ModuleClass> support_tilting_census(const Census& c, Exec exec = Exec::serial);

// I(v) for the quiver restricted to `verts`, extended by zero.
Representation injective_envelope(const Quiver& q, Scalar p, int v, const IndexSet& verts);
ModuleClass injective_cogenerator(const Census& c, const IndexSet& verts);

struct Foundation {
  Representation z;  // injective cogenerator of the support algebra
  Representation n;  // sum of the members
  Representation y;
  ShortExactSeq seq;  // 0 -> N^r -> Y -> Z -> 0
  std::size_t cocycles = 0;
};
Foundation universal_foundation(const Census& c, const ModuleClass& n);
ModuleClass factor_complement(const Census& c, const ModuleClass& n);

// Members X of s with Ext(X, s) = 0, resp. Ext(s, X) = 0.
ModuleClass ext_projectives(const Census& c, const ModuleClass& s);
ModuleClass ext_injectives(const Census& c, const ModuleClass& s);

// Position in `to` of the dual of each object of `from` (over the opposite quiver).
std::vector<int> duality_map(const Census& from, const Census& to);
ModuleClass map_class(const ModuleClass& mc, const std::vector<int>& positions);

enum class SetKind { antichains = 1, thick, normal, support_tilting, torsion, conormal, torsionfree };
inline constexpr std::array<SetKind, 7> kAllSets{SetKind::antichains, SetKind::thick,  SetKind::normal,
                                                 SetKind::support_tilting, SetKind::torsion,
                                                 SetKind::conormal,  SetKind::torsionfree};
const char* set_name(SetKind k);
std::optional<SetKind> parse_set_name(const std::string& name);

// Each list is sorted by (size, members). `op` is the census of the opposite
// quiver, used for the torsionfree classes.
std::vector<ModuleClass> enumerate_set(const Census& c, const Census& op, SetKind which, Exec exec = Exec::serial);
std::vector<ModuleClass> enumerate_set(const Census& c, SetKind which, Exec exec = Exec::serial);

// Vertices covered by an element of a set, which for the subcategory kinds
// is the support of the union of members.
IndexSet element_support(const Census& c, const ModuleClass& element);

struct Check {
  std::string name;
  bool pass = true;
  std::vector<int> witness;  // census positions of the first failing element
  std::string detail;
};

struct Report {
  Scalar p = 2;
  std::array<std::size_t, 7> counts{};
  std::array<std::size_t, 7> sincere_counts{};
  std::size_t root_poset_antichains = 0;
  std::vector<Check> roundtrips;
  std::vector<Check> supplements;
  std::vector<Check> support;
  std::vector<Check> duality;

  bool counts_equal() const;
  bool sincere_equal() const;
  bool passed() const;
};

Report verify_bijections(const Census& c, Exec exec = Exec::serial);

}  // namespace tiltlab
