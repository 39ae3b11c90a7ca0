#pragma once

#include "digicover/maps.hpp"

namespace digicover::corpus {

// The worked examples bundled with the toolkit, also shipped as JSON files
// under data/corpus/.

// Unit square with 4-adjacency, traversal (0,0),(1,0),(1,1),(0,1).
SccCurve scc4();

// 8-point rectangle perimeter with 4-adjacency, the standard two-sheet
// total space over scc4.
SccCurve scc8();

// p(c_i) = d_i on the unit square where (1,1) = c_2 = d_3 and
// (0,1) = c_3 = d_2; stored with 4-adjacency on both sides. Not
// 4-continuous; (4,8)-continuous but not a (4,8) local isomorphism.
DigitalMap han_4_3_4();
DigitalMap han_4_3_4_mixed();  // target re-read under 8-adjacency

// Inclusion {0,1} into {0,1,2} in Z: a WL-isomorphism, not a PL-isomorphism.
DigitalMap inclusion_wl_not_pl();

// Fold {0,1,2} -> {0,1}, 0,1,2 |-> 0,1,0: a PL-isomorphism, not a
// WL-isomorphism.
DigitalMap fold_pl_not_wl();

// Wrap scc8 -> scc4, s_i |-> t_(i mod 4): a covering map.
DigitalMap wrap_scc8_scc4();

// Path wrap [0,3] -> scc4, i |-> t_i: a Pakdaman pseudo-covering without
// unique path lifting.
DigitalMap pathwrap_q();

}  // namespace digicover::corpus
