#pragma once

// Bundled example objects: small posets-as-categories, the join-writer
// parametrized monad, the coreader comonad, split-fibration fixtures, and
// group/monoid tables. These back both the test suite and the CLI's
// `examples` subcommand.

#include <functional>

#include "fibalg/algkit.hpp"
#include "fibalg/fincat.hpp"
#include "fibalg/grothfib.hpp"
#include "fibalg/monadkit.hpp"

namespace fibalg::cat {

using Leq = std::function<bool(const std::string&, const std::string&)>;
using Join = std::function<std::string(const std::string&, const std::string&)>;

/// Poset as a category: one morphism x -> y whenever leq(x, y).
FinCategory poset_cat(const std::string& name,
                      const std::vector<std::string>& elems, const Leq& leq);

FinCategory chain2();   // o0 < o1
FinCategory chain3();   // o0 < o1 < o2
FinCategory bool4();    // v0 < va, vb < v1
FinCategory terminal_cat();
FinCategory discrete2();

std::string chain_join(const std::string& x, const std::string& y);
std::string bool4_join(const std::string& x, const std::string& y);
std::string bool4_meet(const std::string& x, const std::string& y);

/// Join-writer parametrized monad T_A(x) = join(A, x) on a join-semilattice
/// presented as a poset category; params = carriers = the poset.
ParamMonadData writer_param(const CatPtr& poset, const Join& join,
                            const std::string& name);

/// writer_param over chain3 with the chain join.
ParamMonadData writer_chain3();

/// Monoid semiautomata at poset scale: the 2-chain join monoid acting by
/// T_A(x) = A join x; build with TotalFlavor::Alg for plain semiautomata.
ParamMonadData semiauto_m2();

/// Coreader comonad data: the parametrized comonad S_A(x) = A meet x on
/// bool4, stored as a parametrized monad over the opposite poset.
ParamMonadData coreader_bool4();

/// Codomain projection of the arrow category of the 2-chain, presented as a
/// split fibration (fibres are slices, reindexing is pullback).
SplitFibrationData codomain2();

/// Identity fibration over a base: every fibre is the terminal category.
SplitFibrationData identity_fibration(const CatPtr& base,
                                      const std::string& name);

/// The freestanding split epi: 0 and 1, r : 0 -> 1, s : 1 -> 0, r.s = id_1.
FinCategory split_epi();

/// Fibration of points of the freestanding split epi: the total category is
/// the endofunctor category End(SE) and the projection evaluates at 1.
TotalCategory points_splitepi();

/// Cyclic group of order n, elements g0..g{n-1} with g1 the generator.
FinGroup cyclic_group(int n, const std::string& name);
/// Direct product on pair ids with componentwise multiplication.
FinGroup group_product(const FinGroup& a, const FinGroup& b);
/// Dihedral group of order 2n: rotations r0..r{n-1} and reflections
/// s0..s{n-1} (s_i = s0 r_i).
FinGroup dihedral(int n, const std::string& name);

FinGroup z2();
FinGroup z3();
FinGroup z4();
FinGroup z2z2();
FinGroup s3();  // dihedral(3)
FinGroup d4();  // dihedral(4)

/// Z2 acting on Z3 by inversion; semidirect(.) is isomorphic to s3().
ActionAlgebra z2_on_z3_inversion();

}  // namespace fibalg::cat
