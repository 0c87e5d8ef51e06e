#pragma once

#include "bip/biprop.hpp"
#include "bip/caps.hpp"
#include "bip/report.hpp"

namespace bip::symaction {

using biprop::BpPtr;
using biprop::Word;
using fincat::FinFunctor;
using fincat::FinNatTrans;
using finord::FinMap;

// Permutation actions on hom categories, derived from the tensor structure
// of a biprop.  A permutation beta of n letters acts on a word b of length n
// by relabelling, beta * b = (b[beta(0)], ..., b[beta(n-1)]), and the twist
// morphisms below turn that relabelling into functors between hom categories
// together with the coherence isomorphisms that make it a weak group action.
//
// Everything here assumes the biprop itself is lawful; run check_biprop
// first.  check_symmetric_action then verifies the derived structure.

Word permute_word(const FinMap& beta, const Word& b);

// The twist u_beta in hom(beta * b; b): units tensored over the cospan
// (beta, id).  The dual form tensors the same units over (id, beta^-1);
// the two must agree, which check_symmetric_action verifies.
int twist_object(const BpPtr& bp, const FinMap& beta, const Word& b);
int twist_object_dual(const BpPtr& bp, const FinMap& beta, const Word& b);

// u_{alpha;beta} -> m(u_alpha, u_beta), tensored from inverted unitor
// components at the one-letter units.  The plain form inverts left unitors,
// the dual form right unitors; agreement between them is again a law.
int twist_factor_iso(const BpPtr& bp, const FinMap& alpha, const FinMap& beta,
                     const Word& b);
int twist_factor_iso_dual(const BpPtr& bp, const FinMap& alpha,
                          const FinMap& beta, const Word& b);

// l_beta = m(u_beta, -) : hom(b; c) -> hom(beta * b; c) and
// r_delta = m(-, u_delta) : hom(a; delta * c) -> hom(a; c).
FinFunctor left_action(const BpPtr& bp, const FinMap& beta, const Word& b,
                       const Word& c);
FinFunctor right_action(const BpPtr& bp, const FinMap& delta, const Word& a,
                        const Word& c);

// Cocycle isomorphisms.  With ab = alpha-then-beta,
//   left:  l_ab  => l_beta then l_alpha   on hom(b; c)
//   right: r_ab  => r_alpha then r_beta   on hom(a; ab * c)
// built from the twist factorisation followed by an associator.
FinNatTrans left_cocycle(const BpPtr& bp, const FinMap& alpha,
                         const FinMap& beta, const Word& b, const Word& c);
FinNatTrans right_cocycle(const BpPtr& bp, const FinMap& alpha,
                          const FinMap& beta, const Word& a, const Word& c);

// r_beta after l_alpha => l_alpha after r_beta on hom(b; beta * c): the two
// sides act on independent ends of the hom, and an associator swaps them.
FinNatTrans mixed_interchange(const BpPtr& bp, const FinMap& alpha,
                              const FinMap& beta, const Word& b,
                              const Word& c);

// The identity permutation acts trivially: l_id => Id with unitor
// components, and mirrored for r_id.
FinNatTrans left_unit_iso(const BpPtr& bp, const Word& b, const Word& c);
FinNatTrans right_unit_iso(const BpPtr& bp, const Word& a, const Word& c);

// Id => l_{beta^-1} then l_beta (resp. the r mirror): the composite
// witnessing that each action functor is an equivalence.
FinNatTrans left_equivalence(const BpPtr& bp, const FinMap& beta,
                             const Word& b, const Word& c);
FinNatTrans right_equivalence(const BpPtr& bp, const FinMap& beta,
                              const Word& a, const Word& c);

// Associator instances that move a twist across a composition:
//   middle: m(r_beta x, y) -> m(x, l_beta y)   x in hom(a; beta*b), y in hom(b; c)
//   left:   m(l_beta x, y) -> l_beta m(x, y)   x in hom(b; c),      y in hom(c; d)
//   right:  r_beta m(x, y) -> m(x, r_beta y)   x in hom(a; b),      y in hom(b; beta*c)
int middle_shift_iso(const BpPtr& bp, const FinMap& beta, const Word& a,
                     const Word& b, const Word& c, int x, int y);
int left_shift_iso(const BpPtr& bp, const FinMap& beta, const Word& b,
                   const Word& c, const Word& d, int x, int y);
int right_shift_iso(const BpPtr& bp, const FinMap& beta, const Word& a,
                    const Word& b, const Word& c, int x, int y);

// Checks the derived action across all permutation degrees and words that
// fit the caps.  Laws indexed by one permutation and one morphism run at
// degree min(max_index, word cap); the cocycle pasting (three permutations)
// and the shift laws (two morphisms) are additionally clamped by
// max_index_multi.  Laws:
//   twist-agreement, twist-unit, twist-factorisation,
//   left-action, right-action, left-cocycle, right-cocycle,
//   left-unit, right-unit, mixed-interchange,
//   middle-shift, left-shift, right-shift,
//   left-equivalence, right-equivalence.
// Construction failures inside a law (a functor or transformation that does
// not validate) are reported as failures of that law, not thrown.
report::Report check_symmetric_action(const BpPtr& bp, const CheckCaps& caps);

}  // namespace bip::symaction
