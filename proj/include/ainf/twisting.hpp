#pragma once

#include "ainf/bar.hpp"
#include "ainf/transfer.hpp"

namespace ainf {

/* Degree -1 map K -> M vanishing on the counit part, stored on the K basis.
 * The defect of the defining condition phi d = sum m_i (phi x...x phi) Delta^i
 * is computed with the reduced iterated diagonal (the operations kill the
 * unit summands). */
struct TwistingCochain {
    std::shared_ptr<const DGCoalgebra> K;
    std::shared_ptr<const AInfAlgebra> target;
    MultiMap phi;  // arity 1, shift -1
};

Element twisting_defect_at(const TwistingCochain& tc, int gen);
DefectReport twisting_defect(const TwistingCochain& tc);

/* Conilpotence contract for the inductive constructions: exactly one stage-0
 * generator (the counit, degree 0), the differential strictly lowers stage,
 * both coproduct factors have strictly smaller stage. */
void validate_conilpotent(const DGCoalgebra& K);

/* The coalgebra map K -> B(M) equivalent to phi. */
MultiMap cochain_to_coalgebra_map(const TwistingCochain& tc, const TildeB& bar);
DefectReport check_cochain_map(const TwistingCochain& tc, const TildeB& bar,
                               const MultiMap& map);

struct TwistedTensorProduct {
    std::shared_ptr<const DGCoalgebra> K;
    std::shared_ptr<const AInfModule> P;
    ChainComplex complex;
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> pair_index;
    int valid_hi = 0;  // pair degrees through which the differential is exact
};

/* (K (x) P, d_phi) with the hat on the leading K factor; valid_hi bounds the
 * pair degrees for which every operation evaluation stays inside the tables
 * (truncated models and capped transferred structures). */
TwistedTensorProduct twisted_tensor(std::shared_ptr<const DGCoalgebra> K,
                                    std::shared_ptr<const AInfModule> P,
                                    const TwistingCochain& phi, int valid_hi);

DefectReport check_twisted_square(const TwistedTensorProduct& ttp);

/* Degree-0 map with vanishing stage-0 component. */
struct GaugeTransform {
    MultiMap c;  // arity 1, shift 0
};

/* (1+c) * phi = (1+c^)ated . phi . (1+c)^{-1} - (c d + d c) . (1+c)^{-1},
 * products read as convolution through the full coproduct. Target must be a
 * DGA-type structure with a unit. */
TwistingCochain gauge(const TwistingCochain& phi, const GaugeTransform& c);

struct TwistTransferResult {
    TwistingCochain phi_star;             // ~-twisting cochain into (H, {X})
    std::map<int, MultiMap> gauge_chain;  // stage -> c_n: K -> C
    MultiMap phi_infinity;                // stabilized gauge of phi, K -> C
    TwistingCochain f_star_phi_star;      // f* phi*, for the data equality
    DefectReport certificate;             // condition (a) + degreewise (c)
};

TwistTransferResult transfer_twisting(const TwistingCochain& phi, const TransferResult& t);

/* f* phi* = sum f_i (phi* x ... x phi*) Delta^i */
TwistingCochain f_star(const TwistingCochain& phi_star, const AInfMorphism& F);

/* The isomorphism connecting two transferred structures on the same homology:
 * words of the first feed the second through the twisting transfer; the
 * first component is the identity. */
AInfMorphism uniqueness_iso(const TransferResult& t1, const TransferResult& t2);

}  // namespace ainf
