#pragma once

#include "ainf/ainfinity.hpp"
#include "ainf/homology.hpp"

namespace ainf {

/* Every place the construction may choose a preimage freely: canonical zeroes
 * all free variables; shifted adds a fixed representative cycle on top, which
 * is an equally legal section and yields a genuinely different structure. */
enum class BoundingChoice { canonical, shifted };

struct TransferResult {
    std::shared_ptr<const DGAlgebra> C;
    std::shared_ptr<const HomologyData> h;
    std::shared_ptr<const AInfAlgebra> HX;      // (H(C), {X_i})
    std::shared_ptr<const AInfAlgebra> target;  // (C, {m1, m2, 0, ...})
    AInfMorphism f;                             // {f_i}: (H,{X}) -> (C,{m})
    int degree_cap = 0;
    int arity_cap = 0;
};

TransferResult transfer_algebra(std::shared_ptr<const DGAlgebra> C,
                                std::shared_ptr<const HomologyData> h, int degree_cap,
                                int arity_cap,
                                BoundingChoice choice = BoundingChoice::canonical);

/* The cycle whose class is X_n, rebuilt from the stored lower-arity data;
 * during construction its boundary is asserted to vanish. */
Element compute_U(const TransferResult& t, const std::vector<int>& tuple);

struct ModuleTransferResult {
    std::shared_ptr<const DGModule> D;
    std::shared_ptr<const HomologyData> hD;
    std::shared_ptr<const AInfModule> HY;       // (H(D), {Y_i}) over (H(C), {X_i})
    std::shared_ptr<const AInfModule> targetP;  // (D, {p1, p2, 0, ...})
    AInfModuleMorphism g;                       // ({f_i}, {g_i})
    int degree_cap = 0;
    int arity_cap = 0;
};

ModuleTransferResult transfer_module(const TransferResult& t, std::shared_ptr<const DGModule> D,
                                     std::shared_ptr<const HomologyData> hD, int degree_cap,
                                     int arity_cap,
                                     BoundingChoice choice = BoundingChoice::canonical);

Element compute_V(const ModuleTransferResult& mt, const std::vector<int>& algebra_tuple,
                  int module_gen);

/* X_3 as a Massey triple product; requires both adjacent products to vanish
 * in homology. */
Element massey_via_X3(const TransferResult& t, const Element& a, const Element& b,
                      const Element& c);

/* Independent textbook construction: choose bounding cochains u, v for the
 * two products directly and read off the representative; membership in the
 * coset (representative + indeterminacy) is decidable exactly. */
struct MasseyCoset {
    Element representative;              // class in H
    std::vector<Element> indeterminacy;  // spanning vectors of a.H + H.c
    bool contains(const Element& value, const Field& f) const;
};

MasseyCoset massey_oracle(const DGAlgebra& C, const HomologyData& h, const Element& a,
                          const Element& b, const Element& c);

/* Re-runs every certification on the instance: Stasheff and morphism sweeps,
 * the boundary identities of the construction, and the X2/Y2 anchors. */
DefectReport verify_transfer(const TransferResult& t);
DefectReport verify_module_transfer(const ModuleTransferResult& mt);

}  // namespace ainf
