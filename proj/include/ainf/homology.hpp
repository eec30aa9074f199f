#pragma once

#include "ainf/dg.hpp"
#include "ainf/matrix.hpp"

namespace ainf {

/* Per-degree homology of a chain complex with the three operators the
 * transfer constructions consume: the cycle-choosing map f1, the class
 * projection pi, and the bounding operator. All three are mutually
 * consistent and fully deterministic (echelon-canonical representatives,
 * free variables zeroed when bounding). */
class HomologyData {
public:
    HomologyData(const ChainComplex& c, int lo, int hi);

    const ChainComplex& complex() const { return complex_; }
    const BasisPtr& hbasis() const { return hbasis_; }
    const MultiMap& f1() const { return f1_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    int betti(int internal_degree) const;

    /* class of a cycle; errors when z is not a cycle */
    Element project(const Element& z) const;
    /* canonical y with dy = z; errors when z is not a cycle or its class is
     * nonzero */
    Element bound(const Element& z) const;

    Element f1_of(const Element& h) const { return f1_.eval1(h); }

    Vec to_coords(const Element& e) const;
    Element from_coords(int degree, const Vec& v) const;

private:
    ChainComplex complex_;
    int lo_, hi_;
    BasisPtr hbasis_;
    MultiMap f1_;

    struct DegreeSlice {
        std::vector<int> gens;          // complex generators of this degree, basis order
        std::map<int, int> gen_pos;     // generator index -> position
        std::vector<Vec> boundary_rref; // canonical basis of the boundary subspace
        std::vector<Vec> reps;          // canonical homology representatives
        std::vector<int> hclasses;      // homology basis indices for this degree
        std::optional<Matrix> d_from_above;  // d: C_{q+1} -> C_q in slice coordinates
        std::optional<Matrix> proj_solver;   // columns: boundary basis then reps
    };
    std::map<int, DegreeSlice> slices_;

    const DegreeSlice* slice(int degree) const;
    void require_cycle(const Element& z, const char* who) const;
};

HomologyData compute_homology(const ChainComplex& c, int lo, int hi);

}  // namespace ainf
