#pragma once

#include "ainf/dg.hpp"

namespace ainf {

/* Ordered tuples (k_1,...,k_t) of positive integers with sum i, enumerated
 * lexicographically. */
std::vector<std::vector<int>> compositions(int t, int i);

/* All basis tuples of the given arity whose word degree (sum of internal
 * degrees + arity) has absolute value at most wcap. This is the common
 * domain for defect checkers and transfer tables. */
std::vector<std::vector<int>> admissible_tuples(const GradedBasis& b, int arity, int wcap);

/* Arity-indexed family m_i of internal shift i-2; absent arities are zero.
 * arity_cap and degree_cap delimit the tuple domain on which the structure
 * is constructed and certified. */
struct AInfAlgebra {
    Field field;
    BasisPtr basis;
    std::map<int, MultiMap> ops;
    int arity_cap = 0;
    int degree_cap = 0;
    int unit = -1;

    const MultiMap* op(int i) const;
    Element apply(int i, const std::vector<Element>& args) const;
    Element apply_tuple(int i, const std::vector<int>& tuple) const;
    MultiMap& op_slot(int i);  // creates the table on first use
    bool reduced() const;
};

struct AInfMorphism {
    std::shared_ptr<const AInfAlgebra> source, target;
    std::map<int, MultiMap> comps;  // f_i, internal shift i-1

    const MultiMap* comp(int i) const;
    Element apply(int i, const std::vector<Element>& args) const;
    MultiMap& comp_slot(int i);
};

struct AInfModule {
    std::shared_ptr<const AInfAlgebra> algebra;
    Field field;
    BasisPtr basis;
    std::map<int, MultiMap> ops;  // p_i on (x^{i-1} algebra) x module, shift i-2
    int arity_cap = 0;
    int degree_cap = 0;

    const MultiMap* op(int i) const;
    Element apply(int i, const std::vector<Element>& algebra_args, const Element& module_arg) const;
    MultiMap& op_slot(int i);
};

struct AInfModuleMorphism {
    AInfMorphism f;  // underlying algebra morphism
    std::shared_ptr<const AInfModule> source, target;
    std::map<int, MultiMap> comps;  // g_i, shift i-1

    const MultiMap* comp(int i) const;
    Element apply(int i, const std::vector<Element>& algebra_args, const Element& module_arg) const;
    MultiMap& comp_slot(int i);
};

/* The defining identity sums, evaluated with the hat signs on the first k
 * slots and the outer (-1)^k exactly as displayed; a zero defect on a tuple
 * means the identity holds there. */
Element stasheff_defect(const AInfAlgebra& A, const std::vector<int>& tuple);
Element morphism_defect(const AInfMorphism& F, const std::vector<int>& tuple);
Element module_defect(const AInfModule& P, const std::vector<int>& algebra_tuple, int module_gen);
Element module_morphism_defect(const AInfModuleMorphism& G, const std::vector<int>& algebra_tuple,
                               int module_gen);

/* Whole-domain sweeps over the caps. */
DefectReport check_stasheff(const AInfAlgebra& A);
DefectReport check_morphism(const AInfMorphism& F);
DefectReport check_module(const AInfModule& P);
DefectReport check_module_morphism(const AInfModuleMorphism& G);

/* DGA identified as an A(inf)-algebra: m1 = d, m2(a,b) = -(-1)^{deg a} a.b,
 * higher operations zero. */
std::shared_ptr<AInfAlgebra> dga_to_ainf(const DGAlgebra& a, int degree_cap, int arity_cap);
std::shared_ptr<AInfModule> dgmodule_to_ainf(const DGModule& m,
                                             std::shared_ptr<const AInfAlgebra> algebra);

AInfMorphism identity_morphism(std::shared_ptr<const AInfAlgebra> A);

/* Restriction to the generators of nonzero internal degree; errors when an
 * operation value meets the degree-0 part. */
std::shared_ptr<AInfAlgebra> reduced_subalgebra(const AInfAlgebra& A);

/* Default arity cap: equals the degree cap whenever words of bounded degree
 * have bounded length (reduced homological letters, or cohomological letters
 * of external degree >= 2); otherwise the model must supply one. */
std::optional<int> derive_arity_cap(const GradedBasis& b, int degree_cap);

std::string tuple_str(const GradedBasis& b, const std::vector<int>& tuple);

}  // namespace ainf
