#pragma once

#include <optional>
#include <tuple>

#include "ainf/graded.hpp"

namespace ainf {

struct Defect {
    std::string check;
    std::string witness;
    std::string value;
};

struct DefectReport {
    std::vector<Defect> defects;
    bool empty() const { return defects.empty(); }
    void add(std::string check, std::string witness, std::string value)
    {
        defects.push_back(Defect{std::move(check), std::move(witness), std::move(value)});
    }
    void merge(const DefectReport& o)
    {
        defects.insert(defects.end(), o.defects.begin(), o.defects.end());
    }
    std::string str() const;
};

/* Complex with differential of internal degree -1. complete_range, when
 * present, is the closed interval of internal degrees on which the basis and
 * differential are fully represented (used by truncated word complexes);
 * absent means the complex is finite and complete. */
struct ChainComplex {
    Field field;
    BasisPtr basis;
    MultiMap d;  // arity 1, shift -1
    std::optional<std::pair<int, int>> complete_range;

    bool degree_complete(int q) const
    {
        if (!complete_range)
            return true;
        return q >= complete_range->first && q <= complete_range->second;
    }
};

struct DGAlgebra {
    ChainComplex complex;
    MultiMap product;  // arity 2, shift 0
    int unit = -1;     // basis index of the unit, -1 if not declared

    const GradedBasis& basis() const { return *complex.basis; }
};

/* Reduced coproduct stored as generator -> sum of (left, right, coeff);
 * the unit/counit summands of the full coproduct are implicit. */
struct DGCoalgebra {
    Field field;
    BasisPtr basis;
    MultiMap d;  // arity 1, shift -1
    std::map<int, std::vector<std::tuple<int, int, Scalar>>> coproduct;
    /* Stage function for inductive constructions: the differential strictly
     * lowers it and both tensor factors of the reduced coproduct have
     * strictly smaller stage. Defaults to the internal degree; word
     * coalgebras use the word length. */
    std::vector<int> stages;

    int stage(int gen) const { return stages[static_cast<size_t>(gen)]; }
    void default_stages();
};

struct DGModule {
    ChainComplex complex;  // the module P
    std::shared_ptr<const DGAlgebra> algebra;
    MultiMap action;  // arity 2 (algebra x module), shift 0

    const GradedBasis& basis() const { return *complex.basis; }
};

/* Formal sums used by coproduct computations. */
using PairSum = std::map<std::pair<int, int>, Scalar>;
using TupleSum = std::map<std::vector<int>, Scalar>;

void pair_sum_add(PairSum& s, int l, int r, const Scalar& c);
void tuple_sum_add(TupleSum& s, const std::vector<int>& t, const Scalar& c);

/* Full reduced iterated diagonal: i = 1 is the identity, i >= 2 applies the
 * reduced coproduct recursively via (id x Delta^{i-1}) Delta. */
TupleSum iterated_coproduct(const DGCoalgebra& K, int i, int gen);

/* Identity checks (d^2, Leibniz, associativity, coassociativity,
 * coderivation). Violations are report content; |total internal degree| of
 * every witnessing tuple is bounded by cap. */
DefectReport check_dg(const ChainComplex& c, int cap);
DefectReport check_dg(const DGAlgebra& a, int cap);
DefectReport check_dg(const DGCoalgebra& k, int cap);
DefectReport check_dg(const DGModule& m, int cap);

}  // namespace ainf
