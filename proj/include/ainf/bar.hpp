#pragma once

#include "ainf/ainfinity.hpp"

namespace ainf {

/* Tensor-coalgebra words over a reduced A(inf)-algebra, graded by
 * sum of letter degrees + length, carrying the differential d_m that packs
 * every m_j into contiguous blocks, and the splitting coproduct. The empty
 * word is generator 0. Enumeration covers |word degree| <= enum_cap and
 * length <= length_cap; d_m is stored for words whose image degree stays
 * within the enumerated window (min_wdeg_with_d marks the cutoff). */
struct TildeB {
    std::shared_ptr<const AInfAlgebra> source;
    DGCoalgebra coalg;  // stages = word length
    std::vector<std::vector<int>> words;
    std::map<std::vector<int>, int> index;
    int enum_cap = 0;
    int length_cap = 0;
    int min_wdeg_with_d = 0;
    /* absent when the length cap alone bounded enumeration (the word complex
     * is then a genuinely complete finite complex) */
    std::optional<std::pair<int, int>> window;

    int word_degree(const std::vector<int>& w) const;
    ChainComplex complex() const;
    std::string word_name(const std::vector<int>& w) const;
};

std::shared_ptr<TildeB> tilde_b(std::shared_ptr<const AInfAlgebra> A, int enum_cap,
                                int length_cap);

/* Word formula of a morphism: all ways of cutting a word into blocks, each
 * block fed to the matching component. Degree 0, commutes with d_m and the
 * coproduct when the morphism identities hold. */
MultiMap coalgebra_map_of_morphism(const AInfMorphism& F, const TildeB& src, const TildeB& dst);

DefectReport check_coalgebra_map(const MultiMap& map, const TildeB& src, const TildeB& dst);

/* Differential comodule structure on B(M) (x) P. */
struct BarComodule {
    std::shared_ptr<const TildeB> bar;
    std::shared_ptr<const AInfModule> module;
    ChainComplex complex;  // pair generators "(word).p"
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> pair_index;
    int min_pairdeg_with_d = 0;
};

std::shared_ptr<BarComodule> comodule_of_module(std::shared_ptr<const TildeB> bar,
                                                std::shared_ptr<const AInfModule> P);

MultiMap comodule_map_of_morphism(const AInfModuleMorphism& G, const BarComodule& src,
                                  const BarComodule& dst);

DefectReport check_comodule_map(const MultiMap& map, const BarComodule& src,
                                const BarComodule& dst);

/* d^2 = 0 sweeps (the word-complex formulations of the defining identities) */
DefectReport check_bar_differential(const TildeB& bar);
DefectReport check_comodule_differential(const BarComodule& cm);

}  // namespace ainf
