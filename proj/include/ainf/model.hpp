#pragma once

#include <memory>
#include <optional>

#include "ainf/dg.hpp"

namespace ainf {

/* A loaded model file: one coefficient field, one grading mode, and whichever
 * structures the file declares. Degrees are stored internally so that every
 * differential has degree -1; cohomologically presented files are negated on
 * load and restored on output. */
struct Model {
    std::string name;
    Field field = Field::Q();
    bool cohomological = false;
    int degree_cap = 0;                // external degrees
    std::optional<int> arity_cap;

    std::shared_ptr<DGAlgebra> algebra;
    std::shared_ptr<DGCoalgebra> coalgebra;
    std::shared_ptr<DGModule> module;
    bool module_is_self = false;       // module synthesized from the algebra
    std::optional<MultiMap> cochain;   // coalgebra -> algebra, arity 1, shift -1

    int internal_of_external(int d) const { return cohomological ? -d : d; }
    int external_of_internal(int d) const { return cohomological ? -d : d; }
};

/* Parse + fully validate (d^2, Leibniz, associativity, coassociativity,
 * coderivation through the model's own degree cap). */
Model load_model(const std::string& path);
Model load_model_text(const std::string& text, const std::string& origin,
                      std::optional<Field> field_override = std::nullopt,
                      std::optional<bool> cohomological_override = std::nullopt);

/* Canonical serialization; load_model_text(emit_model(m)) reproduces
 * identical structures, and emitting twice is byte-identical. */
std::string emit_model(const Model& m);

/* DG module structure of the algebra over itself (action = product). */
std::shared_ptr<DGModule> self_module(const std::shared_ptr<DGAlgebra>& a);

}  // namespace ainf
