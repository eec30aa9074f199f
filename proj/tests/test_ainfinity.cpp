#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ainf/ainfinity.hpp"
#include "ainf/corpus.hpp"

using namespace ainf;

namespace {

const Field Q = Field::Q();
Scalar qi(long v) { return Scalar::from_int(v, Q); }

}  // namespace

TEST_CASE("compositions S(t,i) in lexicographic order")
{
    CHECK(compositions(1, 3) == std::vector<std::vector<int>>{{3}});
    CHECK(compositions(2, 3) == std::vector<std::vector<int>>{{1, 2}, {2, 1}});
    CHECK(compositions(3, 3) == std::vector<std::vector<int>>{{1, 1, 1}});
    CHECK(compositions(2, 4) == std::vector<std::vector<int>>{{1, 3}, {2, 2}, {3, 1}});
    CHECK(compositions(4, 3).empty());
    /* total count over t is 2^{i-1} */
    int total = 0;
    for (int t = 1; t <= 6; ++t)
        total += static_cast<int>(compositions(t, 6).size());
    CHECK(total == 32);
}

TEST_CASE("dga_to_ainf: identification signs and Stasheff closure")
{
    Model h = corpus::heisenberg();
    auto A = dga_to_ainf(*h.algebra, 8, 4);
    const GradedBasis& b = *A->basis;

    /* m1 = d */
    CHECK(A->apply_tuple(1, {b.require("e3")}) ==
          Element::generator(b, b.require("e1e2"), qi(1)));

    /* degree-1 generators a, b with a.b = c give m2(a,b) = +c: the sign
     * -(-1)^{deg a} unwinds twice */
    CHECK(A->apply_tuple(2, {b.require("e1"), b.require("e2")}) ==
          Element::generator(b, b.require("e1e2"), qi(1)));
    CHECK(A->apply_tuple(2, {b.require("1"), b.require("e2")}) ==
          Element::generator(b, b.require("e2"), qi(-1)));

    /* DGA axioms make every Stasheff defect vanish (arities <= 3 are the
     * only candidates; sweep through the caps anyway) */
    CHECK(check_stasheff(*A).empty());

    /* arity-1 defect is m1 m1 */
    Element d1 = stasheff_defect(*A, {b.require("e1e2e3")});
    CHECK(d1.is_zero());
}

TEST_CASE("stasheff_defect flags a broken structure")
{
    Model h = corpus::heisenberg();
    auto A = dga_to_ainf(*h.algebra, 8, 3);
    const GradedBasis& b = *A->basis;
    /* corrupt associativity: redefine m2(e1,e2) only */
    A->op_slot(2).set({b.require("e1"), b.require("e2")},
                      Element::generator(b, b.require("e1e2"), qi(2)));
    DefectReport rep = check_stasheff(*A);
    CHECK(!rep.empty());
}

TEST_CASE("identity morphism has zero defect; chain-map case at arity 1")
{
    Model h = corpus::heisenberg();
    auto A = dga_to_ainf(*h.algebra, 8, 3);
    AInfMorphism id = identity_morphism(A);
    CHECK(check_morphism(id).empty());

    /* i=1 defect is f1 m1 - m1 f1 */
    const GradedBasis& b = *A->basis;
    Element d = morphism_defect(id, {b.require("e3")});
    CHECK(d.is_zero());
}

TEST_CASE("module defects: DG module over the cobar algebra")
{
    Model c = corpus::cp2_cobar();
    auto A = dga_to_ainf(*c.algebra, 6, 6);
    auto P = dgmodule_to_ainf(*c.module, A);
    CHECK(check_module(*P).empty());

    const GradedBasis& pb = *P->basis;
    /* i=1: p1 p1 = 0 */
    CHECK(module_defect(*P, {}, pb.require("uv")).is_zero());

    AInfModuleMorphism id;
    id.f = identity_morphism(A);
    id.source = P;
    id.target = P;
    id.comps.emplace(1, MultiMap::identity(P->basis, P->field));
    CHECK(check_module_morphism(id).empty());
}

TEST_CASE("reduced subalgebra drops the unit part and keeps closure")
{
    Model h = corpus::heisenberg();
    auto A = dga_to_ainf(*h.algebra, 8, 3);
    auto R = reduced_subalgebra(*A);
    CHECK(R->basis->size() == 7);
    CHECK(R->basis->index_of("1") < 0);
    CHECK(R->reduced());
    CHECK(check_stasheff(*R).empty());
    const GradedBasis& rb = *R->basis;
    CHECK(R->apply_tuple(2, {rb.require("e1"), rb.require("e2")}) ==
          Element::generator(rb, rb.require("e1e2"), qi(1)));
}

TEST_CASE("derive_arity_cap")
{
    Model h = corpus::hopf();
    CHECK(derive_arity_cap(*h.algebra->complex.basis, 8) == 8);  // homological letters
    Model s = corpus::s3_cohomology();
    CHECK(derive_arity_cap(*s.algebra->complex.basis, 8) == 8);  // external degree 3
    Model he = corpus::heisenberg();
    CHECK(!derive_arity_cap(*he.algebra->complex.basis, 8).has_value());  // degree-1 letters
}

TEST_CASE("admissible tuple domain respects the word-degree window")
{
    Model h = corpus::heisenberg();
    auto A = dga_to_ainf(*h.algebra, 8, 3);
    for (const auto& t : admissible_tuples(*A->basis, 3, 8)) {
        int sum = 0;
        for (int g : t)
            sum += A->basis->degree(g);
        CHECK(std::abs(sum + 3) <= 8);
    }
    /* all 8^3 tuples pass for this model (degrees within [-3,0]) */
    CHECK(admissible_tuples(*A->basis, 3, 8).size() == 512);
}
