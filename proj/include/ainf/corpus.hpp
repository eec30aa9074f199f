#pragma once

#include "ainf/model.hpp"

namespace ainf::corpus {

/* Built-in example models. The files under models/ are generated from these
 * builders (see tools/make_corpus.cpp), so the shipped corpus and the test
 * fixtures cannot drift apart. */

/* Exterior model of the Heisenberg nilmanifold: generators e1,e2,e3 of
 * degree 1 with d(e3) = e1 e2, cohomologically graded. */
Model heisenberg();

/* Formal 2-torus: exterior algebra on a1, a2, zero differential. */
Model torus();

/* One cohomology generator in degree 3, zero differential. */
Model s3_cohomology();

/* Truncated polynomial cohomology of the 2-sphere: x with x^2 = 0. */
Model s2_cohomology();

/* Hopf fibration data: base cells c0, c2; fiber algebra on t of degree 1
 * (zero differential) acting on itself; twisting cochain c2 -> t. */
Model hopf();

/* Cell coalgebra of a CP^2-type space (c0, c2, c4 with reduced coproduct
 * c4 -> c2 x c2) together with its loop algebra: generators u (degree 1),
 * v (degree 3), d v = -u u, basis all words through max_degree, and the
 * universal twisting cochain c2 -> u, c4 -> v. */
Model cp2_cobar(int max_degree = 8);

std::vector<Model> all();

}  // namespace ainf::corpus
