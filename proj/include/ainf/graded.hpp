#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ainf/scalar.hpp"

namespace ainf {

/* Internally every complex is graded so that the differential has degree -1.
 * Cohomologically presented models are loaded with negated degrees and
 * presented back with the sign restored, so internal degrees may be negative.
 * Signs only ever depend on degree parity, which negation preserves. */

struct Generator {
    std::string name;
    int degree = 0;
};

class GradedBasis {
public:
    GradedBasis() = default;
    GradedBasis(std::string name, std::vector<Generator> gens, bool reduced = false);

    const std::string& name() const { return name_; }
    size_t size() const { return gens_.size(); }
    const Generator& gen(int i) const { return gens_[static_cast<size_t>(i)]; }
    int degree(int i) const { return gens_[static_cast<size_t>(i)].degree; }
    bool reduced() const { return reduced_; }

    /* -1 when absent */
    int index_of(const std::string& name) const;
    int require(const std::string& name) const;

    std::vector<int> indices_of_degree(int d) const;
    int min_degree() const;
    int max_degree() const;

    bool same_as(const GradedBasis& o) const;

private:
    std::string name_;
    std::vector<Generator> gens_;
    std::map<std::string, int> index_;
    bool reduced_ = false;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

/* Homogeneous element: a degree plus finitely many generator terms. The zero
 * element of any degree has an empty term map; zero coefficients are never
 * stored. */
class Element {
public:
    Element() = default;
    explicit Element(int degree) : degree_(degree) {}
    static Element generator(const GradedBasis& b, int idx, const Scalar& coeff);
    static Element zero(int degree) { return Element(degree); }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Scalar>& terms() const { return terms_; }

    void add_term(int gen, const Scalar& c);
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element scaled(const Scalar& s) const;
    Element negated() const;
    bool operator==(const Element& o) const;

    std::string str(const GradedBasis& b) const;

private:
    int degree_ = 0;
    std::map<int, Scalar> terms_;
};

/* (-1)^{deg e} e */
Element koszul_hat(const Element& e);
int parity_sign(int degree);

/* Degree-homogeneous k-linear operation stored by its values on basis
 * tuples; absent tuples are zero and evaluation extends multilinearly. */
class MultiMap {
public:
    MultiMap() = default;
    MultiMap(int arity, int shift, std::vector<BasisPtr> sources, BasisPtr target);
    static MultiMap unary(int shift, BasisPtr source, BasisPtr target);
    static MultiMap identity(BasisPtr basis, const Field& f);

    int arity() const { return arity_; }
    int shift() const { return shift_; }
    const BasisPtr& source(int slot) const { return sources_[static_cast<size_t>(slot)]; }
    const BasisPtr& target() const { return target_; }
    bool is_zero() const { return table_.empty(); }

    void set(const std::vector<int>& tuple, const Element& value);
    Element eval_tuple(const std::vector<int>& tuple) const;
    Element eval(const std::vector<Element>& args) const;
    Element eval1(const Element& arg) const;

    const std::map<std::vector<int>, Element>& table() const { return table_; }

    bool operator==(const MultiMap& o) const;

private:
    int arity_ = 1;
    int shift_ = 0;
    std::vector<BasisPtr> sources_;
    BasisPtr target_;
    std::map<std::vector<int>, Element> table_;

    int tuple_degree(const std::vector<int>& tuple) const;
};

}  // namespace ainf
