#include "ainf/ainfinity.hpp"

#include <cstdlib>
#include <functional>

namespace ainf {

std::vector<std::vector<int>> compositions(int t, int i)
{
    std::vector<std::vector<int>> out;
    if (t < 1 || i < t)
        return out;
    std::vector<int> cur(static_cast<size_t>(t), 1);
    /* lexicographic enumeration: distribute i-t extra among t slots */
    std::function<void(int, int)> rec = [&](int slot, int left) {
        if (slot == t - 1) {
            cur[static_cast<size_t>(slot)] = 1 + left;
            out.push_back(cur);
            return;
        }
        for (int extra = 0; extra <= left; ++extra) {
            cur[static_cast<size_t>(slot)] = 1 + extra;
            rec(slot + 1, left - extra);
        }
    };
    rec(0, i - t);
    return out;
}

std::vector<std::vector<int>> admissible_tuples(const GradedBasis& b, int arity, int wcap)
{
    std::vector<std::vector<int>> out;
    int n = static_cast<int>(b.size());
    if (n == 0 || arity < 1)
        return out;
    bool all_nonneg = b.min_degree() >= 0;
    bool all_nonpos = b.max_degree() <= 0;
    std::vector<int> cur(static_cast<size_t>(arity));
    std::function<void(int, int)> rec = [&](int pos, int sum) {
        if (all_nonneg && sum + arity > wcap)
            return;
        if (all_nonpos && -sum > arity + wcap)
            return;
        if (pos == arity) {
            if (std::abs(sum + arity) <= wcap)
                out.push_back(cur);
            return;
        }
        for (int g = 0; g < n; ++g) {
            cur[static_cast<size_t>(pos)] = g;
            rec(pos + 1, sum + b.degree(g));
        }
    };
    rec(0, 0);
    return out;
}

std::string tuple_str(const GradedBasis& b, const std::vector<int>& tuple)
{
    std::string s = "(";
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i)
            s += ",";
        s += b.gen(tuple[i]).name;
    }
    return s + ")";
}

const MultiMap* AInfAlgebra::op(int i) const
{
    auto it = ops.find(i);
    return it == ops.end() ? nullptr : &it->second;
}

MultiMap& AInfAlgebra::op_slot(int i)
{
    auto it = ops.find(i);
    if (it == ops.end())
        it = ops.emplace(i, MultiMap(i, i - 2, std::vector<BasisPtr>(static_cast<size_t>(i), basis),
                                     basis))
                 .first;
    return it->second;
}

Element AInfAlgebra::apply(int i, const std::vector<Element>& args) const
{
    const MultiMap* m = op(i);
    if (m)
        return m->eval(args);
    int deg = i - 2;
    for (const auto& a : args)
        deg += a.degree();
    return Element::zero(deg);
}

Element AInfAlgebra::apply_tuple(int i, const std::vector<int>& tuple) const
{
    const MultiMap* m = op(i);
    if (m)
        return m->eval_tuple(tuple);
    int deg = i - 2;
    for (int g : tuple)
        deg += basis->degree(g);
    return Element::zero(deg);
}

bool AInfAlgebra::reduced() const
{
    for (size_t i = 0; i < basis->size(); ++i)
        if (basis->degree(static_cast<int>(i)) == 0)
            return false;
    return true;
}

const MultiMap* AInfMorphism::comp(int i) const
{
    auto it = comps.find(i);
    return it == comps.end() ? nullptr : &it->second;
}

MultiMap& AInfMorphism::comp_slot(int i)
{
    auto it = comps.find(i);
    if (it == comps.end())
        it = comps.emplace(i, MultiMap(i, i - 1,
                                       std::vector<BasisPtr>(static_cast<size_t>(i), source->basis),
                                       target->basis))
                 .first;
    return it->second;
}

Element AInfMorphism::apply(int i, const std::vector<Element>& args) const
{
    const MultiMap* m = comp(i);
    if (m)
        return m->eval(args);
    int deg = i - 1;
    for (const auto& a : args)
        deg += a.degree();
    return Element::zero(deg);
}

const MultiMap* AInfModule::op(int i) const
{
    auto it = ops.find(i);
    return it == ops.end() ? nullptr : &it->second;
}

MultiMap& AInfModule::op_slot(int i)
{
    auto it = ops.find(i);
    if (it == ops.end()) {
        std::vector<BasisPtr> src(static_cast<size_t>(i - 1), algebra->basis);
        src.push_back(basis);
        it = ops.emplace(i, MultiMap(i, i - 2, std::move(src), basis)).first;
    }
    return it->second;
}

Element AInfModule::apply(int i, const std::vector<Element>& algebra_args,
                          const Element& module_arg) const
{
    const MultiMap* m = op(i);
    if (m) {
        std::vector<Element> args = algebra_args;
        args.push_back(module_arg);
        return m->eval(args);
    }
    int deg = i - 2 + module_arg.degree();
    for (const auto& a : algebra_args)
        deg += a.degree();
    return Element::zero(deg);
}

const MultiMap* AInfModuleMorphism::comp(int i) const
{
    auto it = comps.find(i);
    return it == comps.end() ? nullptr : &it->second;
}

MultiMap& AInfModuleMorphism::comp_slot(int i)
{
    auto it = comps.find(i);
    if (it == comps.end()) {
        std::vector<BasisPtr> src(static_cast<size_t>(i - 1), source->algebra->basis);
        src.push_back(source->basis);
        it = comps.emplace(i, MultiMap(i, i - 1, std::move(src), target->basis)).first;
    }
    return it->second;
}

Element AInfModuleMorphism::apply(int i, const std::vector<Element>& algebra_args,
                                  const Element& module_arg) const
{
    const MultiMap* m = comp(i);
    if (m) {
        std::vector<Element> args = algebra_args;
        args.push_back(module_arg);
        return m->eval(args);
    }
    int deg = i - 1 + module_arg.degree();
    for (const auto& a : algebra_args)
        deg += a.degree();
    return Element::zero(deg);
}

namespace {

std::vector<Element> gens_as_elements(const GradedBasis& b, const std::vector<int>& tuple,
                                      const Field& f)
{
    std::vector<Element> out;
    out.reserve(tuple.size());
    for (int g : tuple)
        out.push_back(Element::generator(b, g, Scalar::one(f)));
    return out;
}

Element signed_term(Element term, int k)
{
    return k % 2 == 0 ? term : term.negated();
}

}  // namespace

Element stasheff_defect(const AInfAlgebra& A, const std::vector<int>& tuple)
{
    int i = static_cast<int>(tuple.size());
    std::vector<Element> args = gens_as_elements(*A.basis, tuple, A.field);
    int total = i - 3;
    for (const auto& a : args)
        total += a.degree();
    Element out(total);
    for (int k = 0; k <= i - 1; ++k) {
        for (int j = 1; j <= i - k; ++j) {
            std::vector<Element> inner_args(args.begin() + k, args.begin() + k + j);
            Element inner = A.apply(j, inner_args);
            std::vector<Element> outer;
            outer.reserve(static_cast<size_t>(i - j + 1));
            for (int s = 0; s < k; ++s)
                outer.push_back(koszul_hat(args[static_cast<size_t>(s)]));
            outer.push_back(inner);
            for (int s = k + j; s < i; ++s)
                outer.push_back(args[static_cast<size_t>(s)]);
            out = out + signed_term(A.apply(i - j + 1, outer), k);
        }
    }
    return out;
}

Element morphism_defect(const AInfMorphism& F, const std::vector<int>& tuple)
{
    const AInfAlgebra& M = *F.source;
    const AInfAlgebra& Mp = *F.target;
    int i = static_cast<int>(tuple.size());
    std::vector<Element> args = gens_as_elements(*M.basis, tuple, M.field);
    int total = i - 2;
    for (const auto& a : args)
        total += a.degree();
    Element out(total);
    for (int k = 0; k <= i - 1; ++k) {
        for (int j = 1; j <= i - k; ++j) {
            std::vector<Element> inner_args(args.begin() + k, args.begin() + k + j);
            Element inner = M.apply(j, inner_args);
            std::vector<Element> outer;
            for (int s = 0; s < k; ++s)
                outer.push_back(koszul_hat(args[static_cast<size_t>(s)]));
            outer.push_back(inner);
            for (int s = k + j; s < i; ++s)
                outer.push_back(args[static_cast<size_t>(s)]);
            out = out + signed_term(F.apply(i - j + 1, outer), k);
        }
    }
    for (int t = 1; t <= i; ++t) {
        for (const auto& parts : compositions(t, i)) {
            std::vector<Element> blocks;
            int at = 0;
            for (int p : parts) {
                std::vector<Element> block(args.begin() + at, args.begin() + at + p);
                blocks.push_back(F.apply(p, block));
                at += p;
            }
            out = out - Mp.apply(t, blocks);
        }
    }
    return out;
}

Element module_defect(const AInfModule& P, const std::vector<int>& algebra_tuple, int module_gen)
{
    const AInfAlgebra& M = *P.algebra;
    int i = static_cast<int>(algebra_tuple.size()) + 1;
    std::vector<Element> args = gens_as_elements(*M.basis, algebra_tuple, P.field);
    Element b = Element::generator(*P.basis, module_gen, Scalar::one(P.field));
    int total = i - 3 + b.degree();
    for (const auto& a : args)
        total += a.degree();
    Element out(total);
    for (int k = 0; k <= i - 2; ++k) {
        for (int j = 1; j <= i - k - 1; ++j) {
            std::vector<Element> inner_args(args.begin() + k, args.begin() + k + j);
            Element inner = M.apply(j, inner_args);
            std::vector<Element> outer;
            for (int s = 0; s < k; ++s)
                outer.push_back(koszul_hat(args[static_cast<size_t>(s)]));
            outer.push_back(inner);
            for (int s = k + j; s < i - 1; ++s)
                outer.push_back(args[static_cast<size_t>(s)]);
            out = out + signed_term(P.apply(i - j + 1, outer, b), k);
        }
    }
    for (int k = 0; k <= i - 1; ++k) {
        std::vector<Element> tail(args.begin() + k, args.end());
        Element inner = P.apply(i - k, tail, b);
        std::vector<Element> head;
        for (int s = 0; s < k; ++s)
            head.push_back(koszul_hat(args[static_cast<size_t>(s)]));
        out = out + signed_term(P.apply(k + 1, head, inner), k);
    }
    return out;
}

Element module_morphism_defect(const AInfModuleMorphism& G, const std::vector<int>& algebra_tuple,
                               int module_gen)
{
    const AInfModule& P = *G.source;
    const AInfModule& Pp = *G.target;
    const AInfAlgebra& M = *P.algebra;
    int i = static_cast<int>(algebra_tuple.size()) + 1;
    std::vector<Element> args = gens_as_elements(*M.basis, algebra_tuple, P.field);
    Element b = Element::generator(*P.basis, module_gen, Scalar::one(P.field));
    int total = i - 2 + b.degree();
    for (const auto& a : args)
        total += a.degree();
    Element out(total);
    /* source-side terms: inner m_j within the algebra letters, then inner
     * p_{i-k} consuming the tail together with b */
    for (int k = 0; k <= i - 2; ++k) {
        for (int j = 1; j <= i - k - 1; ++j) {
            std::vector<Element> inner_args(args.begin() + k, args.begin() + k + j);
            Element inner = M.apply(j, inner_args);
            std::vector<Element> outer;
            for (int s = 0; s < k; ++s)
                outer.push_back(koszul_hat(args[static_cast<size_t>(s)]));
            outer.push_back(inner);
            for (int s = k + j; s < i - 1; ++s)
                outer.push_back(args[static_cast<size_t>(s)]);
            out = out + signed_term(G.apply(i - j + 1, outer, b), k);
        }
    }
    for (int k = 0; k <= i - 1; ++k) {
        std::vector<Element> tail(args.begin() + k, args.end());
        Element inner = P.apply(i - k, tail, b);
        std::vector<Element> head;
        for (int s = 0; s < k; ++s)
            head.push_back(koszul_hat(args[static_cast<size_t>(s)]));
        out = out + signed_term(G.apply(k + 1, head, inner), k);
    }
    /* target side */
    for (int t = 1; t <= i; ++t) {
        for (const auto& parts : compositions(t, i)) {
            int kt = parts.back();
            std::vector<Element> blocks;
            int at = 0;
            for (size_t s = 0; s + 1 < parts.size(); ++s) {
                int p = parts[static_cast<size_t>(s)];
                std::vector<Element> block(args.begin() + at, args.begin() + at + p);
                blocks.push_back(G.f.apply(p, block));
                at += p;
            }
            std::vector<Element> tail(args.begin() + at, args.end());
            Element gblock = G.apply(kt, tail, b);
            out = out - Pp.apply(t, blocks, gblock);
        }
    }
    return out;
}

DefectReport check_stasheff(const AInfAlgebra& A)
{
    DefectReport rep;
    for (int i = 1; i <= A.arity_cap; ++i) {
        for (const auto& tuple : admissible_tuples(*A.basis, i, A.degree_cap)) {
            Element d = stasheff_defect(A, tuple);
            if (!d.is_zero())
                rep.add("stasheff[" + std::to_string(i) + "]", tuple_str(*A.basis, tuple),
                        d.str(*A.basis));
        }
    }
    return rep;
}

DefectReport check_morphism(const AInfMorphism& F)
{
    DefectReport rep;
    const AInfAlgebra& A = *F.source;
    for (int i = 1; i <= A.arity_cap; ++i) {
        for (const auto& tuple : admissible_tuples(*A.basis, i, A.degree_cap)) {
            Element d = morphism_defect(F, tuple);
            if (!d.is_zero())
                rep.add("morphism[" + std::to_string(i) + "]", tuple_str(*A.basis, tuple),
                        d.str(*F.target->basis));
        }
    }
    return rep;
}

namespace {

/* module tuple domain: |sum deg(a) + (i-1) + deg(b)| <= cap */
std::vector<std::pair<std::vector<int>, int>> module_tuples(const GradedBasis& ab,
                                                            const GradedBasis& pb, int i, int wcap)
{
    std::vector<std::pair<std::vector<int>, int>> out;
    for (size_t bg = 0; bg < pb.size(); ++bg) {
        int bdeg = pb.degree(static_cast<int>(bg));
        if (i == 1) {
            if (std::abs(bdeg) <= wcap)
                out.push_back({{}, static_cast<int>(bg)});
            continue;
        }
        for (const auto& tuple : admissible_tuples(ab, i - 1, wcap + std::abs(bdeg) + i)) {
            int sum = 0;
            for (int g : tuple)
                sum += ab.degree(g);
            if (std::abs(sum + (i - 1) + bdeg) <= wcap)
                out.push_back({tuple, static_cast<int>(bg)});
        }
    }
    return out;
}

}  // namespace

DefectReport check_module(const AInfModule& P)
{
    DefectReport rep;
    const GradedBasis& ab = *P.algebra->basis;
    for (int i = 1; i <= P.arity_cap; ++i) {
        for (const auto& [tuple, bg] : module_tuples(ab, *P.basis, i, P.degree_cap)) {
            Element d = module_defect(P, tuple, bg);
            if (!d.is_zero())
                rep.add("module[" + std::to_string(i) + "]",
                        tuple_str(ab, tuple) + "(x)" + P.basis->gen(bg).name, d.str(*P.basis));
        }
    }
    return rep;
}

DefectReport check_module_morphism(const AInfModuleMorphism& G)
{
    DefectReport rep;
    const AInfModule& P = *G.source;
    const GradedBasis& ab = *P.algebra->basis;
    for (int i = 1; i <= P.arity_cap; ++i) {
        for (const auto& [tuple, bg] : module_tuples(ab, *P.basis, i, P.degree_cap)) {
            Element d = module_morphism_defect(G, tuple, bg);
            if (!d.is_zero())
                rep.add("module-morphism[" + std::to_string(i) + "]",
                        tuple_str(ab, tuple) + "(x)" + P.basis->gen(bg).name,
                        d.str(*G.target->basis));
        }
    }
    return rep;
}

std::shared_ptr<AInfAlgebra> dga_to_ainf(const DGAlgebra& a, int degree_cap, int arity_cap)
{
    auto A = std::make_shared<AInfAlgebra>();
    A->field = a.complex.field;
    A->basis = a.complex.basis;
    A->degree_cap = degree_cap;
    A->arity_cap = arity_cap;
    A->unit = a.unit;
    if (!a.complex.d.is_zero())
        A->ops.emplace(1, a.complex.d);
    MultiMap m2(2, 0, {A->basis, A->basis}, A->basis);
    int n = static_cast<int>(A->basis->size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Element v = a.product.eval_tuple({i, j});
            if (v.is_zero())
                continue;
            int sign = -parity_sign(A->basis->degree(i));
            m2.set({i, j}, sign < 0 ? v.negated() : v);
        }
    A->ops.emplace(2, std::move(m2));
    return A;
}

std::shared_ptr<AInfModule> dgmodule_to_ainf(const DGModule& m,
                                             std::shared_ptr<const AInfAlgebra> algebra)
{
    auto P = std::make_shared<AInfModule>();
    P->algebra = std::move(algebra);
    P->field = m.complex.field;
    P->basis = m.complex.basis;
    P->degree_cap = P->algebra->degree_cap;
    P->arity_cap = P->algebra->arity_cap;
    if (!m.complex.d.is_zero())
        P->ops.emplace(1, m.complex.d);
    MultiMap p2(2, 0, {P->algebra->basis, P->basis}, P->basis);
    int na = static_cast<int>(P->algebra->basis->size());
    int np = static_cast<int>(P->basis->size());
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < np; ++j) {
            Element v = m.action.eval_tuple({i, j});
            if (v.is_zero())
                continue;
            int sign = -parity_sign(P->algebra->basis->degree(i));
            p2.set({i, j}, sign < 0 ? v.negated() : v);
        }
    P->ops.emplace(2, std::move(p2));
    return P;
}

AInfMorphism identity_morphism(std::shared_ptr<const AInfAlgebra> A)
{
    AInfMorphism f;
    f.source = A;
    f.target = A;
    f.comps.emplace(1, MultiMap::identity(A->basis, A->field));
    return f;
}

std::shared_ptr<AInfAlgebra> reduced_subalgebra(const AInfAlgebra& A)
{
    std::vector<Generator> gens;
    std::map<int, int> remap;
    for (size_t i = 0; i < A.basis->size(); ++i) {
        int gi = static_cast<int>(i);
        if (A.basis->degree(gi) == 0)
            continue;
        remap[gi] = static_cast<int>(gens.size());
        gens.push_back(A.basis->gen(gi));
    }
    auto out = std::make_shared<AInfAlgebra>();
    out->field = A.field;
    out->basis = std::make_shared<GradedBasis>(A.basis->name() + "~", gens, true);
    out->degree_cap = A.degree_cap;
    out->arity_cap = A.arity_cap;
    for (const auto& [i, op] : A.ops) {
        MultiMap& slot = out->op_slot(i);
        for (const auto& [tuple, value] : op.table()) {
            bool reduced = true;
            std::vector<int> nt;
            for (int g : tuple) {
                auto it = remap.find(g);
                if (it == remap.end()) {
                    reduced = false;
                    break;
                }
                nt.push_back(it->second);
            }
            if (!reduced)
                continue;
            Element nv(value.degree());
            for (const auto& [g, c] : value.terms()) {
                auto it = remap.find(g);
                if (it == remap.end())
                    throw validation_error(
                        "operation value meets degree 0; structure does not restrict to the "
                        "reduced part (tuple " +
                        tuple_str(*A.basis, tuple) + ")");
                nv.add_term(it->second, c);
            }
            slot.set(nt, nv);
        }
        if (slot.is_zero())
            out->ops.erase(i);
    }
    return out;
}

std::optional<int> derive_arity_cap(const GradedBasis& b, int degree_cap)
{
    bool has_pos = false, has_neg = false;
    for (size_t i = 0; i < b.size(); ++i) {
        int d = b.degree(static_cast<int>(i));
        if (d == 0)
            continue;  // unit part never enters words
        if (d == -1)
            return std::nullopt;  // weight-0 letters: word length unbounded per degree
        (d > 0 ? has_pos : has_neg) = true;
    }
    if (has_pos && has_neg)
        return std::nullopt;
    return degree_cap;
}

}  // namespace ainf
