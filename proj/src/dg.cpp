#include "ainf/dg.hpp"

#include <cstdlib>

namespace ainf {

std::string DefectReport::str() const
{
    if (defects.empty())
        return "no defects";
    std::string s;
    for (const auto& d : defects) {
        s += d.check + " @ " + d.witness + ": " + d.value + "\n";
    }
    return s;
}

void DGCoalgebra::default_stages()
{
    stages.resize(basis->size());
    for (size_t i = 0; i < basis->size(); ++i)
        stages[i] = basis->degree(static_cast<int>(i));
}

void pair_sum_add(PairSum& s, int l, int r, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto key = std::make_pair(l, r);
    auto it = s.find(key);
    if (it == s.end()) {
        s.emplace(key, c);
        return;
    }
    Scalar v = it->second + c;
    if (v.is_zero())
        s.erase(it);
    else
        it->second = v;
}

void tuple_sum_add(TupleSum& s, const std::vector<int>& t, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = s.find(t);
    if (it == s.end()) {
        s.emplace(t, c);
        return;
    }
    Scalar v = it->second + c;
    if (v.is_zero())
        s.erase(it);
    else
        it->second = v;
}

TupleSum iterated_coproduct(const DGCoalgebra& K, int i, int gen)
{
    if (i < 1)
        throw validation_error("iterated coproduct needs i >= 1");
    TupleSum out;
    if (i == 1) {
        out.emplace(std::vector<int>{gen}, Scalar::one(K.field));
        return out;
    }
    auto it = K.coproduct.find(gen);
    if (it == K.coproduct.end())
        return out;  // primitive generator
    for (const auto& [l, r, c] : it->second) {
        TupleSum rest = iterated_coproduct(K, i - 1, r);
        for (const auto& [t, rc] : rest) {
            std::vector<int> full;
            full.reserve(t.size() + 1);
            full.push_back(l);
            full.insert(full.end(), t.begin(), t.end());
            tuple_sum_add(out, full, c * rc);
        }
    }
    return out;
}

DefectReport check_dg(const ChainComplex& c, int cap)
{
    DefectReport rep;
    const GradedBasis& b = *c.basis;
    for (size_t i = 0; i < b.size(); ++i) {
        int gi = static_cast<int>(i);
        if (std::abs(b.degree(gi)) > cap)
            continue;
        if (!c.degree_complete(b.degree(gi) - 1) || !c.degree_complete(b.degree(gi) - 2))
            continue;
        Element dd = c.d.eval1(c.d.eval_tuple({gi}));
        if (!dd.is_zero())
            rep.add("d^2=0", b.gen(gi).name, dd.str(b));
    }
    return rep;
}

DefectReport check_dg(const DGAlgebra& a, int cap)
{
    DefectReport rep = check_dg(a.complex, cap);
    const GradedBasis& b = a.basis();
    const MultiMap& d = a.complex.d;
    const MultiMap& mul = a.product;
    int n = static_cast<int>(b.size());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int dij = b.degree(i) + b.degree(j);
            if (std::abs(dij) > cap)
                continue;
            /* Leibniz: d(ab) = da.b + (-1)^{deg a} a.db */
            Element lhs = d.eval1(mul.eval_tuple({i, j}));
            Element rhs = mul.eval({d.eval_tuple({i}), Element::generator(b, j, Scalar::one(a.complex.field))}) +
                          mul.eval({koszul_hat(Element::generator(b, i, Scalar::one(a.complex.field))),
                                    d.eval_tuple({j})});
            Element defect = lhs - rhs;
            if (!defect.is_zero())
                rep.add("leibniz", "(" + b.gen(i).name + "," + b.gen(j).name + ")", defect.str(b));
            for (int k = 0; k < n; ++k) {
                if (std::abs(dij + b.degree(k)) > cap)
                    continue;
                Element left = mul.eval({mul.eval_tuple({i, j}),
                                         Element::generator(b, k, Scalar::one(a.complex.field))});
                Element right = mul.eval({Element::generator(b, i, Scalar::one(a.complex.field)),
                                          mul.eval_tuple({j, k})});
                Element as = left - right;
                if (!as.is_zero())
                    rep.add("associativity",
                            "(" + b.gen(i).name + "," + b.gen(j).name + "," + b.gen(k).name + ")",
                            as.str(b));
            }
        }
    }
    return rep;
}

DefectReport check_dg(const DGCoalgebra& k, int cap)
{
    DefectReport rep;
    const GradedBasis& b = *k.basis;
    ChainComplex cc{k.field, k.basis, k.d, std::nullopt};
    rep.merge(check_dg(cc, cap));
    for (const auto& [g, terms] : k.coproduct) {
        if (std::abs(b.degree(g)) > cap)
            continue;
        for (const auto& [l, r, c] : terms) {
            if (b.degree(l) + b.degree(r) != b.degree(g))
                rep.add("coproduct-degree", b.gen(g).name,
                        b.gen(l).name + "(x)" + b.gen(r).name);
        }
        /* coassociativity: (reduced x id) o reduced == (id x reduced) o reduced */
        TupleSum left, right;
        for (const auto& [l, r, c] : terms) {
            auto lit = k.coproduct.find(l);
            if (lit != k.coproduct.end())
                for (const auto& [l2, r2, c2] : lit->second)
                    tuple_sum_add(left, {l2, r2, r}, c * c2);
            auto rit = k.coproduct.find(r);
            if (rit != k.coproduct.end())
                for (const auto& [l2, r2, c2] : rit->second)
                    tuple_sum_add(right, {l, l2, r2}, c * c2);
        }
        for (const auto& [t, c] : right) {
            Scalar neg = -c;
            tuple_sum_add(left, t, neg);
        }
        if (!left.empty())
            rep.add("coassociativity", b.gen(g).name, std::to_string(left.size()) + " term(s)");
        /* coderivation: reduced(d g) == sum d(l)(x)r + (-1)^{deg l} l(x)d(r) */
        PairSum want;
        Element dg = k.d.eval_tuple({g});
        for (const auto& [dgen, dc] : dg.terms()) {
            auto dit = k.coproduct.find(dgen);
            if (dit == k.coproduct.end())
                continue;
            for (const auto& [l, r, c] : dit->second)
                pair_sum_add(want, l, r, dc * c);
        }
        for (const auto& [l, r, c] : terms) {
            Element dl = k.d.eval_tuple({l});
            for (const auto& [gl, cl] : dl.terms())
                pair_sum_add(want, gl, r, -(c * cl));
            Element dr = k.d.eval_tuple({r});
            int sgn = parity_sign(b.degree(l));
            for (const auto& [gr, cr] : dr.terms()) {
                Scalar v = c * cr;
                pair_sum_add(want, l, gr, sgn < 0 ? v : -v);
            }
        }
        if (!want.empty())
            rep.add("coderivation", b.gen(g).name, std::to_string(want.size()) + " term(s)");
    }
    return rep;
}

DefectReport check_dg(const DGModule& m, int cap)
{
    DefectReport rep = check_dg(m.complex, cap);
    const GradedBasis& pb = m.basis();
    const GradedBasis& ab = m.algebra->basis();
    const MultiMap& dp = m.complex.d;
    const MultiMap& da = m.algebra->complex.d;
    const MultiMap& mul = m.algebra->product;
    Field f = m.algebra->complex.field;
    int na = static_cast<int>(ab.size());
    int np = static_cast<int>(pb.size());
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < np; ++j) {
            int dij = ab.degree(i) + pb.degree(j);
            if (std::abs(dij) > cap)
                continue;
            Element lhs = dp.eval1(m.action.eval_tuple({i, j}));
            Element rhs =
                m.action.eval({da.eval_tuple({i}), Element::generator(pb, j, Scalar::one(f))}) +
                m.action.eval({koszul_hat(Element::generator(ab, i, Scalar::one(f))),
                               dp.eval_tuple({j})});
            Element defect = lhs - rhs;
            if (!defect.is_zero())
                rep.add("module-leibniz", "(" + ab.gen(i).name + "," + pb.gen(j).name + ")",
                        defect.str(pb));
            for (int a2 = 0; a2 < na; ++a2) {
                if (std::abs(ab.degree(a2) + dij) > cap)
                    continue;
                Element left = m.action.eval({mul.eval_tuple({a2, i}),
                                              Element::generator(pb, j, Scalar::one(f))});
                Element right = m.action.eval({Element::generator(ab, a2, Scalar::one(f)),
                                               m.action.eval_tuple({i, j})});
                Element as = left - right;
                if (!as.is_zero())
                    rep.add("action-associativity",
                            "(" + ab.gen(a2).name + "," + ab.gen(i).name + "," + pb.gen(j).name +
                                ")",
                            as.str(pb));
            }
        }
    }
    return rep;
}

}  // namespace ainf
