#include "ainf/transfer.hpp"

#include <cstdlib>

namespace ainf {

namespace {

Element gen_elt(const GradedBasis& b, int g, const Field& f)
{
    return Element::generator(b, g, Scalar::one(f));
}

/* U_n against arbitrary (possibly partially built) tables. */
Element U_of(const AInfAlgebra& HX, const AInfMorphism& f, const AInfAlgebra& target,
             const std::vector<int>& tuple)
{
    const GradedBasis& hb = *HX.basis;
    const Field& fld = HX.field;
    int n = static_cast<int>(tuple.size());
    int total = n - 2;
    for (int g : tuple)
        total += hb.degree(g);
    Element u(total);
    std::vector<Element> args;
    for (int g : tuple)
        args.push_back(gen_elt(hb, g, fld));

    for (int s = 1; s <= n - 1; ++s) {
        std::vector<Element> left(args.begin(), args.begin() + s);
        std::vector<Element> right(args.begin() + s, args.end());
        u = u + target.apply(2, {f.apply(s, left), f.apply(n - s, right)});
    }
    for (int k = 0; k <= n - 2; ++k) {
        for (int j = 2; j <= std::min(n - 1, n - k); ++j) {
            std::vector<Element> block(args.begin() + k, args.begin() + k + j);
            Element inner = HX.apply(j, block);
            std::vector<Element> outer;
            for (int s = 0; s < k; ++s)
                outer.push_back(koszul_hat(args[static_cast<size_t>(s)]));
            outer.push_back(inner);
            for (int s = k + j; s < n; ++s)
                outer.push_back(args[static_cast<size_t>(s)]);
            Element term = f.apply(n - j + 1, outer);
            u = u + (k % 2 == 0 ? term.negated() : term);  // sign (-1)^{k+1}
        }
    }
    return u;
}

/* V_n, with the index ranges fixed by the module-morphism identity. */
Element V_of(const AInfModule& HY, const AInfModuleMorphism& g, const AInfModule& targetP,
             const std::vector<int>& atuple, int pgen)
{
    const AInfAlgebra& HX = *HY.algebra;
    const GradedBasis& hb = *HX.basis;
    const Field& fld = HY.field;
    int n = static_cast<int>(atuple.size()) + 1;
    Element b = gen_elt(*HY.basis, pgen, fld);
    int total = n - 2 + b.degree();
    for (int gidx : atuple)
        total += hb.degree(gidx);
    Element v(total);
    std::vector<Element> args;
    for (int gidx : atuple)
        args.push_back(gen_elt(hb, gidx, fld));

    for (int s = 1; s <= n - 1; ++s) {
        std::vector<Element> left(args.begin(), args.begin() + s);
        std::vector<Element> right(args.begin() + s, args.end());
        Element fs = g.f.apply(s, left);
        Element gtail = g.apply(n - s, right, b);
        v = v + targetP.apply(2, {fs}, gtail);
    }
    for (int k = 0; k <= n - 3; ++k) {
        for (int j = 2; j <= n - k - 1; ++j) {
            std::vector<Element> block(args.begin() + k, args.begin() + k + j);
            Element inner = HX.apply(j, block);
            std::vector<Element> outer;
            for (int s = 0; s < k; ++s)
                outer.push_back(koszul_hat(args[static_cast<size_t>(s)]));
            outer.push_back(inner);
            for (int s = k + j; s < n - 1; ++s)
                outer.push_back(args[static_cast<size_t>(s)]);
            Element term = g.apply(n - j + 1, outer, b);
            v = v + (k % 2 == 0 ? term.negated() : term);  // (-1)^{k+1}
        }
    }
    for (int k = 1; k <= n - 2; ++k) {
        std::vector<Element> tail(args.begin() + k, args.end());
        Element inner = HY.apply(n - k, tail, b);
        std::vector<Element> head;
        for (int s = 0; s < k; ++s)
            head.push_back(koszul_hat(args[static_cast<size_t>(s)]));
        Element term = g.apply(k + 1, head, inner);
        v = v + (k % 2 == 0 ? term.negated() : term);  // (-1)^{k+1}
    }
    return v;
}

/* A deterministic nonzero cycle of the given degree, used by the shifted
 * bounding choice; zero when the degree has no homology. */
Element shift_cycle(const HomologyData& h, int degree)
{
    const GradedBasis& hb = *h.hbasis();
    for (size_t i = 0; i < hb.size(); ++i)
        if (hb.degree(static_cast<int>(i)) == degree)
            return h.f1_of(Element::generator(hb, static_cast<int>(i),
                                              Scalar::one(h.complex().field)));
    return Element::zero(degree);
}

}  // namespace

TransferResult transfer_algebra(std::shared_ptr<const DGAlgebra> C,
                                std::shared_ptr<const HomologyData> h, int degree_cap,
                                int arity_cap, BoundingChoice choice)
{
    if (arity_cap > degree_cap)
        throw cap_error("arity cap " + std::to_string(arity_cap) +
                        " exceeds degree cap " + std::to_string(degree_cap) +
                        "; the tuple domain would not be closed under sub-blocks");
    TransferResult t;
    t.C = C;
    t.h = h;
    t.degree_cap = degree_cap;
    t.arity_cap = arity_cap;
    t.target = dga_to_ainf(*C, degree_cap, arity_cap);

    auto HX = std::make_shared<AInfAlgebra>();
    HX->field = C->complex.field;
    HX->basis = h->hbasis();
    HX->degree_cap = degree_cap;
    HX->arity_cap = arity_cap;
    HX->unit = C->unit >= 0 ? [&] {
        /* class of the unit cycle, when it survives to homology */
        Element cls = h->project(gen_elt(C->basis(), C->unit, C->complex.field));
        return cls.terms().size() == 1 && cls.terms().begin()->second.is_one()
                   ? cls.terms().begin()->first
                   : -1;
    }()
                             : -1;

    AInfMorphism f;
    f.source = HX;
    f.target = t.target;
    f.comps.emplace(1, h->f1());

    for (int n = 2; n <= arity_cap; ++n) {
        MultiMap& Xn = HX->op_slot(n);
        MultiMap& fn = f.comp_slot(n);
        for (const auto& tuple : admissible_tuples(*HX->basis, n, degree_cap)) {
            Element u = U_of(*HX, f, *t.target, tuple);
            if (!C->complex.d.eval1(u).is_zero())
                throw consistency_error("transfer: boundary of U_" + std::to_string(n) +
                                        " is nonzero at " + tuple_str(*HX->basis, tuple));
            Element cls = h->project(u);
            if (!cls.is_zero())
                Xn.set(tuple, cls);
            Element rhs = h->f1_of(cls) - u;
            Element fv = rhs.is_zero() ? Element::zero(u.degree() + 1) : h->bound(rhs);
            if (choice == BoundingChoice::shifted)
                fv = fv + shift_cycle(*h, u.degree() + 1);
            if (!fv.is_zero())
                fn.set(tuple, fv);
        }
        if (Xn.is_zero())
            HX->ops.erase(n);
        if (fn.is_zero())
            f.comps.erase(n);
    }
    t.HX = HX;
    t.f = std::move(f);
    return t;
}

Element compute_U(const TransferResult& t, const std::vector<int>& tuple)
{
    return U_of(*t.HX, t.f, *t.target, tuple);
}

ModuleTransferResult transfer_module(const TransferResult& t, std::shared_ptr<const DGModule> D,
                                     std::shared_ptr<const HomologyData> hD, int degree_cap,
                                     int arity_cap, BoundingChoice choice)
{
    if (arity_cap > degree_cap)
        throw cap_error("arity cap exceeds degree cap in module transfer");
    ModuleTransferResult mt;
    mt.D = D;
    mt.hD = hD;
    mt.degree_cap = degree_cap;
    mt.arity_cap = arity_cap;
    mt.targetP = dgmodule_to_ainf(*D, t.target);

    auto HY = std::make_shared<AInfModule>();
    HY->algebra = t.HX;
    HY->field = D->complex.field;
    HY->basis = hD->hbasis();
    HY->degree_cap = degree_cap;
    HY->arity_cap = arity_cap;

    AInfModuleMorphism g;
    g.f = t.f;
    g.source = HY;
    g.target = mt.targetP;
    g.comps.emplace(1, hD->f1());

    const GradedBasis& hb = *t.HX->basis;
    for (int n = 2; n <= arity_cap; ++n) {
        MultiMap& Yn = HY->op_slot(n);
        MultiMap& gn = g.comp_slot(n);
        for (size_t bg = 0; bg < HY->basis->size(); ++bg) {
            int bdeg = HY->basis->degree(static_cast<int>(bg));
            for (const auto& atuple : admissible_tuples(hb, n - 1,
                                                        t.degree_cap + std::abs(bdeg) + n)) {
                int sum = bdeg + n - 1;
                for (int gidx : atuple)
                    sum += hb.degree(gidx);
                if (std::abs(sum) > degree_cap)
                    continue;
                Element v = V_of(*HY, g, *mt.targetP, atuple, static_cast<int>(bg));
                if (!D->complex.d.eval1(v).is_zero())
                    throw consistency_error("module transfer: boundary of V_" +
                                            std::to_string(n) + " is nonzero at " +
                                            tuple_str(hb, atuple) + "(x)" +
                                            HY->basis->gen(static_cast<int>(bg)).name);
                Element cls = hD->project(v);
                std::vector<int> key = atuple;
                key.push_back(static_cast<int>(bg));
                if (!cls.is_zero())
                    Yn.set(key, cls);
                Element rhs = hD->f1_of(cls) - v;
                Element gv = rhs.is_zero() ? Element::zero(v.degree() + 1) : hD->bound(rhs);
                if (choice == BoundingChoice::shifted)
                    gv = gv + shift_cycle(*hD, v.degree() + 1);
                if (!gv.is_zero())
                    gn.set(key, gv);
            }
        }
        if (Yn.is_zero())
            HY->ops.erase(n);
        if (gn.is_zero())
            g.comps.erase(n);
    }
    mt.HY = HY;
    mt.g = std::move(g);
    return mt;
}

Element compute_V(const ModuleTransferResult& mt, const std::vector<int>& algebra_tuple,
                  int module_gen)
{
    return V_of(*mt.HY, mt.g, *mt.targetP, algebra_tuple, module_gen);
}

Element massey_via_X3(const TransferResult& t, const Element& a, const Element& b,
                      const Element& c)
{
    Element ab = t.HX->apply(2, {a, b});
    if (!ab.is_zero())
        throw validation_error("massey: X_2(a,b) is nonzero (" + ab.str(*t.HX->basis) + ")");
    Element bc = t.HX->apply(2, {b, c});
    if (!bc.is_zero())
        throw validation_error("massey: X_2(b,c) is nonzero (" + bc.str(*t.HX->basis) + ")");
    return t.HX->apply(3, {a, b, c});
}

bool MasseyCoset::contains(const Element& value, const Field& f) const
{
    Element diff = value - representative;
    if (diff.is_zero())
        return true;
    /* coordinates over every generator appearing anywhere */
    std::vector<int> support;
    auto note = [&support](const Element& e) {
        for (const auto& [g, c] : e.terms())
            support.push_back(g);
    };
    note(diff);
    for (const auto& e : indeterminacy)
        note(e);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::map<int, size_t> pos;
    for (size_t i = 0; i < support.size(); ++i)
        pos[support[i]] = i;
    Matrix m(support.size(), indeterminacy.size(), f);
    for (size_t j = 0; j < indeterminacy.size(); ++j)
        for (const auto& [g, c] : indeterminacy[j].terms())
            m.at(pos.at(g), j) = c;
    Vec rhs = vec_zero(support.size(), f);
    for (const auto& [g, c] : diff.terms())
        rhs[pos.at(g)] = c;
    return solve_particular(m, rhs).has_value();
}

MasseyCoset massey_oracle(const DGAlgebra& C, const HomologyData& h, const Element& a,
                          const Element& b, const Element& c)
{
    const Field& f = C.complex.field;
    Element A = h.f1_of(a), B = h.f1_of(b), Cc = h.f1_of(c);
    Element ab = C.product.eval({A, B});
    Element bc = C.product.eval({B, Cc});
    if (!h.project(ab).is_zero())
        throw validation_error("massey oracle: the product a.b does not bound");
    if (!h.project(bc).is_zero())
        throw validation_error("massey oracle: the product b.c does not bound");
    int sa = parity_sign(a.degree());
    int sb = parity_sign(b.degree());
    /* du = (-1)^{deg a} A.B, dv = (-1)^{deg b} B.C */
    Element u = h.bound(sa < 0 ? ab.negated() : ab);
    Element v = h.bound(sb < 0 ? bc.negated() : bc);
    /* representative: -(-1)^{deg a} [A.v] + (-1)^{deg a + deg b} [u.C] */
    Element z = C.product.eval({A, v}).scaled(Scalar::from_int(-sa, f)) +
                C.product.eval({u, Cc}).scaled(Scalar::from_int(sa * sb, f));
    MasseyCoset coset;
    coset.representative = h.project(z);
    /* indeterminacy a.H + H.c in the representative's degree */
    const GradedBasis& hb = *h.hbasis();
    for (size_t i = 0; i < hb.size(); ++i) {
        int gi = static_cast<int>(i);
        Element x = Element::generator(hb, gi, Scalar::one(f));
        if (hb.degree(gi) == b.degree() + c.degree() + 1) {
            Element prod = h.project(C.product.eval({A, h.f1_of(x)}));
            if (!prod.is_zero())
                coset.indeterminacy.push_back(prod);
        }
        if (hb.degree(gi) == a.degree() + b.degree() + 1) {
            Element prod = h.project(C.product.eval({h.f1_of(x), Cc}));
            if (!prod.is_zero())
                coset.indeterminacy.push_back(prod);
        }
    }
    return coset;
}

DefectReport verify_transfer(const TransferResult& t)
{
    DefectReport rep = check_stasheff(*t.HX);
    rep.merge(check_morphism(t.f));
    const GradedBasis& hb = *t.HX->basis;
    const Field& f = t.HX->field;

    if (t.HX->op(1))
        rep.add("X1=0", "arity 1", "X_1 table is nonempty");

    /* pi . f1 = id */
    for (size_t i = 0; i < hb.size(); ++i) {
        Element x = Element::generator(hb, static_cast<int>(i), Scalar::one(f));
        Element back = t.h->project(t.h->f1_of(x));
        if (!(back == x))
            rep.add("pi.f1=id", hb.gen(static_cast<int>(i)).name, back.str(hb));
    }

    /* X2 anchor against the homology product, and eq. (3) plus dU = 0 */
    for (int n = 2; n <= t.arity_cap; ++n) {
        for (const auto& tuple : admissible_tuples(hb, n, t.degree_cap)) {
            if (n == 2) {
                Element prod = t.h->project(
                    t.C->product.eval({t.h->f1_of(gen_elt(hb, tuple[0], f)),
                                       t.h->f1_of(gen_elt(hb, tuple[1], f))}));
                Element want = parity_sign(hb.degree(tuple[0])) < 0 ? prod : prod.negated();
                Element got = t.HX->apply_tuple(2, tuple);
                if (!(got == want))
                    rep.add("X2-anchor", tuple_str(hb, tuple), got.str(hb));
            }
            Element u = compute_U(t, tuple);
            Element du = t.C->complex.d.eval1(u);
            if (!du.is_zero())
                rep.add("dU=0", tuple_str(hb, tuple), du.str(t.C->basis()));
            Element lhs = t.C->complex.d.eval1(t.f.apply(
                n, [&] {
                    std::vector<Element> args;
                    for (int g : tuple)
                        args.push_back(gen_elt(hb, g, f));
                    return args;
                }()));
            Element rhs = t.h->f1_of(t.HX->apply_tuple(n, tuple)) - u;
            if (!(lhs == rhs))
                rep.add("m1.fn=f1.Xn-Un", tuple_str(hb, tuple), (lhs - rhs).str(t.C->basis()));
        }
    }
    return rep;
}

DefectReport verify_module_transfer(const ModuleTransferResult& mt)
{
    DefectReport rep = check_module(*mt.HY);
    rep.merge(check_module_morphism(mt.g));
    const GradedBasis& hb = *mt.HY->algebra->basis;
    const GradedBasis& pb = *mt.HY->basis;
    const Field& f = mt.HY->field;

    if (mt.HY->op(1))
        rep.add("Y1=0", "arity 1", "Y_1 table is nonempty");

    for (size_t i = 0; i < pb.size(); ++i) {
        Element x = Element::generator(pb, static_cast<int>(i), Scalar::one(f));
        Element back = mt.hD->project(mt.hD->f1_of(x));
        if (!(back == x))
            rep.add("pi.g1=id", pb.gen(static_cast<int>(i)).name, back.str(pb));
    }

    /* Y2 anchor, dV = 0, and the bounding identity d g_n = g1 Y_n - V_n */
    for (int n = 2; n <= mt.arity_cap; ++n) {
        for (size_t bg = 0; bg < pb.size(); ++bg) {
            int bdeg = pb.degree(static_cast<int>(bg));
            Element belt = Element::generator(pb, static_cast<int>(bg), Scalar::one(f));
            for (const auto& atuple :
                 admissible_tuples(hb, n - 1, mt.degree_cap + std::abs(bdeg) + n)) {
                int sum = bdeg + n - 1;
                for (int gidx : atuple)
                    sum += hb.degree(gidx);
                if (std::abs(sum) > mt.degree_cap)
                    continue;
                std::vector<Element> aargs;
                for (int gidx : atuple)
                    aargs.push_back(gen_elt(hb, gidx, f));
                if (n == 2) {
                    Element prod = mt.hD->project(
                        mt.D->action.eval({mt.g.f.apply(1, {aargs[0]}), mt.hD->f1_of(belt)}));
                    Element want = parity_sign(hb.degree(atuple[0])) < 0 ? prod : prod.negated();
                    Element got = mt.HY->apply(2, aargs, belt);
                    if (!(got == want))
                        rep.add("Y2-anchor", tuple_str(hb, atuple) + "(x)" +
                                                 pb.gen(static_cast<int>(bg)).name,
                                got.str(pb));
                }
                Element v = compute_V(mt, atuple, static_cast<int>(bg));
                Element dv = mt.D->complex.d.eval1(v);
                if (!dv.is_zero())
                    rep.add("dV=0", tuple_str(hb, atuple) + "(x)" +
                                        pb.gen(static_cast<int>(bg)).name,
                            dv.str(*mt.D->complex.basis));
                Element lhs = mt.D->complex.d.eval1(mt.g.apply(n, aargs, belt));
                Element rhs = mt.hD->f1_of(mt.HY->apply(n, aargs, belt)) - v;
                if (!(lhs == rhs))
                    rep.add("p1.gn=g1.Yn-Vn", tuple_str(hb, atuple) + "(x)" +
                                                  pb.gen(static_cast<int>(bg)).name,
                            (lhs - rhs).str(*mt.D->complex.basis));
            }
        }
    }
    return rep;
}

}  // namespace ainf
