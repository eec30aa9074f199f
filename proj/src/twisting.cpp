#include "ainf/twisting.hpp"

#include <algorithm>
#include <cstdlib>

namespace ainf {

namespace {

int max_stage(const DGCoalgebra& K)
{
    int m = 0;
    for (size_t i = 0; i < K.basis->size(); ++i)
        m = std::max(m, K.stage(static_cast<int>(i)));
    return m;
}

int counit_generator(const DGCoalgebra& K)
{
    int unit = -1;
    for (size_t i = 0; i < K.basis->size(); ++i) {
        if (K.stage(static_cast<int>(i)) == 0) {
            if (unit >= 0)
                throw validation_error("coalgebra has more than one stage-0 generator");
            unit = static_cast<int>(i);
        }
    }
    if (unit < 0)
        throw validation_error("coalgebra has no counit generator");
    return unit;
}

/* Plain product of a DGA-type A(inf)-algebra, unwound from m2. */
MultiMap plain_product_of(const AInfAlgebra& A)
{
    for (const auto& [i, op] : A.ops)
        if (i >= 3 && !op.is_zero())
            throw validation_error("convolution needs a strict DGA target (operations beyond "
                                   "arity 2 present)");
    MultiMap prod(2, 0, {A.basis, A.basis}, A.basis);
    if (const MultiMap* m2 = A.op(2)) {
        for (const auto& [tuple, value] : m2->table()) {
            int sign = -parity_sign(A.basis->degree(tuple[0]));
            prod.set(tuple, sign < 0 ? value.negated() : value);
        }
    }
    return prod;
}

/* Convolution calculus for unary maps K -> C through the full coproduct of a
 * connected K (full Delta = unit (x) k + k (x) unit + reduced). */
struct ConvCtx {
    const DGCoalgebra& K;
    const AInfAlgebra& C;
    MultiMap product;  // plain product
    int kunit;

    explicit ConvCtx(const DGCoalgebra& k, const AInfAlgebra& c)
        : K(k), C(c), product(plain_product_of(c)), kunit(counit_generator(k))
    {
        if (c.unit < 0)
            throw validation_error("convolution needs a unital target algebra");
    }

    Element unit_of_target() const
    {
        return Element::generator(*C.basis, C.unit, Scalar::one(C.field));
    }

    MultiMap conv_unit() const
    {
        MultiMap e = MultiMap::unary(0, K.basis, C.basis);
        e.set({kunit}, unit_of_target());
        return e;
    }

    MultiMap conv(const MultiMap& u, const MultiMap& v) const
    {
        MultiMap out = MultiMap::unary(u.shift() + v.shift(), K.basis, C.basis);
        for (size_t i = 0; i < K.basis->size(); ++i) {
            int g = static_cast<int>(i);
            Element acc(K.basis->degree(g) + u.shift() + v.shift());
            if (g == kunit) {
                acc = acc + product.eval({u.eval_tuple({g}), v.eval_tuple({g})});
            } else {
                acc = acc + product.eval({u.eval_tuple({kunit}), v.eval_tuple({g})});
                acc = acc + product.eval({u.eval_tuple({g}), v.eval_tuple({kunit})});
                auto it = K.coproduct.find(g);
                if (it != K.coproduct.end())
                    for (const auto& [l, r, c] : it->second)
                        acc = acc +
                              product.eval({u.eval_tuple({l}), v.eval_tuple({r})}).scaled(c);
            }
            if (!acc.is_zero())
                out.set({g}, acc);
        }
        return out;
    }

    /* inverse of e + c for c vanishing at the counit: geometric series */
    MultiMap conv_inverse(const MultiMap& g) const
    {
        MultiMap e = conv_unit();
        MultiMap cpart = MultiMap::unary(0, K.basis, C.basis);
        for (size_t i = 0; i < K.basis->size(); ++i) {
            int gi = static_cast<int>(i);
            Element v = g.eval_tuple({gi});
            if (gi == kunit) {
                Element diff = v - unit_of_target();
                if (!diff.is_zero())
                    throw validation_error("convolution inverse: map is not 1 at the counit");
                continue;
            }
            if (!v.is_zero())
                cpart.set({gi}, v);
        }
        MultiMap out = e;
        MultiMap term = cpart;
        int sign = -1;
        int guard = max_stage(K) + 2;
        while (!term.is_zero() && guard-- > 0) {
            for (const auto& [tuple, value] : term.table()) {
                Element cur = out.eval_tuple(tuple);
                Element next = sign < 0 ? cur - value : cur + value;
                out.set(tuple, next);
            }
            term = conv(cpart, term);
            sign = -sign;
        }
        if (!term.is_zero())
            throw consistency_error("convolution inverse did not terminate");
        return out;
    }

    MultiMap hat_target(const MultiMap& u) const
    {
        MultiMap out = MultiMap::unary(u.shift(), K.basis, C.basis);
        for (const auto& [tuple, value] : u.table())
            out.set(tuple, koszul_hat(value));
        return out;
    }

    MultiMap add(const MultiMap& u, const MultiMap& v) const
    {
        MultiMap out = MultiMap::unary(u.shift(), K.basis, C.basis);
        for (size_t i = 0; i < K.basis->size(); ++i) {
            int g = static_cast<int>(i);
            Element s = u.eval_tuple({g}) + v.eval_tuple({g});
            if (!s.is_zero())
                out.set({g}, s);
        }
        return out;
    }

    MultiMap sub(const MultiMap& u, const MultiMap& v) const
    {
        MultiMap out = MultiMap::unary(u.shift(), K.basis, C.basis);
        for (size_t i = 0; i < K.basis->size(); ++i) {
            int g = static_cast<int>(i);
            Element s = u.eval_tuple({g}) - v.eval_tuple({g});
            if (!s.is_zero())
                out.set({g}, s);
        }
        return out;
    }

    /* u composed with the coalgebra differential, and the target differential
     * composed with u */
    MultiMap pre_d(const MultiMap& u) const
    {
        MultiMap out = MultiMap::unary(u.shift() - 1, K.basis, C.basis);
        for (size_t i = 0; i < K.basis->size(); ++i) {
            int g = static_cast<int>(i);
            Element v = u.eval1(K.d.eval_tuple({g}));
            if (!v.is_zero())
                out.set({g}, v);
        }
        return out;
    }

    MultiMap post_d(const MultiMap& u) const
    {
        MultiMap out = MultiMap::unary(u.shift() - 1, K.basis, C.basis);
        for (const auto& [tuple, value] : u.table()) {
            Element v = C.apply(1, {value});
            if (!v.is_zero())
                out.set(tuple, v);
        }
        return out;
    }

    /* the gauge action (1+c) * phi */
    MultiMap gauge_map(const MultiMap& phi, const MultiMap& c) const
    {
        MultiMap e = conv_unit();
        MultiMap one_plus_c = add(e, c);
        MultiMap inv = conv_inverse(one_plus_c);
        MultiMap one_plus_chat = add(e, hat_target(c));
        MultiMap lhs = conv(conv(one_plus_chat, phi), inv);
        MultiMap correction = conv(add(pre_d(c), post_d(c)), inv);
        return sub(lhs, correction);
    }
};

Element phi_values_product(const TwistingCochain& tc, const std::vector<int>& tuple, int arity)
{
    std::vector<Element> args;
    args.reserve(tuple.size());
    for (int g : tuple)
        args.push_back(tc.phi.eval_tuple({g}));
    return tc.target->apply(arity, args);
}

}  // namespace

void validate_conilpotent(const DGCoalgebra& K)
{
    int unit = counit_generator(K);
    if (K.basis->degree(unit) != 0)
        throw validation_error("counit generator must have degree 0");
    for (size_t i = 0; i < K.basis->size(); ++i) {
        int g = static_cast<int>(i);
        Element dg = K.d.eval_tuple({g});
        for (const auto& [tg, c] : dg.terms())
            if (K.stage(tg) >= K.stage(g))
                throw validation_error("differential does not lower the stage at '" +
                                       K.basis->gen(g).name + "'");
        auto it = K.coproduct.find(g);
        if (it == K.coproduct.end())
            continue;
        for (const auto& [l, r, c] : it->second)
            if (K.stage(l) >= K.stage(g) || K.stage(r) >= K.stage(g))
                throw validation_error("coproduct factor does not lower the stage at '" +
                                       K.basis->gen(g).name + "'");
    }
}

Element twisting_defect_at(const TwistingCochain& tc, int gen)
{
    const DGCoalgebra& K = *tc.K;
    Element out = tc.phi.eval1(K.d.eval_tuple({gen}));
    int bound = K.stage(gen) + 1;
    for (int i = 1; i <= bound; ++i) {
        TupleSum parts = iterated_coproduct(K, i, gen);
        if (parts.empty())
            break;
        for (const auto& [tuple, coeff] : parts) {
            Element term = phi_values_product(tc, tuple, i);
            if (!term.is_zero())
                out = out - term.scaled(coeff);
        }
    }
    return out;
}

DefectReport twisting_defect(const TwistingCochain& tc)
{
    DefectReport rep;
    for (size_t i = 0; i < tc.K->basis->size(); ++i) {
        Element d = twisting_defect_at(tc, static_cast<int>(i));
        if (!d.is_zero())
            rep.add("twisting", tc.K->basis->gen(static_cast<int>(i)).name,
                    d.str(*tc.target->basis));
    }
    return rep;
}

MultiMap cochain_to_coalgebra_map(const TwistingCochain& tc, const TildeB& bar)
{
    const DGCoalgebra& K = *tc.K;
    const Field& f = K.field;
    const GradedBasis& cb = *tc.target->basis;
    const GradedBasis& letters = *bar.source->basis;
    MultiMap map = MultiMap::unary(0, K.basis, bar.coalg.basis);
    int unit = counit_generator(K);
    for (size_t gi = 0; gi < K.basis->size(); ++gi) {
        int g = static_cast<int>(gi);
        Element out(K.basis->degree(g));
        if (g == unit) {
            out.add_term(bar.index.at({}), Scalar::one(f));
            map.set({g}, out);
            continue;
        }
        std::map<std::vector<int>, Scalar> words;
        int bound = K.stage(g) + 1;
        for (int i = 1; i <= bound; ++i) {
            TupleSum parts = iterated_coproduct(K, i, g);
            if (parts.empty())
                break;
            for (const auto& [tuple, coeff] : parts) {
                /* each phi value becomes one letter; expand sums */
                std::vector<std::pair<std::vector<int>, Scalar>> acc = {{{}, coeff}};
                for (int kgen : tuple) {
                    Element v = tc.phi.eval_tuple({kgen});
                    std::vector<std::pair<std::vector<int>, Scalar>> next;
                    for (const auto& [w, wc] : acc)
                        for (const auto& [tgen, tc2] : v.terms()) {
                            int letter = letters.index_of(cb.gen(tgen).name);
                            if (letter < 0)
                                throw validation_error(
                                    "cochain image meets degree 0; not a reduced letter");
                            std::vector<int> nw = w;
                            nw.push_back(letter);
                            next.push_back({nw, wc * tc2});
                        }
                    acc = std::move(next);
                }
                for (const auto& [w, wc] : acc) {
                    auto it = bar.index.find(w);
                    if (it == bar.index.end())
                        throw cap_error("cochain word map leaves the enumerated window");
                    auto wit = words.find(w);
                    if (wit == words.end())
                        words.emplace(w, wc);
                    else {
                        Scalar s = wit->second + wc;
                        if (s.is_zero())
                            words.erase(wit);
                        else
                            wit->second = s;
                    }
                }
            }
        }
        for (const auto& [w, wc] : words)
            out.add_term(bar.index.at(w), wc);
        if (!out.is_zero())
            map.set({g}, out);
    }
    return map;
}

DefectReport check_cochain_map(const TwistingCochain& tc, const TildeB& bar, const MultiMap& map)
{
    DefectReport rep;
    const DGCoalgebra& K = *tc.K;
    for (size_t gi = 0; gi < K.basis->size(); ++gi) {
        int g = static_cast<int>(gi);
        if (K.basis->degree(g) < bar.min_wdeg_with_d)
            continue;
        Element lhs = map.eval1(K.d.eval_tuple({g}));
        Element rhs = bar.coalg.d.eval1(map.eval_tuple({g}));
        Element diff = lhs - rhs;
        if (!diff.is_zero())
            rep.add("cochain-map-chain", K.basis->gen(g).name, diff.str(*bar.coalg.basis));
    }
    return rep;
}

TwistedTensorProduct twisted_tensor(std::shared_ptr<const DGCoalgebra> K,
                                    std::shared_ptr<const AInfModule> P,
                                    const TwistingCochain& phi, int valid_hi)
{
    if (!phi.target->basis->same_as(*P->algebra->basis))
        throw validation_error("twisted tensor: the cochain target and the module algebra "
                               "differ");
    if (!phi.K->basis->same_as(*K->basis))
        throw validation_error("twisted tensor: cochain source differs from the coalgebra");
    validate_conilpotent(*K);
    int kunit = counit_generator(*K);

    TwistedTensorProduct ttp;
    ttp.K = K;
    ttp.P = P;
    ttp.valid_hi = valid_hi;
    const GradedBasis& kb = *K->basis;
    const GradedBasis& pb = *P->basis;
    const Field& f = P->field;

    std::vector<Generator> gens;
    for (size_t ki = 0; ki < kb.size(); ++ki)
        for (size_t pi = 0; pi < pb.size(); ++pi) {
            ttp.pair_index[{static_cast<int>(ki), static_cast<int>(pi)}] =
                static_cast<int>(gens.size());
            ttp.pairs.push_back({static_cast<int>(ki), static_cast<int>(pi)});
            gens.push_back(Generator{kb.gen(static_cast<int>(ki)).name + "." +
                                         pb.gen(static_cast<int>(pi)).name,
                                     kb.degree(static_cast<int>(ki)) +
                                         pb.degree(static_cast<int>(pi))});
        }
    auto basis = std::make_shared<GradedBasis>(kb.name() + "." + pb.name(), gens);
    MultiMap D = MultiMap::unary(-1, basis, basis);

    for (size_t idx = 0; idx < ttp.pairs.size(); ++idx) {
        auto [ki, pi] = ttp.pairs[idx];
        int pairdeg = basis->degree(static_cast<int>(idx));
        if (pairdeg > valid_hi)
            continue;
        Element out(pairdeg - 1);
        Element belt = Element::generator(pb, pi, Scalar::one(f));
        /* d (x) id */
        Element dk = K->d.eval_tuple({ki});
        for (const auto& [kg, kc] : dk.terms())
            out.add_term(ttp.pair_index.at({kg, pi}), kc);
        /* i = 1: hat(id) (x) p1 */
        Element p1 = P->apply(1, {}, belt);
        int hat = parity_sign(kb.degree(ki));
        for (const auto& [pg, pc] : p1.terms())
            out.add_term(ttp.pair_index.at({ki, pg}), hat < 0 ? -pc : pc);
        /* i >= 2: leading factor is the counit part or a reduced factor */
        auto add_block = [&](int first, const TupleSum& mids, const Scalar& scale) {
            int sgn = parity_sign(kb.degree(first));
            for (const auto& [tuple, coeff] : mids) {
                std::vector<Element> args;
                args.reserve(tuple.size());
                for (int kgen : tuple)
                    args.push_back(phi.phi.eval_tuple({kgen}));
                Element inner = P->apply(static_cast<int>(tuple.size()) + 1, args, belt);
                if (inner.is_zero())
                    continue;
                Scalar cc = coeff * scale;
                for (const auto& [pg, pc] : inner.terms()) {
                    Scalar v = pc * cc;
                    out.add_term(ttp.pair_index.at({first, pg}), sgn < 0 ? -v : v);
                }
            }
        };
        int bound = K->stage(ki) + 1;
        for (int i = 2; i <= bound + 1; ++i) {
            TupleSum mids = iterated_coproduct(*K, i - 1, ki);
            if (mids.empty() && i > 2)
                break;
            if (ki != kunit)
                add_block(kunit, mids, Scalar::one(f));
            auto it = K->coproduct.find(ki);
            if (it != K->coproduct.end())
                for (const auto& [l, r, c] : it->second)
                    add_block(l, iterated_coproduct(*K, i - 1, r), c);
        }
        if (!out.is_zero())
            D.set({static_cast<int>(idx)}, out);
    }
    int lo = basis->size() ? basis->min_degree() : 0;
    ttp.complex = ChainComplex{f, basis, D, std::make_pair(lo - 2, valid_hi)};
    return ttp;
}

DefectReport check_twisted_square(const TwistedTensorProduct& ttp)
{
    DefectReport rep;
    const GradedBasis& b = *ttp.complex.basis;
    for (size_t i = 0; i < b.size(); ++i) {
        int g = static_cast<int>(i);
        if (b.degree(g) > ttp.valid_hi)
            continue;
        Element dd = ttp.complex.d.eval1(ttp.complex.d.eval_tuple({g}));
        if (!dd.is_zero())
            rep.add("twisted-d^2", b.gen(g).name, dd.str(b));
    }
    return rep;
}

TwistingCochain gauge(const TwistingCochain& phi, const GaugeTransform& c)
{
    validate_conilpotent(*phi.K);
    ConvCtx ctx(*phi.K, *phi.target);
    /* the stage-0 component of c must vanish */
    if (!c.c.eval_tuple({ctx.kunit}).is_zero())
        throw validation_error("gauge transform must vanish at the counit");
    TwistingCochain out = phi;
    out.phi = ctx.gauge_map(phi.phi, c.c);
    return out;
}

TwistingCochain f_star(const TwistingCochain& phi_star, const AInfMorphism& F)
{
    if (!phi_star.target->basis->same_as(*F.source->basis))
        throw validation_error("f*: cochain target differs from the morphism source");
    const DGCoalgebra& K = *phi_star.K;
    MultiMap out = MultiMap::unary(-1, K.basis, F.target->basis);
    for (size_t gi = 0; gi < K.basis->size(); ++gi) {
        int g = static_cast<int>(gi);
        Element acc(K.basis->degree(g) - 1);
        int bound = K.stage(g) + 1;
        for (int t = 1; t <= bound; ++t) {
            TupleSum parts = iterated_coproduct(K, t, g);
            if (parts.empty())
                break;
            for (const auto& [tuple, coeff] : parts) {
                std::vector<Element> args;
                for (int kgen : tuple)
                    args.push_back(phi_star.phi.eval_tuple({kgen}));
                Element term = F.apply(t, args);
                if (!term.is_zero())
                    acc = acc + term.scaled(coeff);
            }
        }
        if (!acc.is_zero())
            out.set({g}, acc);
    }
    TwistingCochain res;
    res.K = phi_star.K;
    res.target = F.target;
    res.phi = std::move(out);
    return res;
}

TwistTransferResult transfer_twisting(const TwistingCochain& phi, const TransferResult& t)
{
    if (!phi.target->basis->same_as(*t.target->basis))
        throw validation_error("twisting transfer: the cochain does not land in the algebra "
                               "of the transfer");
    const DGCoalgebra& K = *phi.K;
    validate_conilpotent(K);
    ConvCtx ctx(K, *phi.target);
    if (!phi.phi.eval_tuple({ctx.kunit}).is_zero())
        throw validation_error("twisting cochain must vanish at the counit");

    TwistTransferResult res;
    MultiMap cur = phi.phi;
    MultiMap phi_star = MultiMap::unary(-1, K.basis, t.HX->basis);
    MultiMap phi_inf = MultiMap::unary(-1, K.basis, t.target->basis);

    std::vector<int> stages;
    for (size_t i = 0; i < K.basis->size(); ++i)
        if (K.stage(static_cast<int>(i)) > 0)
            stages.push_back(K.stage(static_cast<int>(i)));
    std::sort(stages.begin(), stages.end());
    stages.erase(std::unique(stages.begin(), stages.end()), stages.end());

    for (int n : stages) {
        MultiMap cn = MultiMap::unary(0, K.basis, t.target->basis);
        for (size_t gi = 0; gi < K.basis->size(); ++gi) {
            int g = static_cast<int>(gi);
            if (K.stage(g) != n)
                continue;
            Element w = cur.eval_tuple({g});
            for (int tt = 2; tt <= n + 1; ++tt) {
                TupleSum parts = iterated_coproduct(K, tt, g);
                if (parts.empty())
                    break;
                for (const auto& [tuple, coeff] : parts) {
                    std::vector<Element> args;
                    for (int kgen : tuple)
                        args.push_back(phi_star.eval_tuple({kgen}));
                    Element term = t.f.apply(tt, args);
                    if (!term.is_zero())
                        w = w - term.scaled(coeff);
                }
            }
            if (!t.C->complex.d.eval1(w).is_zero())
                throw consistency_error("twisting transfer: boundary of W is nonzero at '" +
                                        K.basis->gen(g).name + "'");
            Element cls = t.h->project(w);
            if (!cls.is_zero())
                phi_star.set({g}, cls);
            Element rhs = w - t.h->f1_of(cls);
            if (!rhs.is_zero())
                cn.set({g}, t.h->bound(rhs));
        }
        if (!cn.is_zero()) {
            res.gauge_chain.emplace(n, cn);
            cur = ctx.gauge_map(cur, cn);
        }
        for (size_t gi = 0; gi < K.basis->size(); ++gi) {
            int g = static_cast<int>(gi);
            if (K.stage(g) != n)
                continue;
            Element v = cur.eval_tuple({g});
            if (!v.is_zero())
                phi_inf.set({g}, v);
        }
    }

    res.phi_star = TwistingCochain{phi.K, t.HX, phi_star};
    res.phi_infinity = phi_inf;
    res.f_star_phi_star = f_star(res.phi_star, t.f);

    /* condition (a): the ~-twisting identity for phi*; condition (c): the
     * gauge stabilization agrees with f* phi* generator by generator */
    res.certificate = twisting_defect(res.phi_star);
    for (size_t gi = 0; gi < K.basis->size(); ++gi) {
        int g = static_cast<int>(gi);
        Element diff = res.f_star_phi_star.phi.eval_tuple({g}) - phi_inf.eval_tuple({g});
        if (!diff.is_zero())
            res.certificate.add("f*phi*=phi^inf", K.basis->gen(g).name,
                                diff.str(*t.target->basis));
    }
    return res;
}

AInfMorphism uniqueness_iso(const TransferResult& t1, const TransferResult& t2)
{
    if (!t1.h->hbasis()->same_as(*t2.h->hbasis()))
        throw validation_error("uniqueness: the transfers use different homology bases; "
                               "rebase first");
    auto H1r = reduced_subalgebra(*t1.HX);
    auto H2r = reduced_subalgebra(*t2.HX);
    auto bar = tilde_b(H1r, t1.degree_cap, t1.arity_cap);
    auto K = std::make_shared<DGCoalgebra>(bar->coalg);

    const GradedBasis& full = *t1.HX->basis;
    const GradedBasis& red = *H1r->basis;

    /* the one-letter projection of the induced map B(H,{X'}) -> B(C) is the
     * component family f'_n itself */
    MultiMap phig = MultiMap::unary(-1, K->basis, t1.target->basis);
    for (size_t wi = 0; wi < bar->words.size(); ++wi) {
        const auto& w = bar->words[wi];
        if (w.empty())
            continue;
        std::vector<int> tuple;
        for (int letter : w)
            tuple.push_back(full.require(red.gen(letter).name));
        const MultiMap* comp = t1.f.comp(static_cast<int>(w.size()));
        if (!comp)
            continue;
        Element v = comp->eval_tuple(tuple);
        if (!v.is_zero())
            phig.set({static_cast<int>(wi)}, v);
    }

    TwistingCochain tc{K, t2.target, phig};
    TwistTransferResult tw = transfer_twisting(tc, t2);

    AInfMorphism out;
    out.source = H1r;
    out.target = H2r;
    for (size_t wi = 0; wi < bar->words.size(); ++wi) {
        const auto& w = bar->words[wi];
        if (w.empty())
            continue;
        Element v = tw.phi_star.phi.eval_tuple({static_cast<int>(wi)});
        if (v.is_zero())
            continue;
        Element remapped(v.degree());
        for (const auto& [g, c] : v.terms()) {
            int rg = H2r->basis->index_of(full.gen(g).name);
            if (rg < 0)
                throw validation_error("uniqueness: morphism component meets degree 0");
            remapped.add_term(rg, c);
        }
        out.comp_slot(static_cast<int>(w.size())).set(w, remapped);
    }
    return out;
}

}  // namespace ainf
