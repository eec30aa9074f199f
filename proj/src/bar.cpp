#include "ainf/bar.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace ainf {

namespace {

/* Expand a tensor product of elements into a sum of words, looking each
 * resulting letter sequence up in the target index. Letters must be nonzero
 * generators of the word alphabet. */
void expand_words(const std::vector<Element>& blocks, size_t at, std::vector<int>& letters,
                  const Scalar& coeff, const std::map<std::vector<int>, int>& index,
                  std::map<int, Scalar>& out, const char* who)
{
    if (at == blocks.size()) {
        auto it = index.find(letters);
        if (it == index.end())
            throw cap_error(std::string(who) + ": produced word outside the enumerated window");
        auto oit = out.find(it->second);
        if (oit == out.end())
            out.emplace(it->second, coeff);
        else {
            Scalar s = oit->second + coeff;
            if (s.is_zero())
                out.erase(oit);
            else
                oit->second = s;
        }
        return;
    }
    for (const auto& [g, c] : blocks[at].terms()) {
        letters.push_back(g);
        expand_words(blocks, at + 1, letters, coeff * c, index, out, who);
        letters.pop_back();
    }
}

}  // namespace

int TildeB::word_degree(const std::vector<int>& w) const
{
    int d = static_cast<int>(w.size());
    for (int l : w)
        d += source->basis->degree(l);
    return d;
}

std::string TildeB::word_name(const std::vector<int>& w) const
{
    std::string n = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i)
            n += "|";
        n += source->basis->gen(w[i]).name;
    }
    return n + ")";
}

ChainComplex TildeB::complex() const
{
    return ChainComplex{source->field, coalg.basis, coalg.d, window};
}

std::shared_ptr<TildeB> tilde_b(std::shared_ptr<const AInfAlgebra> A, int enum_cap, int length_cap)
{
    if (!A->reduced())
        throw validation_error(
            "tensor-coalgebra words need a reduced algebra (no degree-0 generators); restrict "
            "to the reduced part first");
    auto B = std::make_shared<TildeB>();
    B->source = A;
    B->enum_cap = enum_cap;
    B->length_cap = length_cap;

    const GradedBasis& ab = *A->basis;
    int n = static_cast<int>(ab.size());
    std::vector<std::vector<int>> found;
    std::vector<int> cur;
    bool all_pos = ab.min_degree() >= 1;
    bool all_nonpos = ab.max_degree() <= -1;
    bool pruned_low = false, pruned_high = false;
    std::function<void(int)> rec = [&](int wdeg) {
        if (std::abs(wdeg) <= enum_cap || cur.empty())
            found.push_back(cur);
        else
            (wdeg > 0 ? pruned_high : pruned_low) = true;
        if (static_cast<int>(cur.size()) == length_cap)
            return;
        for (int g = 0; g < n; ++g) {
            int nd = wdeg + ab.degree(g) + 1;
            if (all_pos && nd > enum_cap) {
                pruned_high = true;
                continue;
            }
            if (all_nonpos && nd < -enum_cap) {
                pruned_low = true;
                continue;
            }
            cur.push_back(g);
            rec(nd);
            cur.pop_back();
        }
    };
    rec(0);
    std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
        int da = B->word_degree(a), db = B->word_degree(b);
        if (da != db)
            return da < db;
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });

    std::vector<Generator> gens;
    for (const auto& w : found) {
        B->index[w] = static_cast<int>(gens.size());
        gens.push_back(Generator{B->word_name(w), B->word_degree(w)});
    }
    B->words = std::move(found);
    auto basis = std::make_shared<GradedBasis>("B(" + ab.name() + ")", gens);

    B->coalg.field = A->field;
    B->coalg.basis = basis;
    B->coalg.d = MultiMap::unary(-1, basis, basis);

    int min_enum = 0, max_enum = 0;
    for (const auto& w : B->words) {
        min_enum = std::min(min_enum, B->word_degree(w));
        max_enum = std::max(max_enum, B->word_degree(w));
    }
    /* If the degree window never pruned (the length cap bounded everything,
     * or the grading is homological), images cannot leave the word set and
     * every differential is representable. */
    B->min_wdeg_with_d = pruned_low ? -enum_cap + 1 : min_enum - 2;
    if (pruned_low || pruned_high)
        B->window = std::make_pair(B->min_wdeg_with_d,
                                   pruned_high ? enum_cap : max_enum + 2);

    /* d_m: apply each m_j to each contiguous block, sign (-1)^k with hats on
     * the first k letters */
    for (size_t wi = 0; wi < B->words.size(); ++wi) {
        const std::vector<int>& w = B->words[wi];
        int len = static_cast<int>(w.size());
        if (len == 0)
            continue;
        int wdeg = B->word_degree(w);
        if (wdeg < B->min_wdeg_with_d)
            continue;
        Element out(wdeg - 1);
        for (int k = 0; k <= len - 1; ++k) {
            int hat_sign = 1;
            for (int s = 0; s < k; ++s)
                hat_sign *= parity_sign(ab.degree(w[static_cast<size_t>(s)]));
            for (int j = 1; j <= len - k; ++j) {
                std::vector<int> block(w.begin() + k, w.begin() + k + j);
                Element inner = A->apply_tuple(j, block);
                if (inner.is_zero())
                    continue;
                int sign = (k % 2 == 0 ? 1 : -1) * hat_sign;
                for (const auto& [g, c] : inner.terms()) {
                    std::vector<int> nw(w.begin(), w.begin() + k);
                    nw.push_back(g);
                    nw.insert(nw.end(), w.begin() + k + j, w.end());
                    auto it = B->index.find(nw);
                    if (it == B->index.end())
                        throw cap_error("word differential leaves the enumerated window at " +
                                        B->word_name(w));
                    out.add_term(it->second, sign < 0 ? -c : c);
                }
            }
        }
        if (!out.is_zero())
            B->coalg.d.set({static_cast<int>(wi)}, out);
    }

    /* splitting coproduct and length stages */
    for (size_t wi = 0; wi < B->words.size(); ++wi) {
        const std::vector<int>& w = B->words[wi];
        int len = static_cast<int>(w.size());
        for (int cut = 1; cut < len; ++cut) {
            std::vector<int> left(w.begin(), w.begin() + cut);
            std::vector<int> right(w.begin() + cut, w.end());
            B->coalg.coproduct[static_cast<int>(wi)].emplace_back(
                B->index.at(left), B->index.at(right), Scalar::one(A->field));
        }
    }
    B->coalg.stages.resize(B->words.size());
    for (size_t wi = 0; wi < B->words.size(); ++wi)
        B->coalg.stages[wi] = static_cast<int>(B->words[wi].size());
    return B;
}

MultiMap coalgebra_map_of_morphism(const AInfMorphism& F, const TildeB& src, const TildeB& dst)
{
    if (!src.source->basis->same_as(*F.source->basis) ||
        !dst.source->basis->same_as(*F.target->basis))
        throw validation_error("word map: morphism endpoints do not match the word coalgebras");
    MultiMap map = MultiMap::unary(0, src.coalg.basis, dst.coalg.basis);
    const Field& f = F.source->field;
    for (size_t wi = 0; wi < src.words.size(); ++wi) {
        const std::vector<int>& w = src.words[wi];
        int n = static_cast<int>(w.size());
        Element out(src.word_degree(w));
        if (n == 0) {
            out.add_term(dst.index.at({}), Scalar::one(f));
        } else {
            std::map<int, Scalar> target_terms;
            for (int t = 1; t <= n; ++t) {
                for (const auto& parts : compositions(t, n)) {
                    std::vector<Element> blocks;
                    int at = 0;
                    bool dead = false;
                    for (int p : parts) {
                        std::vector<Element> block;
                        for (int s = at; s < at + p; ++s)
                            block.push_back(
                                Element::generator(*F.source->basis, w[static_cast<size_t>(s)],
                                                   Scalar::one(f)));
                        Element v = F.apply(p, block);
                        if (v.is_zero()) {
                            dead = true;
                            break;
                        }
                        blocks.push_back(v);
                        at += p;
                    }
                    if (dead)
                        continue;
                    std::vector<int> letters;
                    expand_words(blocks, 0, letters, Scalar::one(f), dst.index, target_terms,
                                 "morphism word map");
                }
            }
            for (const auto& [g, c] : target_terms)
                out.add_term(g, c);
        }
        if (!out.is_zero())
            map.set({static_cast<int>(wi)}, out);
    }
    return map;
}

DefectReport check_coalgebra_map(const MultiMap& map, const TildeB& src, const TildeB& dst)
{
    DefectReport rep;
    const GradedBasis& sb = *src.coalg.basis;
    for (size_t wi = 0; wi < src.words.size(); ++wi) {
        int g = static_cast<int>(wi);
        int wdeg = sb.degree(g);
        if (wdeg >= src.min_wdeg_with_d && wdeg - 1 >= dst.min_wdeg_with_d) {
            Element lhs = map.eval1(src.coalg.d.eval_tuple({g}));
            Element rhs = dst.coalg.d.eval1(map.eval_tuple({g}));
            Element diff = lhs - rhs;
            if (!diff.is_zero())
                rep.add("word-map-chain", sb.gen(g).name, diff.str(*dst.coalg.basis));
        }
        /* coproduct compatibility */
        PairSum want;
        auto it = src.coalg.coproduct.find(g);
        if (it != src.coalg.coproduct.end()) {
            for (const auto& [l, r, c] : it->second) {
                Element ml = map.eval_tuple({l});
                Element mr = map.eval_tuple({r});
                for (const auto& [lg, lc] : ml.terms())
                    for (const auto& [rg, rc] : mr.terms())
                        pair_sum_add(want, lg, rg, c * lc * rc);
            }
        }
        Element mg = map.eval_tuple({g});
        for (const auto& [tg, tc] : mg.terms()) {
            auto dit = dst.coalg.coproduct.find(tg);
            if (dit == dst.coalg.coproduct.end())
                continue;
            for (const auto& [l, r, c] : dit->second)
                pair_sum_add(want, l, r, -(tc * c));
        }
        if (!want.empty())
            rep.add("word-map-coproduct", sb.gen(g).name,
                    std::to_string(want.size()) + " term(s)");
    }
    return rep;
}

std::shared_ptr<BarComodule> comodule_of_module(std::shared_ptr<const TildeB> bar,
                                                std::shared_ptr<const AInfModule> P)
{
    if (!bar->source->basis->same_as(*P->algebra->basis))
        throw validation_error("comodule: module algebra does not match the word alphabet");
    auto cm = std::make_shared<BarComodule>();
    cm->bar = bar;
    cm->module = P;
    const GradedBasis& pb = *P->basis;
    const GradedBasis& wb = *bar->coalg.basis;
    const Field& f = P->field;

    std::vector<Generator> gens;
    for (size_t wi = 0; wi < bar->words.size(); ++wi)
        for (size_t pi = 0; pi < pb.size(); ++pi) {
            cm->pair_index[{static_cast<int>(wi), static_cast<int>(pi)}] =
                static_cast<int>(gens.size());
            cm->pairs.push_back({static_cast<int>(wi), static_cast<int>(pi)});
            gens.push_back(Generator{wb.gen(static_cast<int>(wi)).name + "." +
                                         pb.gen(static_cast<int>(pi)).name,
                                     wb.degree(static_cast<int>(wi)) +
                                         pb.degree(static_cast<int>(pi))});
        }
    auto basis = std::make_shared<GradedBasis>("B." + pb.name(), gens);
    MultiMap D = MultiMap::unary(-1, basis, basis);

    int min_pair = 0, max_pair = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
        min_pair = std::min(min_pair, gens[i].degree);
        max_pair = std::max(max_pair, gens[i].degree);
    }
    /* D(w (x) b) is representable exactly when the word part of the image
     * stays inside the enumerated window, i.e. wdeg(w) >= min_wdeg_with_d */
    cm->min_pairdeg_with_d = bar->min_wdeg_with_d + pb.min_degree();

    const GradedBasis& ab = *P->algebra->basis;
    for (size_t idx = 0; idx < cm->pairs.size(); ++idx) {
        auto [wi, pi] = cm->pairs[idx];
        const std::vector<int>& w = bar->words[static_cast<size_t>(wi)];
        int len = static_cast<int>(w.size());
        int pdeg = wb.degree(wi) + pb.degree(pi);
        if (wb.degree(wi) < bar->min_wdeg_with_d)
            continue;
        Element out(pdeg - 1);
        /* word part: d_m-style terms leaving b alone */
        for (int k = 0; k <= len - 1; ++k) {
            int hat_sign = 1;
            for (int s = 0; s < k; ++s)
                hat_sign *= parity_sign(ab.degree(w[static_cast<size_t>(s)]));
            for (int j = 1; j <= len - k; ++j) {
                std::vector<int> block(w.begin() + k, w.begin() + k + j);
                Element inner = P->algebra->apply_tuple(j, block);
                if (inner.is_zero())
                    continue;
                int sign = (k % 2 == 0 ? 1 : -1) * hat_sign;
                for (const auto& [g, c] : inner.terms()) {
                    std::vector<int> nw(w.begin(), w.begin() + k);
                    nw.push_back(g);
                    nw.insert(nw.end(), w.begin() + k + j, w.end());
                    out.add_term(cm->pair_index.at({bar->index.at(nw), pi}),
                                 sign < 0 ? -c : c);
                }
            }
        }
        /* tail part: p_{len-k+1} consumes the tail letters and b */
        for (int k = 0; k <= len; ++k) {
            int hat_sign = 1;
            for (int s = 0; s < k; ++s)
                hat_sign *= parity_sign(ab.degree(w[static_cast<size_t>(s)]));
            std::vector<Element> tail;
            for (int s = k; s < len; ++s)
                tail.push_back(Element::generator(ab, w[static_cast<size_t>(s)], Scalar::one(f)));
            Element inner = P->apply(len - k + 1, tail,
                                     Element::generator(pb, pi, Scalar::one(f)));
            if (inner.is_zero())
                continue;
            int sign = (k % 2 == 0 ? 1 : -1) * hat_sign;
            std::vector<int> head(w.begin(), w.begin() + k);
            int hw = bar->index.at(head);
            for (const auto& [g, c] : inner.terms())
                out.add_term(cm->pair_index.at({hw, g}), sign < 0 ? -c : c);
        }
        if (!out.is_zero())
            D.set({static_cast<int>(idx)}, out);
    }
    cm->complex = ChainComplex{
        f, basis, D,
        bar->window ? std::make_optional(std::make_pair(cm->min_pairdeg_with_d, max_pair))
                    : std::nullopt};
    return cm;
}

MultiMap comodule_map_of_morphism(const AInfModuleMorphism& G, const BarComodule& src,
                                  const BarComodule& dst)
{
    const Field& f = G.source->field;
    const GradedBasis& ab = *G.source->algebra->basis;
    const GradedBasis& pb = *G.source->basis;
    MultiMap map = MultiMap::unary(0, src.complex.basis, dst.complex.basis);
    for (size_t idx = 0; idx < src.pairs.size(); ++idx) {
        auto [wi, pi] = src.pairs[idx];
        const std::vector<int>& w = src.bar->words[static_cast<size_t>(wi)];
        int n = static_cast<int>(w.size());
        int i = n + 1;
        Element out(src.complex.basis->degree(static_cast<int>(idx)));
        std::map<int, Scalar> acc;
        for (int t = 1; t <= i; ++t) {
            for (const auto& parts : compositions(t, i)) {
                int kt = parts.back();
                std::vector<Element> blocks;
                int at = 0;
                bool dead = false;
                for (size_t s = 0; s + 1 < parts.size(); ++s) {
                    int p = parts[s];
                    std::vector<Element> block;
                    for (int q = at; q < at + p; ++q)
                        block.push_back(
                            Element::generator(ab, w[static_cast<size_t>(q)], Scalar::one(f)));
                    Element v = G.f.apply(p, block);
                    if (v.is_zero()) {
                        dead = true;
                        break;
                    }
                    blocks.push_back(v);
                    at += p;
                }
                if (dead)
                    continue;
                std::vector<Element> tail;
                for (int q = at; q < n; ++q)
                    tail.push_back(
                        Element::generator(ab, w[static_cast<size_t>(q)], Scalar::one(f)));
                Element gb = G.apply(kt, tail, Element::generator(pb, pi, Scalar::one(f)));
                if (gb.is_zero())
                    continue;
                /* expand the t-1 word blocks, then attach each module term */
                std::map<int, Scalar> word_terms;
                std::vector<int> letters;
                if (blocks.empty()) {
                    word_terms.emplace(dst.bar->index.at({}), Scalar::one(f));
                } else {
                    expand_words(blocks, 0, letters, Scalar::one(f), dst.bar->index, word_terms,
                                 "comodule word map");
                }
                for (const auto& [tw, wc] : word_terms)
                    for (const auto& [pg, pc] : gb.terms()) {
                        int pidx = dst.pair_index.at({tw, pg});
                        auto it = acc.find(pidx);
                        Scalar add = wc * pc;
                        if (it == acc.end())
                            acc.emplace(pidx, add);
                        else {
                            Scalar sum = it->second + add;
                            if (sum.is_zero())
                                acc.erase(it);
                            else
                                it->second = sum;
                        }
                    }
            }
        }
        for (const auto& [g, c] : acc)
            out.add_term(g, c);
        if (!out.is_zero())
            map.set({static_cast<int>(idx)}, out);
    }
    return map;
}

DefectReport check_comodule_map(const MultiMap& map, const BarComodule& src,
                                const BarComodule& dst)
{
    DefectReport rep;
    const GradedBasis& sb = *src.complex.basis;
    for (size_t i = 0; i < sb.size(); ++i) {
        int g = static_cast<int>(i);
        if (src.bar->coalg.basis->degree(src.pairs[i].first) < src.bar->min_wdeg_with_d)
            continue;
        Element lhs = map.eval1(src.complex.d.eval_tuple({g}));
        Element rhs = dst.complex.d.eval1(map.eval_tuple({g}));
        Element diff = lhs - rhs;
        if (!diff.is_zero())
            rep.add("comodule-map-chain", sb.gen(g).name, diff.str(*dst.complex.basis));
    }
    return rep;
}

DefectReport check_bar_differential(const TildeB& bar)
{
    DefectReport rep;
    const GradedBasis& b = *bar.coalg.basis;
    for (size_t i = 0; i < b.size(); ++i) {
        int g = static_cast<int>(i);
        if (b.degree(g) < bar.min_wdeg_with_d + 1)
            continue;
        Element dd = bar.coalg.d.eval1(bar.coalg.d.eval_tuple({g}));
        if (!dd.is_zero())
            rep.add("bar-d^2", b.gen(g).name, dd.str(b));
    }
    return rep;
}

DefectReport check_comodule_differential(const BarComodule& cm)
{
    DefectReport rep;
    const GradedBasis& b = *cm.complex.basis;
    for (size_t i = 0; i < b.size(); ++i) {
        int g = static_cast<int>(i);
        if (cm.bar->coalg.basis->degree(cm.pairs[i].first) < cm.bar->min_wdeg_with_d + 1)
            continue;
        Element dd = cm.complex.d.eval1(cm.complex.d.eval_tuple({g}));
        if (!dd.is_zero())
            rep.add("comodule-d^2", b.gen(g).name, dd.str(b));
    }
    return rep;
}

}  // namespace ainf
