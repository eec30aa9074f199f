#include <functional>
#include "ainf/corpus.hpp"

#include <algorithm>
#include <limits>

namespace ainf::corpus {

namespace {

constexpr int kNoLowerBound = std::numeric_limits<int>::min() / 2;

/* Exterior algebra on n degree-1 variables, cohomologically graded
 * (internal degree -1 per variable). Subsets are encoded as sorted index
 * vectors; the wedge sign counts inversions across the two factors. */
struct Exterior {
    std::vector<std::vector<int>> subsets;  // basis order
    std::map<std::vector<int>, int> index;
    std::vector<std::string> var_names;

    explicit Exterior(std::vector<std::string> vars) : var_names(std::move(vars))
    {
        int n = static_cast<int>(var_names.size());
        for (int size = 0; size <= n; ++size) {
            std::vector<int> pick;
            emit_subsets(size, 0, pick);
        }
        for (size_t i = 0; i < subsets.size(); ++i)
            index[subsets[i]] = static_cast<int>(i);
    }

    void emit_subsets(int size, int from, std::vector<int>& pick)
    {
        if (static_cast<int>(pick.size()) == size) {
            subsets.push_back(pick);
            return;
        }
        for (int v = from; v < static_cast<int>(var_names.size()); ++v) {
            pick.push_back(v);
            emit_subsets(size, v + 1, pick);
            pick.pop_back();
        }
    }

    std::string name(const std::vector<int>& s) const
    {
        if (s.empty())
            return "1";
        std::string n;
        for (int v : s)
            n += var_names[static_cast<size_t>(v)];
        return n;
    }

    /* (sign, union) or sign 0 when the factors overlap */
    std::pair<int, std::vector<int>> wedge(const std::vector<int>& a,
                                           const std::vector<int>& b) const
    {
        int inversions = 0;
        for (int x : a)
            for (int y : b) {
                if (x == y)
                    return {0, {}};
                if (x > y)
                    ++inversions;
            }
        std::vector<int> u = a;
        u.insert(u.end(), b.begin(), b.end());
        std::sort(u.begin(), u.end());
        return {inversions % 2 == 0 ? 1 : -1, u};
    }
};

/* Cohomological exterior DGA from per-variable differentials (expressed as
 * integer combinations of subsets). */
std::shared_ptr<DGAlgebra> exterior_dga(const Field& f, std::vector<std::string> vars,
                                        const std::map<int, std::vector<std::pair<std::vector<int>, long>>>& dvar)
{
    Exterior ext(std::move(vars));
    std::vector<Generator> gens;
    for (const auto& s : ext.subsets)
        gens.push_back(Generator{ext.name(s), -static_cast<int>(s.size())});
    auto basis = std::make_shared<GradedBasis>("C", gens);

    MultiMap product(2, 0, {basis, basis}, basis);
    for (const auto& a : ext.subsets)
        for (const auto& b : ext.subsets) {
            auto [sign, u] = ext.wedge(a, b);
            if (sign == 0)
                continue;
            Element v = Element::generator(*basis, ext.index.at(u),
                                           Scalar::from_int(sign, f));
            product.set({ext.index.at(a), ext.index.at(b)}, v);
        }

    /* extend the variable-level differential as a derivation */
    MultiMap d = MultiMap::unary(-1, basis, basis);
    std::map<int, Element> dsub;  // by subset index
    for (size_t i = 0; i < ext.subsets.size(); ++i)
        dsub[static_cast<int>(i)] = Element::zero(-static_cast<int>(ext.subsets[i].size()) - 1);
    for (size_t bi = 0; bi < ext.subsets.size(); ++bi) {
        const auto& s = ext.subsets[bi];
        Element total(-static_cast<int>(s.size()) - 1);
        for (size_t pos = 0; pos < s.size(); ++pos) {
            auto it = dvar.find(s[pos]);
            if (it == dvar.end())
                continue;
            /* sign from moving d past the first pos variables (each odd) */
            int sign = pos % 2 == 0 ? 1 : -1;
            std::vector<int> before(s.begin(), s.begin() + static_cast<long>(pos));
            std::vector<int> after(s.begin() + static_cast<long>(pos) + 1, s.end());
            for (const auto& [dv, coeff] : it->second) {
                auto [s1, left] = ext.wedge(before, dv);
                if (s1 == 0)
                    continue;
                auto [s2, whole] = ext.wedge(left, after);
                if (s2 == 0)
                    continue;
                total.add_term(ext.index.at(whole),
                               Scalar::from_int(sign * s1 * s2 * coeff, f));
            }
        }
        if (!total.is_zero())
            d.set({static_cast<int>(bi)}, total);
    }

    auto alg = std::make_shared<DGAlgebra>();
    alg->complex = ChainComplex{f, basis, d, std::nullopt};
    alg->product = product;
    alg->unit = basis->require("1");
    return alg;
}

/* Free associative word algebra on letters with fixed degrees, basis all
 * words up to max_degree; the differential is the derivation determined by
 * the letter-level values, products beyond the cap are left unset. */
struct WordAlgebraSpec {
    std::vector<std::pair<std::string, int>> letters;  // (name, positive degree)
    std::map<int, std::vector<std::pair<std::vector<int>, long>>> dletter;
};

std::shared_ptr<DGAlgebra> word_dga(const Field& f, const WordAlgebraSpec& spec, int max_degree)
{
    std::vector<std::vector<int>> words;
    std::vector<std::vector<int>> frontier = {{}};
    words.push_back({});
    /* enumerate by degree, lexicographic within a degree */
    std::vector<std::vector<std::vector<int>>> by_degree(static_cast<size_t>(max_degree) + 1);
    std::vector<int> stack;
    std::function<void(int)> rec = [&](int deg) {
        if (deg > 0)
            by_degree[static_cast<size_t>(deg)].push_back(stack);
        for (size_t l = 0; l < spec.letters.size(); ++l) {
            int nd = deg + spec.letters[l].second;
            if (nd > max_degree)
                continue;
            stack.push_back(static_cast<int>(l));
            rec(nd);
            stack.pop_back();
        }
    };
    rec(0);
    for (auto& bucket : by_degree)
        std::sort(bucket.begin(), bucket.end());

    auto word_name = [&](const std::vector<int>& w) {
        if (w.empty())
            return std::string("1");
        std::string n;
        for (int l : w)
            n += spec.letters[static_cast<size_t>(l)].first;
        return n;
    };
    auto word_degree = [&](const std::vector<int>& w) {
        int d = 0;
        for (int l : w)
            d += spec.letters[static_cast<size_t>(l)].second;
        return d;
    };

    std::vector<Generator> gens;
    std::map<std::vector<int>, int> index;
    gens.push_back(Generator{"1", 0});
    index[{}] = 0;
    for (int d = 1; d <= max_degree; ++d)
        for (const auto& w : by_degree[static_cast<size_t>(d)]) {
            index[w] = static_cast<int>(gens.size());
            gens.push_back(Generator{word_name(w), d});
        }
    auto basis = std::make_shared<GradedBasis>("C", gens);

    MultiMap product(2, 0, {basis, basis}, basis);
    for (const auto& [wa, ia] : index)
        for (const auto& [wb, ib] : index) {
            if (word_degree(wa) + word_degree(wb) > max_degree)
                continue;
            std::vector<int> cat = wa;
            cat.insert(cat.end(), wb.begin(), wb.end());
            product.set({ia, ib},
                        Element::generator(*basis, index.at(cat), Scalar::one(f)));
        }

    MultiMap d = MultiMap::unary(-1, basis, basis);
    for (const auto& [w, wi] : index) {
        Element total(word_degree(w) - 1);
        int prefix_deg = 0;
        for (size_t pos = 0; pos < w.size(); ++pos) {
            int letter = w[pos];
            auto it = spec.dletter.find(letter);
            if (it != spec.dletter.end()) {
                int sign = parity_sign(prefix_deg);
                for (const auto& [repl, coeff] : it->second) {
                    std::vector<int> nw(w.begin(), w.begin() + static_cast<long>(pos));
                    nw.insert(nw.end(), repl.begin(), repl.end());
                    nw.insert(nw.end(), w.begin() + static_cast<long>(pos) + 1, w.end());
                    total.add_term(index.at(nw), Scalar::from_int(sign * coeff, f));
                }
            }
            prefix_deg += spec.letters[static_cast<size_t>(letter)].second;
        }
        if (!total.is_zero())
            d.set({wi}, total);
    }

    auto alg = std::make_shared<DGAlgebra>();
    alg->complex = ChainComplex{f, basis, d, std::make_pair(kNoLowerBound, max_degree)};
    alg->product = product;
    alg->unit = 0;
    return alg;
}

std::shared_ptr<DGCoalgebra> cell_coalgebra(const Field& f,
                                            const std::vector<std::pair<std::string, int>>& cells,
                                            const std::map<std::string, std::vector<std::tuple<std::string, std::string, long>>>& coproduct)
{
    std::vector<Generator> gens;
    for (const auto& [n, d] : cells)
        gens.push_back(Generator{n, d});
    auto basis = std::make_shared<GradedBasis>("K", gens);
    auto k = std::make_shared<DGCoalgebra>();
    k->field = f;
    k->basis = basis;
    k->d = MultiMap::unary(-1, basis, basis);
    for (const auto& [g, terms] : coproduct) {
        auto& out = k->coproduct[basis->require(g)];
        for (const auto& [l, r, c] : terms)
            out.emplace_back(basis->require(l), basis->require(r), Scalar::from_int(c, f));
    }
    k->default_stages();
    return k;
}

}  // namespace

Model heisenberg()
{
    Model m;
    m.name = "heisenberg";
    m.field = Field::Q();
    m.cohomological = true;
    m.degree_cap = 8;
    m.arity_cap = 4;
    m.algebra = exterior_dga(m.field, {"e1", "e2", "e3"},
                             {{2, {{{0, 1}, 1}}}});  // d e3 = e1 e2
    return m;
}

Model torus()
{
    Model m;
    m.name = "torus";
    m.field = Field::Q();
    m.cohomological = true;
    m.degree_cap = 8;
    m.arity_cap = 4;
    m.algebra = exterior_dga(m.field, {"a1", "a2"}, {});
    return m;
}

Model s3_cohomology()
{
    Model m;
    m.name = "s3";
    m.field = Field::Q();
    m.cohomological = true;
    m.degree_cap = 8;
    std::vector<Generator> gens = {{"1", 0}, {"x", -3}};
    auto basis = std::make_shared<GradedBasis>("C", gens);
    auto alg = std::make_shared<DGAlgebra>();
    alg->complex = ChainComplex{m.field, basis, MultiMap::unary(-1, basis, basis), std::nullopt};
    alg->product = MultiMap(2, 0, {basis, basis}, basis);
    Scalar one = Scalar::one(m.field);
    alg->product.set({0, 0}, Element::generator(*basis, 0, one));
    alg->product.set({0, 1}, Element::generator(*basis, 1, one));
    alg->product.set({1, 0}, Element::generator(*basis, 1, one));
    alg->unit = 0;
    m.algebra = alg;
    return m;
}

Model s2_cohomology()
{
    Model m;
    m.name = "s2";
    m.field = Field::Q();
    m.cohomological = true;
    m.degree_cap = 8;
    std::vector<Generator> gens = {{"1", 0}, {"x", -2}};
    auto basis = std::make_shared<GradedBasis>("C", gens);
    auto alg = std::make_shared<DGAlgebra>();
    alg->complex = ChainComplex{m.field, basis, MultiMap::unary(-1, basis, basis), std::nullopt};
    alg->product = MultiMap(2, 0, {basis, basis}, basis);
    Scalar one = Scalar::one(m.field);
    alg->product.set({0, 0}, Element::generator(*basis, 0, one));
    alg->product.set({0, 1}, Element::generator(*basis, 1, one));
    alg->product.set({1, 0}, Element::generator(*basis, 1, one));
    alg->unit = 0;
    m.algebra = alg;
    return m;
}

Model hopf()
{
    Model m;
    m.name = "hopf";
    m.field = Field::Q();
    m.cohomological = false;
    m.degree_cap = 8;

    std::vector<Generator> gens = {{"1", 0}, {"t", 1}};
    auto basis = std::make_shared<GradedBasis>("C", gens);
    auto alg = std::make_shared<DGAlgebra>();
    alg->complex = ChainComplex{m.field, basis, MultiMap::unary(-1, basis, basis), std::nullopt};
    alg->product = MultiMap(2, 0, {basis, basis}, basis);
    Scalar one = Scalar::one(m.field);
    alg->product.set({0, 0}, Element::generator(*basis, 0, one));
    alg->product.set({0, 1}, Element::generator(*basis, 1, one));
    alg->product.set({1, 0}, Element::generator(*basis, 1, one));
    alg->unit = 0;
    m.algebra = alg;

    m.coalgebra = cell_coalgebra(m.field, {{"c0", 0}, {"c2", 2}}, {});
    m.module = self_module(m.algebra);
    m.module_is_self = true;

    MultiMap phi = MultiMap::unary(-1, m.coalgebra->basis, basis);
    phi.set({m.coalgebra->basis->require("c2")},
            Element::generator(*basis, basis->require("t"), one));
    m.cochain = phi;
    return m;
}

Model cp2_cobar(int max_degree)
{
    Model m;
    m.name = "cp2_cobar";
    m.field = Field::Q();
    m.cohomological = false;
    m.degree_cap = 6;

    WordAlgebraSpec spec;
    spec.letters = {{"u", 1}, {"v", 3}};
    spec.dletter[1] = {{{0, 0}, -1}};  // d v = -u u
    m.algebra = word_dga(m.field, spec, max_degree);

    m.coalgebra = cell_coalgebra(m.field, {{"c0", 0}, {"c2", 2}, {"c4", 4}},
                                 {{"c4", {{"c2", "c2", 1}}}});
    m.module = self_module(m.algebra);
    m.module_is_self = true;

    MultiMap phi = MultiMap::unary(-1, m.coalgebra->basis, m.algebra->complex.basis);
    Scalar one = Scalar::one(m.field);
    phi.set({m.coalgebra->basis->require("c2")},
            Element::generator(m.algebra->basis(), m.algebra->basis().require("u"), one));
    phi.set({m.coalgebra->basis->require("c4")},
            Element::generator(m.algebra->basis(), m.algebra->basis().require("v"), one));
    m.cochain = phi;
    return m;
}

std::vector<Model> all()
{
    std::vector<Model> v;
    v.push_back(torus());
    v.push_back(s3_cohomology());
    v.push_back(s2_cohomology());
    v.push_back(heisenberg());
    v.push_back(hopf());
    v.push_back(cp2_cobar());
    return v;
}

}  // namespace ainf::corpus
