#include "ainf/homology.hpp"

namespace ainf {

namespace {

/* Reduce v against rref-style rows (each with leading 1 at its pivot). */
Vec reduce_against(const Vec& v, const std::vector<Vec>& rows, const std::vector<size_t>& pivots)
{
    Vec w = v;
    for (size_t i = 0; i < rows.size(); ++i) {
        const Scalar& c = w[pivots[i]];
        if (c.is_zero())
            continue;
        Scalar f = c;
        for (size_t j = 0; j < w.size(); ++j)
            w[j] = w[j] - f * rows[i][j];
    }
    return w;
}

size_t leading(const Vec& v)
{
    for (size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero())
            return j;
    return v.size();
}

}  // namespace

HomologyData compute_homology(const ChainComplex& c, int lo, int hi)
{
    return HomologyData(c, lo, hi);
}

HomologyData::HomologyData(const ChainComplex& c, int lo, int hi) : complex_(c), lo_(lo), hi_(hi)
{
    const GradedBasis& b = *c.basis;
    const Field& f = c.field;

    for (int q = lo; q <= hi; ++q)
        for (int adj : {q - 1, q, q + 1})
            if (!c.degree_complete(adj))
                throw cap_error("homology at degree " + std::to_string(q) +
                                " needs complete data at degree " + std::to_string(adj));

    /* d^2 = 0 on everything we touch */
    for (int q = lo; q <= hi + 2; ++q) {
        for (int g : b.indices_of_degree(q)) {
            if (!c.degree_complete(q) || !c.degree_complete(q - 1))
                continue;
            Element dd = c.d.eval1(c.d.eval_tuple({g}));
            if (!dd.is_zero())
                throw validation_error("differential does not square to zero on '" +
                                       b.gen(g).name + "'");
        }
    }

    std::vector<Generator> hgens;
    std::map<int, std::vector<std::pair<std::string, Vec>>> named_reps;

    for (int q = lo; q <= hi; ++q) {
        DegreeSlice s;
        s.gens = b.indices_of_degree(q);
        for (size_t i = 0; i < s.gens.size(); ++i)
            s.gen_pos[s.gens[i]] = static_cast<int>(i);
        std::vector<int> above = b.indices_of_degree(q + 1);
        std::vector<int> below = b.indices_of_degree(q - 1);

        size_t nq = s.gens.size();
        if (nq == 0) {
            slices_.emplace(q, std::move(s));
            continue;
        }

        /* boundary subspace: rref of the rows d(g), g of degree q+1 */
        Matrix rows_above(above.size(), nq, f);
        Matrix d_above(nq, above.size(), f);
        for (size_t j = 0; j < above.size(); ++j) {
            Element dg = c.d.eval_tuple({above[j]});
            for (const auto& [g, coef] : dg.terms()) {
                size_t pos = static_cast<size_t>(s.gen_pos.at(g));
                rows_above.at(j, pos) = coef;
                d_above.at(pos, j) = coef;
            }
        }
        s.d_from_above = d_above;
        RrefResult br = rref(rows_above);
        std::vector<size_t> bpivots;
        for (size_t i = 0; i < br.pivots.size(); ++i) {
            s.boundary_rref.push_back(br.echelon.row(i));
            bpivots.push_back(br.pivots[i]);
        }

        /* cycles: kernel of d_q */
        Matrix dq(below.size(), nq, f);
        std::map<int, int> below_pos;
        for (size_t i = 0; i < below.size(); ++i)
            below_pos[below[i]] = static_cast<int>(i);
        for (size_t j = 0; j < nq; ++j) {
            Element dg = c.d.eval_tuple({s.gens[j]});
            for (const auto& [g, coef] : dg.terms())
                dq.at(static_cast<size_t>(below_pos.at(g)), j) = coef;
        }
        std::vector<Vec> cycles = kernel_basis(dq);

        /* representatives: reduce each cycle against the boundary rows and the
         * representatives accepted so far; survivors are the homology basis */
        std::vector<Vec> rr = s.boundary_rref;
        std::vector<size_t> rp = bpivots;
        for (const Vec& z : cycles) {
            Vec w = reduce_against(z, rr, rp);
            size_t p = leading(w);
            if (p == w.size())
                continue;
            Scalar inv = w[p].inverse();
            for (auto& x : w)
                x = inv * x;
            s.reps.push_back(w);
            rr.push_back(w);
            rp.push_back(p);
            std::string nm = "[" + b.gen(s.gens[p]).name + "]";
            s.hclasses.push_back(static_cast<int>(hgens.size()));
            hgens.push_back(Generator{nm, q});
            named_reps[q].push_back({nm, w});
        }

        /* projection solver: columns are the boundary basis then the reps */
        Matrix solver(nq, s.boundary_rref.size() + s.reps.size(), f);
        for (size_t j = 0; j < s.boundary_rref.size(); ++j)
            for (size_t i = 0; i < nq; ++i)
                solver.at(i, j) = s.boundary_rref[j][i];
        for (size_t j = 0; j < s.reps.size(); ++j)
            for (size_t i = 0; i < nq; ++i)
                solver.at(i, s.boundary_rref.size() + j) = s.reps[j][i];
        s.proj_solver = std::move(solver);
        slices_.emplace(q, std::move(s));
    }

    hbasis_ = std::make_shared<GradedBasis>("H(" + b.name() + ")", hgens);
    f1_ = MultiMap::unary(0, hbasis_, c.basis);
    for (const auto& [q, reps] : named_reps) {
        const DegreeSlice& s = slices_.at(q);
        for (size_t j = 0; j < reps.size(); ++j) {
            Element e(q);
            for (size_t i = 0; i < s.gens.size(); ++i)
                e.add_term(s.gens[i], reps[j].second[i]);
            f1_.set({hbasis_->require(reps[j].first)}, e);
        }
    }
}

const HomologyData::DegreeSlice* HomologyData::slice(int degree) const
{
    auto it = slices_.find(degree);
    return it == slices_.end() ? nullptr : &it->second;
}

int HomologyData::betti(int internal_degree) const
{
    const DegreeSlice* s = slice(internal_degree);
    return s ? static_cast<int>(s->reps.size()) : 0;
}

Vec HomologyData::to_coords(const Element& e) const
{
    const DegreeSlice* s = slice(e.degree());
    if (!s) {
        if (e.is_zero())
            return Vec{};
        throw cap_error("element degree " + std::to_string(e.degree()) +
                        " outside computed homology range");
    }
    Vec v = vec_zero(s->gens.size(), complex_.field);
    for (const auto& [g, c] : e.terms())
        v[static_cast<size_t>(s->gen_pos.at(g))] = c;
    return v;
}

Element HomologyData::from_coords(int degree, const Vec& v) const
{
    const DegreeSlice* s = slice(degree);
    Element e(degree);
    if (!s)
        return e;
    for (size_t i = 0; i < v.size(); ++i)
        e.add_term(s->gens[i], v[i]);
    return e;
}

void HomologyData::require_cycle(const Element& z, const char* who) const
{
    Element dz = complex_.d.eval1(z);
    if (!dz.is_zero())
        throw validation_error(std::string(who) + ": input is not a cycle");
}

Element HomologyData::project(const Element& z) const
{
    if (z.is_zero())
        return Element::zero(z.degree());
    require_cycle(z, "project");
    const DegreeSlice* s = slice(z.degree());
    if (!s)
        throw cap_error("project: degree " + std::to_string(z.degree()) +
                        " outside computed homology range");
    auto sol = solve_particular(*s->proj_solver, to_coords(z));
    if (!sol)
        throw consistency_error("project: cycle not in boundary+representative span");
    Element h(z.degree());
    for (size_t j = 0; j < s->reps.size(); ++j) {
        const Scalar& c = (*sol)[s->boundary_rref.size() + j];
        if (!c.is_zero())
            h.add_term(s->hclasses[j], c);
    }
    return h;
}

Element HomologyData::bound(const Element& z) const
{
    if (z.is_zero())
        return Element::zero(z.degree() + 1);
    require_cycle(z, "bound");
    const DegreeSlice* s = slice(z.degree());
    if (!s)
        throw cap_error("bound: degree " + std::to_string(z.degree()) +
                        " outside computed homology range");
    Element cls = project(z);
    if (!cls.is_zero())
        throw validation_error("bound: homology class of input is nonzero");
    auto sol = solve_particular(*s->d_from_above, to_coords(z));
    if (!sol)
        throw consistency_error("bound: no preimage though class vanishes");
    std::vector<int> above = complex_.basis->indices_of_degree(z.degree() + 1);
    Element y(z.degree() + 1);
    for (size_t j = 0; j < above.size(); ++j)
        y.add_term(above[j], (*sol)[j]);
    return y;
}

}  // namespace ainf
