#include "ainf/commands.hpp"

#include <algorithm>
#include <cctype>

#include "ainf/twisting.hpp"

namespace ainf {

namespace {

void header(Report& r, const std::string& cmd, const Model& m, int dcap,
            std::optional<int> acap, bool strict)
{
    r.body["schema"] = "ainf-report/1";
    r.body["command"] = cmd;
    r.body["model"] = m.name;
    r.body["field"] = m.field.str();
    r.body["grading"] = m.cohomological ? "cohomological" : "homological";
    r.body["caps"]["degree"] = dcap;
    if (acap)
        r.body["caps"]["arity"] = *acap;
    r.body["verify"] = strict ? "strict" : "fast";
}

const DGAlgebra& need_algebra(const Model& m)
{
    if (!m.algebra)
        throw validation_error("model unsuitable: this command requires an 'algebra' section");
    return *m.algebra;
}

const std::shared_ptr<DGModule>& need_module(const Model& m)
{
    if (!m.module)
        throw validation_error(
            "model unsuitable: this command requires a 'module' section (or \"self\")");
    return m.module;
}

void need_fibration(const Model& m)
{
    std::string missing;
    if (!m.coalgebra)
        missing += " coalgebra";
    if (!m.algebra)
        missing += " algebra";
    if (!m.cochain)
        missing += " twisting_cochain";
    if (!missing.empty())
        throw validation_error("model unsuitable: this command requires" + missing);
    if (m.cohomological)
        throw validation_error(
            "model unsuitable: twisting commands run on homologically graded models");
}

int resolve_arity(const Model& m, const CmdOptions& o, int dcap, const GradedBasis& letters)
{
    int a;
    if (o.arity_cap)
        a = *o.arity_cap;
    else if (m.arity_cap)
        a = *m.arity_cap;
    else {
        auto derived = derive_arity_cap(letters, dcap);
        if (!derived)
            throw validation_error(
                "arity cap cannot be derived (degree-1 letters make word length unbounded "
                "per degree); pass --arity-cap or set caps.arity in the model");
        a = *derived;
    }
    if (a < 1)
        throw validation_error("arity cap must be positive");
    return std::min(a, dcap);
}

std::pair<int, int> complex_range(const ChainComplex& c)
{
    int lo = c.basis->min_degree(), hi = c.basis->max_degree();
    if (c.complete_range)
        hi = std::min(hi, c.complete_range->second - 1);
    return {lo, hi};
}

std::shared_ptr<HomologyData> homology_of(const ChainComplex& c)
{
    auto [lo, hi] = complex_range(c);
    return std::make_shared<HomologyData>(compute_homology(c, lo, hi));
}

ReportJson betti_json(const HomologyData& h, const Model& m, int dmax)
{
    ReportJson out = ReportJson::object();
    for (int e = 0; e <= dmax; ++e) {
        int q = m.internal_of_external(e);
        int b = (q >= h.lo() && q <= h.hi()) ? h.betti(q) : 0;
        out[std::to_string(e)] = b;
    }
    return out;
}

ReportJson element_json(const Element& e, const GradedBasis& b)
{
    ReportJson arr = ReportJson::array();
    for (const auto& [g, c] : e.terms())
        arr.push_back({b.gen(g).name, c.str()});
    return arr;
}

ReportJson op_tables_json(const std::map<int, MultiMap>& ops)
{
    ReportJson out = ReportJson::object();
    for (const auto& [i, op] : ops) {
        if (op.is_zero())
            continue;
        ReportJson entries = ReportJson::array();
        for (const auto& [tuple, value] : op.table()) {
            ReportJson entry = ReportJson::object();
            ReportJson args = ReportJson::array();
            for (size_t s = 0; s < tuple.size(); ++s)
                args.push_back(op.source(static_cast<int>(s))->gen(tuple[s]).name);
            entry["args"] = args;
            entry["value"] = element_json(value, *op.target());
            entries.push_back(entry);
        }
        out[std::to_string(i)] = entries;
    }
    return out;
}

ReportJson unary_table_json(const MultiMap& map)
{
    ReportJson out = ReportJson::object();
    for (const auto& [tuple, value] : map.table())
        out[map.source(0)->gen(tuple[0]).name] = element_json(value, *map.target());
    return out;
}

TransferResult make_transfer(const Model& m, int dcap, int acap)
{
    auto h = homology_of(m.algebra->complex);
    return transfer_algebra(m.algebra, h, dcap, acap);
}

/* "2*[e1]+[e2]" or "e1-e2": names resolve in the homology basis first, else
 * as cycles in the model basis (projected). Kinds cannot be mixed. */
Element parse_class(const std::string& text, const TransferResult& t)
{
    const GradedBasis& hb = *t.HX->basis;
    const GradedBasis& cb = t.C->basis();
    const Field& f = t.HX->field;
    Element in_h(0), in_c(0);
    bool used_h = false, used_c = false;

    size_t i = 0;
    while (i < text.size()) {
        long sign = 1;
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '+' ||
                text[i] == '-')) {
            if (text[i] == '-')
                sign = -sign;
            ++i;
        }
        if (i >= text.size())
            break;
        size_t start = i;
        while (i < text.size() && text[i] != '+' && text[i] != '-')
            ++i;
        std::string term = text.substr(start, i - start);
        while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back())))
            term.pop_back();
        std::string coef = "1";
        std::string name = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coef = term.substr(0, star);
            name = term.substr(star + 1);
        }
        Scalar c = Scalar::parse(coef, f);
        if (sign < 0)
            c = -c;
        int hg = hb.index_of(name);
        if (hg >= 0) {
            in_h = in_h + Element::generator(hb, hg, c);
            used_h = true;
            continue;
        }
        int cg = cb.index_of(name);
        if (cg >= 0) {
            in_c = in_c + Element::generator(cb, cg, c);
            used_c = true;
            continue;
        }
        throw validation_error("massey: unknown generator '" + name + "'");
    }
    if (used_h && used_c)
        throw validation_error("massey: cannot mix homology classes and model cycles in '" +
                               text + "'");
    if (used_c)
        return t.h->project(in_c);
    return in_h;
}

Report cmd_transfer(const Model& m, const CmdOptions& o)
{
    need_algebra(m);
    auto h = homology_of(m.algebra->complex);
    int acap = resolve_arity(m, o, o.degree_cap, *h->hbasis());
    TransferResult t = transfer_algebra(m.algebra, h, o.degree_cap, acap);

    Report r;
    header(r, "transfer", m, o.degree_cap, acap, o.strict);
    r.body["homology_betti"] = betti_json(*h, m, o.degree_cap);
    r.body["X"] = op_tables_json(t.HX->ops);
    r.body["f"] = op_tables_json(t.f.comps);
    if (o.strict)
        r.add_defect_summary("transfer", verify_transfer(t));
    return r;
}

Report cmd_module_transfer(const Model& m, const CmdOptions& o)
{
    need_algebra(m);
    const auto& mod = need_module(m);
    auto h = homology_of(m.algebra->complex);
    int acap = resolve_arity(m, o, o.degree_cap, *h->hbasis());
    TransferResult t = transfer_algebra(m.algebra, h, o.degree_cap, acap);
    auto hD = m.module_is_self ? t.h : homology_of(mod->complex);
    ModuleTransferResult mt = transfer_module(t, mod, hD, o.degree_cap, acap);

    Report r;
    header(r, "module-transfer", m, o.degree_cap, acap, o.strict);
    r.body["homology_betti"] = betti_json(*t.h, m, o.degree_cap);
    r.body["module_homology_betti"] = betti_json(*hD, m, o.degree_cap);
    r.body["X"] = op_tables_json(t.HX->ops);
    r.body["Y"] = op_tables_json(mt.HY->ops);
    r.body["g"] = op_tables_json(mt.g.comps);
    if (o.strict) {
        r.add_defect_summary("transfer", verify_transfer(t));
        r.add_defect_summary("module-transfer", verify_module_transfer(mt));
    }
    return r;
}

Report cmd_tilde_b(const std::string& name, const Model& m, const CmdOptions& o,
                   std::optional<bool> want_cohomological)
{
    need_algebra(m);
    if (want_cohomological && m.cohomological != *want_cohomological)
        throw validation_error("model unsuitable: this command needs a " +
                               std::string(*want_cohomological ? "cohomological"
                                                               : "homological") +
                               " model");
    auto h = homology_of(m.algebra->complex);
    int acap = resolve_arity(m, o, o.degree_cap, *h->hbasis());
    int enum_cap = o.degree_cap + (m.cohomological ? 2 : 1);
    TransferResult t = transfer_algebra(m.algebra, h, enum_cap, acap);

    auto HXr = reduced_subalgebra(*t.HX);
    auto bar_h = tilde_b(HXr, enum_cap, acap);
    auto Ar = reduced_subalgebra(*dga_to_ainf(*m.algebra, enum_cap, acap));
    auto bar_c = tilde_b(Ar, enum_cap, acap);

    int lo = m.cohomological ? -o.degree_cap : 0;
    int hi = m.cohomological ? 0 : o.degree_cap;
    HomologyData hh = compute_homology(bar_h->complex(), lo, hi);
    HomologyData hc = compute_homology(bar_c->complex(), lo, hi);

    Report r;
    header(r, name, m, o.degree_cap, acap, o.strict);
    r.body["homology_betti"] = betti_json(*h, m, o.degree_cap);
    r.body["bar_of_homology_betti"] = betti_json(hh, m, o.degree_cap);
    r.body["bar_of_algebra_betti"] = betti_json(hc, m, o.degree_cap);
    bool equal = r.body["bar_of_homology_betti"] == r.body["bar_of_algebra_betti"];
    r.body["betti_equal"] = equal;
    if (!equal)
        ++r.defect_count;
    if (o.strict) {
        r.add_defect_summary("transfer", verify_transfer(t));
        r.add_defect_summary("bar_of_homology_d2", check_bar_differential(*bar_h));
        r.add_defect_summary("bar_of_algebra_d2", check_bar_differential(*bar_c));
    }
    return r;
}

Report cmd_massey(const Model& m, const CmdOptions& o)
{
    need_algebra(m);
    if (o.triple.size() != 3)
        throw usage_error("massey needs --triple a b c");
    auto h = homology_of(m.algebra->complex);
    int acap = resolve_arity(m, o, o.degree_cap, *h->hbasis());
    if (acap < 3)
        throw validation_error("massey needs an arity cap of at least 3");
    TransferResult t = transfer_algebra(m.algebra, h, o.degree_cap, acap);

    Element a = parse_class(o.triple[0], t);
    Element b = parse_class(o.triple[1], t);
    Element c = parse_class(o.triple[2], t);
    Element value = massey_via_X3(t, a, b, c);
    MasseyCoset coset = massey_oracle(*t.C, *t.h, a, b, c);
    bool member = coset.contains(value, t.HX->field);

    Report r;
    header(r, "massey", m, o.degree_cap, acap, o.strict);
    ReportJson in = ReportJson::array();
    const GradedBasis& hb = *t.HX->basis;
    in.push_back(element_json(a, hb));
    in.push_back(element_json(b, hb));
    in.push_back(element_json(c, hb));
    r.body["inputs"] = in;
    r.body["x3"] = element_json(value, hb);
    r.body["oracle"]["representative"] = element_json(coset.representative, hb);
    ReportJson ind = ReportJson::array();
    for (const auto& e : coset.indeterminacy)
        ind.push_back(element_json(e, hb));
    r.body["oracle"]["indeterminacy"] = ind;
    r.body["member"] = member;
    if (!member)
        ++r.defect_count;
    if (o.strict)
        r.add_defect_summary("transfer", verify_transfer(t));
    return r;
}

Report cmd_twist_transfer(const Model& m, const CmdOptions& o)
{
    need_fibration(m);
    auto h = homology_of(m.algebra->complex);
    int acap = resolve_arity(m, o, o.degree_cap, *h->hbasis());
    TransferResult t = transfer_algebra(m.algebra, h, o.degree_cap, acap);
    TwistingCochain tc{m.coalgebra, t.target, *m.cochain};

    Report r;
    header(r, "twist-transfer", m, o.degree_cap, acap, o.strict);
    r.add_defect_summary("phi_twisting", twisting_defect(tc));
    TwistTransferResult res = transfer_twisting(tc, t);
    r.body["phi_star"] = unary_table_json(res.phi_star.phi);
    ReportJson chain = ReportJson::object();
    for (const auto& [stage, cn] : res.gauge_chain)
        chain[std::to_string(stage)] = unary_table_json(cn);
    r.body["gauge_chain"] = chain;
    r.body["phi_infinity"] = unary_table_json(res.phi_infinity);
    r.body["f_star_phi_star"] = unary_table_json(res.f_star_phi_star.phi);
    r.add_defect_summary("conditions_a_c", res.certificate);
    if (o.strict) {
        r.add_defect_summary("transfer", verify_transfer(t));
        auto Ar = reduced_subalgebra(*t.target);
        auto bar = tilde_b(Ar, o.degree_cap + 1, std::max(acap, 2));
        MultiMap fmap = cochain_to_coalgebra_map(tc, *bar);
        r.add_defect_summary("cochain_map", check_cochain_map(tc, *bar, fmap));
    }
    return r;
}

Report cmd_fiber(const Model& m, const CmdOptions& o)
{
    need_fibration(m);
    const auto& mod = need_module(m);
    int cap_t = o.degree_cap + 2;
    auto h = homology_of(m.algebra->complex);
    int acap = resolve_arity(m, o, cap_t, *h->hbasis());
    TransferResult t = transfer_algebra(m.algebra, h, cap_t, acap);
    auto hD = m.module_is_self ? t.h : homology_of(mod->complex);
    ModuleTransferResult mt = transfer_module(t, mod, hD, cap_t, acap);
    TwistingCochain tc{m.coalgebra, t.target, *m.cochain};
    TwistTransferResult res = transfer_twisting(tc, t);

    int valid_hi = o.degree_cap + 1;
    if (mod->complex.complete_range &&
        valid_hi > mod->complex.complete_range->second + 1)
        throw cap_error("fiber: module tables end before the requested degree cap");
    auto P = dgmodule_to_ainf(*mod, t.target);
    TwistedTensorProduct ttp_d = twisted_tensor(m.coalgebra, P, tc, valid_hi);
    TwistedTensorProduct ttp_h = twisted_tensor(m.coalgebra, mt.HY, res.phi_star, valid_hi);

    auto pair_lo = [](const TwistedTensorProduct& ttp) {
        return ttp.complex.basis->size() ? ttp.complex.basis->min_degree() : 0;
    };
    HomologyData h_d = compute_homology(ttp_d.complex, pair_lo(ttp_d), o.degree_cap);
    HomologyData h_h = compute_homology(ttp_h.complex, pair_lo(ttp_h), o.degree_cap);

    Report r;
    header(r, "fiber", m, o.degree_cap, acap, o.strict);
    r.add_defect_summary("phi_twisting", twisting_defect(tc));
    r.body["twisted_with_module_betti"] = betti_json(h_d, m, o.degree_cap);
    r.body["twisted_with_homology_betti"] = betti_json(h_h, m, o.degree_cap);
    bool equal = r.body["twisted_with_module_betti"] == r.body["twisted_with_homology_betti"];
    r.body["betti_equal"] = equal;
    if (!equal)
        ++r.defect_count;
    r.body["phi_star"] = unary_table_json(res.phi_star.phi);
    r.add_defect_summary("conditions_a_c", res.certificate);
    if (o.strict) {
        r.add_defect_summary("transfer", verify_transfer(t));
        r.add_defect_summary("module-transfer", verify_module_transfer(mt));
        r.add_defect_summary("twisted_square_module", check_twisted_square(ttp_d));
        r.add_defect_summary("twisted_square_homology", check_twisted_square(ttp_h));
    }
    return r;
}

}  // namespace

const std::vector<std::string>& command_names()
{
    static const std::vector<std::string> names = {
        "transfer",  "module-transfer", "tilde-b", "classifying-space",
        "loop-space", "massey",         "twist-transfer", "fiber"};
    return names;
}

Report run_command(const std::string& command, const Model& m, const CmdOptions& o)
{
    if (command == "transfer")
        return cmd_transfer(m, o);
    if (command == "module-transfer")
        return cmd_module_transfer(m, o);
    if (command == "tilde-b")
        return cmd_tilde_b("tilde-b", m, o, std::nullopt);
    if (command == "classifying-space")
        return cmd_tilde_b("classifying-space", m, o, false);
    if (command == "loop-space")
        return cmd_tilde_b("loop-space", m, o, true);
    if (command == "massey")
        return cmd_massey(m, o);
    if (command == "twist-transfer")
        return cmd_twist_transfer(m, o);
    if (command == "fiber")
        return cmd_fiber(m, o);
    throw usage_error("unknown command '" + command + "'");
}

}  // namespace ainf
