#include "ainf/model.hpp"

#include <fstream>
#include <json.hpp>
#include <limits>
#include <sstream>

namespace ainf {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kNoLowerBound = std::numeric_limits<int>::min() / 2;

Field parse_field(const std::string& s)
{
    if (s == "Q")
        return Field::Q();
    if (s.rfind("Zp:", 0) == 0)
        return Field::Zp(std::stoul(s.substr(3)));
    throw validation_error("unknown field '" + s + "' (expected Q or Zp:<p>)");
}

Scalar parse_scalar(const std::string& s, const Field& f)
{
    if (f.kind == Field::Kind::prime && s.find('/') != std::string::npos) {
        auto cut = s.find('/');
        Scalar num = Scalar::parse(s.substr(0, cut), f);
        Scalar den = Scalar::parse(s.substr(cut + 1), f);
        return num / den;
    }
    return Scalar::parse(s, f);
}

BasisPtr parse_generators(const json& j, const std::string& name, const Model& m)
{
    std::vector<Generator> gens;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw validation_error(name + ": generators must be [name, degree] pairs");
        int ext = e[1].get<int>();
        if (ext < 0)
            throw validation_error(name + ": generator '" + e[0].get<std::string>() +
                                   "' has negative degree");
        gens.push_back(Generator{e[0].get<std::string>(), m.internal_of_external(ext)});
    }
    return std::make_shared<GradedBasis>(name, gens);
}

Element parse_element(const json& j, const GradedBasis& b, const Field& f,
                      const std::string& where)
{
    if (!j.is_array())
        throw validation_error(where + ": element must be an array of [generator, scalar]");
    Element out(0);
    bool first = true;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw validation_error(where + ": element term must be [generator, scalar]");
        int g = b.index_of(term[0].get<std::string>());
        if (g < 0)
            throw validation_error(where + ": unknown generator '" +
                                   term[0].get<std::string>() + "'");
        Scalar c = parse_scalar(term[1].get<std::string>(), f);
        if (first) {
            out = Element(b.degree(g));
            first = false;
        }
        out.add_term(g, c);
    }
    return out;
}

std::vector<std::string> split_key(const std::string& key)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : key) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

void parse_unary_table(const json& j, MultiMap& map, const GradedBasis& b, const Field& f,
                       const std::string& where)
{
    for (const auto& [key, value] : j.items()) {
        int g = b.index_of(key);
        if (g < 0)
            throw validation_error(where + ": unknown generator '" + key + "'");
        map.set({g}, parse_element(value, *map.target(), f, where + "." + key));
    }
}

std::string scalar_str(const Scalar& s)
{
    return s.str();
}

ordered_json emit_element(const Element& e, const GradedBasis& b)
{
    ordered_json arr = ordered_json::array();
    for (const auto& [g, c] : e.terms())
        arr.push_back({b.gen(g).name, scalar_str(c)});
    return arr;
}

}  // namespace

std::shared_ptr<DGModule> self_module(const std::shared_ptr<DGAlgebra>& a)
{
    auto mod = std::make_shared<DGModule>();
    mod->complex = a->complex;
    mod->algebra = a;
    mod->action = a->product;
    return mod;
}

Model load_model_text(const std::string& text, const std::string& origin,
                      std::optional<Field> field_override,
                      std::optional<bool> cohomological_override)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw validation_error(origin + ": " + err.what());
    }

    Model m;
    m.name = j.value("model", origin);
    m.field = field_override ? *field_override : parse_field(j.value("field", std::string("Q")));
    std::string grading = j.value("grading", std::string("homological"));
    if (grading != "homological" && grading != "cohomological")
        throw validation_error(origin + ": grading must be homological or cohomological");
    m.cohomological =
        cohomological_override ? *cohomological_override : grading == "cohomological";
    if (!j.contains("caps") || !j["caps"].contains("degree"))
        throw validation_error(origin + ": caps.degree is required");
    m.degree_cap = j["caps"]["degree"].get<int>();
    if (j["caps"].contains("arity"))
        m.arity_cap = j["caps"]["arity"].get<int>();

    if (j.contains("algebra")) {
        const json& ja = j["algebra"];
        auto basis = parse_generators(ja.at("generators"), "C", m);
        auto alg = std::make_shared<DGAlgebra>();
        alg->complex.field = m.field;
        alg->complex.basis = basis;
        alg->complex.d = MultiMap::unary(-1, basis, basis);
        if (ja.contains("differential"))
            parse_unary_table(ja["differential"], alg->complex.d, *basis, m.field,
                              "algebra.differential");
        alg->product = MultiMap(2, 0, {basis, basis}, basis);
        if (ja.contains("product")) {
            for (const auto& [key, value] : ja["product"].items()) {
                auto parts = split_key(key);
                if (parts.size() != 2)
                    throw validation_error("algebra.product: key '" + key +
                                           "' must name two generators");
                int g1 = basis->index_of(parts[0]);
                int g2 = basis->index_of(parts[1]);
                if (g1 < 0 || g2 < 0)
                    throw validation_error("algebra.product: unknown generator in '" + key +
                                           "'");
                alg->product.set({g1, g2},
                                 parse_element(value, *basis, m.field, "algebra.product"));
            }
        }
        if (ja.contains("unit")) {
            alg->unit = basis->index_of(ja["unit"].get<std::string>());
            if (alg->unit < 0)
                throw validation_error("algebra.unit: unknown generator");
            if (basis->degree(alg->unit) != 0)
                throw validation_error("algebra.unit must have degree 0");
            /* unit products are implied, never listed */
            Scalar one = Scalar::one(m.field);
            for (size_t i = 0; i < basis->size(); ++i) {
                int g = static_cast<int>(i);
                alg->product.set({alg->unit, g}, Element::generator(*basis, g, one));
                alg->product.set({g, alg->unit}, Element::generator(*basis, g, one));
            }
        }
        if (ja.contains("complete_through")) {
            if (m.cohomological)
                throw validation_error(
                    "complete_through is only supported for homological models");
            alg->complex.complete_range =
                std::make_pair(kNoLowerBound, ja["complete_through"].get<int>());
        }
        m.algebra = alg;
    }

    if (j.contains("coalgebra")) {
        const json& jk = j["coalgebra"];
        auto basis = parse_generators(jk.at("generators"), "K", m);
        auto k = std::make_shared<DGCoalgebra>();
        k->field = m.field;
        k->basis = basis;
        k->d = MultiMap::unary(-1, basis, basis);
        if (jk.contains("differential"))
            parse_unary_table(jk["differential"], k->d, *basis, m.field,
                              "coalgebra.differential");
        if (jk.contains("coproduct")) {
            for (const auto& [key, value] : jk["coproduct"].items()) {
                int g = basis->index_of(key);
                if (g < 0)
                    throw validation_error("coalgebra.coproduct: unknown generator '" + key +
                                           "'");
                for (const auto& term : value) {
                    if (!term.is_array() || term.size() != 3)
                        throw validation_error(
                            "coalgebra.coproduct: terms are [left, right, scalar]");
                    int l = basis->index_of(term[0].get<std::string>());
                    int r = basis->index_of(term[1].get<std::string>());
                    if (l < 0 || r < 0)
                        throw validation_error("coalgebra.coproduct: unknown generator in '" +
                                               key + "'");
                    k->coproduct[g].emplace_back(
                        l, r, parse_scalar(term[2].get<std::string>(), m.field));
                }
            }
        }
        k->default_stages();
        m.coalgebra = k;
    }

    if (j.contains("module")) {
        if (j["module"].is_string() && j["module"].get<std::string>() == "self") {
            if (!m.algebra)
                throw validation_error("module: \"self\" needs an algebra");
            m.module = self_module(m.algebra);
            m.module_is_self = true;
        } else {
            const json& jm = j["module"];
            if (!m.algebra)
                throw validation_error("module needs an algebra to act");
            auto basis = parse_generators(jm.at("generators"), "P", m);
            auto mod = std::make_shared<DGModule>();
            mod->complex.field = m.field;
            mod->complex.basis = basis;
            mod->complex.d = MultiMap::unary(-1, basis, basis);
            if (jm.contains("differential"))
                parse_unary_table(jm["differential"], mod->complex.d, *basis, m.field,
                                  "module.differential");
            mod->algebra = m.algebra;
            mod->action = MultiMap(2, 0, {m.algebra->complex.basis, basis}, basis);
            if (jm.contains("action")) {
                for (const auto& [key, value] : jm["action"].items()) {
                    auto parts = split_key(key);
                    if (parts.size() != 2)
                        throw validation_error("module.action: key '" + key +
                                               "' must be algebra,module");
                    int a = m.algebra->basis().index_of(parts[0]);
                    int p = basis->index_of(parts[1]);
                    if (a < 0 || p < 0)
                        throw validation_error("module.action: unknown generator in '" + key +
                                               "'");
                    mod->action.set({a, p},
                                    parse_element(value, *basis, m.field, "module.action"));
                }
            }
            if (m.algebra->unit >= 0) {
                Scalar one = Scalar::one(m.field);
                for (size_t i = 0; i < basis->size(); ++i)
                    mod->action.set({m.algebra->unit, static_cast<int>(i)},
                                    Element::generator(*basis, static_cast<int>(i), one));
            }
            m.module = mod;
        }
    }

    if (j.contains("twisting_cochain")) {
        if (!m.coalgebra || !m.algebra)
            throw validation_error("twisting_cochain needs a coalgebra and an algebra");
        MultiMap phi = MultiMap::unary(-1, m.coalgebra->basis, m.algebra->complex.basis);
        parse_unary_table(j["twisting_cochain"], phi, *m.coalgebra->basis, m.field,
                          "twisting_cochain");
        m.cochain = phi;
    }

    /* structural validation through the model's own cap */
    int cap = m.degree_cap + 2;
    if (m.algebra) {
        DefectReport rep = check_dg(*m.algebra, cap);
        if (!rep.empty())
            throw validation_error(m.name + ": algebra fails validation:\n" + rep.str());
    }
    if (m.coalgebra) {
        DefectReport rep = check_dg(*m.coalgebra, cap);
        if (!rep.empty())
            throw validation_error(m.name + ": coalgebra fails validation:\n" + rep.str());
    }
    if (m.module && !m.module_is_self) {
        DefectReport rep = check_dg(*m.module, cap);
        if (!rep.empty())
            throw validation_error(m.name + ": module fails validation:\n" + rep.str());
    }
    return m;
}

Model load_model(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw usage_error("cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_model_text(ss.str(), path);
}

std::string emit_model(const Model& m)
{
    ordered_json j;
    j["model"] = m.name;
    j["field"] = m.field.str();
    j["grading"] = m.cohomological ? "cohomological" : "homological";
    j["caps"]["degree"] = m.degree_cap;
    if (m.arity_cap)
        j["caps"]["arity"] = *m.arity_cap;

    auto emit_basis = [&](const GradedBasis& b) {
        ordered_json arr = ordered_json::array();
        for (size_t i = 0; i < b.size(); ++i)
            arr.push_back({b.gen(static_cast<int>(i)).name,
                           m.external_of_internal(b.degree(static_cast<int>(i)))});
        return arr;
    };
    auto emit_unary = [&](const MultiMap& map, const GradedBasis& src,
                          const GradedBasis& dst) {
        ordered_json out = ordered_json::object();
        for (const auto& [tuple, value] : map.table())
            out[src.gen(tuple[0]).name] = emit_element(value, dst);
        return out;
    };

    if (m.algebra) {
        const GradedBasis& b = m.algebra->basis();
        ordered_json ja;
        if (m.algebra->unit >= 0)
            ja["unit"] = b.gen(m.algebra->unit).name;
        ja["generators"] = emit_basis(b);
        ja["differential"] = emit_unary(m.algebra->complex.d, b, b);
        ordered_json prod = ordered_json::object();
        for (const auto& [tuple, value] : m.algebra->product.table()) {
            if (m.algebra->unit >= 0 &&
                (tuple[0] == m.algebra->unit || tuple[1] == m.algebra->unit))
                continue;  // implied
            prod[b.gen(tuple[0]).name + "," + b.gen(tuple[1]).name] = emit_element(value, b);
        }
        ja["product"] = prod;
        if (m.algebra->complex.complete_range)
            ja["complete_through"] = m.algebra->complex.complete_range->second;
        j["algebra"] = ja;
    }
    if (m.coalgebra) {
        const GradedBasis& b = *m.coalgebra->basis;
        ordered_json jk;
        jk["generators"] = emit_basis(b);
        jk["differential"] = emit_unary(m.coalgebra->d, b, b);
        ordered_json cop = ordered_json::object();
        for (const auto& [g, terms] : m.coalgebra->coproduct) {
            ordered_json arr = ordered_json::array();
            for (const auto& [l, r, c] : terms)
                arr.push_back({b.gen(l).name, b.gen(r).name, scalar_str(c)});
            cop[b.gen(g).name] = arr;
        }
        jk["coproduct"] = cop;
        j["coalgebra"] = jk;
    }
    if (m.module) {
        if (m.module_is_self) {
            j["module"] = "self";
        } else {
            const GradedBasis& b = m.module->basis();
            const GradedBasis& ab = m.algebra->basis();
            ordered_json jm;
            jm["generators"] = emit_basis(b);
            jm["differential"] = emit_unary(m.module->complex.d, b, b);
            ordered_json act = ordered_json::object();
            for (const auto& [tuple, value] : m.module->action.table()) {
                if (m.algebra->unit >= 0 && tuple[0] == m.algebra->unit)
                    continue;
                act[ab.gen(tuple[0]).name + "," + b.gen(tuple[1]).name] =
                    emit_element(value, b);
            }
            jm["action"] = act;
            j["module"] = jm;
        }
    }
    if (m.cochain)
        j["twisting_cochain"] =
            emit_unary(*m.cochain, *m.coalgebra->basis, m.algebra->basis());

    return j.dump(2) + "\n";
}

}  // namespace ainf
