#include "ainf/graded.hpp"

#include <algorithm>

namespace ainf {

GradedBasis::GradedBasis(std::string name, std::vector<Generator> gens, bool reduced)
    : name_(std::move(name)), gens_(std::move(gens)), reduced_(reduced)
{
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (!index_.emplace(gens_[i].name, static_cast<int>(i)).second)
            throw validation_error("basis '" + name_ + "': duplicate generator name '" +
                                   gens_[i].name + "'");
        if (reduced_ && gens_[i].degree == 0)
            throw validation_error("basis '" + name_ + "' declared reduced but generator '" +
                                   gens_[i].name + "' has degree 0");
    }
}

int GradedBasis::index_of(const std::string& name) const
{
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int GradedBasis::require(const std::string& name) const
{
    int i = index_of(name);
    if (i < 0)
        throw validation_error("basis '" + name_ + "': unknown generator '" + name + "'");
    return i;
}

std::vector<int> GradedBasis::indices_of_degree(int d) const
{
    std::vector<int> out;
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].degree == d)
            out.push_back(static_cast<int>(i));
    return out;
}

int GradedBasis::min_degree() const
{
    int m = 0;
    bool first = true;
    for (const auto& g : gens_) {
        if (first || g.degree < m)
            m = g.degree;
        first = false;
    }
    return m;
}

int GradedBasis::max_degree() const
{
    int m = 0;
    bool first = true;
    for (const auto& g : gens_) {
        if (first || g.degree > m)
            m = g.degree;
        first = false;
    }
    return m;
}

bool GradedBasis::same_as(const GradedBasis& o) const
{
    if (this == &o)
        return true;
    if (gens_.size() != o.gens_.size())
        return false;
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree)
            return false;
    return true;
}

Element Element::generator(const GradedBasis& b, int idx, const Scalar& coeff)
{
    Element e(b.degree(idx));
    e.add_term(idx, coeff);
    return e;
}

void Element::add_term(int gen, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(gen);
    if (it == terms_.end()) {
        terms_.emplace(gen, c);
        return;
    }
    Scalar s = it->second + c;
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

Element Element::operator+(const Element& o) const
{
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    if (degree_ != o.degree_)
        throw validation_error("sum of elements of different degrees (" +
                               std::to_string(degree_) + " vs " + std::to_string(o.degree_) + ")");
    Element r = *this;
    for (const auto& [g, c] : o.terms_)
        r.add_term(g, c);
    return r;
}

Element Element::operator-(const Element& o) const
{
    return *this + o.negated();
}

Element Element::scaled(const Scalar& s) const
{
    Element r(degree_);
    if (s.is_zero())
        return r;
    for (const auto& [g, c] : terms_)
        r.add_term(g, s * c);
    return r;
}

Element Element::negated() const
{
    Element r(degree_);
    for (const auto& [g, c] : terms_)
        r.terms_.emplace(g, -c);
    return r;
}

bool Element::operator==(const Element& o) const
{
    if (is_zero() && o.is_zero())
        return true;  // zero of any degree is zero
    return degree_ == o.degree_ && terms_ == o.terms_;
}

std::string Element::str(const GradedBasis& b) const
{
    if (is_zero())
        return "0";
    std::string s;
    for (const auto& [g, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += c.str() + "*" + b.gen(g).name;
    }
    return s;
}

int parity_sign(int degree)
{
    return (degree % 2 == 0) ? 1 : -1;
}

Element koszul_hat(const Element& e)
{
    return parity_sign(e.degree()) < 0 ? e.negated() : e;
}

MultiMap::MultiMap(int arity, int shift, std::vector<BasisPtr> sources, BasisPtr target)
    : arity_(arity), shift_(shift), sources_(std::move(sources)), target_(std::move(target))
{
    if (arity_ < 1)
        throw validation_error("operation arity must be >= 1");
    if (sources_.size() != static_cast<size_t>(arity_))
        throw validation_error("operation source count does not match arity");
}

MultiMap MultiMap::unary(int shift, BasisPtr source, BasisPtr target)
{
    return MultiMap(1, shift, {std::move(source)}, std::move(target));
}

MultiMap MultiMap::identity(BasisPtr basis, const Field& f)
{
    MultiMap m = unary(0, basis, basis);
    for (size_t i = 0; i < basis->size(); ++i) {
        int idx = static_cast<int>(i);
        m.set({idx}, Element::generator(*basis, idx, Scalar::one(f)));
    }
    return m;
}

int MultiMap::tuple_degree(const std::vector<int>& tuple) const
{
    int d = 0;
    for (int i = 0; i < arity_; ++i)
        d += sources_[static_cast<size_t>(i)]->degree(tuple[static_cast<size_t>(i)]);
    return d;
}

void MultiMap::set(const std::vector<int>& tuple, const Element& value)
{
    if (tuple.size() != static_cast<size_t>(arity_))
        throw validation_error("operation table entry has wrong arity");
    if (value.is_zero()) {
        table_.erase(tuple);
        return;
    }
    int want = tuple_degree(tuple) + shift_;
    if (value.degree() != want)
        throw validation_error("operation table entry violates degree shift: expected " +
                               std::to_string(want) + ", got " + std::to_string(value.degree()));
    table_[tuple] = value;
}

Element MultiMap::eval_tuple(const std::vector<int>& tuple) const
{
    auto it = table_.find(tuple);
    if (it != table_.end())
        return it->second;
    return Element::zero(tuple_degree(tuple) + shift_);
}

Element MultiMap::eval(const std::vector<Element>& args) const
{
    if (args.size() != static_cast<size_t>(arity_))
        throw validation_error("operation applied to wrong number of arguments");
    int deg = shift_;
    for (const auto& a : args)
        deg += a.degree();
    Element out(deg);
    /* multilinear expansion over the term maps */
    std::vector<int> tuple(static_cast<size_t>(arity_));
    std::vector<std::map<int, Scalar>::const_iterator> its(static_cast<size_t>(arity_));
    for (const auto& a : args)
        if (a.is_zero())
            return out;
    size_t k = 0;
    its[0] = args[0].terms().begin();
    Scalar coeff = Scalar::one(args[0].terms().begin()->second.field());
    std::vector<Scalar> partial(static_cast<size_t>(arity_) + 1, coeff);
    while (true) {
        if (its[k] == args[k].terms().end()) {
            if (k == 0)
                break;
            --k;
            ++its[k];
            continue;
        }
        tuple[k] = its[k]->first;
        partial[k + 1] = partial[k] * its[k]->second;
        if (k + 1 == static_cast<size_t>(arity_)) {
            Element v = eval_tuple(tuple);
            if (!v.is_zero())
                out = out + v.scaled(partial[k + 1]);
            ++its[k];
        } else {
            ++k;
            its[k] = args[k].terms().begin();
        }
    }
    return out;
}

Element MultiMap::eval1(const Element& arg) const
{
    return eval({arg});
}

bool MultiMap::operator==(const MultiMap& o) const
{
    return arity_ == o.arity_ && shift_ == o.shift_ && table_ == o.table_;
}

}  // namespace ainf
