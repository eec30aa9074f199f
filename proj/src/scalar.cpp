#include "ainf/scalar.hpp"

namespace ainf {

bool is_prime(unsigned long n)
{
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::Zp(unsigned long p)
{
    if (!is_prime(p))
        throw validation_error("field modulus " + std::to_string(p) + " is not prime");
    return Field{Kind::prime, p};
}

std::string Field::str() const
{
    return kind == Kind::rational ? "Q" : "Zp:" + std::to_string(mod);
}

Scalar Scalar::zero(const Field& f)
{
    Scalar s;
    s.field_ = f;
    s.rat_ = 0;
    s.res_ = 0;
    return s;
}

Scalar Scalar::one(const Field& f)
{
    return from_int(1, f);
}

Scalar Scalar::from_int(long v, const Field& f)
{
    Scalar s;
    s.field_ = f;
    if (f.kind == Field::Kind::rational) {
        s.rat_ = v;
    } else {
        long m = static_cast<long>(f.mod);
        long r = v % m;
        if (r < 0)
            r += m;
        s.res_ = static_cast<unsigned long>(r);
    }
    return s;
}

Scalar Scalar::from_mpq(const mpq_class& q, const Field& f)
{
    if (f.kind != Field::Kind::rational)
        throw validation_error("rational literal used with field " + f.str());
    Scalar s;
    s.field_ = f;
    s.rat_ = q;
    s.rat_.canonicalize();
    return s;
}

Scalar Scalar::parse(const std::string& text, const Field& f)
{
    if (text.empty())
        throw validation_error("empty scalar literal");
    try {
        if (f.kind == Field::Kind::rational) {
            mpq_class q(text);
            q.canonicalize();
            if (q.get_den() < 0) {
                q = mpq_class(-q.get_num(), -q.get_den());
                q.canonicalize();
            }
            return from_mpq(q, f);
        }
        mpz_class z(text);
        mpz_class r = z % static_cast<long>(f.mod);
        if (r < 0)
            r += static_cast<long>(f.mod);
        Scalar s;
        s.field_ = f;
        s.res_ = r.get_ui();
        return s;
    } catch (const std::invalid_argument&) {
        throw validation_error("bad scalar literal '" + text + "' for field " + f.str());
    }
}

bool Scalar::is_zero() const
{
    return field_.kind == Field::Kind::rational ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const
{
    return field_.kind == Field::Kind::rational ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const
{
    if (field_ != o.field_)
        throw validation_error("field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const
{
    check_same_field(o);
    Scalar s = *this;
    if (field_.kind == Field::Kind::rational)
        s.rat_ = rat_ + o.rat_;
    else
        s.res_ = (res_ + o.res_) % field_.mod;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const
{
    return *this + (-o);
}

Scalar Scalar::operator-() const
{
    Scalar s = *this;
    if (field_.kind == Field::Kind::rational)
        s.rat_ = -rat_;
    else
        s.res_ = res_ == 0 ? 0 : field_.mod - res_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const
{
    check_same_field(o);
    Scalar s = *this;
    if (field_.kind == Field::Kind::rational)
        s.rat_ = rat_ * o.rat_;
    else
        s.res_ = (res_ * o.res_) % field_.mod;
    return s;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw validation_error("division by zero in field " + field_.str());
    Scalar s = *this;
    if (field_.kind == Field::Kind::rational) {
        s.rat_ = 1 / rat_;
        return s;
    }
    /* extended Euclid for a^-1 mod p */
    long p = static_cast<long>(field_.mod);
    long a = static_cast<long>(res_), b = p, x = 1, y = 0;
    while (b != 0) {
        long q = a / b;
        long t = a - q * b;
        a = b;
        b = t;
        t = x - q * y;
        x = y;
        y = t;
    }
    x %= p;
    if (x < 0)
        x += p;
    s.res_ = static_cast<unsigned long>(x);
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const
{
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const
{
    if (field_ != o.field_)
        return false;
    return field_.kind == Field::Kind::rational ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const
{
    if (field_.kind == Field::Kind::rational)
        return rat_.get_num().get_str() + "/" + rat_.get_den().get_str();
    return std::to_string(res_);
}

}  // namespace ainf
