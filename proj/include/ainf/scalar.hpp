#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ainf/error.hpp"

namespace ainf {

/* Coefficient field: the rationals or Z/p for a prime p. Every scalar in one
 * computation carries the same field; mixing fields is a validation error. */
struct Field {
    enum class Kind { rational, prime };
    Kind kind = Kind::rational;
    unsigned long mod = 0;  // modulus when kind == prime

    static Field Q() { return Field{Kind::rational, 0}; }
    static Field Zp(unsigned long p);

    bool operator==(const Field& o) const { return kind == o.kind && mod == o.mod; }
    bool operator!=(const Field& o) const { return !(*this == o); }
    std::string str() const;
};

bool is_prime(unsigned long n);

/* Exact field element. Rationals are kept canonical (lowest terms, positive
 * denominator) by mpq_class; prime-field residues are reduced into [0, p). */
class Scalar {
public:
    Scalar() : field_(Field::Q()), rat_(0), res_(0) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(long v, const Field& f);
    static Scalar from_mpq(const mpq_class& q, const Field& f);
    /* Parses "a/b" or "a" over Q, an integer residue over Z/p. */
    static Scalar parse(const std::string& s, const Field& f);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar operator-() const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /* Canonical wire format: "num/den" over Q (always with the slash),
     * the residue digits over Z/p. */
    std::string str() const;

private:
    Field field_;
    mpq_class rat_;
    unsigned long res_;

    void check_same_field(const Scalar& o) const;
};

}  // namespace ainf
