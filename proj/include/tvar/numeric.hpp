#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tvar {

using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Error with a stable machine-readable code ("NotSaturated", "RankMismatch", ...).
struct Error {
    std::string code;
    std::string message;
};

[[noreturn]] void fail(const std::string& code, const std::string& message);

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// gcd of all entries; 0 for the zero vector.
Int content(const IVec& v);

bool is_zero(const IVec& v);
bool is_zero(const QVec& v);

IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec neg(const IVec& a);
Int dot(const IVec& a, const IVec& b);
Rat dot(const QVec& a, const QVec& b);
Rat dot(const IVec& a, const QVec& b);

QVec to_rational(const IVec& v);
// Requires every entry to have denominator 1.
IVec to_integer(const QVec& v);

// Clears denominators and divides by the content: the primitive integer
// vector spanning the same ray. Zero vector maps to itself.
IVec primitive(const QVec& v);
IVec primitive(const IVec& v);

// Strict total order used wherever deterministic output matters.
bool lex_less(const IVec& a, const IVec& b);
bool lex_less(const QVec& a, const QVec& b);

std::string to_string(const Rat& q);
std::string to_string(const IVec& v);
std::string to_string(const QVec& v);

// Parses "p", "p/q" or "-p/q"; throws ParseError on malformed input.
Rat parse_rational(const std::string& text);

}  // namespace tvar
