#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace nefkit {

/// Exact rational scalar. The backend keeps values normalized
/// (lowest terms, positive denominator); no floating point is used
/// anywhere in the library.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

using RatVec = std::vector<Rat>;

/// Builds num/den, accepting a negative or positive denominator.
/// Throws InputError on a zero denominator.
Rat make_rat(const Int& num, const Int& den);

/// Parses "p" or "p/q" (optional leading minus). Throws InputError on
/// anything else.
Rat parse_rat(const std::string& text);

/// Renders in lowest terms as "p" or "p/q".
std::string format_rat(const Rat& value);

Rat dot(const RatVec& a, const RatVec& b);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scaled(const RatVec& v, const Rat& factor);
bool is_zero_vec(const RatVec& v);

/// Rescales by the unique positive rational that clears denominators
/// and divides out the gcd of the numerators. The sign pattern is kept
/// (vectors here are only equivalent up to *positive* scaling).
/// Idempotent; the zero vector is returned unchanged.
RatVec canonical(const RatVec& v);

/// Lexicographic comparison, entry by entry. Returns <0, 0, >0.
int compare_lex(const RatVec& a, const RatVec& b);

/// "(a, b, c)" with each entry via format_rat.
std::string format_vec(const RatVec& v);

}  // namespace nefkit
