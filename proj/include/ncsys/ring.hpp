#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ncsys/rational.hpp"

namespace ncsys {

// A monomial in z is stored as a word of variable indices in [0, n). In
// commutative mode the canonical word is sorted (z0^a z1^b ... as 0..0 1..1).
using Word = std::vector<int>;

// Position of a monomial in the truncated basis. Indices are ordered by
// (degree, lexicographic word), which is the canonical term order.
using MonoIndex = std::uint32_t;
inline constexpr MonoIndex kNoMonomial = std::numeric_limits<MonoIndex>::max();

namespace detail {
struct Basis;
}

// Truncated ring K[[t]]<<z>> / (deg_z > max_z, deg_t > max_t) with K = Q.
//
// Rings compare equal iff their parameters agree; the monomial basis is built
// once and shared between copies.
class Ring {
public:
    Ring(int n, bool commutative, int max_z_degree, int max_t_degree);

    int n() const;
    bool commutative() const;
    int max_z_degree() const;
    int max_t_degree() const;

    std::size_t basis_size() const;
    const Word& word(MonoIndex m) const;
    int degree(MonoIndex m) const;

    MonoIndex one() const { return 0; }
    MonoIndex variable(int i) const;

    // Canonicalizes in commutative mode. kNoMonomial when degree exceeds max_z.
    MonoIndex index_of(std::span<const int> word) const;

    // kNoMonomial when deg(a) + deg(b) exceeds max_z.
    MonoIndex mul(MonoIndex a, MonoIndex b) const;

    // Exponent vector of a monomial (commutative reading of its word).
    std::vector<int> exponents(MonoIndex m) const;

    // Indices of all monomials of exactly the given degree.
    std::pair<MonoIndex, MonoIndex> degree_range(int d) const;

    std::string describe() const;

    friend bool operator==(const Ring& a, const Ring& b);

private:
    int n_;
    bool commutative_;
    int max_z_;
    int max_t_;
    std::shared_ptr<const detail::Basis> basis_;
};

// Throws ContextMismatch when the two rings differ.
void require_same_ring(const Ring& a, const Ring& b, const char* what);

} // namespace ncsys
