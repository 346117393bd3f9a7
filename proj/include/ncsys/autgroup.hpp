#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "ncsys/diffop.hpp"

namespace ncsys {

// F_t(z) = z - H_t(z) with o(H_t) >= alpha and H_{t=0} = 0.
class Automorphism {
public:
    Automorphism(int alpha, SeriesVector H);
    static Automorphism identity(const Ring& ring, int alpha);

    const Ring& ring() const { return H_.front().ring(); }
    int alpha() const { return alpha_; }
    const SeriesVector& H() const { return H_; }
    // The coordinate functions z - H_t(z).
    SeriesVector F() const;

    friend bool operator==(const Automorphism& a, const Automorphism& b)
    {
        return a.alpha_ == b.alpha_ && a.H_ == b.H_;
    }

private:
    int alpha_;
    SeriesVector H_;
};

// D-Log coefficient a_t(z): e^{[a_t ∂/∂z]} z = F_t(z).
class DLog {
public:
    DLog(int alpha, SeriesVector a);

    const Ring& ring() const { return a_.front().ring(); }
    int alpha() const { return alpha_; }
    const SeriesVector& a() const { return a_; }
    Derivation derivation() const { return Derivation(a_); }

    friend bool operator==(const DLog& x, const DLog& y) { return x.alpha_ == y.alpha_ && x.a_ == y.a_; }

private:
    int alpha_;
    SeriesVector a_;
};

// (U ∘ V)(z) = U(V(z)).
Automorphism compose(const Automorphism& U, const Automorphism& V);
// G_t = F_t^{-1} = z + M_t, returned with H = -M_t.
Automorphism invert(const Automorphism& F);
// M_t of G_t = z + M_t.
SeriesVector inverse_shift(const Automorphism& F);
DLog dlog(const Automorphism& F);
Automorphism exp_derivation(const DLog& d);
// Every t^m slice of H_t is z-homogeneous of degree m + 1.
bool is_graded_form(const Automorphism& F);

enum class Profile { general, linear_in_t, strictly_triangular, graded };

Profile parse_profile(const std::string& name);
std::string to_string(Profile p);

// Sparse H with one to three terms per component and coefficients in {±1, ±2}.
// strictly_triangular is linear in t with component i using only z_1..z_{i-1};
// it needs n >= 2.
Automorphism random_automorphism(const Ring& ring, int alpha, Profile profile, std::mt19937_64& rng);

// Uniform draw from [lo, hi] by reduction modulo; stable across standard libraries.
int draw(std::mt19937_64& rng, int lo, int hi);
Rational draw_coeff(std::mt19937_64& rng);

} // namespace ncsys
