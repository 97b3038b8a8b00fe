#pragma once

#include <initializer_list>
#include <vector>

namespace inar {

// Dense polynomial in one variable, c[i] multiplies x^i.
struct Poly {
    std::vector<double> c;

    Poly() = default;
    Poly(std::initializer_list<double> coeffs) : c(coeffs) {}
    explicit Poly(std::vector<double> coeffs) : c(std::move(coeffs)) {}

    double operator()(double x) const;
    Poly derivative() const;
    // Degree after dropping coefficients below rel * max|c|.
    int degree(double rel = 0.0) const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(double s, const Poly& a);

// Real roots via the companion matrix. Imaginary parts below tol count as real.
std::vector<double> real_roots(const Poly& p, double tol = 1e-7);

}  // namespace inar
