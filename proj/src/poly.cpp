#include "inar/poly.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

namespace inar {

double Poly::operator()(double x) const {
    double acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

Poly Poly::derivative() const {
    if (c.size() <= 1) return Poly{0.0};
    std::vector<double> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = static_cast<double>(i) * c[i];
    return Poly(std::move(d));
}

int Poly::degree(double rel) const {
    double big = 0.0;
    for (double v : c) big = std::max(big, std::abs(v));
    for (size_t i = c.size(); i-- > 0;)
        if (std::abs(c[i]) > rel * big && c[i] != 0.0) return static_cast<int>(i);
    return -1;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<double> r(std::max(a.c.size(), b.c.size()), 0.0);
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-1.0) * b; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.c.empty() || b.c.empty()) return Poly{};
    std::vector<double> r(a.c.size() + b.c.size() - 1, 0.0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return Poly(std::move(r));
}

Poly operator*(double s, const Poly& a) {
    Poly r = a;
    for (double& v : r.c) v *= s;
    return r;
}

std::vector<double> real_roots(const Poly& p, double tol) {
    const int deg = p.degree(1e-13);
    std::vector<double> out;
    if (deg < 1) return out;
    Eigen::VectorXd coeffs(deg + 1);
    for (int i = 0; i <= deg; ++i) coeffs[i] = p.c[i];
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
    for (const auto& z : solver.roots())
        if (std::abs(z.imag()) <= tol * (1.0 + std::abs(z.real()))) out.push_back(z.real());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace inar
