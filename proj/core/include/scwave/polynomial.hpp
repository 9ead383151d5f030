#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace scwave {

// Dense polynomial with non-negative real coefficients indexed by power,
// p(y) = sum_k coeff[k] y^k.  Used for degree distributions and their
// derivatives/antiderivatives.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);
    static Polynomial monomial(int power, double coeff = 1.0);

    // Parses "0.3x^2+0.6x^3+0.1x^5", "x^4", "0.5x^8+0.5x^12".
    static Polynomial parse(std::string_view text);

    double operator()(double y) const; // Horner
    Polynomial derivative() const;
    Polynomial antiderivative() const; // vanishing at 0

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool empty() const { return coeffs_.empty(); }
    double coeff(int power) const;
    const std::vector<double>& coeffs() const { return coeffs_; }
    double coeff_sum() const;

    Polynomial& scale(double s);
    std::string to_string() const;

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

private:
    void trim();
    std::vector<double> coeffs_;
};

} // namespace scwave
