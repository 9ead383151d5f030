#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "scwave/polynomial.hpp"

namespace scwave {

// Uniform LLR grid with nodes at i*spacing, i in [-half_bins, +half_bins],
// plus one explicit atom at alpha = +infinity kept outside the node array.
// A node sits exactly at alpha = 0 so the Dirac identities hold bin-exactly.
//
// The check-node combination table (nearest node of boxplus(a_i, a_j)) is
// built lazily and shared by every density on the grid.
class Grid {
public:
    static std::shared_ptr<const Grid> make(double llr_max, int half_bins);
    // 2048 bins on [-30, 30]: 2049 nodes, spacing 30/1024.
    static const std::shared_ptr<const Grid>& standard();

    double llr_max() const { return llr_max_; }
    int half_bins() const { return half_; }
    int node_count() const { return 2 * half_ + 1; }
    double spacing() const { return h_; }
    double alpha(int node) const { return (node - half_) * h_; }
    int zero_node() const { return half_; }

    int nearest_node(double a) const; // clamped to the finite range
    bool same_layout(const Grid& other) const {
        return half_ == other.half_ && llr_max_ == other.llr_max_;
    }

    // log2(1 + exp(-alpha_i)) per node
    const std::vector<double>& entropy_weights() const { return entropy_weights_; }
    // nearest node of 2 atanh(tanh(a_i/2) tanh(a_j/2)), row-major node_count^2
    const std::vector<uint16_t>& cn_table() const;

private:
    Grid(double llr_max, int half_bins);
    double llr_max_ = 0.0;
    int half_ = 0;
    double h_ = 0.0;
    std::vector<double> entropy_weights_;
    mutable std::vector<uint16_t> cn_table_;
    mutable std::once_flag cn_once_;
};

// Numerically stable 2 atanh(tanh(a/2) tanh(b/2)) for finite a, b.
double boxplus(double a, double b);

// Quantized symmetric LLR measure: masses on the grid nodes plus an atom at
// +infinity.  signed_flag marks differences of probability measures (total
// mass 0); all operations below are bilinear so they apply to both.
class Density {
public:
    Density() = default;
    explicit Density(std::shared_ptr<const Grid> grid, bool is_signed = false);

    const Grid& grid() const { return *grid_; }
    const std::shared_ptr<const Grid>& grid_ptr() const { return grid_; }

    std::vector<double>& masses() { return mass_; }
    const std::vector<double>& masses() const { return mass_; }
    double& inf_mass() { return inf_; }
    double inf_mass() const { return inf_; }
    bool is_signed() const { return signed_; }
    void set_signed(bool s) { signed_ = s; }

    double total_mass() const;           // compensated sum incl. +inf atom
    double finite_mass() const;          // mass on the finite nodes
    double mass_near(double a, double window = 1e-9) const;

    // max over nodes alpha>0 of |m(-alpha) - e^{-alpha} m(alpha)| accumulated;
    // 0 for perfectly symmetric quantized measures.
    double symmetry_defect() const;

    // throws ConfigError if mass/sign invariants are violated
    void validate(double tol = 1e-12) const;

    Density& axpy(double a, const Density& other); // *this += a * other
    Density& scale(double a);

    friend Density operator+(const Density& x, const Density& y);
    friend Density operator-(const Density& x, const Density& y); // result is signed
    friend Density operator*(double a, Density x);

private:
    std::shared_ptr<const Grid> grid_;
    std::vector<double> mass_;
    double inf_ = 0.0;
    bool signed_ = false;
};

enum class DiracKind { zero, infinity };

Density dirac(DiracKind kind, std::shared_ptr<const Grid> grid = Grid::standard());
Density dirac_zero(std::shared_ptr<const Grid> grid = Grid::standard());
Density dirac_infinity(std::shared_ptr<const Grid> grid = Grid::standard());

// Variable-node convolution (density of a1 + a2).  Out-of-range sums clamp
// to the extreme finite nodes; +infinity absorbs everything it meets.
Density vn_convolve(const Density& x, const Density& y);

// Check-node convolution (tanh rule).  +infinity is the identity, the atom
// at alpha = 0 annihilates.
Density cn_convolve(const Density& x, const Density& y);

// H(x) = sum_i m_i log2(1 + exp(-alpha_i)); the +infinity atom contributes 0.
// Extends linearly to signed measures.
double entropy(const Density& x);

// sum_k c_k x^{vn k} with x^{vn 0} = dirac(zero); powers are memoized.
Density poly_lift_vn(const Polynomial& poly, const Density& x);
// sum_k c_k x^{cn k} with x^{cn 0} = dirac(infinity).
Density poly_lift_cn(const Polynomial& poly, const Density& x);

enum class ChannelFamily { bec, bsc, biawgn };

struct ChannelSpec {
    ChannelFamily family = ChannelFamily::bec;
    double parameter = 0.0; // eps for BEC, crossover p for BSC, sigma_n^2 for BIAWGN
    double entropy = 0.0;   // cached H(c)

    static ChannelSpec make(ChannelFamily family, double parameter,
                            const std::shared_ptr<const Grid>& grid = Grid::standard());
};

const char* to_string(ChannelFamily family);
ChannelFamily channel_family_from_string(const std::string& name);

Density channel_density(const ChannelSpec& spec, std::shared_ptr<const Grid> grid = Grid::standard());
Density bec_density(double eps, std::shared_ptr<const Grid> grid = Grid::standard());

} // namespace scwave
