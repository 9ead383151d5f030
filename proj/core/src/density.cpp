#include "scwave/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scwave/errors.hpp"

namespace scwave {

namespace {

// Neumaier-compensated sum; keeps mass-conservation checks near machine eps.
double compensated_sum(const std::vector<double>& v, double extra = 0.0) {
    double sum = extra;
    double comp = 0.0;
    for (double x : v) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

double softplus(double t) { return t > 40.0 ? t : std::log1p(std::exp(t)); }

} // namespace

double boxplus(double a, double b) {
    const double sign = (a < 0) == (b < 0) ? 1.0 : -1.0;
    const double aa = std::abs(a);
    const double ab = std::abs(b);
    return sign * std::min(aa, ab) + softplus(-(aa + ab)) - softplus(-std::abs(aa - ab));
}

Grid::Grid(double llr_max, int half_bins) : llr_max_(llr_max), half_(half_bins), h_(llr_max / half_bins) {
    entropy_weights_.resize(static_cast<size_t>(node_count()));
    for (int i = 0; i < node_count(); ++i) {
        // log2(1 + exp(-alpha)) evaluated stably on both sides of zero
        entropy_weights_[static_cast<size_t>(i)] = softplus(-alpha(i)) / std::numbers::ln2;
    }
}

std::shared_ptr<const Grid> Grid::make(double llr_max, int half_bins) {
    if (llr_max <= 0.0 || half_bins < 1) throw ConfigError("grid needs llr_max > 0 and half_bins >= 1");
    return std::shared_ptr<const Grid>(new Grid(llr_max, half_bins));
}

const std::shared_ptr<const Grid>& Grid::standard() {
    static const std::shared_ptr<const Grid> grid = Grid::make(30.0, 1024);
    return grid;
}

int Grid::nearest_node(double a) const {
    const long idx = std::lround(a / h_);
    const long clamped = std::clamp(idx, static_cast<long>(-half_), static_cast<long>(half_));
    return static_cast<int>(clamped) + half_;
}

const std::vector<uint16_t>& Grid::cn_table() const {
    std::call_once(cn_once_, [this] {
        const int n = node_count();
        cn_table_.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double ai = alpha(i);
            for (int j = i; j < n; ++j) {
                const auto node = static_cast<uint16_t>(nearest_node(boxplus(ai, alpha(j))));
                cn_table_[static_cast<size_t>(i) * n + j] = node;
                cn_table_[static_cast<size_t>(j) * n + i] = node;
            }
        }
    });
    return cn_table_;
}

Density::Density(std::shared_ptr<const Grid> grid, bool is_signed)
    : grid_(std::move(grid)), mass_(static_cast<size_t>(grid_->node_count()), 0.0), signed_(is_signed) {}

double Density::total_mass() const { return compensated_sum(mass_, inf_); }

double Density::finite_mass() const { return compensated_sum(mass_); }

double Density::mass_near(double a, double window) const {
    double m = 0.0;
    for (int i = 0; i < grid_->node_count(); ++i)
        if (std::abs(grid_->alpha(i) - a) <= window) m += mass_[static_cast<size_t>(i)];
    return m;
}

double Density::symmetry_defect() const {
    const int half = grid_->half_bins();
    double defect = 0.0;
    for (int o = 1; o <= half; ++o) {
        const double a = o * grid_->spacing();
        const double pos = mass_[static_cast<size_t>(half + o)];
        const double neg = mass_[static_cast<size_t>(half - o)];
        defect += std::abs(neg - std::exp(-a) * pos);
    }
    return defect;
}

void Density::validate(double tol) const {
    if (!grid_) throw ConfigError("density has no grid");
    const double total = total_mass();
    if (signed_) {
        if (std::abs(total) > tol) throw ConfigError("signed density mass != 0");
        return;
    }
    if (std::abs(total - 1.0) > tol) throw ConfigError("density mass != 1");
    for (double m : mass_)
        if (m < -tol) throw ConfigError("negative mass in unsigned density");
    if (inf_ < -tol) throw ConfigError("negative mass at +infinity");
}

Density& Density::axpy(double a, const Density& other) {
    if (!grid_->same_layout(other.grid())) throw ConfigError("grid mismatch");
    for (size_t i = 0; i < mass_.size(); ++i) mass_[i] += a * other.mass_[i];
    inf_ += a * other.inf_;
    return *this;
}

Density& Density::scale(double a) {
    for (double& m : mass_) m *= a;
    inf_ *= a;
    return *this;
}

Density operator+(const Density& x, const Density& y) {
    Density out = x;
    out.axpy(1.0, y);
    out.signed_ = x.signed_ || y.signed_;
    return out;
}

Density operator-(const Density& x, const Density& y) {
    Density out = x;
    out.axpy(-1.0, y);
    out.signed_ = true;
    return out;
}

Density operator*(double a, Density x) {
    x.scale(a);
    return x;
}

Density dirac(DiracKind kind, std::shared_ptr<const Grid> grid) {
    Density out(std::move(grid));
    if (kind == DiracKind::zero)
        out.masses()[static_cast<size_t>(out.grid().zero_node())] = 1.0;
    else
        out.inf_mass() = 1.0;
    return out;
}

Density dirac_zero(std::shared_ptr<const Grid> grid) { return dirac(DiracKind::zero, std::move(grid)); }
Density dirac_infinity(std::shared_ptr<const Grid> grid) { return dirac(DiracKind::infinity, std::move(grid)); }

Density vn_convolve(const Density& x, const Density& y) {
    if (!x.grid().same_layout(y.grid())) throw ConfigError("grid mismatch");
    const Grid& g = x.grid();
    const int n = g.node_count();
    const int half = g.half_bins();
    Density out(x.grid_ptr(), x.is_signed() || y.is_signed());
    auto& r = out.masses();

    const auto& mx = x.masses();
    const auto& my = y.masses();
    for (int i = 0; i < n; ++i) {
        const double mi = mx[static_cast<size_t>(i)];
        if (mi == 0.0) continue;
        const int oi = i - half;
        for (int j = 0; j < n; ++j) {
            const double mj = my[static_cast<size_t>(j)];
            if (mj == 0.0) continue;
            const int k = std::clamp(oi + j, 0, n - 1); // out-of-range sums clamp to the edge nodes
            r[static_cast<size_t>(k)] += mi * mj;
        }
    }
    // any mass meeting +infinity stays at +infinity
    out.inf_mass() = x.inf_mass() * y.total_mass() + y.inf_mass() * x.finite_mass();
    return out;
}

Density cn_convolve(const Density& x, const Density& y) {
    if (!x.grid().same_layout(y.grid())) throw ConfigError("grid mismatch");
    const Grid& g = x.grid();
    const int n = g.node_count();
    Density out(x.grid_ptr(), x.is_signed() || y.is_signed());
    auto& r = out.masses();

    const auto& table = g.cn_table();
    const auto& mx = x.masses();
    const auto& my = y.masses();
    for (int i = 0; i < n; ++i) {
        const double mi = mx[static_cast<size_t>(i)];
        if (mi == 0.0) continue;
        const uint16_t* row = table.data() + static_cast<size_t>(i) * n;
        for (int j = 0; j < n; ++j) {
            const double mj = my[static_cast<size_t>(j)];
            if (mj == 0.0) continue;
            r[row[j]] += mi * mj;
        }
    }
    // +infinity is the identity of the tanh rule
    if (x.inf_mass() != 0.0)
        for (int j = 0; j < n; ++j) r[static_cast<size_t>(j)] += x.inf_mass() * my[static_cast<size_t>(j)];
    if (y.inf_mass() != 0.0)
        for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] += y.inf_mass() * mx[static_cast<size_t>(i)];
    out.inf_mass() = x.inf_mass() * y.inf_mass();
    return out;
}

double entropy(const Density& x) {
    const auto& w = x.grid().entropy_weights();
    const auto& m = x.masses();
    double sum = 0.0, comp = 0.0;
    for (size_t i = 0; i < m.size(); ++i) {
        const double term = m[i] * w[i];
        double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

namespace {

Density poly_lift(const Polynomial& poly, const Density& x, bool variable_node) {
    if (poly.empty()) throw ConfigError("empty polynomial in lift");
    Density power = variable_node ? dirac_zero(x.grid_ptr()) : dirac_infinity(x.grid_ptr());
    power.set_signed(false);
    Density out(x.grid_ptr(), x.is_signed());
    for (int k = 0; k <= poly.degree(); ++k) {
        if (k > 0) power = variable_node ? vn_convolve(power, x) : cn_convolve(power, x);
        const double c = poly.coeff(k);
        if (c != 0.0) out.axpy(c, power);
    }
    return out;
}

} // namespace

Density poly_lift_vn(const Polynomial& poly, const Density& x) { return poly_lift(poly, x, true); }
Density poly_lift_cn(const Polynomial& poly, const Density& x) { return poly_lift(poly, x, false); }

const char* to_string(ChannelFamily family) {
    switch (family) {
    case ChannelFamily::bec: return "bec";
    case ChannelFamily::bsc: return "bsc";
    case ChannelFamily::biawgn: return "biawgn";
    }
    return "?";
}

ChannelFamily channel_family_from_string(const std::string& name) {
    if (name == "bec") return ChannelFamily::bec;
    if (name == "bsc") return ChannelFamily::bsc;
    if (name == "biawgn") return ChannelFamily::biawgn;
    throw ConfigError("unknown channel family '" + name + "'");
}

Density bec_density(double eps, std::shared_ptr<const Grid> grid) {
    if (eps < 0.0 || eps > 1.0) throw ConfigError("BEC erasure probability outside [0,1]");
    Density out(std::move(grid));
    out.masses()[static_cast<size_t>(out.grid().zero_node())] = eps;
    out.inf_mass() = 1.0 - eps;
    return out;
}

Density channel_density(const ChannelSpec& spec, std::shared_ptr<const Grid> grid) {
    switch (spec.family) {
    case ChannelFamily::bec: return bec_density(spec.parameter, std::move(grid));
    case ChannelFamily::bsc: {
        const double p = spec.parameter;
        if (p <= 0.0 || p > 0.5) throw ConfigError("BSC crossover outside (0, 0.5]");
        Density out(std::move(grid));
        const double llr = std::log((1.0 - p) / p);
        if (llr > out.grid().llr_max()) throw ConfigError("BSC crossover too small for the grid range");
        out.masses()[static_cast<size_t>(out.grid().nearest_node(llr))] += 1.0 - p;
        out.masses()[static_cast<size_t>(out.grid().nearest_node(-llr))] += p;
        return out;
    }
    case ChannelFamily::biawgn: {
        const double sigma2 = spec.parameter;
        if (sigma2 <= 0.0) throw ConfigError("BIAWGN noise variance must be positive");
        const double mean = 2.0 / sigma2;
        const double var = 2.0 * mean;
        Density out(std::move(grid));
        const Grid& g = out.grid();
        if (mean + 5.0 * std::sqrt(var) > g.llr_max())
            throw ConfigError("BIAWGN noise variance too small for the grid range");
        double total = 0.0;
        for (int i = 0; i < g.node_count(); ++i) {
            const double a = g.alpha(i);
            const double m = std::exp(-(a - mean) * (a - mean) / (2.0 * var));
            out.masses()[static_cast<size_t>(i)] = m;
            total += m;
        }
        out.scale(1.0 / total);
        return out;
    }
    }
    throw ConfigError("bad channel family");
}

ChannelSpec ChannelSpec::make(ChannelFamily family, double parameter, const std::shared_ptr<const Grid>& grid) {
    ChannelSpec spec{family, parameter, 0.0};
    spec.entropy = family == ChannelFamily::bec ? parameter : scwave::entropy(channel_density(spec, grid));
    return spec;
}

} // namespace scwave
