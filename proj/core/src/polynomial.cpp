#include "scwave/polynomial.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "scwave/errors.hpp"

namespace scwave {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int power, double coeff) {
    if (power < 0) throw ConfigError("polynomial power must be non-negative");
    std::vector<double> c(static_cast<size_t>(power) + 1, 0.0);
    c.back() = coeff;
    return Polynomial(std::move(c));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double y) const {
    double acc = 0.0;
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * y + coeffs_[k];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<double>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
    std::vector<double> a(coeffs_.size() + 1, 0.0);
    for (size_t k = 0; k < coeffs_.size(); ++k) a[k + 1] = coeffs_[k] / static_cast<double>(k + 1);
    return Polynomial(std::move(a));
}

double Polynomial::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[static_cast<size_t>(power)];
}

double Polynomial::coeff_sum() const {
    double s = 0.0;
    for (double c : coeffs_) s += c;
    return s;
}

Polynomial& Polynomial::scale(double s) {
    for (double& c : coeffs_) c *= s;
    trim();
    return *this;
}

namespace {

// One term of a polynomial literal: [coeff][x[^exp]].
struct Term {
    double coeff = 1.0;
    int power = 0;
};

Term parse_term(std::string_view t) {
    Term out;
    size_t pos = 0;
    // leading coefficient (optional)
    if (pos < t.size() && (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '.')) {
        const char* begin = t.data() + pos;
        const char* end = t.data() + t.size();
        double value = 0.0;
        auto res = std::from_chars(begin, end, value);
        if (res.ec != std::errc()) throw ConfigError("bad coefficient in polynomial term '" + std::string(t) + "'");
        out.coeff = value;
        pos = static_cast<size_t>(res.ptr - t.data());
    }
    if (pos == t.size()) {
        // pure constant
        if (out.coeff == 1.0 && t.empty()) throw ConfigError("empty polynomial term");
        return out;
    }
    if (t[pos] != 'x' && t[pos] != 'y')
        throw ConfigError("expected variable in polynomial term '" + std::string(t) + "'");
    ++pos;
    out.power = 1;
    if (pos < t.size()) {
        if (t[pos] != '^') throw ConfigError("expected '^' in polynomial term '" + std::string(t) + "'");
        ++pos;
        int power = 0;
        auto res = std::from_chars(t.data() + pos, t.data() + t.size(), power);
        if (res.ec != std::errc() || res.ptr != t.data() + t.size() || power < 0)
            throw ConfigError("bad exponent in polynomial term '" + std::string(t) + "'");
        out.power = power;
    }
    return out;
}

} // namespace

Polynomial Polynomial::parse(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw ConfigError("empty polynomial literal");

    std::vector<double> coeffs;
    size_t start = 0;
    while (start <= compact.size()) {
        size_t plus = compact.find('+', start);
        if (plus == std::string::npos) plus = compact.size();
        Term term = parse_term(std::string_view(compact).substr(start, plus - start));
        if (static_cast<size_t>(term.power) >= coeffs.size()) coeffs.resize(static_cast<size_t>(term.power) + 1, 0.0);
        coeffs[static_cast<size_t>(term.power)] += term.coeff;
        if (plus == compact.size()) break;
        start = plus + 1;
    }
    return Polynomial(std::move(coeffs));
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0.0) continue;
        if (!first) os << "+";
        if (coeffs_[k] != 1.0 || k == 0) os << coeffs_[k];
        if (k >= 1) {
            os << "x";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

} // namespace scwave
