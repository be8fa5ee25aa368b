#include "hc/upoly.hpp"

#include "hc/determinant.hpp"
#include "hc/error.hpp"

namespace hc {

UPoly::UPoly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UPoly UPoly::constant(const FieldElement& c) { return UPoly(std::vector<FieldElement>{c}); }

UPoly UPoly::monomial(const FieldElement& c, unsigned k) {
    std::vector<FieldElement> v(k + 1);
    v[k] = c;
    return UPoly(std::move(v));
}

FieldElement UPoly::eval(const FieldElement& x) const {
    FieldElement acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly UPoly::compose(const UPoly& inner) const {
    UPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return leading().inverse() * *this;
}

UPoly UPoly::derivative() const {
    std::vector<FieldElement> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(FieldElement(static_cast<long>(k)) * coeffs_[k]);
    return UPoly(std::move(d));
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(c));
}

UPoly operator*(const FieldElement& c, const UPoly& p) {
    UPoly r = p;
    for (auto& x : r.coeffs_) x = c * x;
    r.trim();
    return r;
}

bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g) {
    if (g.is_zero()) throw input_error("polynomial division by zero");
    std::vector<FieldElement> r = f.coeffs();
    const int dg = g.degree();
    if (f.degree() < dg) return {UPoly(), f};
    std::vector<FieldElement> q(f.degree() - dg + 1);
    const FieldElement inv_lead = g.leading().inverse();
    for (int k = f.degree(); k >= dg; --k) {
        if (r[k].is_zero()) continue;
        FieldElement c = r[k] * inv_lead;
        q[k - dg] = c;
        for (int i = 0; i <= dg; ++i) r[k - dg + i] -= c * g.coeffs()[i];
    }
    r.resize(dg);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& f, const UPoly& g) {
    if (f.is_zero() && g.is_zero()) throw input_error("gcd of two zero polynomials");
    UPoly a = f, b = g;
    while (!b.is_zero()) {
        UPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtGcd ext_gcd(const UPoly& f, const UPoly& g) {
    if (f.is_zero() && g.is_zero()) throw input_error("gcd of two zero polynomials");
    UPoly r0 = f, r1 = g;
    UPoly s0 = UPoly::constant(1), s1;
    UPoly t0, t1 = UPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        UPoly s2 = s0 - q * s1;
        UPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    FieldElement inv = r0.leading().inverse();
    return {inv * r0, inv * s0, inv * t0};
}

FieldElement resultant(const UPoly& f, const UPoly& g) {
    if (f.is_zero() || g.is_zero()) throw input_error("resultant of a zero polynomial");
    return sylvester_resultant(
        f.coeffs(), g.coeffs(), FieldElement(1), [](const FieldElement& a, const FieldElement& b) { return a / b; },
        [](const FieldElement& a) { return a.is_zero(); });
}

}  // namespace hc
