#include "hc/field.hpp"

#include <algorithm>

#include "hc/error.hpp"
#include "hc/upoly.hpp"

namespace hc {

NumberField::NumberField(FieldPtr base, std::vector<FieldElement> minpoly, std::string name)
    : base_(std::move(base)), minpoly_(std::move(minpoly)), name_(std::move(name)) {
    level_ = base_ ? base_->level() + 1 : 1;
}

FieldPtr NumberField::make(FieldPtr base, std::vector<FieldElement> minpoly, std::string name) {
    if (minpoly.size() < 3) throw input_error("minimal polynomial must have degree >= 2");
    if (!minpoly.back().is_one()) throw input_error("minimal polynomial must be monic");
    for (auto& c : minpoly) {
        if (!is_subfield_level(c.field(), base))
            throw input_error("minimal polynomial coefficients must lie in the base field");
        c = lift(c, base);
    }
    return std::make_shared<NumberField>(std::move(base), std::move(minpoly), std::move(name));
}

namespace {

// c := c mod minpoly, where c has arbitrary length over base.
void reduce_coords(std::vector<FieldElement>& c, const NumberField& f) {
    const auto& m = f.minpoly();
    const std::size_t n = f.degree();
    for (std::size_t k = c.size(); k-- > n;) {
        if (c[k].is_zero()) continue;
        const FieldElement top = c[k];
        for (std::size_t i = 0; i < n; ++i) {
            if (!m[i].is_zero()) c[k - n + i] -= top * m[i];
        }
    }
    c.resize(n, lift(FieldElement(), f.base()));
}

}  // namespace

FieldElement::FieldElement(FieldPtr field, std::vector<FieldElement> coords) : field_(std::move(field)) {
    if (!field_) {
        if (coords.size() != 1) throw internal_error("rational element needs exactly one coordinate");
        *this = coords[0];
        return;
    }
    for (auto& c : coords) c = lift(c, field_->base());
    reduce_coords(coords, *field_);
    coords_ = std::move(coords);
}

FieldElement FieldElement::generator(const FieldPtr& field) {
    std::vector<FieldElement> c(field->degree(), lift(FieldElement(), field->base()));
    c[1] = lift(FieldElement(1), field->base());
    return FieldElement(field, std::move(c));
}

bool FieldElement::is_zero() const {
    if (!field_) return sgn(q_) == 0;
    return std::all_of(coords_.begin(), coords_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

bool FieldElement::is_one() const {
    if (!field_) return q_ == 1;
    if (!coords_[0].is_one()) return false;
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const FieldElement& c) { return c.is_zero(); });
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    if (!field_) {
        r.q_ = -q_;
    } else {
        for (auto& c : r.coords_) c = -c;
    }
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    if (!field_ && !o.field_) {
        q_ += o.q_;
        return *this;
    }
    if (field_ == o.field_) {
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    FieldPtr f = common_field(field_, o.field_);
    if (field_ != f) *this = lift(*this, f);
    return *this += lift(o, f);
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    if (!field_ && !o.field_) {
        q_ -= o.q_;
        return *this;
    }
    return *this += -o;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    if (!field_ && !o.field_) {
        q_ *= o.q_;
        return *this;
    }
    if (field_ != o.field_) {
        FieldPtr f = common_field(field_, o.field_);
        if (f == field_) {
            // o lives on a lower level: scale coordinatewise
            for (auto& c : coords_) c *= o;
            return *this;
        }
        FieldElement r = o;
        for (auto& c : r.coords_) c *= *this;
        return *this = std::move(r);
    }
    const std::size_t n = coords_.size();
    std::vector<FieldElement> prod(2 * n - 1, lift(FieldElement(), field_->base()));
    for (std::size_t i = 0; i < n; ++i) {
        if (coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (o.coords_[j].is_zero()) continue;
            prod[i + j] += coords_[i] * o.coords_[j];
        }
    }
    reduce_coords(prod, *field_);
    coords_ = std::move(prod);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!a.field_ && !b.field_) return a.q_ == b.q_;
    if (a.field_ == b.field_) return a.coords_ == b.coords_;
    FieldPtr f = common_field(a.field_, b.field_);
    return lift(a, f) == lift(b, f);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw input_error("division by zero");
    if (!field_) return FieldElement(Rational(1) / q_);
    // s*x + t*m = 1 over the base level
    UPoly x(coords_);
    UPoly m(field_->minpoly());
    ExtGcd e = ext_gcd(x, m);
    if (e.d.degree() != 0) throw internal_error("minimal polynomial of " + field_->name() + " is reducible");
    std::vector<FieldElement> c = e.s.coeffs();
    if (c.empty()) c.push_back(FieldElement());
    return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::pow(unsigned k) const {
    FieldElement result = field_ ? lift(FieldElement(1), field_) : FieldElement(1);
    FieldElement base = *this;
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

unsigned absolute_degree(const FieldPtr& field) {
    return field ? field->degree() * absolute_degree(field->base()) : 1;
}

bool is_subfield_level(const FieldPtr& sub, const FieldPtr& field) {
    for (FieldPtr f = field;; f = f->base()) {
        if (f == sub) return true;
        if (!f) return false;
    }
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
    if (is_subfield_level(a, b)) return b;
    if (is_subfield_level(b, a)) return a;
    throw internal_error("elements of unrelated fields combined");
}

FieldPtr common_field(std::span<const FieldElement> elems) {
    FieldPtr f;
    for (const auto& e : elems) f = common_field(f, e.field());
    return f;
}

FieldElement lift(const FieldElement& x, const FieldPtr& target) {
    if (x.field() == target) return x;
    if (!target) throw internal_error("cannot lift a field element into Q");
    FieldElement inner = lift(x, target->base());
    std::vector<FieldElement> c(target->degree(), lift(FieldElement(), target->base()));
    c[0] = std::move(inner);
    return FieldElement(target, std::move(c));
}

bool lies_in(const FieldElement& x, const FieldPtr& level) {
    if (is_subfield_level(x.field(), level)) return true;
    if (!x.field()) return true;
    if (!is_subfield_level(level, x.field())) return false;
    for (std::size_t i = 1; i < x.coords().size(); ++i) {
        if (!x.coords()[i].is_zero()) return false;
    }
    return lies_in(x.coords()[0], level);
}

FieldElement lower_to(const FieldElement& x, const FieldPtr& target) {
    if (x.field() == target) return x;
    if (is_subfield_level(x.field(), target)) return lift(x, target);
    if (!lies_in(x, target)) throw internal_error("element does not lie in the requested field level");
    return lower_to(x.coords()[0], target);
}

FieldElement lower(const FieldElement& x) {
    FieldElement cur = x;
    while (cur.field()) {
        for (std::size_t i = 1; i < cur.coords().size(); ++i) {
            if (!cur.coords()[i].is_zero()) return cur;
        }
        FieldElement next = cur.coords()[0];
        cur = std::move(next);
    }
    return cur;
}

std::vector<Rational> flatten(const FieldElement& x, const FieldPtr& field) {
    FieldElement y = lift(x, field);
    if (!field) return {y.rational()};
    std::vector<Rational> out;
    out.reserve(absolute_degree(field));
    for (const auto& c : y.coords()) {
        auto part = flatten(c, field->base());
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

FieldElement unflatten(std::span<const Rational> coords, const FieldPtr& field) {
    if (!field) return FieldElement(coords[0]);
    const std::size_t block = absolute_degree(field->base());
    std::vector<FieldElement> c;
    c.reserve(field->degree());
    for (std::size_t k = 0; k < field->degree(); ++k) c.push_back(unflatten(coords.subspan(k * block, block), field->base()));
    return FieldElement(field, std::move(c));
}

std::vector<FieldElement> q_basis(const FieldPtr& field) {
    if (!field) return {FieldElement(1)};
    std::vector<FieldElement> out;
    auto lower_basis = q_basis(field->base());
    FieldElement g = FieldElement::generator(field);
    FieldElement gk = lift(FieldElement(1), field);
    for (unsigned k = 0; k < field->degree(); ++k) {
        for (const auto& b : lower_basis) out.push_back(gk * b);
        gk *= g;
    }
    return out;
}

int canonical_compare(const FieldElement& a, const FieldElement& b) {
    FieldPtr f = common_field(a.field(), b.field());
    auto fa = flatten(a, f), fb = flatten(b, f);
    for (std::size_t i = 0; i < fa.size(); ++i) {
        int c = cmp(fa[i], fb[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

}  // namespace hc
