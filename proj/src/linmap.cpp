#include "jordangh/linmap.hpp"

#include <stdexcept>

namespace jordangh {

LinearMap::LinearMap(AlgebraPtr algebra, std::vector<Scalar> table)
    : algebra_(std::move(algebra)), table_(std::move(table)) {
    const std::size_t d = algebra_->dim();
    if (table_.size() != d * d)
        throw std::invalid_argument("linmap: table size does not match dim^2");
    for (const Scalar& c : table_)
        if (!(c.domain() == algebra_->domain()))
            throw std::invalid_argument("linmap: entry domain does not match algebra");
}

LinearMap LinearMap::zero(const AlgebraPtr& a) {
    const std::size_t d = a->dim();
    return LinearMap(a, std::vector<Scalar>(d * d, Scalar::zero(a->domain())));
}

LinearMap LinearMap::identity(const AlgebraPtr& a) {
    LinearMap m = zero(a);
    for (std::size_t k = 0; k < a->dim(); ++k)
        m.table_[k * a->dim() + k] = Scalar::one(a->domain());
    return m;
}

LinearMap LinearMap::from_columns(const AlgebraPtr& a, const std::vector<Element>& images) {
    if (images.size() != a->dim())
        throw std::invalid_argument("linmap: need one image per basis element");
    const std::size_t d = a->dim();
    std::vector<Scalar> table(d * d, Scalar::zero(a->domain()));
    for (std::size_t k = 0; k < d; ++k) {
        if (images[k].algebra() != a)
            throw std::invalid_argument("linmap: image belongs to a different algebra");
        for (std::size_t m = 0; m < d; ++m) table[k * d + m] = images[k].coeff(m);
    }
    return LinearMap(a, std::move(table));
}

Element LinearMap::column(std::size_t k) const {
    const std::size_t d = algebra_->dim();
    if (k >= d) throw std::out_of_range("linmap: column index out of range");
    std::vector<Scalar> out(table_.begin() + k * d, table_.begin() + (k + 1) * d);
    return Element(algebra_, std::move(out));
}

Element LinearMap::apply(const Element& x) const {
    if (x.algebra() != algebra_)
        throw std::invalid_argument("linmap: argument belongs to a different algebra");
    const std::size_t d = algebra_->dim();
    std::vector<Scalar> out(d, Scalar::zero(algebra_->domain()));
    for (std::size_t k = 0; k < d; ++k) {
        const Scalar& xk = x.coeff(k);
        if (xk.is_zero()) continue;
        for (std::size_t m = 0; m < d; ++m) {
            const Scalar& t = table_[k * d + m];
            if (!t.is_zero()) out[m] += t * xk;
        }
    }
    return Element(algebra_, std::move(out));
}

LinearMap LinearMap::operator-() const { return scaled(-Scalar::one(algebra_->domain())); }

LinearMap LinearMap::scaled(const Scalar& c) const {
    std::vector<Scalar> out;
    out.reserve(table_.size());
    for (const Scalar& v : table_) out.push_back(c * v);
    return LinearMap(algebra_, std::move(out));
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    if (a.algebra_ != b.algebra_)
        throw std::invalid_argument("linmap: operands belong to different algebras");
    std::vector<Scalar> out;
    out.reserve(a.table_.size());
    for (std::size_t k = 0; k < a.table_.size(); ++k) out.push_back(a.table_[k] + b.table_[k]);
    return LinearMap(a.algebra_, std::move(out));
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) { return a + (-b); }

bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.algebra_ == b.algebra_ && a.table_ == b.table_;
}

bool LinearMap::is_zero() const {
    for (const Scalar& c : table_)
        if (!c.is_zero()) return false;
    return true;
}

LinearMap jordan_mult_operator(const Element& a) {
    const AlgebraPtr& alg = a.algebra();
    std::vector<Element> images;
    images.reserve(alg->dim());
    for (std::size_t k = 0; k < alg->dim(); ++k)
        images.push_back(jordan_product(a, Element::basis(alg, k)));
    return LinearMap::from_columns(alg, images);
}

LinearMap inner_derivation(const Element& a) {
    const AlgebraPtr& alg = a.algebra();
    std::vector<Element> images;
    images.reserve(alg->dim());
    for (std::size_t k = 0; k < alg->dim(); ++k) {
        const Element bk = Element::basis(alg, k);
        images.push_back(multiply(a, bk) - multiply(bk, a));
    }
    return LinearMap::from_columns(alg, images);
}

DerivationTriple::DerivationTriple(LinearMap f_, LinearMap g_, LinearMap h_)
    : f(std::move(f_)), g(std::move(g_)), h(std::move(h_)) {
    if (f.algebra() != g.algebra() || f.algebra() != h.algebra())
        throw std::invalid_argument("triple: maps must share one algebra");
}

bool operator==(const DerivationTriple& a, const DerivationTriple& b) {
    return a.f == b.f && a.g == b.g && a.h == b.h;
}

std::vector<Scalar> triple_pack(const DerivationTriple& t) {
    std::vector<Scalar> out;
    out.reserve(3 * t.f.table().size());
    for (const LinearMap* m : {&t.f, &t.g, &t.h})
        out.insert(out.end(), m->table().begin(), m->table().end());
    return out;
}

DerivationTriple triple_unpack(const AlgebraPtr& a, const std::vector<Scalar>& v) {
    const std::size_t block = a->dim() * a->dim();
    if (v.size() != 3 * block)
        throw std::invalid_argument("triple: packed vector length must be 3*dim^2");
    auto slice = [&](std::size_t idx) {
        return std::vector<Scalar>(v.begin() + idx * block, v.begin() + (idx + 1) * block);
    };
    return DerivationTriple(LinearMap(a, slice(0)), LinearMap(a, slice(1)),
                            LinearMap(a, slice(2)));
}

}  // namespace jordangh
