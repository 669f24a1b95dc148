#include "qhilb/presentation.hpp"

#include <algorithm>
#include <tuple>

#include "qhilb/dynkin.hpp"
#include "qhilb/errors.hpp"

namespace qhilb {

namespace {

auto term_key(const NcTerm& t) { return std::tie(t.source, t.target, t.central, t.path); }

}  // namespace

NcElement NcElement::path(const DoubleQuiver& q, std::vector<std::size_t> arrows,
                          std::size_t central_count, Rational coeff) {
    if (arrows.empty()) throw InputError("use NcElement::vertex for idempotents");
    for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
        if (q.arrows.at(arrows[k]).head != q.arrows.at(arrows[k + 1]).tail)
            throw InputError("path is not composable");
    NcElement e;
    NcTerm t;
    t.coeff = std::move(coeff);
    t.source = q.arrows.at(arrows.front()).tail;
    t.target = q.arrows.at(arrows.back()).head;
    t.path = std::move(arrows);
    t.central.assign(central_count, 0);
    e.terms_.push_back(std::move(t));
    e.normalize();
    return e;
}

NcElement NcElement::vertex(std::size_t vertex, std::vector<unsigned> central, Rational coeff) {
    NcElement e;
    e.terms_.push_back({std::move(coeff), {}, std::move(central), vertex, vertex});
    e.normalize();
    return e;
}

NcElement NcElement::block(std::size_t i, std::size_t j) const {
    NcElement e;
    for (const auto& t : terms_)
        if (t.source == i && t.target == j) e.terms_.push_back(t);
    return e;
}

NcElement& NcElement::operator+=(const NcElement& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

NcElement& NcElement::operator-=(const NcElement& o) {
    for (auto t : o.terms_) {
        t.coeff = -t.coeff;
        terms_.push_back(std::move(t));
    }
    normalize();
    return *this;
}

NcElement& NcElement::operator*=(const Rational& c) {
    for (auto& t : terms_) t.coeff *= c;
    normalize();
    return *this;
}

NcElement operator*(const NcElement& a, const NcElement& b) {
    NcElement out;
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            if (x.target != y.source) continue;
            if (x.central.size() != y.central.size())
                throw SizeMismatch("elements use different central generator sets");
            NcTerm t;
            t.coeff = x.coeff * y.coeff;
            t.source = x.source;
            t.target = y.target;
            t.path = x.path;
            t.path.insert(t.path.end(), y.path.begin(), y.path.end());
            t.central = x.central;
            for (std::size_t k = 0; k < t.central.size(); ++k) t.central[k] += y.central[k];
            out.terms_.push_back(std::move(t));
        }
    out.normalize();
    return out;
}

void NcElement::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const NcTerm& a, const NcTerm& b) { return term_key(a) < term_key(b); });
    std::vector<NcTerm> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && term_key(merged.back()) == term_key(t))
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const NcTerm& t) { return t.coeff == 0; });
    terms_ = std::move(merged);
}

std::string NcElement::to_string(const DoubleQuiver& q,
                                 const std::vector<std::string>& central_names) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        Rational c = t.coeff;
        if (k == 0) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (c < 0) c = -c;
        std::vector<std::string> factors;
        if (c != 1) factors.push_back(c.str());
        for (std::size_t g = 0; g < t.central.size(); ++g)
            for (unsigned e = 0; e < t.central[g]; ++e)
                factors.push_back(g < central_names.size() ? central_names[g] : "z" + std::to_string(g));
        if (t.path.empty())
            factors.push_back("e" + std::to_string(t.source + 1));
        else
            for (auto a : t.path) factors.push_back(q.arrows[a].name);
        for (std::size_t f = 0; f < factors.size(); ++f) s += (f ? "·" : "") + factors[f];
    }
    return s;
}

std::string GradedPresentation::describe() const {
    std::vector<std::string> names;
    for (const auto& c : central) names.push_back(c.name);
    std::string s = "field " + field.name() + "; " + std::to_string(relations.size()) + " relations\n";
    for (const auto& r : relations) s += "  " + r.to_string(quiver, names) + "\n";
    return s;
}

NcElement mesh_relation(const DoubleQuiver& q, std::size_t vertex, std::size_t central_count) {
    NcElement rho;
    for (std::size_t k = 0; k < q.arrows.size(); ++k) {
        const auto& a = q.arrows[k];
        if (a.starred) continue;
        if (a.tail == vertex) rho += NcElement::path(q, {k, a.partner}, central_count);
        if (a.head == vertex) rho -= NcElement::path(q, {a.partner, k}, central_count);
    }
    return rho;
}

GradedPresentation build_presentation(PresentationKind kind, const Quiver& q, Field field,
                                      const std::optional<WeightVector>& v) {
    GradedPresentation pres;
    pres.quiver = double_quiver(q);
    pres.field = field;
    const auto r = q.vertex_count();

    if (kind == PresentationKind::PreprojectivePerVertex) {
        for (std::size_t i = 0; i < r; ++i) pres.relations.push_back(mesh_relation(pres.quiver, i, 0));
        return pres;
    }

    if (!v) throw MissingWeight("quiver Heisenberg presentation needs a weight vector");
    is_sincere(q, *v);
    if (!(v->field() == field))
        throw InputError("weight vector is over " + v->field().name() + ", presentation over " +
                         field.name());

    if (kind == PresentationKind::QhaZ) {
        pres.central.push_back({"z", 2});
        for (std::size_t i = 0; i < r; ++i)
            pres.relations.push_back(mesh_relation(pres.quiver, i, 1) -
                                     NcElement::vertex(i, {1}, (*v)[i]));
        return pres;
    }

    if (!v->is_sincere()) throw NotSincere("eta presentation needs a sincere weight vector");
    // varrho = sum_i v_i^{-1} rho_i, with v_i^{-1} taken in the field.
    NcElement varrho;
    for (std::size_t i = 0; i < r; ++i) {
        Rational inv;
        if (field.is_rational())
            inv = 1 / (*v)[i];
        else
            inv = inverse_mod(field.reduce((*v)[i]), field.characteristic());
        varrho += inv * mesh_relation(pres.quiver, i, 0);
    }
    for (std::size_t k = 0; k < pres.quiver.arrows.size(); ++k) {
        const auto a = NcElement::path(pres.quiver, {k}, 0);
        pres.relations.push_back(a * varrho - varrho * a);
    }
    return pres;
}

}  // namespace qhilb
