#include "jordangh/json_io.hpp"

namespace jordangh {

namespace {

std::string unit_key(const BasisIndex& b) {
    return "(" + std::to_string(b.i) + "," + std::to_string(b.j) + ")";
}

}  // namespace

nlohmann::json element_json(const Element& e) {
    nlohmann::json out = nlohmann::json::object();
    const Algebra& a = *e.algebra();
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (!e.coeff(k).is_zero()) out[unit_key(a.label(k))] = e.coeff(k).str();
    return out;
}

nlohmann::json map_json(const LinearMap& m) {
    nlohmann::json out = nlohmann::json::object();
    const Algebra& a = *m.algebra();
    for (std::size_t k = 0; k < a.dim(); ++k)
        out["image_of" + unit_key(a.label(k))] = element_json(m.column(k));
    return out;
}

nlohmann::json triple_json(const DerivationTriple& t) {
    return {{"f", map_json(t.f)}, {"g", map_json(t.g)}, {"h", map_json(t.h)}};
}

nlohmann::json packed_triple_json(const AlgebraPtr& a, const std::vector<Scalar>& packed) {
    return triple_json(triple_unpack(a, packed));
}

nlohmann::json space_json(const SolutionSpace& s) {
    nlohmann::json basis = nlohmann::json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(triple_json(s.triple(i)));
    return {{"algebra", s.algebra()->spelling()},
            {"field", s.algebra()->domain().spelling()},
            {"mode", mode_spelling(s.mode())},
            {"dim", s.dim()},
            {"basis", std::move(basis)}};
}

nlohmann::json comparison_json(const ComparisonReport& r, const AlgebraPtr& a) {
    nlohmann::json out = {{"relation", relation_spelling(r.relation)},
                          {"dim_a", r.dim_a},
                          {"dim_b", r.dim_b}};
    if (r.witness) out["witness"] = packed_triple_json(a, *r.witness);
    return out;
}

nlohmann::json check_report_json(const CheckReport& r, bool swap_counters) {
    nlohmann::json out = {{"passed", r.passed},
                          {"trials", r.trials},
                          {"skipped", r.skipped},
                          {"seed", r.seed}};
    if (swap_counters) {
        out["inconclusive"] = r.inconclusive;
        out["qualifying_square"] = r.qualifying_square;
        out["qualifying_reversal"] = r.qualifying_reversal;
    }
    if (r.witness) {
        out["witness"] = {{"x", element_json(r.witness->x)},
                          {"y", element_json(r.witness->y)},
                          {"branch", r.witness->branch},
                          {"defect", element_json(r.witness->defect)}};
    }
    return out;
}

nlohmann::json meta_json(const ScalarDomain& domain, std::uint64_t seed) {
    return {{"version", kToolVersion},
            {"basis_order", kBasisOrderId},
            {"packing", kPackingId},
            {"field", domain.spelling()},
            {"seed", seed}};
}

}  // namespace jordangh
