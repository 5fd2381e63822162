#include "brq/json_io.hpp"

#include <nlohmann/json.hpp>

namespace brq {

json json_from_int(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x >= lo && x <= hi) return static_cast<std::int64_t>(x);
    return x.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer (number or decimal string)");
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    }
    throw std::invalid_argument("expected a rational (integer or \"p/q\" string)");
}

json json_from_vec(const Vec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(json_from_int(x));
    return out;
}

json json_from_matrix(const IntMat& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_from_int(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

IntMat matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a matrix (array of rows)");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].size() : 0;
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = int_from_json(j[i][k]);
    }
    return m;
}

Lattice lattice_from_json(const json& j) {
    return Lattice(j.value("name", "lattice"), matrix_from_json(j.at("gram")));
}

json lattice_to_json(const Lattice& l) {
    return json{{"name", l.name()}, {"gram", json_from_matrix(l.gram())}};
}

InvolutiveLattice involutive_from_json(const json& j) {
    return InvolutiveLattice(lattice_from_json(j.at("lattice")),
                             matrix_from_json(j.at("sigma")),
                             j.at("order").get<std::size_t>());
}

PicardSpec picard_spec_from_json(const json& j) {
    return PicardSpec{matrix_from_json(j.at("generators")), j.value("label", "")};
}

PeriodPoint period_point_from_json(const json& j) {
    PeriodPoint p;
    for (const auto& x : j.at("re")) p.re.push_back(rat_from_json(x));
    for (const auto& x : j.at("im")) p.im.push_back(rat_from_json(x));
    return p;
}

json abelian_group_to_json(const FiniteAbelianGroup& g) {
    json factors = json::array();
    for (const auto& f : g.invariant_factors) factors.push_back(json_from_int(f));
    return json{{"invariant_factors", factors}, {"pretty", g.to_string()}};
}

json signature_to_json(const Signature& s) {
    return json{{"positive", s.positive}, {"negative", s.negative}, {"null", s.null}};
}

json decision_report_to_json(const DecisionReport& r) {
    json out;
    out["vanishes"] = r.vanishes;
    out["method"] =
        r.method == DecisionMethod::picard_witness ? "picard_witness" : "transcendental_form";
    out["clause"] = r.clause;
    if (r.witness) {
        out["witness"] = json_from_vec(*r.witness);
        out["witness_norm"] = json_from_int(*r.witness_norm);
    }
    if (r.form_values) {
        json bits = json::array();
        for (Bit b : *r.form_values) bits.push_back(static_cast<int>(b));
        out["form_values"] = bits;
    }
    if (r.consistency) out["consistency"] = *r.consistency;
    out["beta0_normalization"] = "(beta0 . xbar_i) = 0";
    if (!r.warnings.empty()) out["warnings"] = r.warnings;
    return out;
}

json census_to_json(const std::vector<HypersurfaceRecord>& records) {
    json out = json::array();
    for (const auto& rec : records) {
        out.push_back(json{{"norm", json_from_int(rec.norm)},
                           {"witness", json_from_vec(rec.witness)},
                           {"witness_lminus", json_from_vec(rec.witness_lminus)},
                           {"divisibility", json_from_int(rec.divisibility)},
                           {"complement_signature", signature_to_json(rec.complement_signature)}});
    }
    return out;
}

json omega_report_to_json(const OmegaReport& r) {
    json out;
    switch (r.verdict) {
        case OmegaVerdict::in_omega: out["verdict"] = "in Omega"; break;
        case OmegaVerdict::not_in_omega: out["verdict"] = "not in Omega"; break;
        case OmegaVerdict::indeterminate: out["verdict"] = "indeterminate"; break;
    }
    out["isotropic"] = r.isotropic;
    out["positive"] = r.positive;
    out["orthogonal_rank"] = r.n_rank;
    out["orthogonal_signature"] = signature_to_json(r.n_signature);
    if (r.failing_root) out["failing_root"] = json_from_vec(*r.failing_root);
    if (r.on_hyperplane) out["on_hyperplane"] = *r.on_hyperplane;
    out["detail"] = r.detail;
    return out;
}

json check_results_to_json(const std::vector<CheckResult>& results) {
    json out = json::array();
    for (const auto& r : results)
        out.push_back(json{{"name", r.name},
                           {"clause", r.clause},
                           {"pass", r.pass},
                           {"detail", r.detail}});
    return out;
}

json torsion_profile_to_json(const TorsionProfile& p) {
    json out;
    out["n"] = json_from_int(p.n);
    out["transcendental_rank"] = p.t_rank;
    out["hom_part"] = abelian_group_to_json(p.hom_part);
    out["h3_part"] = abelian_group_to_json(p.h3_part);
    out["brn_order"] = json_from_int(p.brn_order);
    if (p.brn_exact) out["brn"] = abelian_group_to_json(*p.brn_exact);
    out["extension_class"] = "not computed";
    return out;
}

}  // namespace brq
