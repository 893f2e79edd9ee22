#include "selberg/io.hpp"

#include <json.hpp>

namespace selberg {

namespace {

nlohmann::json functional_json(const AffineFunctional& f) {
    nlohmann::json j;
    j["const"] = f.cst;
    j["alpha"] = f.a;
    j["beta"] = f.b;
    nlohmann::json g = nlohmann::json::object();
    for (int a = 1; a <= f.N; ++a)
        for (int b = a + 1; b <= f.N; ++b) {
            const int t = GenericParams::pair_index(a, b, f.N);
            if (f.g[static_cast<std::size_t>(t)])
                g[std::to_string(a) + "," + std::to_string(b)] = f.g[static_cast<std::size_t>(t)];
        }
    j["gamma"] = g;
    return j;
}

} // namespace

std::string to_json(const AffineFunctional& f) {
    return functional_json(f).dump();
}

std::string to_json(const GammaFactorization& gf) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& fac : gf.factors) {
        nlohmann::json j;
        j["functional"] = functional_json(fac.functional);
        j["shift"] = fac.shift;
        arr.push_back(j);
    }
    return arr.dump();
}

std::string to_json_line(const IdentityReport& r, const std::string& point) {
    nlohmann::json j;
    j["tag"] = r.identity_tag;
    if (!point.empty()) j["point"] = point;
    j["lhs"] = {r.lhs.real(), r.lhs.imag()};
    j["rhs"] = {r.rhs.real(), r.rhs.imag()};
    j["residual"] = r.residual;
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    if (r.skipped) j["skipped_reason"] = r.skipped_reason;
    return j.dump();
}

std::string k_faces_to_json(const RegionShape& shape) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : enumerate_k_faces(shape)) {
        nlohmann::json j;
        j["j"] = f.j;
        j["k"] = f.k;
        j["codim"] = f.codim;
        arr.push_back(j);
    }
    return arr.dump();
}

std::string a_faces_to_json(const RegionShape& shape) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : enumerate_a_faces(shape)) {
        nlohmann::json j;
        j["S"] = f.S;
        j["Q"] = f.Q;
        j["anchor"] = f.anchor == kAnchorInf ? "inf" : (f.anchor == kAnchorOne ? "1" : "0");
        arr.push_back(j);
    }
    return arr.dump();
}

} // namespace selberg
