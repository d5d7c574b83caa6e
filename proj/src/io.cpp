#include "spincoh/io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace spincoh {

std::string format_sig(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::string(buf);
}

std::string state_to_json(const FockVector& state) {
    nlohmann::json j;
    j["dim"] = state.dim();
    nlohmann::json amps = nlohmann::json::array();
    for (int n = 0; n < state.dim(); ++n)
        amps.push_back({state.amps(n).real(), state.amps(n).imag()});
    j["amps"] = std::move(amps);
    j["label"] = state.label;
    return j.dump();
}

FockVector state_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("dim") || !j.contains("amps"))
        throw std::invalid_argument("state_from_json: missing dim or amps");
    const int d = j["dim"].get<int>();
    const auto& amps = j["amps"];
    if (d < 1 || static_cast<int>(amps.size()) != d)
        throw std::invalid_argument("state_from_json: dim does not match amps length");
    Eigen::VectorXcd v(d);
    for (int n = 0; n < d; ++n) {
        if (!amps[n].is_array() || amps[n].size() != 2)
            throw std::invalid_argument("state_from_json: amps entries must be [re, im]");
        v(n) = cplx(amps[n][0].get<double>(), amps[n][1].get<double>());
    }
    FockVector out;
    out.amps = std::move(v);
    out.label = j.value("label", std::string());
    if (out.norm() == 0.0)
        throw std::invalid_argument("state_from_json: zero vector");
    return out;
}

std::string constellation_to_json(const MajoranaConstellation& c) {
    nlohmann::json j;
    j["two_s"] = c.source_dim - 1;
    nlohmann::json pts = nlohmann::json::array();
    for (const Eigen::Vector3d& p : c.finite_points)
        pts.push_back({p.x(), p.y(), p.z()});
    j["points"] = std::move(pts);
    j["north_multiplicity"] = c.north_pole_multiplicity;
    return j.dump();
}

}  // namespace spincoh
