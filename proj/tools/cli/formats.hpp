#pragma once

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "jwriter.hpp"

// File formats consumed and produced by the CLI. All complex numbers are
// [re, im] pairs; matrices are row-major nested arrays of pairs. Loaders
// throw std::runtime_error with a message naming the file and the problem;
// the caller maps that to the usage/input exit code.

inline constexpr const char* kTauConvention = "-exp(i*pi/d)";

struct FiducialFile {
    std::size_t d = 0;
    std::vector<double> fiducial;  // interleaved, 2d doubles
    double residual = 0.0;
    bool has_residual = false;
};

struct StateFile {
    std::size_t d = 0;
    std::vector<double> rho;  // interleaved row-major, 2*d*d doubles
};

struct ProbsFile {
    std::size_t d = 0;
    std::vector<double> probs;  // d^2 doubles
};

struct MixtureFile {
    std::size_t d = 0;
    std::vector<double> weights;
    std::vector<double> components;  // k matrices, interleaved, each 2*d*d
};

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

inline std::size_t get_dim(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("d") || !j["d"].is_number_integer()) {
        throw std::runtime_error(path + ": missing integer field \"d\"");
    }
    const long long d = j["d"].get<long long>();
    if (d < 2) throw std::runtime_error(path + ": d = " + std::to_string(d) + " is below 2");
    return static_cast<std::size_t>(d);
}

inline void read_pair(const nlohmann::json& j, const std::string& path, double* out) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw std::runtime_error(path + ": complex entries must be [re, im] pairs");
    }
    out[0] = j[0].get<double>();
    out[1] = j[1].get<double>();
}

// Row-major d x d matrix of [re, im] pairs -> interleaved doubles.
inline void read_matrix(const nlohmann::json& j, std::size_t d, const std::string& path,
                        double* out) {
    if (!j.is_array() || j.size() != d) {
        throw std::runtime_error(path + ": matrix must have " + std::to_string(d) + " rows");
    }
    for (std::size_t r = 0; r < d; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != d) {
            throw std::runtime_error(path + ": matrix row " + std::to_string(r) +
                                     " must have " + std::to_string(d) + " entries");
        }
        for (std::size_t c = 0; c < d; ++c) read_pair(row[c], path, out + 2 * (r * d + c));
    }
}

inline FiducialFile load_fiducial(const std::string& path) {
    const nlohmann::json j = load_json(path);
    FiducialFile f;
    f.d = get_dim(j, path);
    if (!j.contains("fiducial") || !j["fiducial"].is_array() || j["fiducial"].size() != f.d) {
        throw std::runtime_error(path + ": \"fiducial\" must be an array of " +
                                 std::to_string(f.d) + " [re, im] pairs");
    }
    f.fiducial.resize(2 * f.d);
    for (std::size_t i = 0; i < f.d; ++i) read_pair(j["fiducial"][i], path, &f.fiducial[2 * i]);
    if (j.contains("tau_convention")) {
        const std::string conv = j["tau_convention"].get<std::string>();
        if (conv != kTauConvention) {
            throw std::runtime_error(path + ": unsupported tau_convention \"" + conv +
                                     "\", this artifact uses \"" + kTauConvention + "\"");
        }
    }
    if (j.contains("residual") && j["residual"].is_number()) {
        f.residual = j["residual"].get<double>();
        f.has_residual = true;
    }
    // The file names a ray; scale is not information. Normalizing here lets a
    // perturbed fiducial reach the equiangularity check instead of bouncing off
    // the unit-norm precondition.
    double norm_sq = 0.0;
    for (double v : f.fiducial) norm_sq += v * v;
    if (!(norm_sq > 1e-12) || !std::isfinite(norm_sq)) {
        throw std::runtime_error(path + ": fiducial has no usable norm");
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (double& v : f.fiducial) v *= inv;
    return f;
}

inline StateFile load_state(const std::string& path) {
    const nlohmann::json j = load_json(path);
    StateFile s;
    s.d = get_dim(j, path);
    if (!j.contains("rho")) throw std::runtime_error(path + ": missing field \"rho\"");
    s.rho.resize(2 * s.d * s.d);
    read_matrix(j["rho"], s.d, path, s.rho.data());
    return s;
}

inline ProbsFile load_probs(const std::string& path) {
    const nlohmann::json j = load_json(path);
    ProbsFile p;
    p.d = get_dim(j, path);
    const std::size_t m = p.d * p.d;
    if (!j.contains("probs") || !j["probs"].is_array() || j["probs"].size() != m) {
        throw std::runtime_error(path + ": \"probs\" must be an array of " + std::to_string(m) +
                                 " numbers (d^2, orbit order)");
    }
    p.probs.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!j["probs"][i].is_number()) {
            throw std::runtime_error(path + ": probs[" + std::to_string(i) +
                                     "] is not a number");
        }
        p.probs[i] = j["probs"][i].get<double>();
    }
    return p;
}

inline MixtureFile load_mixture(const std::string& path) {
    const nlohmann::json j = load_json(path);
    MixtureFile m;
    m.d = get_dim(j, path);
    if (!j.contains("weights") || !j["weights"].is_array() || j["weights"].empty()) {
        throw std::runtime_error(path + ": \"weights\" must be a nonempty array");
    }
    const std::size_t k = j["weights"].size();
    m.weights.resize(k);
    for (std::size_t i = 0; i < k; ++i) m.weights[i] = j["weights"][i].get<double>();
    if (!j.contains("components") || !j["components"].is_array() ||
        j["components"].size() != k) {
        throw std::runtime_error(path + ": \"components\" must be an array of " +
                                 std::to_string(k) + " matrices");
    }
    m.components.resize(k * 2 * m.d * m.d);
    for (std::size_t c = 0; c < k; ++c) {
        read_matrix(j["components"][c], m.d, path, &m.components[c * 2 * m.d * m.d]);
    }
    return m;
}

inline void write_pairs(JsonWriter& w, const double* interleaved, std::size_t count) {
    w.begin_arr();
    for (std::size_t i = 0; i < count; ++i) {
        w.begin_arr();
        w.num(interleaved[2 * i]);
        w.num(interleaved[2 * i + 1]);
        w.end_arr();
    }
    w.end_arr();
}

inline void write_matrix(JsonWriter& w, const double* interleaved, std::size_t d) {
    w.begin_arr();
    for (std::size_t r = 0; r < d; ++r) {
        write_pairs(w, interleaved + 2 * r * d, d);
    }
    w.end_arr();
}

// The fiducial artifact: {"d", "fiducial", "tau_convention", "residual"}.
inline std::string fiducial_json(std::size_t d, const double* fiducial, double residual) {
    JsonWriter w;
    w.begin_obj();
    w.key("d");
    w.uinteger(d);
    w.key("fiducial");
    write_pairs(w, fiducial, d);
    w.key("tau_convention");
    w.str(kTauConvention);
    w.key("residual");
    w.num(residual);
    w.end_obj();
    return w.take();
}

inline std::string probs_json(std::size_t d, const std::vector<double>& probs) {
    JsonWriter w;
    w.begin_obj();
    w.key("d");
    w.uinteger(d);
    w.key("probs");
    w.begin_arr();
    for (double p : probs) w.num(p);
    w.end_arr();
    w.end_obj();
    return w.take();
}

inline std::string state_json(std::size_t d, const double* rho) {
    JsonWriter w;
    w.begin_obj();
    w.key("d");
    w.uinteger(d);
    w.key("rho");
    write_matrix(w, rho, d);
    w.end_obj();
    return w.take();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << content << "\n";
    if (!out) throw std::runtime_error(path + ": write failed");
}
