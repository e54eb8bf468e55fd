#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "critline/counterexample.hpp"
#include "critline/counting.hpp"
#include "critline/topology.hpp"
#include "critline/version.hpp"

namespace critline {

// fixed 17-significant-digit decimal: round-trips any double, locale-free
inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& data) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

// complex literal: a, bi, a+bi, a-bi; scientific notation allowed in parts
inline cplx parse_complex(const std::string& text) {
    if (text.empty()) throw DomainError("parse_complex: empty literal");
    std::string body = text;
    bool has_i = body.back() == 'i' || body.back() == 'I';
    if (has_i) body.pop_back();

    auto to_double = [&](const std::string& part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        char* end = nullptr;
        double v = std::strtod(part.c_str(), &end);
        if (end != part.c_str() + part.size())
            throw DomainError("parse_complex: bad literal '" + text + "'");
        return v;
    };

    // split at the last +/- that is not a sign or an exponent
    size_t split = std::string::npos;
    for (size_t i = 1; i < body.size(); ++i) {
        char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E')
            split = i;
    }
    if (!has_i) {
        if (split != std::string::npos)
            throw DomainError("parse_complex: bad literal '" + text + "'");
        return {to_double(body), 0.0};
    }
    if (split == std::string::npos) return {0.0, to_double(body)};
    return {to_double(body.substr(0, split)), to_double(body.substr(split))};
}

inline std::string field_csv(const std::vector<FieldSample>& samples) {
    std::string out = "sigma,t,re,im,modulus,phase,quadrant,flag\n";
    for (const FieldSample& fs : samples) {
        out += fmt_double(fs.sigma) + ',' + fmt_double(fs.t) + ',' + fmt_double(fs.re) +
               ',' + fmt_double(fs.im) + ',' + fmt_double(fs.modulus) + ',' +
               fmt_double(fs.phase) + ',' + std::to_string(fs.quadrant) + ',' + fs.flag +
               '\n';
    }
    return out;
}

inline std::string events_csv(const std::vector<CriticalLineEvent>& events) {
    std::string out = "t,kind,multiplicity,source,residual\n";
    for (const CriticalLineEvent& e : events) {
        out += fmt_double(e.t) + ',' + to_string(e.kind) + ',' +
               std::to_string(e.multiplicity) + ',' + to_string(e.source) + ',' +
               fmt_double(e.refinement_residual) + '\n';
    }
    return out;
}

inline std::string distribution_csv(const std::vector<DistributionRow>& rows) {
    std::string out = "t,count_T_plus,count_zeta_poles,main_term\n";
    for (const DistributionRow& r : rows) {
        out += fmt_double(r.t) + ',' + std::to_string(r.count_T_plus) + ',' +
               std::to_string(r.count_zeta_poles) + ',' + fmt_double(r.main_term) + '\n';
    }
    return out;
}

inline nlohmann::json traced_line_json(const TracedLine& line) {
    nlohmann::json j;
    j["kind"] = line.kind == SeedKind::PhaseZero ? "phase-zero" : "amplitude-unity";
    j["level"] = line.level;
    j["termination"] = to_string(line.termination);
    j["reached"] = line.reached;
    if (line.reached) j["intersection_t"] = line.intersection_t;
    j["anomalies"] = line.anomalies;
    nlohmann::json pts = nlohmann::json::array();
    for (const cplx& p : line.points) pts.push_back({p.real(), p.imag()});
    j["points"] = pts;
    return j;
}

inline TracedLine traced_line_from_json(const nlohmann::json& j) {
    TracedLine line;
    line.kind = j.at("kind") == "phase-zero" ? SeedKind::PhaseZero : SeedKind::AmplitudeUnity;
    line.level = j.at("level").get<double>();
    std::string term = j.at("termination").get<std::string>();
    if (term == to_string(Termination::ReachedCriticalLine))
        line.termination = Termination::ReachedCriticalLine;
    else if (term == to_string(Termination::LeftDomain))
        line.termination = Termination::LeftDomain;
    else if (term == to_string(Termination::StepLimit))
        line.termination = Termination::StepLimit;
    else if (term == to_string(Termination::SingularityContact))
        line.termination = Termination::SingularityContact;
    else
        throw IoError("traced_line_from_json: unknown termination '" + term + "'");
    line.reached = j.at("reached").get<bool>();
    if (line.reached) line.intersection_t = j.at("intersection_t").get<double>();
    line.anomalies = j.at("anomalies").get<int>();
    for (const nlohmann::json& p : j.at("points"))
        line.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    return line;
}

inline nlohmann::json counting_report_json(const CountingReport& rep) {
    return {{"t_lower", rep.t_lower}, {"t_upper", rep.t_upper},
            {"zero_sum", rep.zero_sum}, {"pole_sum", rep.pole_sum},
            {"winding", rep.winding},   {"balanced", rep.balanced}};
}

inline nlohmann::json ratio_expansion_json(const RatioExpansion& r) {
    return {{"c2", r.c2},
            {"c4", r.c4},
            {"c2_theory", r.c2_theory},
            {"c4_theory", r.c4_theory},
            {"residual", r.residual}};
}

struct OutputDigest {
    std::string file;
    std::string fnv1a64;
};

// one manifest per output directory; every parameter affecting the output is
// recorded, alongside digests of the data files written
struct RunManifest {
    std::string command;
    nlohmann::json params;
    std::string precision_profile;
    double duration_seconds = 0.0;
    std::vector<OutputDigest> outputs;
};

inline nlohmann::json manifest_json(const RunManifest& m) {
    PrecisionConfig cfg = PrecisionConfig::profile(m.precision_profile);
    nlohmann::json outs = nlohmann::json::array();
    for (const OutputDigest& d : m.outputs)
        outs.push_back({{"file", d.file}, {"fnv1a64", d.fnv1a64}});
    return {{"command", m.command},
            {"params", m.params},
            {"precision",
             {{"profile", m.precision_profile.empty() ? "default" : m.precision_profile},
              {"euler_maclaurin_terms", cfg.euler_maclaurin_terms},
              {"bernoulli_order", cfg.bernoulli_order},
              {"target_rel_tol", cfg.target_rel_tol},
              {"n_factor", cfg.n_factor}}},
            {"version", kVersion},
            {"duration_seconds", m.duration_seconds},
            {"outputs", outs}};
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path.string());
    f << content;
    if (!f) throw IoError("write failed: " + path.string());
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for reading: " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// writes the data files plus manifest.json into dir, recording digests
inline void write_output_dir(const std::filesystem::path& dir, RunManifest manifest,
                             const std::vector<std::pair<std::string, std::string>>& files) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory: " + dir.string());
    for (const auto& [name, content] : files) {
        write_text_file(dir / name, content);
        manifest.outputs.push_back({name, fnv1a64_hex(content)});
    }
    write_text_file(dir / "manifest.json", manifest_json(manifest).dump(2) + "\n");
}

}  // namespace critline
