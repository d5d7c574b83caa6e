// Command-line front end: deterministic CSV/JSON emitters for the splitter
// entanglement sweeps, the discrimination error tables, constellation
// geometry, the large-spin overlap series, and phase-space curvature.
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spincoh/beamsplitter.hpp"
#include "spincoh/entanglement.hpp"
#include "spincoh/helstrom.hpp"
#include "spincoh/io.hpp"
#include "spincoh/majorana.hpp"
#include "spincoh/states.hpp"

namespace {

using spincoh::cplx;

// flag-content problems discovered after CLI11 parsing still count as usage
// errors (exit 2), not numeric failures
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// complex literals in re+imi form: "0.3-0.2i", "2i", "-1.5", "1e-3+2.5e-2i"
cplx parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw UsageError("empty complex literal");
    const bool has_i = (s.back() == 'i' || s.back() == 'j');
    if (!has_i) {
        std::size_t used = 0;
        double re = 0.0;
        try {
            re = std::stod(s, &used);
        } catch (const std::exception&) {
            throw UsageError("bad complex literal: " + text);
        }
        if (used != s.size())
            throw UsageError("bad complex literal: " + text);
        return cplx(re, 0.0);
    }
    s.pop_back();
    // locate the sign separating real and imaginary parts, skipping a leading
    // sign and exponent signs
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto to_double = [&](std::string part, bool imag_unit_ok) {
        if (imag_unit_ok && (part.empty() || part == "+"))
            return 1.0;
        if (imag_unit_ok && part == "-")
            return -1.0;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            throw UsageError("bad complex literal: " + text);
        }
        if (used != part.size())
            throw UsageError("bad complex literal: " + text);
        return v;
    };
    if (split == std::string::npos)
        return cplx(0.0, to_double(s, true));
    return cplx(to_double(s.substr(0, split), false), to_double(s.substr(split), true));
}

std::vector<std::string> split_fields(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

int parse_int_field(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size())
            throw UsageError(std::string("bad integer in ") + what + ": " + s);
        return v;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError(std::string("bad integer in ") + what + ": " + s);
    }
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* os = nullptr;

    explicit OutputTarget(const std::string& path) {
        if (path.empty()) {
            os = &std::cout;
            return;
        }
        file.open(path);
        if (!file)
            throw UsageError("cannot open output file: " + path);
        os = &file;
    }
};

std::string fmt(double x) { return spincoh::format_sig(x); }

std::string fmt_complex(cplx z) {
    std::string s = fmt(z.real());
    if (z.imag() >= 0.0)
        s += "+";
    s += fmt(z.imag()) + "i";
    return s;
}

void meta_header(std::ostream& os, const std::string& command,
                 const std::string& params) {
    os << "# tool: spincoh\n# command: " << command << "\n# parameters: " << params
       << "\n";
}

spincoh::FockVector superposition_state(cplx a, cplx b, cplx beta, int two_s) {
    if (b == cplx(0.0, 0.0))
        throw UsageError("superposition weight b must be nonzero");
    spincoh::SpinMagnitude s(two_s);
    Eigen::VectorXcd amps = b * spincoh::spin_coherent(s, beta).amps;
    amps(0) += a;
    return spincoh::make_state(std::move(amps), "superposition");
}

// ---- subcommand bodies -------------------------------------------------

struct SweepArgs {
    double z_min = 0.0, z_max = 0.0, r2 = 0.5;
    int z_steps = 1, two_s_max = 1;
    bool r2_given = false, meta = false;
    std::string format = "csv", out;
};

void run_sweep(const SweepArgs& a) {
    if (a.z_min < 0.0 || a.z_max < a.z_min)
        throw UsageError("need 0 <= z-min <= z-max");
    if (a.z_steps < 1)
        throw UsageError("z-steps must be at least 1");
    if (a.z_steps == 1 && a.z_max != a.z_min)
        throw UsageError("z-steps 1 requires z-min == z-max");
    if (a.format != "csv" && a.format != "json")
        throw UsageError("format must be csv or json");

    std::vector<double> zs(a.z_steps);
    for (int i = 0; i < a.z_steps; ++i)
        zs[i] = (a.z_steps == 1)
                    ? a.z_min
                    : a.z_min + i * (a.z_max - a.z_min) / (a.z_steps - 1);
    std::vector<int> ts(a.two_s_max);
    for (int t = 1; t <= a.two_s_max; ++t)
        ts[t - 1] = t;

    std::vector<spincoh::SweepRecord> rows = spincoh::sweep(ts, zs, {a.r2});

    OutputTarget target(a.out);
    std::ostream& os = *target.os;
    if (a.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows)
            j.push_back({{"two_s", r.two_s},
                         {"z", r.z_mod},
                         {"r2", r.r2},
                         {"von_neumann", r.von_neumann},
                         {"linear", r.linear}});
        os << j.dump() << "\n";
        return;
    }
    if (a.meta)
        meta_header(os, "sweep",
                    "z-min=" + fmt(a.z_min) + " z-max=" + fmt(a.z_max) +
                        " z-steps=" + std::to_string(a.z_steps) +
                        " two-s-max=" + std::to_string(a.two_s_max) +
                        " r2=" + fmt(a.r2));
    if (!a.r2_given)
        os << "# r2 default 0.5\n";
    os << "two_s,z,r2,von_neumann,linear\n";
    for (const auto& r : rows)
        os << r.two_s << "," << fmt(r.z_mod) << "," << fmt(r.r2) << ","
           << fmt(r.von_neumann) << "," << fmt(r.linear) << "\n";
}

struct R2ScanArgs {
    std::string z = "1";
    int two_s = 1, steps = 21;
    bool meta = false;
    std::string out;
};

void run_r2scan(const R2ScanArgs& a) {
    if (a.steps < 2)
        throw UsageError("steps must be at least 2");
    const cplx z = parse_complex(a.z);
    spincoh::SpinMagnitude s(a.two_s);

    OutputTarget target(a.out);
    std::ostream& os = *target.os;
    if (a.meta)
        meta_header(os, "r2scan",
                    "z=" + fmt_complex(z) + " two-s=" + std::to_string(a.two_s) +
                        " steps=" + std::to_string(a.steps));
    os << "r2,von_neumann,linear\n";
    for (int i = 0; i < a.steps; ++i) {
        const double r2 = static_cast<double>(i) / (a.steps - 1);
        os << fmt(r2) << "," << fmt(spincoh::entanglement_of_output(s, z, r2)) << ","
           << fmt(spincoh::linear_entropy_of_output(s, z, r2)) << "\n";
    }
    os << "# argmax_r2 = " << fmt(spincoh::argmax_r2(s, z, 1.0 / (a.steps - 1))) << "\n";
}

struct HelstromArgs {
    std::string alpha = "0";
    std::vector<std::string> beta;
    double pa = 0.5;
    int two_s_max = 1;
    bool meta = false;
    std::string out, emit_states;
};

void run_helstrom(const HelstromArgs& a) {
    const cplx alpha = parse_complex(a.alpha);
    if (a.beta.empty())
        throw UsageError("at least one --beta value is required");
    std::vector<cplx> betas;
    for (const std::string& b : a.beta)
        betas.push_back(parse_complex(b));
    if (a.pa < 0.0 || a.pa > 1.0)
        throw UsageError("pa must lie in [0, 1]");

    std::vector<spincoh::HelstromRecord> rows =
        spincoh::helstrom_sweep(alpha, betas, a.pa, 1, a.two_s_max);

    OutputTarget target(a.out);
    std::ostream& os = *target.os;
    std::string beta_list;
    for (std::size_t k = 0; k < betas.size(); ++k)
        beta_list += (k ? ";" : "") + fmt_complex(betas[k]);
    if (a.meta)
        meta_header(os, "helstrom",
                    "alpha=" + fmt_complex(alpha) + " beta=" + beta_list +
                        " pa=" + fmt(a.pa) +
                        " two-s-max=" + std::to_string(a.two_s_max));
    os << "two_s,beta,p_a,p_error\n";
    for (const auto& r : rows)
        os << r.two_s << "," << fmt_complex(r.beta) << "," << fmt(r.p_a) << ","
           << fmt(r.p_error) << "\n";

    if (!a.emit_states.empty()) {
        spincoh::SpinMagnitude s(a.two_s_max);
        spincoh::DiscriminationProblem problem(spincoh::spin_coherent(s, alpha),
                                               spincoh::spin_coherent(s, betas[0]),
                                               a.pa, 1.0 - a.pa);
        spincoh::PostMeasurementStates pm = spincoh::post_measurement_states(problem);
        nlohmann::json j;
        j["e_a"] = nlohmann::json::parse(spincoh::state_to_json(pm.e_a));
        j["e_b"] = nlohmann::json::parse(spincoh::state_to_json(pm.e_b));
        std::ofstream f(a.emit_states);
        if (!f)
            throw UsageError("cannot open output file: " + a.emit_states);
        f << j.dump() << "\n";
    }
}

struct MajoranaArgs {
    std::string state_file, coherent, superpose, out;
};

void run_majorana(const MajoranaArgs& a) {
    const int sources = (!a.state_file.empty()) + (!a.coherent.empty()) +
                        (!a.superpose.empty());
    if (sources != 1)
        throw UsageError("provide exactly one of --state-file, --coherent, --superpose");

    OutputTarget target(a.out);
    std::ostream& os = *target.os;

    if (!a.state_file.empty()) {
        std::ifstream f(a.state_file);
        if (!f)
            throw UsageError("cannot open state file: " + a.state_file);
        std::stringstream buf;
        buf << f.rdbuf();
        nlohmann::json j = nlohmann::json::parse(buf.str(), nullptr, false);
        if (j.is_discarded())
            throw UsageError("state file is not valid JSON: " + a.state_file);
        if (j.contains("e_a") && j.contains("e_b")) {
            nlohmann::json out;
            for (const char* key : {"e_a", "e_b"}) {
                spincoh::FockVector st = spincoh::state_from_json(j[key].dump());
                out[key] = nlohmann::json::parse(
                    spincoh::constellation_to_json(spincoh::constellation(st)));
            }
            os << out.dump() << "\n";
            return;
        }
        spincoh::FockVector st = spincoh::state_from_json(buf.str());
        os << spincoh::constellation_to_json(spincoh::constellation(st)) << "\n";
        return;
    }

    if (!a.coherent.empty()) {
        std::vector<std::string> fields = split_fields(a.coherent);
        if (fields.size() != 2)
            throw UsageError("--coherent expects TWO_S,ALPHA");
        const int two_s = parse_int_field(fields[0], "--coherent");
        const cplx alpha = parse_complex(fields[1]);
        spincoh::FockVector st =
            spincoh::spin_coherent(spincoh::SpinMagnitude(two_s), alpha);
        os << spincoh::constellation_to_json(spincoh::constellation(st)) << "\n";
        return;
    }

    std::vector<std::string> fields = split_fields(a.superpose);
    if (fields.size() != 4)
        throw UsageError("--superpose expects A,B,BETA,TWO_S");
    spincoh::FockVector st =
        superposition_state(parse_complex(fields[0]), parse_complex(fields[1]),
                            parse_complex(fields[2]),
                            parse_int_field(fields[3], "--superpose"));
    os << spincoh::constellation_to_json(spincoh::constellation(st)) << "\n";
}

struct LimitArgs {
    std::string alpha = "1";
    std::vector<int> two_s_list;
    bool meta = false;
    std::string out;
};

void run_limit(const LimitArgs& a) {
    const cplx alpha = parse_complex(a.alpha);
    if (a.two_s_list.empty())
        throw UsageError("at least one --two-s-list value is required");
    for (int t : a.two_s_list)
        if (t < 1)
            throw UsageError("two-s-list entries must be positive");

    OutputTarget target(a.out);
    std::ostream& os = *target.os;
    if (a.meta)
        meta_header(os, "limit", "alpha=" + fmt_complex(alpha));
    os << "two_s,overlap\n";
    for (int t : a.two_s_list)
        os << t << "," << fmt(spincoh::limit_overlap(alpha, spincoh::SpinMagnitude(t)))
           << "\n";
}

struct CurvatureArgs {
    int two_s = 1;
    std::string z = "0";
    bool meta = false;
    std::string out;
};

void run_curvature(const CurvatureArgs& a) {
    const cplx z = parse_complex(a.z);
    spincoh::SpinMagnitude s(a.two_s);
    const double k = spincoh::curvature(s, z);

    OutputTarget target(a.out);
    std::ostream& os = *target.os;
    if (a.meta)
        meta_header(os, "curvature",
                    "two-s=" + std::to_string(a.two_s) + " z=" + fmt_complex(z));
    os << "two_s,k,k_reference\n";
    os << a.two_s << "," << fmt(k) << "," << fmt(1.0 / a.two_s) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "spincoh: spin-coherent splitter entanglement, minimum-error state\n"
        "discrimination, and stellar-representation geometry.\n"
        "Spins are passed as --two-s integers (two_s = 2S) so half-integer\n"
        "spins stay exact; complex values use re+imi literals (e.g. 0.3-0.2i).\n"
        "Identical invocations produce byte-identical output."};
    app.require_subcommand(1);

    SweepArgs sw;
    CLI::App* c_sweep = app.add_subcommand(
        "sweep", "Entanglement table over two_s = 1..two-s-max and a |z| grid.\n"
                 "CSV columns: two_s,z,r2,von_neumann,linear (json: same keys).");
    c_sweep->add_option("--z-min", sw.z_min, "smallest |z|")->required();
    c_sweep->add_option("--z-max", sw.z_max, "largest |z|")->required();
    c_sweep->add_option("--z-steps", sw.z_steps, "number of |z| grid points")
        ->required();
    c_sweep->add_option("--two-s-max", sw.two_s_max, "largest two_s (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    CLI::Option* r2opt =
        c_sweep->add_option("--r2", sw.r2, "reflectivity |R|^2 (default 0.5)")
            ->check(CLI::Range(0.0, 1.0));
    c_sweep->add_option("--format", sw.format, "csv or json (default csv)");
    c_sweep->add_option("--out", sw.out, "output path (default stdout)");
    c_sweep->add_flag("--meta", sw.meta, "add a commented provenance header");

    R2ScanArgs rs;
    CLI::App* c_r2 = app.add_subcommand(
        "r2scan", "Entanglement against |R|^2 at fixed two_s and z.\n"
                  "CSV columns: r2,von_neumann,linear; trailer comment with argmax.");
    c_r2->add_option("--z", rs.z, "coherent parameter (complex literal)")->required();
    c_r2->add_option("--two-s", rs.two_s, "two_s (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    c_r2->add_option("--steps", rs.steps, "grid points over [0, 1] (default 21)");
    c_r2->add_option("--out", rs.out, "output path (default stdout)");
    c_r2->add_flag("--meta", rs.meta, "add a commented provenance header");

    HelstromArgs hl;
    CLI::App* c_hel = app.add_subcommand(
        "helstrom", "Minimum-error probability table over two_s = 1..two-s-max\n"
                    "for each beta. CSV columns: two_s,beta,p_a,p_error.");
    c_hel->add_option("--alpha", hl.alpha, "first state parameter (default 0)");
    c_hel->add_option("--beta", hl.beta, "second state parameters (comma list)")
        ->required()
        ->delimiter(',');
    c_hel->add_option("--pa", hl.pa, "prior of the first state (default 0.5)");
    c_hel->add_option("--two-s-max", hl.two_s_max, "largest two_s (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    c_hel->add_option("--emit-states", hl.emit_states,
                      "also write the optimal measurement basis for\n"
                      "(two-s-max, first beta) as JSON {\"e_a\", \"e_b\"}");
    c_hel->add_option("--out", hl.out, "output path (default stdout)");
    c_hel->add_flag("--meta", hl.meta, "add a commented provenance header");

    MajoranaArgs mj;
    CLI::App* c_maj = app.add_subcommand(
        "majorana", "Constellation JSON {two_s, points, north_multiplicity} for a\n"
                    "state given as a JSON file, a coherent state, or a\n"
                    "two-coherent superposition.");
    c_maj->add_option("--state-file", mj.state_file,
                      "state JSON path; a {\"e_a\",\"e_b\"} pair file yields both\n"
                      "constellations under the same keys");
    c_maj->add_option("--coherent", mj.coherent, "TWO_S,ALPHA");
    c_maj->add_option("--superpose", mj.superpose, "A,B,BETA,TWO_S for a|0> + b|beta>");
    c_maj->add_option("--out", mj.out, "output path (default stdout)");

    LimitArgs lm;
    CLI::App* c_lim = app.add_subcommand(
        "limit", "Overlap of the Poissonian state with the matched coherent-family\n"
                 "member per two_s. CSV columns: two_s,overlap.");
    c_lim->add_option("--alpha", lm.alpha, "Poissonian amplitude (default 1)");
    c_lim->add_option("--two-s-list", lm.two_s_list, "two_s values (comma list)")
        ->required()
        ->delimiter(',');
    c_lim->add_option("--out", lm.out, "output path (default stdout)");
    c_lim->add_flag("--meta", lm.meta, "add a commented provenance header");

    CurvatureArgs cv;
    CLI::App* c_cur = app.add_subcommand(
        "curvature", "Phase-space Gaussian curvature at z with its 1/two_s\n"
                     "reference. CSV columns: two_s,k,k_reference.");
    c_cur->add_option("--two-s", cv.two_s, "two_s (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    c_cur->add_option("--z", cv.z, "evaluation point (default 0)");
    c_cur->add_option("--out", cv.out, "output path (default stdout)");
    c_cur->add_flag("--meta", cv.meta, "add a commented provenance header");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        sw.r2_given = r2opt->count() > 0;
        if (c_sweep->parsed())
            run_sweep(sw);
        else if (c_r2->parsed())
            run_r2scan(rs);
        else if (c_hel->parsed())
            run_helstrom(hl);
        else if (c_maj->parsed())
            run_majorana(mj);
        else if (c_lim->parsed())
            run_limit(lm);
        else if (c_cur->parsed())
            run_curvature(cv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
