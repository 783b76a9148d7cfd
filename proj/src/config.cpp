#include "el2d/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace el2d {

namespace {

struct RawEntry {
    std::string value;
    int line;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

const std::set<std::string> known_keys = {
    "grid.n", "grid.length",
    "coeffs.alpha1", "coeffs.alpha2", "coeffs.alpha3", "coeffs.alpha4", "coeffs.alpha5",
    "coeffs.alpha6", "coeffs.gamma", "coeffs.reynolds",
    "elastic.k1", "elastic.k2", "elastic.k3",
    "solver.dt", "solver.scheme", "solver.t_end", "solver.mollify_cutoff", "solver.dealias",
    "solver.renormalize",
    "initial.preset", "initial.amplitude", "initial.b", "initial.center", "initial.width",
    "initial.velocity_preset", "initial.velocity_amplitude", "initial.snapshot",
    "output.directory", "output.snapshot_stride", "output.ledger_stride",
    "monitors.radius", "monitors.stride", "monitors.points",
};

class Extractor {
public:
    explicit Extractor(std::map<std::string, RawEntry> raw) : raw_(std::move(raw)) {}

    bool has(const std::string& key) const { return raw_.count(key) > 0; }

    std::string str(const std::string& key, const std::string& dflt = "") {
        auto it = raw_.find(key);
        return it == raw_.end() ? dflt : it->second.value;
    }

    double num(const std::string& key, double dflt) {
        auto it = raw_.find(key);
        if (it == raw_.end()) return dflt;
        return parse_num(key, it->second);
    }

    double num_required(const std::string& key) {
        auto it = raw_.find(key);
        if (it == raw_.end()) throw ValidationError("missing required config key: " + key);
        return parse_num(key, it->second);
    }

    int integer(const std::string& key, int dflt) {
        const double v = num(key, dflt);
        if (v != std::floor(v)) throw ValidationError(key + " must be an integer");
        return int(v);
    }

    bool flag(const std::string& key, bool dflt) {
        auto it = raw_.find(key);
        if (it == raw_.end()) return dflt;
        const std::string v = it->second.value;
        if (v == "true" || v == "on" || v == "1" || v == "yes") return true;
        if (v == "false" || v == "off" || v == "0" || v == "no") return false;
        throw ParseError("key " + key + ": expected a boolean, got `" + v + "`", it->second.line);
    }

    std::vector<double> nums(const std::string& key) {
        auto it = raw_.find(key);
        std::vector<double> out;
        if (it == raw_.end()) return out;
        std::istringstream is(it->second.value);
        double v;
        while (is >> v) out.push_back(v);
        if (!is.eof()) throw ParseError("key " + key + ": expected numbers", it->second.line);
        return out;
    }

private:
    double parse_num(const std::string& key, const RawEntry& e) {
        std::istringstream is(e.value);
        double v;
        if (!(is >> v) || !(is >> std::ws).eof())
            throw ParseError("key " + key + ": expected a number, got `" + e.value + "`", e.line);
        return v;
    }
    std::map<std::string, RawEntry> raw_;
};

} // namespace

RunConfig parse_config(const std::string& text) {
    std::map<std::string, RawEntry> raw;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected `key = value`: " + line, line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!known_keys.count(key)) throw ParseError("unknown config key `" + key + "`", line_no);
        if (raw.count(key)) throw ParseError("duplicate config key `" + key + "`", line_no);
        raw[key] = {value, line_no};
    }

    Extractor ex(std::move(raw));
    RunConfig cfg;
    cfg.grid_n = ex.integer("grid.n", 0);
    cfg.grid_length = ex.num("grid.length", 0.0);
    if (cfg.grid_n < 8 || cfg.grid_n % 2 != 0)
        throw ValidationError("grid.n must be even and >= 8");
    if (!(cfg.grid_length > 0.0)) throw ValidationError("grid.length must be positive");

    cfg.coeffs.alpha1 = ex.num("coeffs.alpha1", 0.0);
    cfg.coeffs.alpha2 = ex.num("coeffs.alpha2", 0.0);
    cfg.coeffs.alpha3 = ex.num("coeffs.alpha3", 0.0);
    cfg.coeffs.alpha4 = ex.num("coeffs.alpha4", 0.0);
    cfg.coeffs.alpha5 = ex.num("coeffs.alpha5", 0.0);
    cfg.coeffs.alpha6 = ex.num("coeffs.alpha6", 0.0);
    cfg.coeffs.gamma = ex.num("coeffs.gamma", 0.5);
    cfg.coeffs.reynolds = ex.num("coeffs.reynolds", 1.0);
    // surfaces Parodi/gamma1 violations with the offending numbers
    try {
        (void)Coefficients(cfg.coeffs);
    } catch (const ParodiViolation& e) {
        throw ValidationError(std::string("coeffs: ") + e.what());
    } catch (const NonpositiveGamma1& e) {
        throw ValidationError(std::string("coeffs: ") + e.what());
    }

    cfg.k1 = ex.num("elastic.k1", 1.0);
    cfg.k2 = ex.num("elastic.k2", 1.0);
    cfg.k3 = ex.num("elastic.k3", 1.0);
    if (!(cfg.k1 > 0.0 && cfg.k2 > 0.0 && cfg.k3 > 0.0))
        throw ValidationError("elastic constants must be positive");

    cfg.solver.dt = ex.num_required("solver.dt");
    if (!(cfg.solver.dt > 0.0)) throw ValidationError("solver.dt must be positive");
    const std::string scheme = ex.str("solver.scheme", "rk4");
    if (scheme == "rk4" || scheme == "explicit-rk4")
        cfg.solver.scheme = Scheme::rk4;
    else if (scheme == "imex")
        cfg.solver.scheme = Scheme::imex;
    else
        throw ValidationError("solver.scheme must be rk4 or imex");
    cfg.t_end = ex.num_required("solver.t_end");
    if (cfg.t_end < 0.0) throw ValidationError("solver.t_end must be nonnegative");
    if (ex.has("solver.mollify_cutoff")) {
        const int K = ex.integer("solver.mollify_cutoff", 0);
        if (K < 1) throw ValidationError("solver.mollify_cutoff must be >= 1");
        cfg.solver.mollify_cutoff = K;
        if (cfg.solver.scheme == Scheme::imex)
            throw ValidationError("imex scheme is not available in mollified mode");
    }
    cfg.solver.dealias = ex.flag("solver.dealias", true);
    cfg.solver.renormalize = ex.flag("solver.renormalize", true);

    cfg.preset = ex.str("initial.preset");
    if (cfg.preset.empty()) throw ValidationError("missing required config key: initial.preset");
    cfg.preset_params.amplitude = ex.num("initial.amplitude", 0.0);
    if (ex.has("initial.b")) {
        const auto b = ex.nums("initial.b");
        if (b.size() != 3) throw ValidationError("initial.b needs 3 numbers");
        cfg.preset_params.b = {b[0], b[1], b[2]};
    }
    if (ex.has("initial.center")) {
        const auto cpt = ex.nums("initial.center");
        if (cpt.size() != 2) throw ValidationError("initial.center needs 2 numbers");
        cfg.preset_params.center = {cpt[0], cpt[1]};
    }
    cfg.preset_params.width = ex.num("initial.width", 0.0);
    const std::string vp = ex.str("initial.velocity_preset", "zero");
    if (vp == "zero")
        cfg.preset_params.velocity = VelocityPreset::zero;
    else if (vp == "taylor-green")
        cfg.preset_params.velocity = VelocityPreset::taylor_green;
    else
        throw ValidationError("initial.velocity_preset must be zero or taylor-green");
    cfg.preset_params.velocity_amplitude = ex.num("initial.velocity_amplitude", 0.0);
    cfg.preset_params.snapshot_prefix = ex.str("initial.snapshot");

    cfg.output.directory = ex.str("output.directory", "out");
    cfg.output.snapshot_stride = ex.integer("output.snapshot_stride", 0);
    cfg.output.ledger_stride = ex.integer("output.ledger_stride", 1);
    if (cfg.output.ledger_stride < 1) throw ValidationError("output.ledger_stride must be >= 1");

    cfg.monitors.radius = ex.num("monitors.radius", 0.0);
    cfg.monitors.stride = ex.integer("monitors.stride", 0);
    if (ex.has("monitors.points")) {
        const auto pts = ex.nums("monitors.points");
        if (pts.size() % 2 != 0) throw ValidationError("monitors.points needs x y pairs");
        for (std::size_t i = 0; i + 1 < pts.size(); i += 2)
            cfg.monitors.points.push_back({pts[i], pts[i + 1]});
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string config_echo(const RunConfig& cfg) {
    std::ostringstream os;
    char buf[256];
    auto put_num = [&](const char* key, double v) {
        std::snprintf(buf, sizeof(buf), "%s = %.17g\n", key, v);
        os << buf;
    };
    put_num("coeffs.alpha1", cfg.coeffs.alpha1);
    put_num("coeffs.alpha2", cfg.coeffs.alpha2);
    put_num("coeffs.alpha3", cfg.coeffs.alpha3);
    put_num("coeffs.alpha4", cfg.coeffs.alpha4);
    put_num("coeffs.alpha5", cfg.coeffs.alpha5);
    put_num("coeffs.alpha6", cfg.coeffs.alpha6);
    put_num("coeffs.gamma", cfg.coeffs.gamma);
    put_num("coeffs.reynolds", cfg.coeffs.reynolds);
    put_num("elastic.k1", cfg.k1);
    put_num("elastic.k2", cfg.k2);
    put_num("elastic.k3", cfg.k3);
    put_num("grid.length", cfg.grid_length);
    os << "grid.n = " << cfg.grid_n << "\n";
    put_num("initial.amplitude", cfg.preset_params.amplitude);
    std::snprintf(buf, sizeof(buf), "initial.b = %.17g %.17g %.17g\n", cfg.preset_params.b[0],
                  cfg.preset_params.b[1], cfg.preset_params.b[2]);
    os << buf;
    std::snprintf(buf, sizeof(buf), "initial.center = %.17g %.17g\n",
                  cfg.preset_params.center[0], cfg.preset_params.center[1]);
    os << buf;
    os << "initial.preset = " << cfg.preset << "\n";
    if (!cfg.preset_params.snapshot_prefix.empty())
        os << "initial.snapshot = " << cfg.preset_params.snapshot_prefix << "\n";
    put_num("initial.velocity_amplitude", cfg.preset_params.velocity_amplitude);
    os << "initial.velocity_preset = "
       << (cfg.preset_params.velocity == VelocityPreset::zero ? "zero" : "taylor-green") << "\n";
    put_num("initial.width", cfg.preset_params.width);
    put_num("monitors.radius", cfg.monitors.radius);
    os << "monitors.stride = " << cfg.monitors.stride << "\n";
    if (!cfg.monitors.points.empty()) {
        os << "monitors.points =";
        for (const auto& p : cfg.monitors.points) {
            std::snprintf(buf, sizeof(buf), " %.17g %.17g", p[0], p[1]);
            os << buf;
        }
        os << "\n";
    }
    os << "output.directory = " << cfg.output.directory << "\n";
    os << "output.ledger_stride = " << cfg.output.ledger_stride << "\n";
    os << "output.snapshot_stride = " << cfg.output.snapshot_stride << "\n";
    os << "solver.dealias = " << (cfg.solver.dealias ? "true" : "false") << "\n";
    put_num("solver.dt", cfg.solver.dt);
    if (cfg.solver.mollify_cutoff)
        os << "solver.mollify_cutoff = " << *cfg.solver.mollify_cutoff << "\n";
    os << "solver.renormalize = " << (cfg.solver.renormalize ? "true" : "false") << "\n";
    os << "solver.scheme = " << (cfg.solver.scheme == Scheme::rk4 ? "rk4" : "imex") << "\n";
    put_num("solver.t_end", cfg.t_end);
    return os.str();
}

} // namespace el2d
