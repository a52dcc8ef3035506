#include "multiwave/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "multiwave/grid.hpp"
#include "multiwave/io.hpp"
#include "multiwave/multipoint.hpp"
#include "multiwave/operator_algebra.hpp"

namespace mw {
namespace {

[[noreturn]] void fail_line(int line, const std::string& msg) {
    throw_config("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

double parse_double_tok(const std::string& tok, int line) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (errno != 0 || end == tok.c_str() || *end != '\0')
        fail_line(line, "malformed number '" + tok + "'");
    return v;
}

long long parse_int_tok(const std::string& tok, int line) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(tok.c_str(), &end, 10);
    if (errno != 0 || end == tok.c_str() || *end != '\0')
        fail_line(line, "malformed integer '" + tok + "'");
    return v;
}

std::uint64_t parse_u64_tok(const std::string& tok, int line) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
    if (errno != 0 || end == tok.c_str() || *end != '\0')
        fail_line(line, "malformed unsigned integer '" + tok + "'");
    return v;
}

bool parse_bool_tok(const std::string& tok, int line) {
    if (tok == "true" || tok == "1" || tok == "yes") return true;
    if (tok == "false" || tok == "0" || tok == "no") return false;
    fail_line(line, "malformed boolean '" + tok + "'");
}

}  // namespace

cplx parse_complex(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) throw_config("empty complex literal");
    const char* p = s.c_str();
    char* end = nullptr;
    errno = 0;
    double first = std::strtod(p, &end);
    if (end == p) {
        // pure "i" / "-i" / "+i"
        std::string t = s;
        double sign = 1.0;
        if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
            sign = t[0] == '-' ? -1.0 : 1.0;
            t = t.substr(1);
        }
        if (t == "i") return cplx(0.0, sign);
        throw_config("malformed complex literal '" + s + "'");
    }
    if (*end == '\0') return cplx(first, 0.0);
    if (*end == 'i' && *(end + 1) == '\0') return cplx(0.0, first);
    if (*end != '+' && *end != '-') throw_config("malformed complex literal '" + s + "'");
    const char* q = end;
    char* end2 = nullptr;
    double second = std::strtod(q, &end2);
    if (end2 == q) {
        // forms like "1+i" / "1-i"
        if ((*q == '+' || *q == '-') && *(q + 1) == 'i' && *(q + 2) == '\0')
            return cplx(first, *q == '-' ? -1.0 : 1.0);
        throw_config("malformed complex literal '" + s + "'");
    }
    if (*end2 == 'i' && *(end2 + 1) == '\0') return cplx(first, second);
    throw_config("malformed complex literal '" + s + "'");
}

std::string format_complex_literal(cplx v) { return format_complex(v); }

const char* scenario_kind_name(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::solve_linear: return "solve-linear";
        case ScenarioKind::solve_nlw: return "solve-nlw";
        case ScenarioKind::check_admissible: return "check-admissible";
        case ScenarioKind::verify_dispersive: return "verify-dispersive";
        case ScenarioKind::verify_strichartz: return "verify-strichartz";
        case ScenarioKind::oracle_compare: return "oracle-compare";
    }
    return "solve-linear";
}

std::optional<ScenarioKind> scenario_kind_from_name(const std::string& name) {
    for (ScenarioKind k :
         {ScenarioKind::solve_linear, ScenarioKind::solve_nlw, ScenarioKind::check_admissible,
          ScenarioKind::verify_dispersive, ScenarioKind::verify_strichartz,
          ScenarioKind::oracle_compare}) {
        if (name == scenario_kind_name(k)) return k;
    }
    return std::nullopt;
}

namespace {

struct Parser {
    ScenarioConfig cfg;
    bool saw_phi{false};
    bool saw_psi{false};

    void handle(const std::string& section, const std::string& key, const std::string& value,
                int line) {
        if (section == "scenario") {
            scenario_key(key, value, line);
        } else if (section == "grid") {
            grid_key(key, value, line);
        } else if (section == "operator") {
            operator_key(key, value, line);
        } else if (section == "multipoint") {
            multipoint_key(key, value, line);
        } else if (section == "phi") {
            saw_phi = true;
            cfg.phi.present = true;
            data_key(cfg.phi, key, value, line);
        } else if (section == "psi") {
            saw_psi = true;
            cfg.psi.present = true;
            data_key(cfg.psi, key, value, line);
        } else if (section == "source") {
            source_key(key, value, line);
        } else if (section == "nonlinearity") {
            nonlinearity_key(key, value, line);
        } else if (section == "picard") {
            picard_key(key, value, line);
        } else if (section == "exponents") {
            exponents_key(key, value, line);
        } else if (section == "dispersive") {
            dispersive_key(key, value, line);
        } else if (section == "strichartz") {
            strichartz_key(key, value, line);
        } else if (section == "oracle") {
            oracle_key(key, value, line);
        } else if (section == "output") {
            output_key(key, value, line);
        } else {
            fail_line(line, "unknown section [" + section + "]");
        }
    }

    void scenario_key(const std::string& key, const std::string& value, int line) {
        if (key == "kind") {
            const auto k = scenario_kind_from_name(value);
            if (!k) fail_line(line, "unknown scenario kind '" + value + "'");
            cfg.kind = *k;
        } else if (key == "seed") {
            cfg.seed = parse_u64_tok(value, line);
            cfg.has_seed = true;
        } else if (key == "horizon") {
            cfg.horizon = parse_double_tok(value, line);
        } else if (key == "time_steps") {
            cfg.time_steps = static_cast<int>(parse_int_tok(value, line));
        } else if (key == "verify") {
            cfg.verify = parse_bool_tok(value, line);
        } else if (key == "condition_cap") {
            cfg.condition_cap = parse_double_tok(value, line);
        } else {
            fail_line(line, "unknown key '" + key + "' in [scenario]");
        }
    }

    void grid_key(const std::string& key, const std::string& value, int line) {
        if (key == "dims") {
            cfg.grid.dims = static_cast<int>(parse_int_tok(value, line));
        } else if (key == "points") {
            cfg.grid.points.clear();
            for (const auto& tok : split_list(value))
                cfg.grid.points.push_back(static_cast<int>(parse_int_tok(tok, line)));
        } else if (key == "box") {
            cfg.grid.box.clear();
            for (const auto& tok : split_list(value))
                cfg.grid.box.push_back(parse_double_tok(tok, line));
        } else {
            fail_line(line, "unknown key '" + key + "' in [grid]");
        }
    }

    void operator_key(const std::string& key, const std::string& value, int line) {
        if (key == "type") {
            if (value == "inline")
                cfg.op.type = OperatorConfig::Type::inline_matrix;
            else if (value == "diagonal")
                cfg.op.type = OperatorConfig::Type::diagonal;
            else if (value == "sturm_liouville")
                cfg.op.type = OperatorConfig::Type::sturm_liouville;
            else
                fail_line(line, "unknown operator type '" + value + "'");
        } else if (key == "hdim") {
            cfg.op.hdim = static_cast<int>(parse_int_tok(value, line));
        } else if (key == "matrix") {
            cfg.op.matrix.clear();
            for (const auto& tok : split_list(value)) {
                try {
                    cfg.op.matrix.push_back(parse_complex(tok));
                } catch (const Error& e) {
                    fail_line(line, e.what());
                }
            }
        } else if (key == "diag") {
            cfg.op.diag.clear();
            for (const auto& tok : split_list(value))
                cfg.op.diag.push_back(parse_double_tok(tok, line));
        } else if (key == "a") {
            cfg.op.sl_a = parse_double_tok(value, line);
        } else if (key == "c") {
            cfg.op.sl_c = parse_double_tok(value, line);
        } else if (key == "points") {
            cfg.op.sl_points = static_cast<int>(parse_int_tok(value, line));
        } else {
            fail_line(line, "unknown key '" + key + "' in [operator]");
        }
    }

    void multipoint_key(const std::string& key, const std::string& value, int line) {
        auto parse_cplx_list = [&](std::vector<cplx>& out) {
            out.clear();
            for (const auto& tok : split_list(value)) {
                try {
                    out.push_back(parse_complex(tok));
                } catch (const Error& e) {
                    fail_line(line, e.what());
                }
            }
        };
        if (key == "alphas") {
            parse_cplx_list(cfg.multipoint.alphas);
        } else if (key == "betas") {
            parse_cplx_list(cfg.multipoint.betas);
        } else if (key == "lambdas") {
            cfg.multipoint.lambdas.clear();
            for (const auto& tok : split_list(value))
                cfg.multipoint.lambdas.push_back(parse_double_tok(tok, line));
        } else if (key == "half_source_term") {
            cfg.multipoint.half_source_term = parse_bool_tok(value, line);
        } else {
            fail_line(line, "unknown key '" + key + "' in [multipoint]");
        }
    }

    void data_key(DataConfig& data, const std::string& key, const std::string& value, int line) {
        if (key == "type") {
            if (value == "gaussian")
                data.type = DataConfig::Type::gaussian;
            else if (value == "single_mode")
                data.type = DataConfig::Type::single_mode;
            else if (value == "file")
                data.type = DataConfig::Type::file;
            else
                fail_line(line, "unknown data type '" + value + "'");
        } else if (key == "seed") {
            data.seed = parse_u64_tok(value, line);
        } else if (key == "bumps") {
            data.bumps = static_cast<int>(parse_int_tok(value, line));
        } else if (key == "width_min") {
            data.width_min = parse_double_tok(value, line);
        } else if (key == "width_max") {
            data.width_max = parse_double_tok(value, line);
        } else if (key == "amplitude") {
            data.amplitude = parse_double_tok(value, line);
        } else if (key == "mode") {
            data.mode.clear();
            for (const auto& tok : split_list(value))
                data.mode.push_back(static_cast<int>(parse_int_tok(tok, line)));
        } else if (key == "component") {
            data.component = static_cast<int>(parse_int_tok(value, line));
        } else if (key == "mode_amplitude") {
            try {
                data.mode_amplitude = parse_complex(value);
            } catch (const Error& e) {
                fail_line(line, e.what());
            }
        } else if (key == "path") {
            data.path = value;
        } else {
            fail_line(line, "unknown data key '" + key + "'");
        }
    }

    void source_key(const std::string& key, const std::string& value, int line) {
        if (key == "type") {
            if (value == "none")
                cfg.source.type = SourceConfig::Type::none;
            else if (value == "gaussian")
                cfg.source.type = SourceConfig::Type::gaussian;
            else
                fail_line(line, "unknown source type '" + value + "'");
        } else if (key == "seed") {
            cfg.source.seed = parse_u64_tok(value, line);
        } else if (key == "bumps") {
            cfg.source.bumps = static_cast<int>(parse_int_tok(value, line));
        } else if (key == "width_min") {
            cfg.source.width_min = parse_double_tok(value, line);
        } else if (key == "width_max") {
            cfg.source.width_max = parse_double_tok(value, line);
        } else if (key == "amplitude") {
            cfg.source.amplitude = parse_double_tok(value, line);
        } else if (key == "omega") {
            cfg.source.omega = parse_double_tok(value, line);
        } else if (key == "time_steps") {
            cfg.source.time_steps = static_cast<int>(parse_int_tok(value, line));
        } else {
            fail_line(line, "unknown key '" + key + "' in [source]");
        }
    }

    void nonlinearity_key(const std::string& key, const std::string& value, int line) {
        if (key == "kind") {
            if (value != "scalar_power" && value != "fiber_norm_power")
                fail_line(line, "unknown nonlinearity kind '" + value + "'");
            cfg.nonlinearity.kind = value;
        } else if (key == "lambda") {
            cfg.nonlinearity.lambda = parse_double_tok(value, line);
        } else if (key == "k") {
            cfg.nonlinearity.k = parse_double_tok(value, line);
        } else {
            fail_line(line, "unknown key '" + key + "' in [nonlinearity]");
        }
    }

    void picard_key(const std::string& key, const std::string& value, int line) {
        if (key == "max_iter") {
            cfg.picard.max_iter = static_cast<int>(parse_int_tok(value, line));
        } else if (key == "tol") {
            cfg.picard.tol = parse_double_tok(value, line);
        } else if (key == "ball_radius") {
            cfg.picard.ball_radius = parse_double_tok(value, line);
        } else if (key == "holder_p") {
            cfg.picard.holder_p = parse_double_tok(value, line);
        } else if (key == "window") {
            cfg.picard.window = parse_double_tok(value, line);
        } else if (key == "gamma") {
            try {
                cfg.picard.gamma = Rat::parse(value);
            } catch (const Error& e) {
                fail_line(line, e.what());
            }
        } else if (key == "target_time") {
            cfg.picard.target_time = parse_double_tok(value, line);
        } else {
            fail_line(line, "unknown key '" + key + "' in [picard]");
        }
    }

    void exponents_key(const std::string& key, const std::string& value, int line) {
        auto parse_exp = [&](const std::string& tok) -> Exponent {
            try {
                return Exponent::parse(tok);
            } catch (const Error& e) {
                fail_line(line, e.what());
            }
        };
        if (key == "gamma") {
            try {
                cfg.exponents.gamma = Rat::parse(value);
            } catch (const Error& e) {
                fail_line(line, e.what());
            }
        } else if (key == "alpha") {
            cfg.exponents.alpha = parse_double_tok(value, line);
        } else if (key == "q") {
            cfg.exponents.q = parse_exp(value);
        } else if (key == "r") {
            cfg.exponents.r = parse_exp(value);
        } else if (key == "qt") {
            cfg.exponents.qt = parse_exp(value);
        } else if (key == "rt") {
            cfg.exponents.rt = parse_exp(value);
        } else if (key == "ns") {
            cfg.exponents.ns.clear();
            for (const auto& tok : split_list(value))
                cfg.exponents.ns.push_back(static_cast<int>(parse_int_tok(tok, line)));
        } else if (key == "qs") {
            cfg.exponents.qs.clear();
            for (const auto& tok : split_list(value)) cfg.exponents.qs.push_back(parse_exp(tok));
        } else if (key == "rs") {
            cfg.exponents.rs.clear();
            for (const auto& tok : split_list(value)) cfg.exponents.rs.push_back(parse_exp(tok));
        } else if (key == "local_existence_ns") {
            cfg.exponents.local_existence_ns.clear();
            for (const auto& tok : split_list(value))
                cfg.exponents.local_existence_ns.push_back(static_cast<int>(parse_int_tok(tok, line)));
        } else {
            fail_line(line, "unknown key '" + key + "' in [exponents]");
        }
    }

    void dispersive_key(const std::string& key, const std::string& value, int line) {
        if (key == "alpha") {
            cfg.dispersive.alpha = parse_double_tok(value, line);
        } else if (key == "p") {
            try {
                cfg.dispersive.p = Exponent::parse(value);
            } catch (const Error& e) {
                fail_line(line, e.what());
            }
        } else if (key == "t_min") {
            cfg.dispersive.t_min = parse_double_tok(value, line);
        } else if (key == "t_max") {
            cfg.dispersive.t_max = parse_double_tok(value, line);
        } else if (key == "samples") {
            cfg.dispersive.samples = static_cast<int>(parse_int_tok(value, line));
        } else {
            fail_line(line, "unknown key '" + key + "' in [dispersive]");
        }
    }

    void strichartz_key(const std::string& key, const std::string& value, int line) {
        if (key == "instances") {
            cfg.strichartz.instances = static_cast<int>(parse_int_tok(value, line));
        } else if (key == "alphas") {
            cfg.strichartz.alphas.clear();
            for (const auto& tok : split_list(value))
                cfg.strichartz.alphas.push_back(parse_double_tok(tok, line));
        } else if (key == "refine_grid") {
            cfg.strichartz.refine_grid = parse_bool_tok(value, line);
        } else if (key == "refine_time") {
            cfg.strichartz.refine_time = parse_bool_tok(value, line);
        } else {
            fail_line(line, "unknown key '" + key + "' in [strichartz]");
        }
    }

    void oracle_key(const std::string& key, const std::string& value, int line) {
        if (key == "dt") {
            cfg.oracle.dt = parse_double_tok(value, line);
        } else if (key == "compare_steps") {
            cfg.oracle.compare_steps = static_cast<int>(parse_int_tok(value, line));
        } else {
            fail_line(line, "unknown key '" + key + "' in [oracle]");
        }
    }

    void output_key(const std::string& key, const std::string& value, int line) {
        if (key == "dir") {
            cfg.output.dir = value;
        } else if (key == "write_fields") {
            cfg.output.write_fields = parse_bool_tok(value, line);
        } else if (key == "write_series") {
            cfg.output.write_series = parse_bool_tok(value, line);
        } else {
            fail_line(line, "unknown key '" + key + "' in [output]");
        }
    }
};

bool needs_grid(ScenarioKind kind) { return kind != ScenarioKind::check_admissible; }

void validate_config(ScenarioConfig& cfg) {
    if (needs_grid(cfg.kind)) {
        if (cfg.grid.dims <= 0 || cfg.grid.points.empty())
            throw_config("scenario requires a [grid] block");
        if (static_cast<int>(cfg.grid.points.size()) != cfg.grid.dims ||
            static_cast<int>(cfg.grid.box.size()) != cfg.grid.dims)
            throw_config("[grid] points/box must list exactly 'dims' entries");
        GridSpec::make(cfg.grid.points, cfg.grid.box);  // shape invariants

        // operator block validated by its owning module
        switch (cfg.op.type) {
            case OperatorConfig::Type::inline_matrix: {
                if (static_cast<std::size_t>(cfg.op.hdim) * cfg.op.hdim != cfg.op.matrix.size())
                    throw_config("[operator] matrix needs hdim^2 entries");
                CMat m(cfg.op.hdim);
                m.a = cfg.op.matrix;
                try {
                    OperatorSpec::build(m);
                } catch (const Error& e) {
                    throw_config(std::string("[operator] ") + e.what());
                }
                break;
            }
            case OperatorConfig::Type::diagonal: {
                if (cfg.op.diag.size() != static_cast<std::size_t>(cfg.op.hdim))
                    throw_config("[operator] diag needs hdim entries");
                for (double v : cfg.op.diag)
                    if (!(v > 0.0)) throw_config("[operator] diagonal entries must be positive");
                break;
            }
            case OperatorConfig::Type::sturm_liouville: {
                if (cfg.op.sl_points < 3) throw_config("[operator] sturm_liouville needs points >= 3");
                try {
                    OperatorSpec op =
                        OperatorSpec::sturm_liouville_const(cfg.op.sl_a, cfg.op.sl_c, cfg.op.sl_points);
                    cfg.op.hdim = op.hdim();
                } catch (const Error& e) {
                    throw_config(std::string("[operator] ") + e.what());
                }
                break;
            }
        }

        if (!cfg.multipoint.lambdas.empty() || !cfg.multipoint.alphas.empty()) {
            try {
                MultipointSpec spec = MultipointSpec::make(cfg.multipoint.alphas,
                                                           cfg.multipoint.betas,
                                                           cfg.multipoint.lambdas);
                spec.validate_horizon(cfg.horizon);
            } catch (const Error& e) {
                throw_config(std::string("[multipoint] ") + e.what());
            }
        }

        auto check_data = [&](const DataConfig& d, const char* name) {
            if (!d.present) return;
            if (d.type == DataConfig::Type::gaussian && !d.seed && !cfg.has_seed)
                throw_config(std::string("[") + name +
                             "] gaussian data requires a seed (block or scenario level)");
            if (d.type == DataConfig::Type::single_mode &&
                d.mode.size() != static_cast<std::size_t>(cfg.grid.dims))
                throw_config(std::string("[") + name + "] mode needs 'dims' integer entries");
            if (d.type == DataConfig::Type::file) {
                if (d.path.empty())
                    throw_config(std::string("[") + name + "] file data needs a path");
                std::ifstream probe(d.path, std::ios::binary);
                if (!probe)
                    throw_config(std::string("[") + name + "] referenced file does not exist: " +
                                 d.path);
            }
            if (d.type == DataConfig::Type::gaussian && (!(d.width_min > 0.0) || d.width_max < d.width_min))
                throw_config(std::string("[") + name + "] invalid gaussian width range");
        };
        check_data(cfg.phi, "phi");
        check_data(cfg.psi, "psi");
        if (cfg.source.type == SourceConfig::Type::gaussian && !cfg.source.seed && !cfg.has_seed)
            throw_config("[source] gaussian source requires a seed");

        if (!(cfg.horizon > 0.0)) throw_config("[scenario] horizon must be positive");
        if (cfg.time_steps < 2) throw_config("[scenario] time_steps must be >= 2");
    }

    if (cfg.kind == ScenarioKind::solve_linear || cfg.kind == ScenarioKind::solve_nlw ||
        cfg.kind == ScenarioKind::oracle_compare || cfg.kind == ScenarioKind::verify_strichartz ||
        cfg.kind == ScenarioKind::verify_dispersive) {
        if (!cfg.phi.present) throw_config("scenario requires a [phi] data block");
    }
    if (cfg.kind == ScenarioKind::solve_nlw) {
        if (!(cfg.nonlinearity.k > 1.0)) throw_config("[nonlinearity] k must be > 1");
    }
    if (cfg.kind == ScenarioKind::verify_dispersive) {
        const Exponent& p = cfg.dispersive.p;
        if (!p.inf && p.value < Rat(2)) throw_config("[dispersive] p must be in [2, inf]");
        if (!(cfg.dispersive.alpha >= 0.0 && cfg.dispersive.alpha < 1.0))
            throw_config("[dispersive] alpha must be in [0, 1)");
    }
    if (cfg.kind == ScenarioKind::check_admissible) {
        if (cfg.exponents.ns.empty() || cfg.exponents.qs.empty() || cfg.exponents.rs.empty())
            throw_config("check-admissible needs [exponents] ns, qs, rs scan lists");
    }
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
    Parser parser;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        const std::size_t hash = s.find('#');
        if (hash != std::string::npos) s = trim(s.substr(0, hash));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail_line(line, "malformed section header");
            section = trim(s.substr(1, s.size() - 2));
            if (section.empty()) fail_line(line, "empty section name");
            continue;
        }
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos) fail_line(line, "expected 'key = value'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail_line(line, "empty key");
        if (section.empty()) fail_line(line, "key outside any [section]");
        parser.handle(section, key, value, line);
    }
    validate_config(parser.cfg);
    return parser.cfg;
}

ScenarioConfig parse_config_file(const std::string& path) { return parse_config(read_file(path)); }

namespace {

std::string join_doubles(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += format_double(v[i]);
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out;
}

std::string join_complex(const std::vector<cplx>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += format_complex_literal(v[i]);
    }
    return out;
}

const char* data_type_name(DataConfig::Type t) {
    switch (t) {
        case DataConfig::Type::gaussian: return "gaussian";
        case DataConfig::Type::single_mode: return "single_mode";
        case DataConfig::Type::file: return "file";
    }
    return "gaussian";
}

void print_data(std::ostringstream& os, const char* name, const DataConfig& d) {
    if (!d.present) return;
    os << "[" << name << "]\n";
    os << "type = " << data_type_name(d.type) << "\n";
    if (d.seed) os << "seed = " << *d.seed << "\n";
    switch (d.type) {
        case DataConfig::Type::gaussian:
            os << "bumps = " << d.bumps << "\n";
            os << "width_min = " << format_double(d.width_min) << "\n";
            os << "width_max = " << format_double(d.width_max) << "\n";
            os << "amplitude = " << format_double(d.amplitude) << "\n";
            break;
        case DataConfig::Type::single_mode:
            os << "mode = " << join_ints(d.mode) << "\n";
            os << "component = " << d.component << "\n";
            os << "mode_amplitude = " << format_complex_literal(d.mode_amplitude) << "\n";
            break;
        case DataConfig::Type::file:
            os << "path = " << d.path << "\n";
            break;
    }
    os << "\n";
}

}  // namespace

std::string print_config(const ScenarioConfig& cfg) {
    std::ostringstream os;
    os << "[scenario]\n";
    os << "kind = " << scenario_kind_name(cfg.kind) << "\n";
    if (cfg.has_seed) os << "seed = " << cfg.seed << "\n";
    os << "horizon = " << format_double(cfg.horizon) << "\n";
    os << "time_steps = " << cfg.time_steps << "\n";
    os << "verify = " << (cfg.verify ? "true" : "false") << "\n";
    os << "condition_cap = " << format_double(cfg.condition_cap) << "\n\n";

    if (cfg.grid.dims > 0) {
        os << "[grid]\n";
        os << "dims = " << cfg.grid.dims << "\n";
        os << "points = " << join_ints(cfg.grid.points) << "\n";
        os << "box = " << join_doubles(cfg.grid.box) << "\n\n";

        os << "[operator]\n";
        switch (cfg.op.type) {
            case OperatorConfig::Type::inline_matrix:
                os << "type = inline\n";
                os << "hdim = " << cfg.op.hdim << "\n";
                os << "matrix = " << join_complex(cfg.op.matrix) << "\n";
                break;
            case OperatorConfig::Type::diagonal:
                os << "type = diagonal\n";
                os << "hdim = " << cfg.op.hdim << "\n";
                os << "diag = " << join_doubles(cfg.op.diag) << "\n";
                break;
            case OperatorConfig::Type::sturm_liouville:
                os << "type = sturm_liouville\n";
                os << "a = " << format_double(cfg.op.sl_a) << "\n";
                os << "c = " << format_double(cfg.op.sl_c) << "\n";
                os << "points = " << cfg.op.sl_points << "\n";
                break;
        }
        os << "\n";
    }

    if (!cfg.multipoint.lambdas.empty()) {
        os << "[multipoint]\n";
        os << "alphas = " << join_complex(cfg.multipoint.alphas) << "\n";
        os << "betas = " << join_complex(cfg.multipoint.betas) << "\n";
        os << "lambdas = " << join_doubles(cfg.multipoint.lambdas) << "\n";
        os << "half_source_term = " << (cfg.multipoint.half_source_term ? "true" : "false")
           << "\n\n";
    }

    print_data(os, "phi", cfg.phi);
    print_data(os, "psi", cfg.psi);

    if (cfg.source.type != SourceConfig::Type::none) {
        os << "[source]\n";
        os << "type = gaussian\n";
        if (cfg.source.seed) os << "seed = " << *cfg.source.seed << "\n";
        os << "bumps = " << cfg.source.bumps << "\n";
        os << "width_min = " << format_double(cfg.source.width_min) << "\n";
        os << "width_max = " << format_double(cfg.source.width_max) << "\n";
        os << "amplitude = " << format_double(cfg.source.amplitude) << "\n";
        os << "omega = " << format_double(cfg.source.omega) << "\n";
        if (cfg.source.time_steps > 0) os << "time_steps = " << cfg.source.time_steps << "\n";
        os << "\n";
    }

    if (cfg.kind == ScenarioKind::solve_nlw) {
        os << "[nonlinearity]\n";
        os << "kind = " << cfg.nonlinearity.kind << "\n";
        os << "lambda = " << format_double(cfg.nonlinearity.lambda) << "\n";
        os << "k = " << format_double(cfg.nonlinearity.k) << "\n\n";
        os << "[picard]\n";
        os << "max_iter = " << cfg.picard.max_iter << "\n";
        os << "tol = " << format_double(cfg.picard.tol) << "\n";
        os << "ball_radius = " << format_double(cfg.picard.ball_radius) << "\n";
        os << "holder_p = " << format_double(cfg.picard.holder_p) << "\n";
        os << "window = " << format_double(cfg.picard.window) << "\n";
        os << "gamma = " << cfg.picard.gamma.str() << "\n";
        os << "target_time = " << format_double(cfg.picard.target_time) << "\n\n";
    }

    if (cfg.kind == ScenarioKind::check_admissible || cfg.kind == ScenarioKind::verify_strichartz) {
        os << "[exponents]\n";
        os << "gamma = " << cfg.exponents.gamma.str() << "\n";
        os << "alpha = " << format_double(cfg.exponents.alpha) << "\n";
        os << "q = " << cfg.exponents.q.str() << "\n";
        os << "r = " << cfg.exponents.r.str() << "\n";
        os << "qt = " << cfg.exponents.qt.str() << "\n";
        os << "rt = " << cfg.exponents.rt.str() << "\n";
        if (!cfg.exponents.ns.empty()) os << "ns = " << join_ints(cfg.exponents.ns) << "\n";
        if (!cfg.exponents.qs.empty()) {
            os << "qs =";
            for (const auto& e : cfg.exponents.qs) os << " " << e.str();
            os << "\n";
        }
        if (!cfg.exponents.rs.empty()) {
            os << "rs =";
            for (const auto& e : cfg.exponents.rs) os << " " << e.str();
            os << "\n";
        }
        if (!cfg.exponents.local_existence_ns.empty())
            os << "local_existence_ns = " << join_ints(cfg.exponents.local_existence_ns) << "\n";
        os << "\n";
    }

    if (cfg.kind == ScenarioKind::verify_dispersive) {
        os << "[dispersive]\n";
        os << "alpha = " << format_double(cfg.dispersive.alpha) << "\n";
        os << "p = " << cfg.dispersive.p.str() << "\n";
        os << "t_min = " << format_double(cfg.dispersive.t_min) << "\n";
        os << "t_max = " << format_double(cfg.dispersive.t_max) << "\n";
        os << "samples = " << cfg.dispersive.samples << "\n\n";
    }

    if (cfg.kind == ScenarioKind::verify_strichartz) {
        os << "[strichartz]\n";
        os << "instances = " << cfg.strichartz.instances << "\n";
        os << "alphas = " << join_doubles(cfg.strichartz.alphas) << "\n";
        os << "refine_grid = " << (cfg.strichartz.refine_grid ? "true" : "false") << "\n";
        os << "refine_time = " << (cfg.strichartz.refine_time ? "true" : "false") << "\n\n";
    }

    if (cfg.kind == ScenarioKind::oracle_compare) {
        os << "[oracle]\n";
        os << "dt = " << format_double(cfg.oracle.dt) << "\n";
        os << "compare_steps = " << cfg.oracle.compare_steps << "\n\n";
    }

    os << "[output]\n";
    os << "dir = " << cfg.output.dir << "\n";
    os << "write_fields = " << (cfg.output.write_fields ? "true" : "false") << "\n";
    os << "write_series = " << (cfg.output.write_series ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace mw
