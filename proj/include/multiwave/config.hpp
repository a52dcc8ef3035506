#ifndef MULTIWAVE_CONFIG_HPP
#define MULTIWAVE_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multiwave/rational.hpp"
#include "multiwave/types.hpp"

namespace mw {

// Line-oriented `key = value` scenario configuration with `[section]`
// headers. Complex literals use the "a+bi" form; rationals "a/b" or "inf";
// lists are whitespace-separated. Parsing reports the first error with its
// line number.

enum class ScenarioKind {
    solve_linear,
    solve_nlw,
    check_admissible,
    verify_dispersive,
    verify_strichartz,
    oracle_compare,
};

const char* scenario_kind_name(ScenarioKind kind);
std::optional<ScenarioKind> scenario_kind_from_name(const std::string& name);

struct GridConfig {
    int dims{0};
    std::vector<int> points;
    std::vector<double> box;
};

struct OperatorConfig {
    enum class Type { inline_matrix, diagonal, sturm_liouville };
    Type type{Type::inline_matrix};
    int hdim{1};
    std::vector<cplx> matrix;   // row-major, inline_matrix
    std::vector<double> diag;   // diagonal
    double sl_a{1.0};           // sturm_liouville constant coefficients
    double sl_c{0.0};
    int sl_points{0};
};

struct MultipointConfig {
    std::vector<cplx> alphas;
    std::vector<cplx> betas;
    std::vector<double> lambdas;
    bool half_source_term{false};
};

struct DataConfig {
    enum class Type { gaussian, single_mode, file };
    Type type{Type::gaussian};
    std::optional<std::uint64_t> seed;  // required for gaussian
    int bumps{1};
    double width_min{1.0};
    double width_max{1.0};
    double amplitude{1.0};
    std::vector<int> mode;        // single_mode integer frequency
    int component{0};             // fiber index for single_mode
    cplx mode_amplitude{1.0, 0.0};
    std::string path;             // file
    bool present{false};
};

struct SourceConfig {
    enum class Type { none, gaussian };
    Type type{Type::none};
    std::optional<std::uint64_t> seed;
    int bumps{1};
    double width_min{1.0};
    double width_max{1.0};
    double amplitude{1.0};
    double omega{0.0};  // time envelope cos(omega t)
    int time_steps{0};  // 0 -> scenario time_steps
};

struct NonlinearityConfig {
    std::string kind{"scalar_power"};
    double lambda{0.0};
    double k{3.0};
};

struct PicardBlock {
    int max_iter{50};
    double tol{1e-10};
    double ball_radius{0.0};
    double holder_p{0.0};
    double window{0.0};
    Rat gamma{0};
    double target_time{0.0};  // > 0 -> continuation to this time
};

struct ExponentsConfig {
    Rat gamma{0};
    double alpha{0.0};
    Exponent q{Rat(6)};
    Exponent r{Rat(6)};
    Exponent qt{Rat(6)};
    Exponent rt{Rat(6)};
    std::vector<int> ns;           // check-admissible scan dimensions
    std::vector<Exponent> qs;      // scan values
    std::vector<Exponent> rs;
    std::vector<int> local_existence_ns;  // emit local-existence constants for these n
};

struct DispersiveConfig {
    double alpha{0.0};
    Exponent p{Exponent::infinity()};
    double t_min{1.0};
    double t_max{0.0};  // 0 -> min(L)/4 minus margin
    int samples{80};
};

struct StrichartzConfig {
    int instances{10};
    std::vector<double> alphas{0.0};
    bool refine_grid{false};
    bool refine_time{false};
};

struct OracleConfig {
    double dt{1e-3};
    int compare_steps{0};  // 0 -> scenario time_steps
};

struct OutputConfig {
    std::string dir{"."};
    bool write_fields{false};
    bool write_series{false};
};

struct ScenarioConfig {
    ScenarioKind kind{ScenarioKind::solve_linear};
    std::uint64_t seed{0};
    bool has_seed{false};
    double horizon{1.0};
    int time_steps{64};
    bool verify{false};
    double condition_cap{1e12};

    GridConfig grid;
    OperatorConfig op;
    MultipointConfig multipoint;
    DataConfig phi;
    DataConfig psi;
    SourceConfig source;
    NonlinearityConfig nonlinearity;
    PicardBlock picard;
    ExponentsConfig exponents;
    DispersiveConfig dispersive;
    StrichartzConfig strichartz;
    OracleConfig oracle;
    OutputConfig output;
};

// Parses and fully validates; throws Error(ErrorCode::config) carrying the
// first offending line number in the message.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig parse_config_file(const std::string& path);

// Canonical printer; parse(print_config(c)) reproduces c.
std::string print_config(const ScenarioConfig& config);

cplx parse_complex(const std::string& text);  // "a+bi" / "a-bi" / "a" / "bi"
std::string format_complex_literal(cplx v);

}  // namespace mw

#endif
