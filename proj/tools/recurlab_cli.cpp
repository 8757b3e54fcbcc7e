// Command-line front end: one subcommand per module experiment, CSV or JSON
// out, deterministic for a fixed seed. See README.md for the file schemas and
// the config-file format (CLI11 key=value sections).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "recurlab/circle.hpp"
#include "recurlab/detect.hpp"
#include "recurlab/funcalg.hpp"
#include "recurlab/hardy.hpp"
#include "recurlab/lacunary.hpp"
#include "recurlab/mobius.hpp"
#include "recurlab/omega.hpp"
#include "recurlab/suite.hpp"

namespace rl = recurlab;
using cplx = std::complex<double>;
using nlohmann::json;

namespace {

std::string fmt17(double v) {
    char b[48];
    std::snprintf(b, sizeof b, "%.17g", v);
    return b;
}

// "re,im" or a bare real
cplx parse_complex(const std::string& s) {
    const auto comma = s.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(s), 0.0};
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a complex number as 're,im', got '" + s + "'");
    }
}

rl::circle::rat parse_rational(const std::string& s) {
    try {
        return rl::circle::rat(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected a rational as 'p/q', got '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

// Map strings shared by `mobius classify` and `algebra comp`:
//   coeffs:are,aim,bre,bim,cre,cim,dre,dim
//   family:<n>              (parabolic member, parameter from --a)
//   family:are,aim:<n>
//   rotation:p/q            (z -> exp(2 pi i p/q) z)
rl::mobius::MobiusMap parse_map_spec(const std::string& spec, cplx family_a) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("map spec needs a 'kind:' prefix, got '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (kind == "coeffs") {
        const std::vector<std::string> parts = split(rest, ',');
        if (parts.size() != 8)
            throw CLI::ValidationError("coeffs spec needs 8 numbers, got " +
                                       std::to_string(parts.size()));
        try {
            return rl::mobius::make_map({std::stod(parts[0]), std::stod(parts[1])},
                                        {std::stod(parts[2]), std::stod(parts[3])},
                                        {std::stod(parts[4]), std::stod(parts[5])},
                                        {std::stod(parts[6]), std::stod(parts[7])});
        } catch (const CLI::Error&) {
            throw;
        } catch (const std::exception& e) {
            throw CLI::ValidationError(std::string("bad coeffs spec: ") + e.what());
        }
    }
    if (kind == "family") {
        const std::vector<std::string> parts = split(rest, ':');
        try {
            if (parts.size() == 1)
                return rl::mobius::parabolic_family({family_a, std::stoll(parts[0])});
            if (parts.size() == 2)
                return rl::mobius::parabolic_family(
                    {parse_complex(parts[0]), std::stoll(parts[1])});
        } catch (const CLI::Error&) {
            throw;
        } catch (const std::exception& e) {
            throw CLI::ValidationError(std::string("bad family spec: ") + e.what());
        }
        throw CLI::ValidationError("family spec is 'family:<n>' or 'family:are,aim:<n>'");
    }
    if (kind == "rotation") {
        const rl::circle::rat pq = parse_rational(rest);
        const double ang = rl::suite::kTwoPi * rl::circle::to_double(pq);
        return rl::mobius::make_map(std::polar(1.0, ang), 0.0, 0.0, 1.0);
    }
    throw CLI::ValidationError("unknown map spec kind '" + kind + "'");
}

// output helper: path empty means stdout
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

Eigen::MatrixXcd read_matrix_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j = json::parse(in);
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
        throw std::runtime_error(path + ": expected {\"rows\": [[[re,im],...],...]}");
    const auto& rows = j["rows"];
    const std::size_t n = rows.size();
    const std::size_t m = rows[0].size();
    Eigen::MatrixXcd A(static_cast<long>(n), static_cast<long>(m));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != m) throw std::runtime_error(path + ": ragged rows");
        for (std::size_t k = 0; k < m; ++k) {
            const auto& e = rows[i][k];
            if (!e.is_array() || e.size() != 2)
                throw std::runtime_error(path + ": entries must be [re,im]");
            A(static_cast<long>(i), static_cast<long>(k)) =
                cplx{e[0].get<double>(), e[1].get<double>()};
        }
    }
    return A;
}

Eigen::VectorXcd read_vector_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j = json::parse(in);
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
        throw std::runtime_error(path + ": expected {\"rows\": [[re,im],...]}");
    const auto& rows = j["rows"];
    Eigen::VectorXcd v(static_cast<long>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& e = rows[i];
        if (!e.is_array() || e.size() != 2)
            throw std::runtime_error(path + ": entries must be [re,im]");
        v(static_cast<long>(i)) = cplx{e[0].get<double>(), e[1].get<double>()};
    }
    return v;
}

rl::omega::RowFiniteMatrix read_sparse_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j = json::parse(in);
    if (!j.contains("nrows") || !j.contains("entries") || !j["entries"].is_array())
        throw std::runtime_error(
            path + ": expected {\"nrows\": N, \"entries\": [{\"i\",\"j\",\"re\",\"im\"},...]}");
    std::vector<std::tuple<long long, long long, cplx>> entries;
    for (const auto& e : j["entries"]) {
        if (!e.contains("i") || !e.contains("j") || !e.contains("re") || !e.contains("im"))
            throw std::runtime_error(path + ": entry missing one of i/j/re/im");
        entries.emplace_back(e["i"].get<long long>(), e["j"].get<long long>(),
                             cplx{e["re"].get<double>(), e["im"].get<double>()});
    }
    return rl::omega::RowFiniteMatrix::from_entries(j["nrows"].get<long long>(), entries);
}

// ---------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------

int run_mobius_classify(const std::string& a_str, const std::string& map_spec,
                        const std::string& out_path) {
    const rl::mobius::MobiusMap m = parse_map_spec(map_spec, parse_complex(a_str));
    const rl::mobius::MapClass cls = rl::mobius::classify(m);
    json j;
    j["tag"] = rl::mobius::to_string(cls.tag);
    j["fixed_points"] = json::array();
    for (const cplx& z : cls.fixed_points) j["fixed_points"].push_back(complex_json(z));
    if (cls.fixes_infinity) j["fixed_points"].push_back("infinity");
    j["denjoy_wolff"] = cls.denjoy_wolff ? complex_json(*cls.denjoy_wolff) : json(nullptr);
    emit(out_path, j.dump(2) + "\n");
    return 0;
}

int run_hardy_scan(const std::string& a_str, double nu, int kmax, long long horizon,
                   const std::string& out_path) {
    const cplx a = parse_complex(a_str);
    rl::mobius::check_param({a, 1});
    if (kmax < 1 || horizon < 1) throw std::runtime_error("kmax and horizon must be >= 1");
    std::ostringstream csv;
    csv << "n,m,value_re,value_im,bound\n";
    for (int m = 1; m <= kmax; ++m) {
        const double expo = (1.0 - 2.0 * nu - 2.0 * m) / 2.0;
        std::vector<cplx> vals;
        double fitted = 0.0;
        for (long long n = 1; n <= horizon; ++n) {
            const cplx v = rl::mobius::derivative_at_zero({a, n}, m);
            vals.push_back(v);
            fitted = std::max(fitted,
                              std::abs(v) / std::pow(static_cast<double>(n) * a.real(), expo));
        }
        for (long long n = 1; n <= horizon; ++n) {
            const cplx v = vals[static_cast<std::size_t>(n - 1)];
            const double bound = fitted * std::pow(static_cast<double>(n) * a.real(), expo);
            csv << n << "," << m << "," << fmt17(v.real()) << "," << fmt17(v.imag()) << ","
                << fmt17(bound) << "\n";
        }
    }
    emit(out_path, csv.str());
    return 0;
}

int run_detect_scan(const std::string& op_path, const std::string& vec_path, long long horizon,
                    double tol, const std::string& norm_name, const std::string& out_path) {
    const Eigen::MatrixXcd T = read_matrix_json(op_path);
    const Eigen::VectorXcd x = read_vector_json(vec_path);
    rl::detect::NormSpec spec;
    if (norm_name == "euclidean")
        spec.kind = rl::detect::NormKind::euclidean_weighted;
    else if (norm_name == "sup")
        spec.kind = rl::detect::NormKind::sup;
    else if (norm_name == "metric")
        spec.kind = rl::detect::NormKind::product_metric;
    else
        throw std::runtime_error("unknown norm '" + norm_name + "'");
    const rl::detect::RecurrenceCertificate cert =
        rl::detect::recurrence_search(T, x, horizon, tol, spec);
    std::ostringstream csv;
    csv << "n,residual\n";
    for (std::size_t i = 0; i < cert.improving_ns.size(); ++i)
        csv << cert.improving_ns[i] << "," << fmt17(cert.improving_residuals[i]) << "\n";
    emit(out_path, csv.str());
    std::cerr << (cert.found ? "found n=" + std::to_string(cert.n) +
                                   " residual=" + fmt17(cert.residual)
                             : "not found; min residual " + fmt17(cert.min_residual) + " at n=" +
                                   std::to_string(cert.argmin))
              << "\n";
    return 0;
}

int run_omega_decide(const std::string& matrix_path, long long window, double eps,
                     long long horizon, const std::string& out_path) {
    const rl::omega::RowFiniteMatrix A = read_sparse_json(matrix_path);
    const rl::omega::DecideReport rep =
        rl::omega::recurrence_decide_lower_triangular(A, window, eps, horizon);
    json j;
    j["verdict"] = rl::to_string(rep.verdict);
    j["n"] = rep.n;
    j["diag_residual"] = rep.diag_residual;
    j["max_raw_residual"] = rep.max_raw_residual;
    j["raw_residuals"] = rep.raw_residuals;
    j["reason"] = rep.reason;
    if (rep.witness) {
        j["witness"] = {{"row", rep.witness->row}, {"w", complex_json(rep.witness->w)}};
    }
    emit(out_path, j.dump(2) + "\n");
    return 0;
}

int run_circle_cantor(const std::string& c_str, int level, const std::string& delta_str,
                      long long horizon, const std::string& out_path) {
    using rl::circle::rat;
    const rat c = parse_rational(c_str);
    const rat delta = parse_rational(delta_str);
    const rl::circle::StaircaseMap sm = rl::circle::staircase_map(c, level);
    json j;
    j["c"] = rl::circle::to_string(c);
    j["level"] = level;
    j["piece_length"] = rl::circle::to_string(sm.fc.piece_length);
    j["level_identity"] = {{"lhs", rl::circle::to_string(sm.fc.level_identity_lhs)},
                           {"rhs", rl::circle::to_string(sm.fc.level_identity_rhs)}};
    j["remaining"] = json::array();
    for (const rl::circle::Arc& a : sm.fc.remaining)
        j["remaining"].push_back(
            {rl::circle::to_string(a.lo), rl::circle::to_string(a.hi)});
    j["removed"] = json::array();
    for (const auto& level_arcs : sm.fc.removed) {
        json lv = json::array();
        for (const rl::circle::Arc& a : level_arcs)
            lv.push_back({rl::circle::to_string(a.lo), rl::circle::to_string(a.hi)});
        j["removed"].push_back(lv);
    }
    if (horizon >= 1) {
        const rl::circle::NonReturnReport rep =
            rl::circle::multiplier_nonreturn(sm, delta, horizon);
        json masses = json::array();
        for (std::size_t i = 0; i < rep.escaping.size(); ++i)
            masses.push_back({{"n", i + 1}, {"mass", rl::circle::to_string(rep.escaping[i])}});
        j["nonreturn"] = {{"delta", rl::circle::to_string(delta)},
                          {"min_mass", rl::circle::to_string(rep.min_mass)},
                          {"argmin", rep.argmin},
                          {"escaping", masses}};
    }
    emit(out_path, j.dump(2) + "\n");
    return 0;
}

int run_lacunary_build(double nu, const std::string& eps_str, int terms,
                       const std::string& out_path) {
    const double eps = rl::circle::to_double(parse_rational(eps_str));
    const std::vector<long long> ms = rl::lacunary::select_exponents(nu, eps, terms);
    std::ostringstream csv;
    csv << "p,m,coefficient,ln_r_lo,ln_r_hi,floor_bound,min_abs,ok\n";
    for (int p = 1; p <= terms; ++p) {
        const rl::lacunary::AnnulusAudit au = rl::lacunary::annulus_audit(ms, nu, p, 64, 64);
        csv << p << "," << ms[static_cast<std::size_t>(p - 1)] << ","
            << fmt17(rl::lacunary::coefficient(ms[static_cast<std::size_t>(p - 1)], nu)) << ","
            << fmt17(au.ln_r_lo) << "," << fmt17(au.ln_r_hi) << "," << fmt17(au.floor_bound)
            << "," << fmt17(au.min_abs) << "," << (au.ok ? 1 : 0) << "\n";
    }
    emit(out_path, csv.str());
    return 0;
}

int run_algebra_decide(const std::string& values_str, double eps, long long horizon,
                       const std::string& out_path) {
    rl::funcalg::AlgebraElement a;
    for (const std::string& part : split(values_str, ';'))
        if (!part.empty()) a.values.push_back(parse_complex(part));
    if (a.values.empty()) throw std::runtime_error("--values is empty");
    const rl::funcalg::RecurrenceReport rep = rl::funcalg::mult_recurrence_decide(a, eps, horizon);
    // strictly improving residual record up to the decision point
    std::ostringstream csv;
    csv << "n,residual\n";
    if (rep.nonunimodular_gap == 0.0) {
        const long long stop = rep.verdict == rl::Verdict::Recurrent ? rep.n : horizon;
        double best = std::numeric_limits<double>::infinity();
        for (long long n = 1; n <= stop; ++n) {
            const double r = rl::funcalg::return_residual(a, n);
            if (r < best) {
                best = r;
                csv << n << "," << fmt17(r) << "\n";
            }
        }
    }
    emit(out_path, csv.str());
    std::cerr << "verdict=" << rl::to_string(rep.verdict)
              << (rep.verdict == rl::Verdict::Recurrent
                      ? " n=" + std::to_string(rep.n) + " residual=" + fmt17(rep.residual)
                      : std::string())
              << (rep.reason.empty() ? "" : " (" + rep.reason + ")") << "\n";
    return 0;
}

int run_algebra_comp(const std::string& map_spec, long long horizon,
                     const std::string& out_path) {
    const rl::mobius::MobiusMap m = parse_map_spec(map_spec, cplx{1.0, 0.0});
    if (horizon < 1) throw std::runtime_error("horizon must be >= 1");
    std::ostringstream csv;
    csv << "n,residual,lower_bound\n";
    for (long long n = 1; n <= horizon; ++n) {
        const rl::funcalg::CompositionResidual cr = rl::funcalg::composition_residual(m, n);
        if (!std::isfinite(cr.residual)) {
            std::cerr << "iterate coefficients overflowed at n=" << n << "; stopping\n";
            break;
        }
        csv << n << "," << fmt17(cr.residual) << "," << fmt17(cr.lower_bound) << "\n";
    }
    emit(out_path, csv.str());
    return 0;
}

int run_paper_suite(std::uint64_t seed, const std::string& format, const std::string& out_path) {
    const std::vector<rl::suite::CriterionResult> rows = rl::suite::run_all(seed);
    std::ostringstream os;
    bool all_pass = true;
    if (format == "csv") {
        os << "id,pass,title,detail\n";
        for (const auto& r : rows) {
            std::string detail = r.detail;
            for (char& ch : detail)
                if (ch == ',') ch = ';';
            os << r.id << "," << (r.pass ? 1 : 0) << "," << r.title << "," << detail << "\n";
            all_pass = all_pass && r.pass;
        }
    } else {
        for (const auto& r : rows) {
            os << rl::suite::format_row(r) << "\n";
            all_pass = all_pass && r.pass;
        }
        os << (all_pass ? "all checks passed" : "SOME CHECKS FAILED") << " (seed " << seed
           << ")\n";
    }
    emit(out_path, os.str());
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recurrence toolbox: operators that come back, and ones that cannot"};
    app.set_config("--config", "", "read options from a key=value config file");
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--output", out_path, "write results to this file instead of stdout")
        ->capture_default_str();

    // mobius classify
    auto* mob = app.add_subcommand("mobius", "linear fractional maps");
    mob->require_subcommand(1);
    auto* mob_cls = mob->add_subcommand("classify", "classify a self-map of the disk");
    std::string mob_a = "1,0";
    std::string mob_map;
    mob_cls->add_option("--a", mob_a, "family parameter re,im (used by family:<n> specs)")
        ->capture_default_str();
    mob_cls->add_option("--map", mob_map,
                        "map spec: coeffs:..., family:<n>, family:are,aim:<n>, rotation:p/q")
        ->required();

    // hardy parabolic-scan
    auto* har = app.add_subcommand("hardy", "weighted coefficient spaces");
    har->require_subcommand(1);
    auto* har_scan = har->add_subcommand("parabolic-scan",
                                         "origin derivatives along the family with decay envelopes");
    std::string har_a = "1,0";
    double har_nu = -0.25;
    int har_kmax = 3;
    long long har_horizon = 100;
    har_scan->add_option("--a", har_a, "family parameter re,im")->capture_default_str();
    har_scan->add_option("--nu", har_nu, "weight exponent")->capture_default_str();
    har_scan->add_option("--kmax", har_kmax, "highest derivative order")->capture_default_str();
    har_scan->add_option("--horizon", har_horizon, "largest family index n")
        ->capture_default_str();

    // detect scan
    auto* det = app.add_subcommand("detect", "finite-dimensional recurrence search");
    det->require_subcommand(1);
    auto* det_scan = det->add_subcommand("scan", "residuals of T^n x against x");
    std::string det_op, det_vec, det_norm = "euclidean";
    long long det_horizon = 10000;
    double det_tol = 1e-6;
    det_scan->add_option("--op", det_op, "operator matrix JSON {\"rows\":[[[re,im],...],...]}")
        ->required();
    det_scan->add_option("--vec", det_vec, "vector JSON {\"rows\":[[re,im],...]}")->required();
    det_scan->add_option("--horizon", det_horizon, "search horizon")->capture_default_str();
    det_scan->add_option("--tol", det_tol, "success threshold")->capture_default_str();
    det_scan->add_option("--norm", det_norm, "euclidean | sup | metric")->capture_default_str();

    // omega decide
    auto* ome = app.add_subcommand("omega", "row-finite operators on all sequences");
    ome->require_subcommand(1);
    auto* ome_dec = ome->add_subcommand("decide", "decide recurrence of a triangular window");
    std::string ome_matrix;
    long long ome_window = 4, ome_horizon = 1000000;
    double ome_eps = 0.05;
    ome_dec->add_option("--matrix", ome_matrix,
                        "sparse JSON {\"nrows\":N,\"entries\":[{\"i\",\"j\",\"re\",\"im\"},...]}")
        ->required();
    ome_dec->add_option("--window", ome_window, "leading window size")->capture_default_str();
    ome_dec->add_option("--eps", ome_eps, "return threshold")->capture_default_str();
    ome_dec->add_option("--horizon", ome_horizon, "search horizon")->capture_default_str();

    // circle cantor
    auto* cir = app.add_subcommand("circle", "exact rational circle sets");
    cir->require_subcommand(1);
    auto* cir_can = cir->add_subcommand("cantor", "fat Cantor staircase and its multiplier");
    std::string cir_c = "1/2", cir_delta = "1/8";
    int cir_level = 4;
    long long cir_horizon = 100;
    cir_can->add_option("--c", cir_c, "removed mass parameter p/q in (0,1)")
        ->capture_default_str();
    cir_can->add_option("--level", cir_level, "construction depth")->capture_default_str();
    cir_can->add_option("--delta", cir_delta, "non-return distance p/q in (0,1/2)")
        ->capture_default_str();
    cir_can->add_option("--horizon", cir_horizon,
                        "multiplier indices to audit (0 skips the audit)")
        ->capture_default_str();

    // lacunary build
    auto* lac = app.add_subcommand("lacunary", "sparse series with annulus floors");
    lac->require_subcommand(1);
    auto* lac_build = lac->add_subcommand("build", "select exponents and audit the floors");
    double lac_nu = 1.0;
    std::string lac_eps = "1/5";
    int lac_terms = 4;
    lac_build->add_option("--nu", lac_nu, "coefficient exponent (> 0)")->capture_default_str();
    lac_build->add_option("--eps", lac_eps, "geometric slack p/q in (0,1)")
        ->capture_default_str();
    lac_build->add_option("--terms", lac_terms, "number of exponents")->capture_default_str();

    // algebra decide / comp
    auto* alg = app.add_subcommand("algebra", "multiplicative recurrence in the finite model");
    alg->require_subcommand(1);
    auto* alg_dec = alg->add_subcommand("decide", "decide returns of a value tuple");
    std::string alg_values;
    double alg_eps = 0.05;
    long long alg_horizon = 1000000;
    alg_dec->add_option("--values", alg_values, "semicolon-separated re,im values")
        ->required();
    alg_dec->add_option("--eps", alg_eps, "return threshold")->capture_default_str();
    alg_dec->add_option("--horizon", alg_horizon, "search horizon")->capture_default_str();
    auto* alg_comp = alg->add_subcommand("comp", "boundary sup residuals of a composition symbol");
    std::string alg_map;
    long long alg_comp_horizon = 100;
    alg_comp->add_option("--map", alg_map, "map spec (see mobius classify)")->required();
    alg_comp->add_option("--horizon", alg_comp_horizon, "iterations")->capture_default_str();

    // paper-suite
    auto* suite_cmd = app.add_subcommand("paper-suite", "run every acceptance check");
    std::uint64_t suite_seed = 1;
    std::string suite_format = "table";
    suite_cmd->add_option("--seed", suite_seed, "seed for the randomized instances")
        ->capture_default_str();
    suite_cmd->add_option("--format", suite_format, "table | csv")
        ->capture_default_str()
        ->check(CLI::IsMember({"table", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (mob_cls->parsed()) return run_mobius_classify(mob_a, mob_map, out_path);
        if (har_scan->parsed())
            return run_hardy_scan(har_a, har_nu, har_kmax, har_horizon, out_path);
        if (det_scan->parsed())
            return run_detect_scan(det_op, det_vec, det_horizon, det_tol, det_norm, out_path);
        if (ome_dec->parsed())
            return run_omega_decide(ome_matrix, ome_window, ome_eps, ome_horizon, out_path);
        if (cir_can->parsed())
            return run_circle_cantor(cir_c, cir_level, cir_delta, cir_horizon, out_path);
        if (lac_build->parsed()) return run_lacunary_build(lac_nu, lac_eps, lac_terms, out_path);
        if (alg_dec->parsed())
            return run_algebra_decide(alg_values, alg_eps, alg_horizon, out_path);
        if (alg_comp->parsed()) return run_algebra_comp(alg_map, alg_comp_horizon, out_path);
        if (suite_cmd->parsed()) return run_paper_suite(suite_seed, suite_format, out_path);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
