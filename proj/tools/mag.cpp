// Command-line front end: reference tables, verification suites, and scenario
// runs from JSON configs.  Exit codes: 0 success, 2 usage/config error,
// 3 numeric failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mag/observatory.hpp"
#include "mag/transport.hpp"
#include "mag/verify.hpp"

using json = nlohmann::ordered_json;
using namespace mag;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json quantity(double value, const char* unit) {
    return json{{"value", value}, {"unit", unit}};
}

json constants_block() {
    return json{{"G", quantity(constants::G, "cm^3 g^-1 s^-2")},
                {"c", quantity(constants::c, "cm/s")},
                {"M_sun", quantity(constants::M_sun, "g")}};
}

// ---------------------------------------------------------------------------
// Reference dataset: the five central-body tables the code reproduces.

struct DelayRow {
    const char* name;
    double mass;       // g
    double radius;     // cm (0: derived from the period)
    double period;     // s
    double printed_dt; // s, reference value
};

struct DelayTable {
    const char* id;
    const char* caption;
    std::vector<DelayRow> rows;
};

struct DopplerTable {
    const char* id;
    const char* caption;
    double mass;   // g
    double r_peri; // cm
    double r_apo;  // cm
    double lambda_emit;                       // cm
    double printed_V_peri, printed_V_apo;     // cm/s
    double printed_ratio_peri, printed_ratio_apo;
    double printed_lambda_peri, printed_lambda_apo; // cm
    double printed_dlambda;                   // cm
};

const DelayTable kSunTable = {
    "7.3.1",
    "Sun as central body: per-revolution clock gap of an orbiting observer",
    {{"Earth", 1.989e33, 1.495985e13, 365.257 * constants::day, 0.15575},
     {"Mercury", 1.989e33, 5.791e12, 58.6462 * constants::day, 0.14536}}};

const DelayTable kEarthTable = {
    "7.3.2",
    "Earth as central body: per-revolution clock gap of an orbiting observer",
    {{"spaceship", 5.977e27, 6.916e8, 95.6 * constants::minute, 1.8318e-6},
     {"Moon", 5.977e27, 3.84e10, 27.32 * constants::day, 1.372e-5}}};

// Galactic-centre table: the orbit radius is derived from the period via
// Kepler's third law; the quoted distances are kept for the diagnostic column
// (the second one is inconsistent with its own period and delay).
struct GalacticRow {
    const char* name;
    double mass;             // g
    double quoted_distance;  // cm
    double period;           // s
    double printed_dt;       // s
};

const std::vector<GalacticRow> kGalacticRows = {
    {"M = 4.1e6 M_sun", 4.1e6 * constants::M_sun, 1.4692e16, 15.2 * constants::year,
     164.7295 * constants::minute},
    {"M = 3.7e6 M_sun", 3.7e6 * constants::M_sun, 1.1565e16, 15.2 * constants::year,
     153.8326 * constants::minute}};

const DopplerTable kDoppler41 = {
    "7.4.1",
    "Doppler shift of a wave emitted from the S2 orbit, central mass 4.1e6 M_sun",
    4.1e6 * constants::M_sun, 1.868e15, 2.769e16, 2.1661 * constants::micron,
    738767495.4, 49839993.28, 1.000628, 1.0000232,
    2.16474 * constants::micron, 2.166049 * constants::micron,
    13.098 * constants::angstrom};

const DopplerTable kDoppler42 = {
    "7.4.2",
    "Doppler shift of a wave emitted from the S2 orbit, central mass 3.7e6 M_sun",
    3.7e6 * constants::M_sun, 1.805e15, 2.676e16, 2.1661 * constants::micron,
    713915922.3, 48163414.05, 1.000587, 1.00002171,
    2.16483 * constants::micron, 2.166052 * constants::micron,
    12.232 * constants::angstrom};

double rel_delta(double computed, double reference) {
    return (computed - reference) / reference;
}

json delay_table_doc(const DelayTable& table) {
    json rows = json::array();
    for (const DelayRow& row : table.rows) {
        OrbitScenario sc;
        sc.mass = row.mass;
        sc.radius = row.radius;
        sc.period = row.period;
        DelayResult given = time_delay(sc);
        sc.radius = 0.0; // alternate path: radius from Kepler's third law
        DelayResult kepler = time_delay(sc);
        rows.push_back(
            {{"name", row.name},
             {"mass", quantity(row.mass, "g")},
             {"radius", quantity(row.radius, "cm")},
             {"period", quantity(row.period, "s")},
             {"dt_computed", quantity(given.dt, "s")},
             {"dt_reference", quantity(row.printed_dt, "s")},
             {"rel_delta", rel_delta(given.dt, row.printed_dt)},
             {"dt_kepler_radius", quantity(kepler.dt, "s")},
             {"radius_source", "given"}});
    }
    return json{{"table", table.id},
                {"caption", table.caption},
                {"rows", rows},
                {"provenance", {{"constants", constants_block()}}}};
}

json galactic_table_doc() {
    json rows = json::array();
    for (const GalacticRow& row : kGalacticRows) {
        OrbitScenario sc;
        sc.mass = row.mass;
        sc.period = row.period;
        DelayResult kepler = time_delay(sc); // radius derived from the period
        sc.radius = row.quoted_distance;
        DelayResult quoted = time_delay(sc);
        rows.push_back(
            {{"name", row.name},
             {"mass", quantity(row.mass, "g")},
             {"period", quantity(row.period, "s")},
             {"radius_kepler", quantity(kepler.radius, "cm")},
             {"radius_quoted", quantity(row.quoted_distance, "cm")},
             {"dt_computed", quantity(kepler.dt, "s")},
             {"dt_reference", quantity(row.printed_dt, "s")},
             {"rel_delta", rel_delta(kepler.dt, row.printed_dt)},
             {"dt_quoted_distance", quantity(quoted.dt, "s")},
             {"rel_delta_quoted_distance", rel_delta(quoted.dt, row.printed_dt)},
             {"radius_source", "kepler"}});
    }
    return json{{"table", "7.3.3"},
                {"caption", "Galactic-centre black hole as central body, S2 as satellite"},
                {"rows", rows},
                {"provenance",
                 {{"constants", constants_block()},
                  {"note", "radius derived from the period; the quoted distance of the "
                           "second column is inconsistent with its period and delay"}}}};
}

json doppler_table_doc(const DopplerTable& table) {
    OrbitScenario sc;
    sc.mass = table.mass;
    sc.r_peri = table.r_peri;
    sc.r_apo = table.r_apo;
    sc.lambda_emit = table.lambda_emit;
    DopplerResult d = s2_doppler(sc);
    auto row = [&](const char* name, double r, double V, double printed_V, double ratio,
                   double printed_ratio, double lambda, double printed_lambda) {
        return json{{"name", name},
                    {"distance", quantity(r, "cm")},
                    {"speed_computed", quantity(V, "cm/s")},
                    {"speed_reference", quantity(printed_V, "cm/s")},
                    {"speed_rel_delta", rel_delta(V, printed_V)},
                    {"ratio_computed", ratio},
                    {"ratio_reference", printed_ratio},
                    {"ratio_delta", ratio - printed_ratio},
                    {"lambda_obs_computed", quantity(lambda / constants::micron, "um")},
                    {"lambda_obs_reference",
                     quantity(printed_lambda / constants::micron, "um")}};
    };
    json rows = json::array();
    rows.push_back(row("pericentre", table.r_peri, d.V_peri, table.printed_V_peri,
                       d.ratio_peri, table.printed_ratio_peri, d.lambda_peri,
                       table.printed_lambda_peri));
    rows.push_back(row("apocentre", table.r_apo, d.V_apo, table.printed_V_apo,
                       d.ratio_apo, table.printed_ratio_apo, d.lambda_apo,
                       table.printed_lambda_apo));
    return json{{"table", table.id},
                {"caption", table.caption},
                {"lambda_emit", quantity(table.lambda_emit / constants::micron, "um")},
                {"rows", rows},
                {"dlambda_computed", quantity(d.dlambda / constants::angstrom, "Angstrom")},
                {"dlambda_reference",
                 quantity(table.printed_dlambda / constants::angstrom, "Angstrom")},
                {"dlambda_rel_delta", rel_delta(d.dlambda, table.printed_dlambda)},
                {"provenance", {{"constants", constants_block()}}}};
}

json table_doc(const std::string& id) {
    if (id == "7.3.1") return delay_table_doc(kSunTable);
    if (id == "7.3.2") return delay_table_doc(kEarthTable);
    if (id == "7.3.3") return galactic_table_doc();
    if (id == "7.4.1") return doppler_table_doc(kDoppler41);
    if (id == "7.4.2") return doppler_table_doc(kDoppler42);
    throw UsageError("unknown table id '" + id +
                     "' (expected 7.3.1, 7.3.2, 7.3.3, 7.4.1, 7.4.2)");
}

// ---------------------------------------------------------------------------
// Output formatting.

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string quantity_str(const json& q) {
    if (q.is_object() && q.contains("unit"))
        return fmt(q["value"].get<double>()) + " " + q["unit"].get<std::string>();
    if (q.is_number()) return fmt(q.get<double>());
    return q.dump();
}

void print_human(const json& doc, std::ostream& os) {
    if (doc.contains("caption"))
        os << "Table " << doc["table"].get<std::string>() << ": "
           << doc["caption"].get<std::string>() << "\n";
    for (const auto& [key, value] : doc.items()) {
        if (key == "table" || key == "caption" || key == "rows" || key == "provenance")
            continue;
        os << "  " << key << " = " << quantity_str(value) << "\n";
    }
    if (!doc.contains("rows")) return;
    for (const auto& row : doc["rows"]) {
        os << "  " << row["name"].get<std::string>() << "\n";
        for (const auto& [key, value] : row.items()) {
            if (key == "name") continue;
            os << "    " << key << " = " << quantity_str(value) << "\n";
        }
    }
}

void print_csv(const json& doc, std::ostream& os) {
    if (!doc.contains("rows")) {
        os << "key,value,unit\n";
        for (const auto& [key, value] : doc.items()) {
            if (key == "provenance" || key == "inputs") continue;
            if (value.is_object() && value.contains("unit"))
                os << key << "," << fmt(value["value"].get<double>()) << ","
                   << value["unit"].get<std::string>() << "\n";
            else if (value.is_number())
                os << key << "," << fmt(value.get<double>()) << ",\n";
            else if (value.is_string())
                os << key << "," << value.get<std::string>() << ",\n";
        }
        return;
    }
    const json& rows = doc["rows"];
    std::vector<std::string> cols;
    for (const auto& [key, value] : rows.front().items()) cols.push_back(key);
    for (std::size_t i = 0; i < cols.size(); ++i)
        os << cols[i] << (i + 1 < cols.size() ? "," : "\n");
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const json& v = row[cols[i]];
            if (v.is_object() && v.contains("unit"))
                os << fmt(v["value"].get<double>());
            else if (v.is_number())
                os << fmt(v.get<double>());
            else
                os << v.get<std::string>();
            os << (i + 1 < cols.size() ? "," : "\n");
        }
    }
}

void emit(const json& doc, const std::string& format, const std::string& out_path) {
    std::ostringstream buf;
    if (format == "json")
        buf << doc.dump(2) << "\n";
    else if (format == "csv")
        print_csv(doc, buf);
    else if (format == "human")
        print_human(doc, buf);
    else
        throw UsageError("unknown format '" + format + "' (expected human, json, csv)");
    if (out_path.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot open output file '" + out_path + "'");
        f << buf.str();
    }
}

// ---------------------------------------------------------------------------
// verify subcommand.

int cmd_verify(const std::string& suite, std::uint64_t seed, std::optional<double> tol) {
    std::vector<SuiteReport> reports;
    if (suite == "identities" || suite == "all") {
        double tol_fd = tol.value_or(1e-6);
        double tol_an = tol.value_or(1e-9);
        reports.push_back(verify_identities(seed, 100, tol_fd, tol_an));
    }
    if (suite == "transport" || suite == "all") reports.push_back(verify_transport(seed));
    if (suite == "frames" || suite == "all") reports.push_back(verify_frames(seed));
    if (reports.empty())
        throw UsageError("unknown suite '" + suite +
                         "' (expected identities, transport, frames, all)");
    bool ok = true;
    for (const SuiteReport& r : reports) {
        std::printf("suite %-10s seed %llu\n", r.suite.c_str(),
                    static_cast<unsigned long long>(r.seed));
        for (const CheckResult& c : r.checks) {
            std::printf("  %-52s max residual %12.4e  tol %8.1e  %s\n", c.name.c_str(),
                        c.residual, c.tolerance, c.pass ? "pass" : "FAIL");
            ok = ok && c.pass;
        }
    }
    std::printf("%s\n", ok ? "all checks passed" : "FAILURES present");
    return ok ? kExitOk : kExitNumeric;
}

// ---------------------------------------------------------------------------
// run subcommand: JSON config describing one operation.

[[noreturn]] void reject_key(const std::string& path) {
    throw UsageError("config error at '" + path + "': unknown key");
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) reject_key(path + "/" + key);
    }
}

double need_number(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key) || !obj[key].is_number())
        throw UsageError("config error at '" + path + "/" + key +
                         "': required number is missing");
    return obj[key].get<double>();
}

double opt_number(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    return obj[key].get<double>();
}

// Central mass in grams from either "mass_g" or "mass_msun".
double config_mass(const json& p, const std::string& path) {
    if (p.contains("mass_g")) return need_number(p, path, "mass_g");
    if (p.contains("mass_msun"))
        return need_number(p, path, "mass_msun") * constants::M_sun;
    throw UsageError("config error at '" + path + "': need mass_g or mass_msun");
}

// Orbit period in seconds from any one of the convenience keys.
double config_period(const json& p, double fallback) {
    if (p.contains("period_s")) return p["period_s"].get<double>();
    if (p.contains("period_minutes")) return p["period_minutes"].get<double>() * constants::minute;
    if (p.contains("period_days")) return p["period_days"].get<double>() * constants::day;
    if (p.contains("period_years")) return p["period_years"].get<double>() * constants::year;
    return fallback;
}

json run_delay(const json& p) {
    check_keys(p, "params",
               {"mass_g", "mass_msun", "radius_cm", "period_s", "period_minutes",
                "period_days", "period_years"});
    OrbitScenario sc;
    sc.mass = config_mass(p, "params");
    sc.radius = opt_number(p, "radius_cm", 0.0);
    sc.period = config_period(p, 0.0);
    DelayResult r = time_delay(sc);
    return json{{"operation", "delay"},
                {"rg", quantity(r.rg, "cm")},
                {"radius", quantity(r.radius, "cm")},
                {"period", quantity(r.period, "s")},
                {"radius_source", r.radius_from_kepler ? "kepler" : "given"},
                {"ds", quantity(r.ds, "cm")},
                {"dt", quantity(r.dt, "s")}};
}

json run_doppler(const json& p) {
    check_keys(p, "params",
               {"mass_g", "mass_msun", "r_peri_cm", "r_apo_cm", "lambda_emit_um"});
    OrbitScenario sc;
    sc.mass = config_mass(p, "params");
    sc.r_peri = need_number(p, "params", "r_peri_cm");
    sc.r_apo = need_number(p, "params", "r_apo_cm");
    sc.lambda_emit = opt_number(p, "lambda_emit_um", 0.0) * constants::micron;
    DopplerResult d = s2_doppler(sc);
    json doc{{"operation", "doppler"},
             {"V_peri", quantity(d.V_peri, "cm/s")},
             {"V_apo", quantity(d.V_apo, "cm/s")},
             {"ratio_peri", d.ratio_peri},
             {"ratio_apo", d.ratio_apo}};
    if (sc.lambda_emit > 0.0) {
        doc["lambda_peri"] = quantity(d.lambda_peri / constants::micron, "um");
        doc["lambda_apo"] = quantity(d.lambda_apo / constants::micron, "um");
        doc["dlambda"] = quantity(d.dlambda / constants::angstrom, "Angstrom");
    }
    return doc;
}

json run_redshift(const json& p) {
    check_keys(p, "params", {"mass_g", "mass_msun", "r_emit_cm", "r_obs_cm"});
    SchwarzschildSpace ss = schwarzschild_of_mass(config_mass(p, "params"));
    double r_emit = need_number(p, "params", "r_emit_cm");
    double r_obs = need_number(p, "params", "r_obs_cm");
    double closed = radial_photon_redshift(ss, r_emit, r_obs, 1.0);
    double ode = radial_photon_redshift_ode(ss, r_emit, r_obs, 1.0);
    return json{{"operation", "redshift"},
                {"rg", quantity(ss.rg, "cm")},
                {"omega_ratio", closed},
                {"omega_ratio_ode", ode},
                {"cross_check_delta", ode - closed}};
}

json run_boost(const json& p) {
    check_keys(p, "params",
               {"mass_g", "mass_msun", "r_cm", "direction", "omega", "v_cm_s"});
    SchwarzschildSpace ss = schwarzschild_of_mass(config_mass(p, "params"));
    double r = need_number(p, "params", "r_cm");
    std::string dir = p.value("direction", "orbital");
    Point pt{0.0, r, 1.5707963267948966, 0.0};
    std::pair<Tensor, Tensor> pair =
        dir == "orbital"
            ? orbital_boost_frame(ss, pt, need_number(p, "params", "omega"))
            : (dir == "radial"
                   ? radial_boost_frame(ss, pt, need_number(p, "params", "v_cm_s"))
                   : throw UsageError("config error at 'params/direction': expected "
                                      "orbital or radial"));
    auto& [e, ep] = pair;
    double gamma = ep(0, 0) / e(0, 0);
    json frame = json::array(), boosted = json::array();
    for (int a = 0; a < 4; ++a) {
        json col1 = json::array(), col2 = json::array();
        for (int i = 0; i < 4; ++i) {
            col1.push_back(e(i, a));
            col2.push_back(ep(i, a));
        }
        frame.push_back(col1);
        boosted.push_back(col2);
    }
    return json{{"operation", "boost"},
                {"direction", dir},
                {"gamma", gamma},
                {"stationary_frame", frame},
                {"boosted_frame", boosted}};
}

json run_tidal(const json& p) {
    check_keys(p, "params", {"seed", "scale", "s1"});
    std::uint64_t seed = static_cast<std::uint64_t>(opt_number(p, "seed", 1.0));
    double scale = opt_number(p, "scale", 1e-3);
    double s1 = opt_number(p, "s1", 1.0);
    MetricAffineSpace space = random_space(3, seed, true);
    Point x0 = random_point(3, seed + 1, 0.1);
    Tensor u0(3, {up()});
    u0(0) = 1.0;
    u0(1) = 0.1;
    u0(2) = -0.05;
    Tensor dx0(3, {up()}), w0(3, {up()});
    dx0(0) = scale;
    dx0(1) = 0.5 * scale;
    w0(2) = 0.25 * scale;
    auto sol = tidal_deviation(space, x0, u0, nullptr, nullptr, dx0, w0, s1);
    const TidalState& end = sol.back();
    json dx = json::array(), w = json::array();
    for (int i = 0; i < 3; ++i) {
        dx.push_back(end.dx(i));
        w.push_back(end.w(i));
    }
    return json{{"operation", "tidal"},
                {"space", space.name},
                {"s1", s1},
                {"deviation_end", dx},
                {"deviation_rate_end", w}};
}

json run_closure(const json& p) {
    check_keys(p, "params", {"kappa", "rho"});
    double kappa = need_number(p, "params", "kappa");
    double rho = opt_number(p, "rho", 0.05);
    Tensor T(3, {up(), down(), down()});
    T(0, 1, 2) = kappa;
    T(0, 2, 1) = -kappa;
    MetricAffineSpace space = flat_torsion_space(T);
    Tensor a(3, {up()}), b(3, {up()});
    a(1) = 1.0;
    b(2) = 1.0;
    Tensor gap = parallelogram_gap(space, Point{0.0, 0.0, 0.0}, a, b, rho);
    double coeff = gap(0) / (rho * rho);
    return json{{"operation", "closure"},
                {"kappa_declared", kappa},
                {"rho", rho},
                {"gap", gap(0)},
                {"gap_coefficient", coeff},
                {"coefficient_rel_delta", kappa != 0.0 ? (coeff - kappa) / kappa : coeff}};
}

json run_extremal(const json& p) {
    check_keys(p, "params", {"seed", "s1"});
    std::uint64_t seed = static_cast<std::uint64_t>(opt_number(p, "seed", 1.0));
    double s1 = opt_number(p, "s1", 1.0);
    MetricAffineSpace space = random_space(3, seed, true);
    Point x0 = random_point(3, seed + 1, 0.1);
    Tensor u0(3, {up()});
    u0(0) = 1.0;
    u0(1) = 0.1;
    u0(2) = -0.05;
    auto ex = extremal(space, x0, u0, 0.0, s1);
    auto ap = autoparallel(space.connection, x0, u0, 0.0, s1);
    double sep = 0.0;
    for (int i = 0; i < 3; ++i)
        sep = std::max(sep, std::abs(ex.back().x[i] - ap.back().x[i]));
    // Length drift along the extremal: zero for the companion transport.
    Tensor g0 = space.metric(x0);
    double len0 = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) len0 += g0(i, j) * u0(i) * u0(j);
    Tensor g1 = space.metric(ex.back().x);
    double len1 = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) len1 += g1(i, j) * ex.back().u(i) * ex.back().u(j);
    return json{{"operation", "extremal-vs-autoparallel"},
                {"space", space.name},
                {"s1", s1},
                {"endpoint_separation", sep},
                {"extremal_length_drift", len1 - len0}};
}

int cmd_run(const std::string& path, const std::string& out_path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot open config file '" + path + "'");
    json config;
    try {
        config = json::parse(f);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!config.is_object()) throw UsageError("config error at '/': expected an object");
    check_keys(config, "", {"operation", "params", "format"});
    if (!config.contains("operation") || !config["operation"].is_string())
        throw UsageError("config error at '/operation': required string is missing");
    json params = config.value("params", json::object());
    if (!params.is_object())
        throw UsageError("config error at '/params': expected an object");
    std::string op = config["operation"].get<std::string>();
    std::string format = config.value("format", "json");

    json result;
    if (op == "delay")
        result = run_delay(params);
    else if (op == "doppler")
        result = run_doppler(params);
    else if (op == "redshift")
        result = run_redshift(params);
    else if (op == "boost")
        result = run_boost(params);
    else if (op == "tidal")
        result = run_tidal(params);
    else if (op == "closure")
        result = run_closure(params);
    else if (op == "extremal-vs-autoparallel")
        result = run_extremal(params);
    else
        throw UsageError("config error at '/operation': unknown operation '" + op + "'");

    json doc{{"inputs", config}, {"outputs", result},
             {"provenance", {{"constants", constants_block()}}}};
    emit(doc, format, out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric-affine geometry laboratory"};
    app.require_subcommand(1);

    std::string table_id, format = "human", config_path, out_path, suite;
    std::uint64_t seed = 1;
    std::optional<double> tol;

    CLI::App* table = app.add_subcommand("table", "reproduce a reference table");
    table->add_option("id", table_id, "table id (7.3.1, 7.3.2, 7.3.3, 7.4.1, 7.4.2)")
        ->required();
    table->add_option("--format", format, "human, json, or csv");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "identities, transport, frames, or all")
        ->required();
    verify->add_option("--seed", seed, "random-space seed");
    double tol_value = 0.0;
    CLI::Option* tol_opt = verify->add_option("--tol", tol_value, "tolerance override");

    CLI::App* run = app.add_subcommand("run", "execute a JSON scenario config");
    run->add_option("config", config_path, "path to config file")->required();
    run->add_option("--out", out_path, "write the result document to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (table->parsed()) {
            emit(table_doc(table_id), format, out_path);
            return kExitOk;
        }
        if (verify->parsed()) {
            if (*tol_opt) tol = tol_value;
            return cmd_verify(suite, seed, tol);
        }
        return cmd_run(config_path, out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
