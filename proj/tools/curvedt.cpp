// curvedt: Betti numbers, DT invariants and smallness certificates for
// moduli of vector bundles on a curve.
//
//   curvedt betti     -g 2 -r 4 -d 0 --half
//   curvedt hdt       -g 2 -r 0 -d 1
//   curvedt hdt       -g 2 --slope 1/2 --rmax 6
//   curvedt detfactor -g 3 -r 2 -d 1 --half
//   curvedt strata    -g 2 -r 2 -d 6
//   curvedt verify    --quick
//
// Exit status: 0 success, 1 computation or verification failure, 2 usage error.

#include "curvedt/report.hpp"
#include "curvedt/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace curvedt;

namespace {

enum class Format { table, json, csv };

struct RunConfig {
    int genus = 2;
    int rank = 1;
    int degree = 0;
    std::string slope;
    int rmax = 0;
    std::string format = "table";
    bool force_genus = false;
    bool half = false;
    bool full = false;
    std::string checks = "on";
    bool generic_loops = false;
    bool quick = false;
    bool json = false;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Format format_of(const RunConfig& cfg) {
    if (cfg.json || cfg.format == "json")
        return Format::json;
    return cfg.format == "csv" ? Format::csv : Format::table;
}

CheckMode checks_of(const RunConfig& cfg) {
    if (cfg.force_genus && cfg.genus < 2 && cfg.checks == "on")
        return CheckMode::warn;
    if (cfg.checks == "warn")
        return CheckMode::warn;
    return cfg.checks == "off" ? CheckMode::off : CheckMode::on;
}

void require_genus(const RunConfig& cfg) {
    if (cfg.genus < 0)
        throw UsageError("genus must be non-negative");
    if (cfg.genus < 2 && !cfg.force_genus)
        throw UsageError("genus " + std::to_string(cfg.genus) + " < 2 needs --force-genus");
}

void require_class(const RunConfig& cfg) {
    if (cfg.rank < 1)
        throw UsageError("rank must be positive");
}

void emit(const ReportTable& table, Format fmt) {
    if (fmt == Format::csv)
        table.print_csv(std::cout);
    else
        table.print_text(std::cout);
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings)
        std::cerr << "warning: " << w << '\n';
}

std::vector<Integer> head(const std::vector<Integer>& values, std::size_t count) {
    return {values.begin(), values.begin() + static_cast<long>(std::min(count, values.size()))};
}

ReportTable sequence_table(const char* column, const std::vector<Integer>& values) {
    ReportTable t{{"k", column}, {}};
    for (std::size_t k = 0; k < values.size(); ++k)
        t.add_row({std::to_string(k), values[k].get_str()});
    return t;
}

int cmd_betti(const RunConfig& cfg) {
    require_genus(cfg);
    require_class(cfg);
    const ChernClass gamma{cfg.rank, cfg.degree};
    const DTResult res = ih_poincare(cfg.genus, gamma, checks_of(cfg));
    print_warnings(res.warnings);
    const auto shown = cfg.half ? head(res.betti, static_cast<std::size_t>(res.dim) + 1) : res.betti;
    switch (format_of(cfg)) {
    case Format::json:
        std::cout << canonical_dump(to_json(res, shown)) << '\n';
        break;
    case Format::csv:
        emit(sequence_table("b_k", shown), Format::csv);
        break;
    case Format::table:
        std::cout << "M(" << cfg.rank << "," << cfg.degree << ")  g=" << cfg.genus << "  dim=" << res.dim << '\n';
        std::cout << join(shown, shown.size()) << '\n';
        break;
    }
    return 0;
}

struct HdtRow {
    int rank;
    int degree;
    LaurentPoly value;
};

int cmd_hdt(const RunConfig& cfg) {
    require_genus(cfg);
    std::vector<HdtRow> rows;
    json meta = {{"genus", cfg.genus}};
    if (!cfg.slope.empty()) {
        const Rational tau = parse_rational(cfg.slope);
        const int rmax = cfg.rmax > 0 ? cfg.rmax : static_cast<int>(tau.get_den().get_si());
        for (const auto& [r, h] : dt_invariants(cfg.genus, tau, rmax))
            rows.push_back({r, static_cast<int>(Rational(tau * r).get_num().get_si()), h});
        meta["slope"] = to_string(tau);
    } else if (cfg.rank == 0) {
        if (cfg.degree < 1)
            throw UsageError("torsion mode needs degree >= 1");
        rows.push_back({0, cfg.degree, torsion_dt(cfg.genus, cfg.degree).at(cfg.degree)});
    } else {
        require_class(cfg);
        rows.push_back({cfg.rank, cfg.degree, hdt(cfg.genus, {cfg.rank, cfg.degree})});
    }

    const Format fmt = format_of(cfg);
    if (fmt == Format::json) {
        json list = json::array();
        for (const auto& row : rows)
            list.push_back({{"rank", row.rank},
                            {"degree", row.degree},
                            {"hdt", to_json(row.value)},
                            {"at_minus_y", to_json(specialize_y(row.value).negate_variable())}});
        meta["invariants"] = list;
        std::cout << canonical_dump(meta) << '\n';
        return 0;
    }
    ReportTable t{{"r", "d", "HDT", "HDT(-y,-y)"}, {}};
    for (const auto& row : rows)
        t.add_row({std::to_string(row.rank), std::to_string(row.degree), format_poly(row.value),
                   format_poly(specialize_y(row.value).negate_variable())});
    emit(t, fmt);
    return 0;
}

int cmd_detfactor(const RunConfig& cfg) {
    require_genus(cfg);
    require_class(cfg);
    const ChernClass gamma{cfg.rank, cfg.degree};
    const DTResult res = ih_poincare(cfg.genus, gamma, checks_of(cfg));
    print_warnings(res.warnings);
    const auto quotient = divide_by_jacobian(res.betti, cfg.genus);
    const auto shown = cfg.half ? head(quotient, static_cast<std::size_t>(res.dim - cfg.genus) + 1) : quotient;
    switch (format_of(cfg)) {
    case Format::json:
        std::cout << canonical_dump({{"genus", cfg.genus},
                                     {"rank", cfg.rank},
                                     {"degree", cfg.degree},
                                     {"dim", res.dim},
                                     {"quotient", to_json(shown)}})
                  << '\n';
        break;
    case Format::csv:
        emit(sequence_table("c_k", shown), Format::csv);
        break;
    case Format::table:
        std::cout << "M(" << cfg.rank << "," << cfg.degree << ")  g=" << cfg.genus << "  P(y)/(1+y)^" << 2 * cfg.genus
                  << '\n';
        std::cout << join(shown, shown.size()) << '\n';
        break;
    }
    return 0;
}

std::string describe(const StratumType& type) {
    std::string out;
    for (const auto& p : type.parts) {
        if (!out.empty())
            out += " + ";
        if (p.multiplicity != 1)
            out += std::to_string(p.multiplicity) + "*";
        out += "(" + std::to_string(p.gamma.rank) + "," + std::to_string(p.gamma.degree) + ")";
    }
    return out;
}

int cmd_strata(const RunConfig& cfg) {
    require_genus(cfg);
    require_class(cfg);
    const SmallnessReport rep = certify_virtual_smallness(cfg.genus, {cfg.rank, cfg.degree},
                                                          cfg.generic_loops ? LoopBound::generic : LoopBound::exact);
    print_warnings(rep.warnings);
    const Format fmt = format_of(cfg);
    if (fmt == Format::json) {
        std::cout << canonical_dump(to_json(rep)) << '\n';
    } else {
        ReportTable t{{"type", "codim", "d0", "bound", "maximal", "pass"}, {}};
        for (const auto& s : rep.strata)
            t.add_row({describe(s.type), std::to_string(s.codim), std::to_string(s.d0), to_string(s.bound),
                       s.maximal ? "yes" : "no", s.pass ? "PASS" : "FAIL"});
        emit(t, fmt);
        if (fmt == Format::table)
            std::cout << (rep.in_small_range ? "" : "out of scope: slope <= 2g-2\n")
                      << "verdict: " << (rep.verdict ? "PASS" : "FAIL") << '\n';
    }
    return rep.verdict ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg) {
    const VerifyScope scope = cfg.quick ? VerifyScope::quick() : VerifyScope{};
    const auto results = run_verification(scope);
    int passed = 0, failed = 0, warned = 0;
    for (const auto& r : results) {
        if (r.passed)
            ++passed;
        else if (r.gating)
            ++failed;
        else
            ++warned;
    }
    const Format fmt = format_of(cfg);
    if (fmt == Format::json) {
        json list = json::array();
        for (const auto& r : results)
            list.push_back({{"suite", r.suite},
                            {"name", r.name},
                            {"passed", r.passed},
                            {"gating", r.gating},
                            {"detail", r.detail}});
        std::cout << canonical_dump({{"checks", list},
                                     {"passed", passed},
                                     {"failed", failed},
                                     {"warnings", warned},
                                     {"verdict", failed == 0}})
                  << '\n';
    } else {
        ReportTable t{{"suite", "check", "status", "detail"}, {}};
        for (const auto& r : results)
            t.add_row({r.suite, r.name, r.passed ? "PASS" : (r.gating ? "FAIL" : "WARN"), r.detail});
        emit(t, fmt);
        if (fmt == Format::table)
            std::cout << passed << " passed, " << failed << " failed, " << warned << " warnings\n";
    }
    return failed == 0 ? 0 : 1;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("-g,--genus", cfg.genus, "genus of the curve")->capture_default_str();
    sub->add_option("--format", cfg.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    sub->add_flag("--force-genus", cfg.force_genus, "allow genus 0 or 1 (checks downgrade to warnings)");
}

void add_class(CLI::App* sub, RunConfig& cfg, bool rank_required = true) {
    auto* r = sub->add_option("-r,--rank", cfg.rank, "rank r");
    auto* d = sub->add_option("-d,--degree", cfg.degree, "degree d");
    if (rank_required) {
        r->required();
        d->required();
    }
}

void add_checks(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--checks", cfg.checks, "on, warn or off")
        ->check(CLI::IsMember({"on", "warn", "off"}))
        ->capture_default_str();
}

void add_half(CLI::App* sub, RunConfig& cfg) {
    auto* half = sub->add_flag("--half", cfg.half, "first half only (the rest follows by duality)");
    auto* full = sub->add_flag("--full", cfg.full, "all coefficients (default)");
    half->excludes(full);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intersection cohomology and DT invariants of moduli of bundles on a curve"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* betti = app.add_subcommand("betti", "Betti numbers of IH*(M(r,d))");
    add_common(betti, cfg);
    add_class(betti, cfg);
    add_half(betti, cfg);
    add_checks(betti, cfg);

    auto* hdt_cmd = app.add_subcommand("hdt", "DT invariant HDT_{r,d}; rank 0 selects torsion sheaves");
    add_common(hdt_cmd, cfg);
    add_class(hdt_cmd, cfg, false);
    auto* slope = hdt_cmd->add_option("--slope", cfg.slope, "all classes of slope p/q up to --rmax");
    hdt_cmd->add_option("--rmax", cfg.rmax, "largest rank in slope mode")->needs(slope);

    auto* det = app.add_subcommand("detfactor", "Poincare polynomial divided by (1+y)^{2g}");
    add_common(det, cfg);
    add_class(det, cfg);
    add_half(det, cfg);
    add_checks(det, cfg);

    auto* strata = app.add_subcommand("strata", "virtual smallness certificate over Luna strata");
    add_common(strata, cfg);
    add_class(strata, cfg);
    strata->add_flag("--generic-loop-bound", cfg.generic_loops, "use chi(e_i,e_i) <= 1 instead of the exact value");

    auto* verify = app.add_subcommand("verify", "run the built-in verification suites");
    verify->add_flag("--quick", cfg.quick, "ranks <= 3 only");
    verify->add_flag("--json", cfg.json, "machine-readable verdict");
    verify->add_option("--format", cfg.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (betti->parsed())
            return cmd_betti(cfg);
        if (hdt_cmd->parsed())
            return cmd_hdt(cfg);
        if (det->parsed())
            return cmd_detfactor(cfg);
        if (strata->parsed())
            return cmd_strata(cfg);
        return cmd_verify(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
