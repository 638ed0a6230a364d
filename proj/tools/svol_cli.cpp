#include "svol/errors.hpp"
#include "svol/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

using namespace svol;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInvalidConfig = 2;
constexpr int kReconciliation = 3;

enum class Method { Exact, Closed, Both };
enum class Format { Text, Csv, Json };

struct JobConfig {
    std::string family;
    int rank = 0;
    std::string range = "0..5";
    std::optional<std::string> q0;
    bool symbolic = false;
    std::string variant = "all";
    bool special = false;
    std::string method = "exact";
    std::string format = "text";
    std::string quantity = "ssa";
    unsigned seed = 7;
    int count = 100;
    long maxR = 8;
    int maxRank = 6;
    long window = 15;
    double maxTerms = 1e7;
    std::string suite;
};

struct Resolved {
    ClassicalRootSystem sys;
    Variant variant = Variant::All;
    long r1 = 0, r2 = 0;
    std::optional<Rational> q0;
    Method method = Method::Exact;
    Format format = Format::Text;
};

Variant parse_variant(const JobConfig& cfg) {
    if (cfg.special) return Variant::Special;
    if (cfg.variant == "all") return Variant::All;
    if (cfg.variant == "special") return Variant::Special;
    throw InvalidConfig("variant must be all or special");
}

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw InvalidConfig("format must be csv, json or text");
}

std::pair<long, long> parse_range(const std::string& s) {
    static const std::regex re(R"(^\s*(\d+)\s*(?:\.\.\s*(\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw InvalidConfig("radius range must look like A..B or R");
    long a = std::stol(m[1].str());
    long b = m[2].matched ? std::stol(m[2].str()) : a;
    if (b < a) throw InvalidConfig("radius range " + s + " is empty");
    return {a, b};
}

Rational parse_q(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw InvalidConfig("q must be a rational number, got " + s);
    q.canonicalize();
    if (q <= 1) throw InvalidConfig("q must exceed 1");
    return q;
}

Resolved resolve(const JobConfig& cfg) {
    if (cfg.family.empty() || cfg.rank == 0) throw InvalidConfig("family and rank are required");
    Resolved r{ClassicalRootSystem::build(parse_family(cfg.family), cfg.rank)};
    r.variant = parse_variant(cfg);
    std::tie(r.r1, r.r2) = parse_range(cfg.range);
    if (cfg.q0 && cfg.symbolic) throw InvalidConfig("--q and --symbolic are exclusive");
    if (cfg.q0) r.q0 = parse_q(*cfg.q0);
    if (cfg.method == "exact")
        r.method = Method::Exact;
    else if (cfg.method == "closed")
        r.method = Method::Closed;
    else if (cfg.method == "both")
        r.method = Method::Both;
    else
        throw InvalidConfig("method must be exact, closed or both");
    r.format = parse_format(cfg.format);
    return r;
}

// Lattice points the fast enumeration walks up to radius r: compositions of
// at most r + 1 into n parts, once per coset.
double enumeration_estimate(const ClassicalRootSystem& sys, long r) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(r + 1 + sys.rank()),
                 static_cast<unsigned long>(sys.rank()));
    std::size_t cosets = std::max<std::size_t>(coset_tags(sys).size(), 1);
    return b.get_d() * static_cast<double>(cosets);
}

std::string render(const QNumber& x, const std::optional<Rational>& q0) {
    if (!q0) return x.to_string();
    return x.evaluate_exact(*q0).get_str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(", \"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string system_label(const ClassicalRootSystem& sys) { return sys.name(); }

int cmd_table(const JobConfig& cfg) {
    Resolved job = resolve(cfg);
    const auto& sys = job.sys;
    if (job.method != Method::Closed) {
        double est = enumeration_estimate(sys, job.r2);
        if (est > cfg.maxTerms) {
            std::ostringstream os;
            os << "radius " << job.r2 << " would enumerate about " << est << " lattice points (limit "
               << cfg.maxTerms << "); raise --max-terms or use --method closed";
            throw InvalidConfig(os.str());
        }
    }
    std::vector<QNumber> ssa, sv;
    if (job.method != Method::Closed) {
        auto all = ssa_exact_range(sys, job.r2, job.variant);
        QNumber acc;
        for (long r = 0; r <= job.r2; ++r) {
            acc += all[static_cast<std::size_t>(r)];
            if (r >= job.r1) {
                ssa.push_back(all[static_cast<std::size_t>(r)]);
                sv.push_back(acc);
            }
        }
    }
    if (job.method != Method::Exact) {
        SuperQExpPoly F = ssa_closed_form(sys, job.variant);
        SuperQExpPoly S = sv_closed_form(sys, job.variant);
        std::vector<QNumber> cssa, csv;
        for (long r = job.r1; r <= job.r2; ++r) {
            // The sphere of radius 0 is the base vertex alone.
            cssa.push_back(r == 0 ? QNumber(1) : F.evaluate(r));
            csv.push_back(S.evaluate(r));
        }
        if (job.method == Method::Both) {
            for (std::size_t i = 0; i < cssa.size(); ++i) {
                const long r = job.r1 + static_cast<long>(i);
                for (auto [name, e, c] : {std::tuple{"SSA", &ssa[i], &cssa[i]}, std::tuple{"SV", &sv[i], &csv[i]}}) {
                    if (*e == *c) continue;
                    std::cerr << "reconciliation failure: " << system_label(sys) << " " << name << "(" << r
                              << "): exact " << e->to_string() << ", closed " << c->to_string() << "\n";
                    return kReconciliation;
                }
            }
        } else {
            ssa = std::move(cssa);
            sv = std::move(csv);
        }
    }
    const std::string vname = variant_name(job.variant);
    const std::string qlabel = job.q0 ? job.q0->get_str() : "symbolic";
    const std::string method = cfg.method;
    switch (job.format) {
        case Format::Text: {
            std::cout << system_label(sys) << " variant=" << vname << " q=" << qlabel << " method=" << method << "\n";
            for (std::size_t i = 0; i < ssa.size(); ++i)
                std::cout << "r=" << job.r1 + static_cast<long>(i) << "  SSA=" << render(ssa[i], job.q0)
                          << "  SV=" << render(sv[i], job.q0) << "\n";
            break;
        }
        case Format::Csv: {
            std::cout << "family,n,variant,q,r,ssa,sv\n";
            for (std::size_t i = 0; i < ssa.size(); ++i)
                std::cout << family_letter(sys.family()) << "," << sys.rank() << "," << vname << "," << qlabel << ","
                          << job.r1 + static_cast<long>(i) << "," << csv_field(render(ssa[i], job.q0)) << ","
                          << csv_field(render(sv[i], job.q0)) << "\n";
            break;
        }
        case Format::Json: {
            json rows = json::array();
            for (std::size_t i = 0; i < ssa.size(); ++i)
                rows.push_back({{"r", job.r1 + static_cast<long>(i)},
                                {"ssa", render(ssa[i], job.q0)},
                                {"sv", render(sv[i], job.q0)}});
            json out{{"family", std::string(1, family_letter(sys.family()))},
                     {"n", sys.rank()},
                     {"variant", vname},
                     {"q", qlabel},
                     {"method", method},
                     {"rows", rows}};
            std::cout << out.dump(2) << "\n";
            break;
        }
    }
    return kOk;
}

int cmd_asymptote(const JobConfig& cfg) {
    Resolved job = resolve(cfg);
    const auto& sys = job.sys;
    Quantity qty;
    if (cfg.quantity == "ssa")
        qty = Quantity::SSA;
    else if (cfg.quantity == "sv")
        qty = Quantity::SV;
    else
        throw InvalidConfig("quantity must be ssa or sv");
    if (job.format == Format::Csv) throw InvalidConfig("asymptote prints text or json");
    AsymptoticProfile p = asymptote(sys, job.variant, qty);
    auto explicitC = explicit_constant(sys, job.variant, qty);
    std::optional<QNumber> printed;
    if (qty == Quantity::SSA && sys.family() == Family::B && sys.rank() == 3)
        printed = job.variant == Variant::All ? constant_B3() : constant_B3_dagger();
    if (qty == Quantity::SSA && sys.family() == Family::D && sys.rank() == 4)
        printed = job.variant == Variant::All ? constant_D4() : constant_D4_dagger();
    bool explicitOk = explicitC && explicitC->value_even() == p.constant.value_even() &&
                      explicitC->value_odd() == p.constant.value_odd();
    json out{{"family", std::string(1, family_letter(sys.family()))},
             {"n", sys.rank()},
             {"variant", variant_name(job.variant)},
             {"quantity", cfg.quantity},
             {"epsilon", p.epsilon},
             {"pi", p.pi.get_str()},
             {"constant", p.constant.to_string()},
             {"constant_even", p.constant.value_even().to_string()},
             {"constant_odd", p.constant.value_odd().to_string()}};
    if (explicitC) {
        out["explicit_constant"] = explicitC->to_string();
        out["explicit_matches"] = explicitOk;
    }
    if (printed) {
        out["printed_constant"] = printed->to_string();
        out["printed_matches"] = *printed == p.constant.even_coeff();
    }
    if (job.format == Format::Json) {
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << system_label(sys) << " variant=" << variant_name(job.variant) << " quantity=" << cfg.quantity << "\n"
              << "epsilon = " << p.epsilon << "\n"
              << "pi = " << p.pi.get_str() << "\n"
              << "constant = " << p.constant.to_string() << "\n";
    if (!p.constant.is_constant())
        std::cout << "constant at even r = " << p.constant.value_even().to_string() << "\n"
                  << "constant at odd r = " << p.constant.value_odd().to_string() << "\n";
    if (explicitC)
        std::cout << "explicit formula " << (explicitOk ? "agrees" : "DISAGREES") << ": " << explicitC->to_string()
                  << "\n";
    if (printed)
        std::cout << "printed form " << (*printed == p.constant.even_coeff() ? "agrees" : "differs") << ": "
                  << printed->to_string() << "\n";
    return kOk;
}

SystemList verify_systems_for(const JobConfig& cfg, const SystemList& fallback) {
    if (cfg.family.empty()) return fallback;
    if (cfg.rank == 0) throw InvalidConfig("--rank is required with --family");
    auto sys = ClassicalRootSystem::build(parse_family(cfg.family), cfg.rank);
    return {{sys.family(), sys.rank()}};
}

int cmd_verify(const JobConfig& cfg) {
    const std::vector<std::string> known{"multisum", "calculus", "table1", "enum",
                                         "poincare", "anchors",  "parity", "constants"};
    std::vector<std::string> selected;
    if (cfg.suite == "all")
        selected = known;
    else if (std::find(known.begin(), known.end(), cfg.suite) != known.end())
        selected = {cfg.suite};
    else
        throw InvalidConfig("unknown suite " + cfg.suite);
    if (cfg.count < 0 || cfg.maxR < 0 || cfg.window < 1 || cfg.maxRank < 1)
        throw InvalidConfig("counts, radii and windows must be positive");
    json suites = json::array();
    bool pass = true;
    for (const auto& s : selected) {
        SuiteResult r;
        if (s == "multisum") r = verify_multisum(cfg.seed, cfg.count);
        if (s == "calculus") r = verify_calculus(cfg.seed, cfg.count);
        if (s == "table1") r = verify_systems(verify_systems_for(cfg, systems_up_to_rank(cfg.maxRank)), cfg.window);
        if (s == "enum") r = verify_enum(verify_systems_for(cfg, reference_grid()), cfg.maxR);
        if (s == "poincare") r = verify_poincare(cfg.maxRank);
        if (s == "anchors") r = verify_anchors(verify_systems_for(cfg, reference_grid()), cfg.maxR);
        if (s == "parity") r = verify_parity_split(verify_systems_for(cfg, reference_grid()));
        if (s == "constants") r = verify_printed_constants();
        pass = pass && r.pass;
        suites.push_back(r.report);
    }
    json out = selected.size() == 1 ? suites[0] : json{{"suite", "all"}, {"suites", suites}, {"pass", pass}};
    std::cout << out.dump(2) << "\n";
    return pass ? kOk : kVerifyFailed;
}

int cmd_dump(const JobConfig& cfg) {
    if (cfg.family.empty() || cfg.rank == 0) throw InvalidConfig("family and rank are required");
    auto sys = ClassicalRootSystem::build(parse_family(cfg.family), cfg.rank);
    std::cout << json::parse(sys.to_json()).dump(2) << "\n";
    return kOk;
}

int cmd_sphere(const JobConfig& cfg, const std::string& how) {
    if (cfg.family.empty() || cfg.rank == 0) throw InvalidConfig("family and rank are required");
    auto sys = ClassicalRootSystem::build(parse_family(cfg.family), cfg.rank);
    auto [r1, r2] = parse_range(cfg.range);
    if (r1 != r2) throw InvalidConfig("sphere takes a single radius");
    if (enumeration_estimate(sys, r1) > cfg.maxTerms) throw InvalidConfig("radius exceeds --max-terms");
    EnumMethod m;
    if (how == "fast")
        m = EnumMethod::Fast;
    else if (how == "brute")
        m = EnumMethod::Brute;
    else
        throw InvalidConfig("enumeration must be fast or brute");
    VertexMode mode = parse_variant(cfg) == Variant::All ? VertexMode::All : VertexMode::Special;
    std::cout << sphere_csv(sys, r1, enumerate_sphere(sys, r1, mode, m));
    return kOk;
}

// Family and rank are accepted positionally or as options.
void add_system(CLI::App* cmd, JobConfig& cfg) {
    cmd->add_option("family,--family", cfg.family, "Root system family A, B, C or D");
    cmd->add_option("rank,--rank", cfg.rank, "Rank n");
}

void add_variant(CLI::App* cmd, JobConfig& cfg) {
    cmd->add_option("--variant", cfg.variant, "all or special vertices");
    cmd->add_flag("--special", cfg.special, "Shorthand for --variant special");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vertex counts of balls and spheres in Bruhat-Tits buildings of split classical groups"};
    app.require_subcommand(1);
    JobConfig cfg;

    auto* table = app.add_subcommand("table", "SSA and SV per radius");
    add_system(table, cfg);
    add_variant(table, cfg);
    table->add_option("--r", cfg.range, "Radius range A..B (default 0..5)");
    table->add_option("--q", cfg.q0, "Evaluate at q = Q (rational > 1)");
    table->add_flag("--symbolic", cfg.symbolic, "Print q-polynomials (default)");
    table->add_option("--method", cfg.method, "exact, closed or both");
    table->add_option("--format", cfg.format, "text, csv or json");
    table->add_option("--max-terms", cfg.maxTerms, "Limit on enumerated lattice points");

    auto* asym = app.add_subcommand("asymptote", "Growth exponent, polynomial degree and leading constant");
    add_system(asym, cfg);
    add_variant(asym, cfg);
    asym->add_option("--quantity", cfg.quantity, "ssa or sv");
    asym->add_option("--format", cfg.format, "text or json");

    auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
    verify->add_option("suite", cfg.suite,
                       "multisum, calculus, table1, enum, poincare, anchors, parity, constants or all")
        ->required();
    verify->add_option("--seed", cfg.seed, "Random seed");
    verify->add_option("--count", cfg.count, "Number of random cases");
    verify->add_option("--max-r", cfg.maxR, "Largest radius for enumeration suites");
    verify->add_option("--max-rank", cfg.maxRank, "Largest rank for table1 and poincare");
    verify->add_option("--window", cfg.window, "Consecutive radii compared after the threshold");
    verify->add_option("--family", cfg.family, "Restrict to one family");
    verify->add_option("--rank", cfg.rank, "Rank for --family");

    auto* dump = app.add_subcommand("dump-rootsystem", "Roots, highest root, 2 rho and degrees as JSON");
    add_system(dump, cfg);

    std::string how = "fast";
    auto* sphere = app.add_subcommand("sphere", "Vertices of the sphere of radius r as CSV");
    add_system(sphere, cfg);
    add_variant(sphere, cfg);
    sphere->add_option("--r", cfg.range, "Radius");
    sphere->add_option("--enum", how, "fast or brute");
    sphere->add_option("--max-terms", cfg.maxTerms, "Limit on enumerated lattice points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalidConfig;
    }
    try {
        if (*table) return cmd_table(cfg);
        if (*asym) return cmd_asymptote(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*dump) return cmd_dump(cfg);
        if (*sphere) return cmd_sphere(cfg, how);
    } catch (const InvalidConfig& e) {
        std::cerr << e.what() << "\n";
        return kInvalidConfig;
    } catch (const RankOutOfRange& e) {
        std::cerr << e.what() << "\n";
        return kInvalidConfig;
    } catch (const ReconciliationFailure& e) {
        std::cerr << e.what() << "\n";
        return kReconciliation;
    }
    return kInvalidConfig;
}
