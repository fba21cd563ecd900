// Command-line driver: catalog verification, searches, identity suites, complexes, duality.
// Exit codes: 0 success, 1 mathematical failure, 2 resource or configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "e510/catalog.hpp"
#include "e510/s5.hpp"
#include "e510/search.hpp"
#include "e510/suites.hpp"

using namespace e510;
using nlohmann::json;

namespace {

constexpr int kLongDegree = 11;  // degrees above this only with --long

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "3", "0..2", "0,1,4"
std::vector<int> parse_range(const std::string& s) {
    std::vector<int> out;
    try {
        auto dots = s.find("..");
        if (dots != std::string::npos) {
            int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
            for (int i = lo; i <= hi; ++i) out.push_back(i);
        } else {
            std::stringstream ss(s);
            std::string tok;
            while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
        }
    } catch (const std::exception&) {
        throw ConfigError("bad range '" + s + "'");
    }
    if (out.empty()) throw ConfigError("empty range '" + s + "'");
    for (int v : out)
        if (v < 0) throw ConfigError("negative value in range '" + s + "'");
    return out;
}

Weight weight_arg(const std::string& s) {
    try {
        Weight w = parse_weight(s);
        if (!w.dominant()) throw ConfigError("weight " + s + " is not dominant");
        return w;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("bad weight '") + s + "': " + e.what());
    }
}

json wjson(const Weight& w) { return json::array({w.c[0], w.c[1], w.c[2], w.c[3]}); }

struct Output {
    std::string format = "text";
    std::string path;

    // JSON goes to stdout in json mode and to the file whenever one is given.
    void emit(const json& j, const std::string& text) const {
        if (format == "json")
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text;
        if (!path.empty()) {
            std::ofstream f(path);
            if (!f) throw ConfigError("cannot write " + path);
            f << j.dump(2) << "\n";
        }
    }
};

void require_degrees(const std::vector<int>& degrees, bool long_runs) {
    for (int d : degrees) {
        if (d < 1) throw ConfigError("degrees start at 1");
        if (d > kLongDegree && !long_runs)
            throw ConfigError("degree " + std::to_string(d) + " needs --long (desk-scale runs stop at degree 11)");
    }
}

int cmd_verify_catalog(const std::string& family, const std::string& ms, const std::string& ns, const Output& out) {
    std::vector<std::string> tags;
    if (family == "all")
        tags = family_tags();
    else
        tags.push_back(family);
    std::vector<int> mv = parse_range(ms), nv = parse_range(ns);
    json rows = json::array();
    std::ostringstream text;
    bool ok = true;
    for (const std::string& t : tags) {
        std::vector<CatalogFamily> grid;
        try {
            grid = family_grid(t, mv, nv);
        } catch (const std::domain_error& e) {
            throw ConfigError(e.what());
        }
        for (const CatalogFamily& f : grid) {
            FamilyCheck c = verify_family(f);
            ok &= c.pass();
            rows.push_back(family_check_json(c));
            text << (c.pass() ? "PASS " : "FAIL ") << f.label() << "  M(" << f.mu.to_string() << ") <- M("
                 << f.weight.to_string() << ")  degree " << f.degree << "  height " << c.height << "  terms " << c.terms
                 << "\n";
            if (!c.pass() && !c.detail.empty()) text << "     " << c.detail << "\n";
        }
    }
    out.emit(json{{"families", rows}, {"pass", ok}, {"tool_version", kToolVersion}}, text.str());
    return ok ? 0 : 1;
}

int cmd_search(const std::string& mu_s, const std::string& deg_s, const std::string& weight_s, bool long_runs,
               const SearchOptions& opt, const Output& out) {
    Weight mu = weight_arg(mu_s);
    std::vector<int> degrees = parse_range(deg_s);
    require_degrees(degrees, long_runs);
    std::optional<Weight> nu;
    if (!weight_s.empty()) nu = weight_arg(weight_s);
    json certs = json::array();
    std::ostringstream text;
    for (int d : degrees) {
        for (const SingularCertificate& c : find_singular_vectors(mu, d, nu, opt)) {
            certs.push_back(certificate_json(c));
            text << "M(" << mu.to_string() << ") degree " << d << ": weight (" << c.weight.to_string() << "), kernel "
                 << c.kernel_dim << "\n";
            for (const VermaElement& v : c.vectors) text << "  " << verma_module(mu)->to_text(v) << "\n";
        }
    }
    if (certs.empty()) text << "no singular vectors\n";
    out.emit(json{{"certificates", certs}, {"tool_version", kToolVersion}}, text.str());
    return 0;
}

int cmd_sweep(int budget, const std::string& deg_s, bool long_runs, const SearchOptions& opt, const Output& out) {
    std::vector<int> degrees = parse_range(deg_s);
    require_degrees(degrees, long_runs);
    int lo = *std::min_element(degrees.begin(), degrees.end()), hi = *std::max_element(degrees.begin(), degrees.end());
    SweepReport r = classification_sweep(budget, hi, opt, lo);
    std::ostringstream text;
    text << "budget " << budget << ", degrees " << lo << ".." << hi << ": " << r.cells.size() << " cells, "
         << r.matched.size() << " matched\n";
    for (const std::string& s : r.unexplained) text << "unexplained " << s << "\n";
    for (const std::string& s : r.missing) text << "missing " << s << "\n";
    for (const std::string& s : r.errors) text << "error " << s << "\n";
    text << (r.pass() ? "PASS\n" : "FAIL\n");
    out.emit(sweep_json(r), text.str());
    if (!r.errors.empty()) return 2;
    return r.pass() ? 0 : 1;
}

int cmd_identities(const std::string& suite, int max_d, int random_tuples, unsigned seed, const Output& out) {
    std::vector<SuiteResult> rs;
    auto append = [&](std::vector<SuiteResult> more) { rs.insert(rs.end(), more.begin(), more.end()); };
    if (suite == "omega" || suite == "all") append(omega_suites(max_d, random_tuples, seed));
    if (suite == "fundamental" || suite == "all") append(fundamental_suites());
    if (suite == "structure" || suite == "all") append(structure_suites(seed));
    json rows = json::array();
    std::ostringstream text;
    for (const SuiteResult& r : rs) {
        rows.push_back(suite_json(r));
        text << (r.pass() ? "PASS " : "FAIL ") << r.name << "  " << r.checked << " cases";
        if (r.failures) text << ", " << r.failures << " failures, first: " << r.witness;
        text << "\n";
    }
    bool ok = all_pass(rs);
    out.emit(json{{"suites", rows}, {"pass", ok}}, text.str());
    return ok ? 0 : 1;
}

int cmd_complexes(const std::string& grid_s, const Output& out) {
    std::vector<int> grid = parse_range(grid_s);
    auto named = named_compositions(grid);
    auto pairs = composable_pairs(grid);
    CompositionCheck square = check_composition({catalog_family("1A", 0, 1), catalog_family("1A", 0, 0)});
    bool ok = square.zero;
    json jn = json::array(), jp = json::array();
    std::ostringstream text;
    auto line = [&](const CompositionCheck& c) {
        std::string s;
        for (std::size_t i = c.chain.size(); i-- > 0;) s += c.chain[i].label() + (i ? " o " : "");
        s += c.zero ? " = 0" : " != 0";
        if (c.expected) s += "  expected " + c.expected->label() + (c.matches ? " (scalar " + c.scalar.to_string() + ")" : " (mismatch)");
        return (c.pass() ? "PASS " : "FAIL ") + s + "\n";
    };
    for (const CompositionCheck& c : named) {
        ok &= c.pass();
        jn.push_back(composition_json(c));
        text << line(c);
    }
    text << (square.zero ? "PASS " : "FAIL ") << "1A(m=0,n=0) o 1A(m=0,n=1) = 0\n";
    int zero = 0;
    for (const CompositionCheck& c : pairs) {
        ok &= c.pass();
        jp.push_back(composition_json(c));
        if (c.zero) ++zero;
        else text << line(c);
        if (!c.pass() && c.zero) text << line(c);
    }
    text << pairs.size() << " composable pairs, " << zero << " compose to zero\n";
    json origin = origin_sequence_report(pairs);
    text << "origin sequence " << origin["sequence"].get<std::string>() << ": unresolved (no catalog arrow M(0,0,0,0) -> M(1,0,0,0))\n";
    out.emit(json{{"named", jn},
                  {"square_1A_zero", square.zero},
                  {"pairs", jp},
                  {"origin_sequence", origin},
                  {"graph", edge_list_json(grid)},
                  {"pass", ok}},
             text.str());
    return ok ? 0 : 1;
}

int cmd_dual(const std::string& path, const SearchOptions& opt, const Output& out) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read " + path);
    json j;
    try {
        j = json::parse(f);
    } catch (const std::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
    const json& list = j.is_object() && j.contains("certificates") ? j["certificates"] : j;
    if (!list.is_array()) throw ConfigError(path + ": expected a list of certificates");
    json rows = json::array();
    std::ostringstream text;
    bool ok = true;
    for (const json& c : list) {
        SingularCertificate cert;
        try {
            cert = certificate_from_json(c);
        } catch (const std::exception& e) {
            throw ConfigError(std::string("bad certificate: ") + e.what());
        }
        bool good = dual_pair_check(cert, opt);
        ok &= good;
        rows.push_back({{"mu", wjson(cert.mu)},
                        {"weight", wjson(cert.weight)},
                        {"degree", cert.degree},
                        {"dual_mu", wjson(dual_weight(cert.weight))},
                        {"dual_weight", wjson(dual_weight(cert.mu))},
                        {"found", good}});
        text << (good ? "PASS " : "FAIL ") << "M(" << cert.mu.to_string() << ") <- M(" << cert.weight.to_string()
             << ") degree " << cert.degree << "  dual M(" << dual_weight(cert.weight).to_string() << ") <- M("
             << dual_weight(cert.mu).to_string() << ")\n";
    }
    out.emit(json{{"duals", rows}, {"pass", ok}}, text.str());
    return ok ? 0 : 1;
}

int cmd_s5(const std::string& lambda_s, const std::string& deg_s, const Output& out) {
    std::vector<Weight> lambdas;
    if (lambda_s.empty())
        lambdas = {Weight(0, 0, 0, 0), Weight(1, 0, 0, 0), Weight(0, 1, 0, 0), Weight(0, 0, 1, 0), Weight(0, 0, 0, 1)};
    else
        lambdas.push_back(weight_arg(lambda_s));
    std::vector<int> degrees = parse_range(deg_s);
    for (int d : degrees)
        if (d <= 0 || d % 2) throw ConfigError("S5 degrees are positive and even");
    auto rud = rudakov_vectors();
    json certs = json::array();
    std::ostringstream text;
    for (const Weight& l : lambdas)
        for (int d : degrees)
            for (const SingularCertificate& c : s5_find_singular_vectors(l, d)) {
                std::string name = "unlisted";
                for (const RudakovVector& r : rud)
                    if (r.lambda == l && c.kernel_dim == 1 && proportional(c.vectors[0], r.vector)) name = r.name;
                json jc = s5_certificate_json(c);
                jc["rudakov"] = name;
                certs.push_back(jc);
                text << name << "  M(" << l.to_string() << ") degree " << d << " weight (" << c.weight.to_string()
                     << "): " << verma_module(l)->to_text(c.vectors[0]) << "\n";
            }
    out.emit(json{{"certificates", certs}}, text.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singular vectors and morphisms of finite Verma modules over E(5,10)"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    SearchOptions opt;
    bool long_runs = false;
    bool quick_g1 = false;
    app.add_option("--format", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--output", out.path, "also write the JSON report here");
    app.add_option("--checkpoint", opt.checkpoint, "JSON file of per-weight results, reused on resume");
    app.add_flag("--prune-height", opt.prune_height, "skip weights without a height-d term");
    app.add_option("--dim-cap", opt.dim_cap, "max nonzeros of one linear system (0 = none)");
    app.add_option("--threads", opt.threads, "worker threads (0 = all cores; E510_THREADS overrides)");
    app.add_flag("--no-full-g1", quick_g1, "certify with E1..E4 and x5 d45 only");
    app.add_flag("--long", long_runs, "allow degrees 12..14");

    std::string family = "all", ms = "0..2", ns = "0..2";
    auto* verify = app.add_subcommand("verify-catalog", "check the catalog vectors");
    verify->add_option("--family", family, "family tag or all");
    verify->add_option("--m", ms, "m values, e.g. 0..2");
    verify->add_option("--n", ns, "n values, e.g. 0..2");

    std::string mu_s, deg_s = "1", weight_s;
    auto* search = app.add_subcommand("search", "find singular vectors in M(mu)");
    search->add_option("--mu", mu_s, "highest weight a,b,c,d")->required();
    search->add_option("--degree", deg_s, "degree or range")->required();
    search->add_option("--weight", weight_s, "restrict to one weight");

    int budget = 3;
    std::string sweep_deg = "1..4";
    auto* sweep = app.add_subcommand("sweep", "classification sweep against the catalog");
    sweep->add_option("--budget", budget, "max coordinate sum of mu");
    sweep->add_option("--degree", sweep_deg, "degree range");

    std::string suite = "omega";
    int max_d = 4, random_tuples = 1000;
    unsigned seed = 65;
    auto* ident = app.add_subcommand("identities", "run invariant sweeps");
    ident->add_option("--suite", suite, "omega, fundamental, structure or all")
        ->check(CLI::IsMember({"omega", "fundamental", "structure", "all"}));
    ident->add_option("--max-d", max_d, "tuple length bound");
    ident->add_option("--random", random_tuples, "random tuples of length 5..8");
    ident->add_option("--seed", seed, "random seed");

    std::string grid = "0..2";
    auto* complexes = app.add_subcommand("complexes", "composition identities and complexes");
    complexes->add_option("--grid", grid, "family parameter values");

    std::string certs_path;
    auto* dual = app.add_subcommand("dual", "check dual pairs of certificates");
    dual->add_option("--from-certs", certs_path, "certificate JSON")->required();

    std::string lambda_s, s5_deg = "2,4";
    auto* s5 = app.add_subcommand("s5", "singular vectors of S5 Verma modules");
    s5->add_option("--lambda", lambda_s, "one weight (default: the five of the list)");
    s5->add_option("--degree", s5_deg, "even degrees");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    opt.full_g1 = !quick_g1;

    try {
        if (*verify) return cmd_verify_catalog(family, ms, ns, out);
        if (*search) return cmd_search(mu_s, deg_s, weight_s, long_runs, opt, out);
        if (*sweep) return cmd_sweep(budget, sweep_deg, long_runs, opt, out);
        if (*ident) return cmd_identities(suite, max_d, random_tuples, seed, out);
        if (*complexes) return cmd_complexes(grid, out);
        if (*dual) return cmd_dual(certs_path, opt, out);
        if (*s5) return cmd_s5(lambda_s, s5_deg, out);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
