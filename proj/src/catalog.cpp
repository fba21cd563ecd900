#include "e510/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "catalog_data.hpp"

namespace e510 {

namespace {

nlohmann::json wjson(const Weight& w) { return nlohmann::json::array({w.c[0], w.c[1], w.c[2], w.c[3]}); }

// "x5*^3", "" for a zero power, "x5*" for the first.
std::string pw(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

std::string amb(std::initializer_list<std::string> parts) {
    std::string s;
    for (const std::string& p : parts) {
        if (p.empty()) continue;
        if (!s.empty()) s += " ";
        s += p;
    }
    return s.empty() ? "1" : s;
}

std::string pair_name(int i, int j) { return std::to_string(i) + std::to_string(j); }

// The degree-4 template with the family parameter substituted.
std::string fill_4e(int n) {
    static const std::regex ph(R"(x5\*\^<n(\+(\d))?>)");
    std::string src = catalog_data::kW4ETemplate;
    std::string out;
    auto it = std::sregex_iterator(src.begin(), src.end(), ph);
    std::size_t last = 0;
    for (; it != std::sregex_iterator(); ++it) {
        const std::smatch& m = *it;
        out.append(src, last, m.position(0) - last);
        int e = n + (m[2].matched ? std::stoi(m[2].str()) : 0);
        out += pw("x5*", e);
        last = m.position(0) + m.length(0);
    }
    out.append(src, last, std::string::npos);
    // A line whose ambient part became empty needs an explicit unit.
    static const std::regex bare(R"(\|\s*\n)");
    return std::regex_replace(out, bare, "| 1\n");
}

VermaElement with_prefix(const VermaModule& M, const std::string& prefix, const VermaElement& body) {
    return M.left_multiply(parse_uminus(prefix), body);
}

}  // namespace

std::string CatalogFamily::label() const {
    bool um = family_uses_m(tag), un = family_uses_n(tag);
    if (!um && !un) return tag;
    std::string s = tag + "(";
    if (um) s += "m=" + std::to_string(m);
    if (um && un) s += ",";
    if (un) s += "n=" + std::to_string(n);
    return s + ")";
}

const std::vector<std::string>& family_tags() {
    static const std::vector<std::string> tags = {"1A", "1B",  "1C", "2BA", "2CB", "2CA", "3CBA",
                                                  "4D", "4E",  "5CD", "5EA", "7",   "11"};
    return tags;
}

bool family_uses_m(const std::string& t) { return t == "1A" || t == "1B" || t == "1C" || t == "2BA" || t == "4D"; }
bool family_uses_n(const std::string& t) { return t == "1A" || t == "1B" || t == "1C" || t == "2CB" || t == "4E"; }

CatalogFamily catalog_family(const std::string& tag, int m, int n) {
    const auto& tags = family_tags();
    if (std::find(tags.begin(), tags.end(), tag) == tags.end()) throw std::domain_error("unknown family " + tag);
    if (m < 0 || n < 0) throw std::domain_error("negative family parameter");
    if (m != 0 && !family_uses_m(tag)) throw std::domain_error("family " + tag + " takes no m");
    if (n != 0 && !family_uses_n(tag)) throw std::domain_error("family " + tag + " takes no n");
    CatalogFamily f{tag, m, n, {}, {}, 0};
    auto set = [&](Weight mu, Weight la, int d) {
        f.mu = mu;
        f.weight = la;
        f.degree = d;
    };
    if (tag == "1A") set({m, n, 0, 0}, {m, n + 1, 0, 0}, 1);
    else if (tag == "1B") set({m, 0, 0, n + 1}, {m + 1, 0, 0, n}, 1);
    else if (tag == "1C") set({0, 0, m + 1, n}, {0, 0, m, n}, 1);
    else if (tag == "2BA") set({m, 0, 0, 1}, {m + 1, 1, 0, 0}, 2);
    else if (tag == "2CB") set({0, 0, 1, n + 1}, {1, 0, 0, n}, 2);
    else if (tag == "2CA") set({0, 0, 1, 0}, {0, 1, 0, 0}, 2);
    else if (tag == "3CBA") set({0, 0, 1, 1}, {1, 1, 0, 0}, 3);
    else if (tag == "4D") set({m, 0, 0, 0}, {m + 3, 0, 0, 0}, 4);
    else if (tag == "4E") set({0, 0, 0, n + 3}, {0, 0, 0, n}, 4);
    else if (tag == "5CD") set({0, 0, 1, 0}, {3, 0, 0, 0}, 5);
    else if (tag == "5EA") set({0, 0, 0, 3}, {0, 1, 0, 0}, 5);
    else if (tag == "7") set({0, 0, 0, 2}, {2, 0, 0, 0}, 7);
    else set({0, 0, 0, 1}, {1, 0, 0, 0}, 11);
    return f;
}

std::vector<CatalogFamily> family_grid(const std::string& tag, const std::vector<int>& ms, const std::vector<int>& ns) {
    std::vector<int> mv = family_uses_m(tag) ? ms : std::vector<int>{0};
    std::vector<int> nv = family_uses_n(tag) ? ns : std::vector<int>{0};
    std::vector<CatalogFamily> out;
    for (int m : mv)
        for (int n : nv) out.push_back(catalog_family(tag, m, n));
    return out;
}

std::vector<CatalogFamily> catalog_in_range(int budget, int max_degree, int min_degree) {
    std::vector<int> r;
    for (int i = 0; i <= budget; ++i) r.push_back(i);
    std::vector<CatalogFamily> out;
    for (const std::string& t : family_tags())
        for (const CatalogFamily& f : family_grid(t, r, r))
            if (f.mu.sum() <= budget && f.degree >= min_degree && f.degree <= max_degree) out.push_back(f);
    return out;
}

VermaElement known_vector(const CatalogFamily& f) {
    auto M = verma_module(f.mu);
    const int m = f.m, n = f.n;
    std::ostringstream s;
    if (f.tag == "1A") {
        s << "d12 | " << amb({pw("x1", m), pw("x12", n)});
        return M->parse(s.str());
    }
    if (f.tag == "1B") {
        s << "d15 | " << amb({pw("x1", m), pw("x5*", n + 1)});
        for (int j = 4; j >= 2; --j)
            s << " + d1" << j << " | " << amb({pw("x1", m), "x" + std::to_string(j) + "*", pw("x5*", n)});
        return M->parse(s.str(), true);
    }
    if (f.tag == "1C") {
        bool first = true;
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                if (!first) s << " + ";
                first = false;
                s << "d" << pair_name(i, j) << " | " << amb({"x" + pair_name(i, j) + "*", pw("x45*", m), pw("x5*", n)});
            }
        return M->parse(s.str(), true);
    }
    if (f.tag == "2BA") {
        for (int j = 2; j <= 5; ++j)
            s << (j > 2 ? " + " : "") << "d12 d1" << j << " | " << amb({pw("x1", m), "x" + std::to_string(j) + "*"});
        return M->parse(s.str(), true);
    }
    if (f.tag == "2CB") {
        bool first = true;
        for (int j = 2; j <= 5; ++j)
            for (int h = 1; h <= 5; ++h)
                for (int k = h + 1; k <= 5; ++k) {
                    if (!first) s << " + ";
                    first = false;
                    s << "d1" << j << " d" << pair_name(h, k) << " | "
                      << amb({"x" + pair_name(h, k) + "*", "x" + std::to_string(j) + "*", pw("x5*", n)});
                }
        return M->parse(s.str(), true);
    }
    if (f.tag == "2CA") {
        bool first = true;
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                if (!first) s << " + ";
                first = false;
                s << "d12 d" << pair_name(i, j) << " | x" << pair_name(i, j) << "*";
            }
        return M->parse(s.str(), true);
    }
    if (f.tag == "3CBA") {
        bool first = true;
        for (int j = 2; j <= 5; ++j)
            for (int k = 1; k <= 5; ++k)
                for (int l = k + 1; l <= 5; ++l) {
                    if (!first) s << " + ";
                    first = false;
                    s << "d12 d1" << j << " d" << pair_name(k, l) << " | x" << j << "* x" << pair_name(k, l) << "*";
                }
        return M->parse(s.str(), true);
    }
    if (f.tag == "4D") {
        s << "d12 d13 d14 d15 | " << amb({pw("x1", m)});
        return M->parse(s.str());
    }
    if (f.tag == "4E") return M->parse(fill_4e(n));
    if (f.tag == "5CD") {
        // Summed over 1<i<j: the d34 term is needed for E2, and d1j terms die against the prefix.
        bool first = true;
        for (int i = 2; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                if (!first) s << " + ";
                first = false;
                s << "d" << pair_name(i, j) << " | x" << pair_name(i, j) << "*";
            }
        return with_prefix(*M, "d12 d13 d14 d15", M->parse(s.str(), true));
    }
    if (f.tag == "5EA") return with_prefix(*M, "d12", M->parse(fill_4e(0)));
    if (f.tag == "7") return with_prefix(*M, "d12 d13 d14 d15", M->parse(catalog_data::kW7Body));
    return with_prefix(*M, "d12 d13 d14 d15", M->parse(catalog_data::kW11Body));
}

MorphismEvaluator catalog_morphism(const CatalogFamily& f) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<MorphismEvaluator>> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(f.label());
        if (it != cache.end()) return *it->second;
    }
    auto phi = std::make_shared<MorphismEvaluator>(MorphismEvaluator::from_singular(known_vector(f), f.weight, false));
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(f.label(), phi);
    return *phi;
}

FamilyCheck verify_family(const CatalogFamily& f) {
    FamilyCheck c;
    c.family = f;
    try {
        auto M = verma_module(f.mu);
        VermaElement w = known_vector(f);
        c.terms = static_cast<int>(w.size());
        if (w.is_zero()) {
            c.detail = "vector is zero";
            return c;
        }
        SingularReport r = M->is_singular(w, true);
        c.singular = r.singular;
        if (!r.singular && !r.residuals.empty())
            c.detail = r.residuals.front().first + " -> " + M->to_text(r.residuals.front().second);
        c.weight_ok = true;
        for (const auto& [k, v] : w.terms())
            if (M->term_weight(k) != f.weight) c.weight_ok = false;
        c.degree_ok = w.degrees() == std::vector<int>{f.degree};
        c.height = height(w);
        c.leading_nonzero = !leading_term(w, M->irrep()).is_zero();
    } catch (const std::exception& e) {
        c.detail = e.what();
    }
    return c;
}

nlohmann::json family_check_json(const FamilyCheck& c) {
    nlohmann::ordered_json j;
    j["family"] = c.family.label();
    j["mu"] = wjson(c.family.mu);
    j["weight"] = wjson(c.family.weight);
    j["degree"] = c.family.degree;
    j["height"] = c.height;
    j["terms"] = c.terms;
    j["singular"] = c.singular;
    j["weight_ok"] = c.weight_ok;
    j["degree_ok"] = c.degree_ok;
    j["leading_nonzero"] = c.leading_nonzero;
    j["pass"] = c.pass();
    if (!c.detail.empty()) j["detail"] = c.detail;
    return nlohmann::json::parse(j.dump());
}

CompositionCheck check_composition(const std::vector<CatalogFamily>& chain, const std::optional<CatalogFamily>& expected) {
    if (chain.empty()) throw std::domain_error("empty composition");
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (chain[i].weight != chain[i - 1].mu)
            throw std::domain_error("not composable: " + chain[i - 1].label() + " then " + chain[i].label());
    CompositionCheck c;
    c.chain = chain;
    c.expected = expected;
    // A morphism of Verma modules is fixed by the image of the source hwv.
    VermaElement x = catalog_morphism(chain[0]).hwv_image();
    for (std::size_t i = 1; i < chain.size() && !x.is_zero(); ++i) x = catalog_morphism(chain[i]).apply(x);
    c.zero = x.is_zero();
    if (expected && !c.zero) {
        if (expected->mu != chain.back().mu || expected->weight != chain.front().weight)
            throw std::domain_error("expected composite has the wrong weights");
        VermaElement w = known_vector(*expected);
        c.matches = proportional(x, w);
        if (c.matches) {
            const auto& [k, a] = *x.terms().begin();
            c.scalar = a / w.terms().at(k);
        }
    }
    return c;
}

std::vector<CompositionCheck> named_compositions(const std::vector<int>& grid) {
    std::vector<CompositionCheck> out;
    auto F = [](const std::string& t, int m = 0, int n = 0) { return catalog_family(t, m, n); };
    for (int m : grid) out.push_back(check_composition({F("1A", m + 1, 0), F("1B", m, 0)}, F("2BA", m)));
    for (int n : grid) out.push_back(check_composition({F("1B", 0, n), F("1C", 0, n + 1)}, F("2CB", 0, n)));
    out.push_back(check_composition({F("1A", 0, 0), F("1C", 0, 0)}, F("2CA")));
    out.push_back(check_composition({F("1A", 1, 0), F("1B", 0, 0), F("1C", 0, 1)}, F("3CBA")));
    out.push_back(check_composition({F("4D", 0), F("1C", 0, 0)}, F("5CD")));
    out.push_back(check_composition({F("1A", 0, 0), F("4E", 0, 0)}, F("5EA")));
    return out;
}

namespace {

// Named composites split into their factors, applied first to last; other members stand alone.
std::vector<std::string> factors(const CatalogFamily& f) {
    auto F = [](const std::string& t, int m = 0, int n = 0) { return catalog_family(t, m, n).label(); };
    if (f.tag == "2BA") return {F("1A", f.m + 1, 0), F("1B", f.m, 0)};
    if (f.tag == "2CB") return {F("1B", 0, f.n), F("1C", 0, f.n + 1)};
    if (f.tag == "2CA") return {F("1A"), F("1C")};
    if (f.tag == "3CBA") return {F("1A", 1, 0), F("1B"), F("1C", 0, 1)};
    if (f.tag == "5CD") return {F("4D"), F("1C")};
    if (f.tag == "5EA") return {F("1A"), F("4E")};
    return {f.label()};
}

}  // namespace

std::vector<CompositionCheck> composable_pairs(const std::vector<int>& grid) {
    std::vector<CatalogFamily> all;
    for (const std::string& t : family_tags())
        for (const CatalogFamily& f : family_grid(t, grid, grid)) all.push_back(f);
    // A pair is named when its factors regroup to those of a named composite
    // (so 2CB o 1A and 1C o 2BA both count as 3CBA).
    std::map<std::vector<std::string>, CatalogFamily> named;
    for (const char* t : {"2BA", "2CB", "2CA", "3CBA", "5CD", "5EA"})
        for (const CatalogFamily& f : family_grid(t, grid, grid)) named.emplace(factors(f), f);
    std::vector<CompositionCheck> out;
    for (const CatalogFamily& a : all)
        for (const CatalogFamily& b : all) {
            if (a.mu != b.weight) continue;
            std::vector<std::string> key = factors(a);
            for (const std::string& s : factors(b)) key.push_back(s);
            auto it = named.find(key);
            std::optional<CatalogFamily> e;
            if (it != named.end()) e = it->second;
            out.push_back(check_composition({a, b}, e));
        }
    return out;
}

nlohmann::json composition_json(const CompositionCheck& c) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json ch = nlohmann::ordered_json::array();
    for (const CatalogFamily& f : c.chain) ch.push_back(f.label());
    j["chain"] = ch;
    j["source"] = wjson(c.chain.front().weight);
    j["target"] = wjson(c.chain.back().mu);
    j["zero"] = c.zero;
    if (c.expected) {
        j["expected"] = c.expected->label();
        j["matches"] = c.matches;
        if (c.matches) j["scalar"] = c.scalar.to_string();
    }
    j["pass"] = c.pass();
    return nlohmann::json::parse(j.dump());
}

nlohmann::json origin_sequence_report(const std::vector<CompositionCheck>& pairs) {
    const Weight origin(0, 0, 0, 0), from(0, 1, 0, 0), to(1, 0, 0, 0);
    nlohmann::ordered_json j;
    j["sequence"] = "M(0,1,0,0) -> M(0,0,0,0) -> M(1,0,0,0)";
    j["status"] = "unresolved";
    bool second = false;
    for (const std::string& t : family_tags())
        for (const CatalogFamily& f : family_grid(t, {0, 1, 2, 3}, {0, 1, 2, 3}))
            if (f.weight == origin && f.mu == to) second = true;
    j["second_arrow_in_catalog"] = second;
    nlohmann::ordered_json through = nlohmann::ordered_json::array();
    for (const CompositionCheck& c : pairs)
        if (c.chain.size() == 2 && c.chain[0].mu == origin && c.chain[0].weight == from)
            through.push_back(nlohmann::ordered_json::parse(composition_json(c).dump()));
    j["pairs_from_M(0,1,0,0)_through_origin"] = through;
    return nlohmann::json::parse(j.dump());
}

nlohmann::json edge_list_json(const std::vector<int>& grid) {
    std::map<Weight, int> node_id;
    nlohmann::json edges = nlohmann::json::array();
    std::vector<CatalogFamily> all;
    for (const std::string& t : family_tags())
        for (const CatalogFamily& f : family_grid(t, grid, grid)) all.push_back(f);
    for (const CatalogFamily& f : all) {
        node_id.emplace(f.weight, 0);
        node_id.emplace(f.mu, 0);
    }
    int id = 0;
    nlohmann::json nodes = nlohmann::json::array();
    for (auto& [w, i] : node_id) {
        i = id++;
        nodes.push_back({{"id", i}, {"weight", wjson(w)}});
    }
    for (const CatalogFamily& f : all)
        edges.push_back({{"family", f.label()},
                         {"from", node_id[f.weight]},
                         {"to", node_id[f.mu]},
                         {"degree", f.degree}});
    return {{"nodes", nodes}, {"edges", edges}};
}

SweepReport classification_sweep(int budget, int max_degree, const SearchOptions& opt, int min_degree) {
    SweepReport r;
    r.budget = budget;
    r.min_degree = min_degree;
    r.max_degree = max_degree;
    std::vector<CatalogFamily> expected = catalog_in_range(budget, max_degree, min_degree);
    std::vector<bool> found(expected.size(), false);
    for (int a = 0; a <= budget; ++a)
        for (int b = 0; a + b <= budget; ++b)
            for (int c = 0; a + b + c <= budget; ++c)
                for (int d = 0; a + b + c + d <= budget; ++d)
                    for (int deg = min_degree; deg <= max_degree; ++deg) {
                        SweepCell cell;
                        cell.mu = Weight(a, b, c, d);
                        cell.degree = deg;
                        try {
                            cell.certificates = find_singular_vectors(cell.mu, deg, std::nullopt, opt);
                        } catch (const ResourceError& e) {
                            cell.error = e.what();
                            r.errors.push_back("M(" + cell.mu.to_string() + ") degree " + std::to_string(deg) + ": " + e.what());
                        }
                        for (const SingularCertificate& cert : cell.certificates) {
                            std::vector<std::size_t> hits;
                            for (std::size_t i = 0; i < expected.size(); ++i)
                                if (expected[i].mu == cert.mu && expected[i].weight == cert.weight && expected[i].degree == cert.degree)
                                    hits.push_back(i);
                            std::string where = "M(" + cert.mu.to_string() + ") degree " + std::to_string(cert.degree) +
                                                " weight (" + cert.weight.to_string() + ")";
                            bool ok = hits.size() == 1 && cert.kernel_dim == 1 &&
                                      proportional(cert.vectors.front(), known_vector(expected[hits[0]]));
                            if (ok) {
                                found[hits[0]] = true;
                                r.matched.push_back(expected[hits[0]].label());
                            } else {
                                r.unexplained.push_back(where + " kernel " + std::to_string(cert.kernel_dim));
                            }
                        }
                        r.cells.push_back(std::move(cell));
                    }
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (!found[i]) r.missing.push_back(expected[i].label());
    return r;
}

nlohmann::json sweep_json(const SweepReport& r) {
    nlohmann::ordered_json j;
    j["budget"] = r.budget;
    j["degree_min"] = r.min_degree;
    j["degree_max"] = r.max_degree;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const SweepCell& c : r.cells) {
        if (c.certificates.empty() && c.error.empty()) continue;
        nlohmann::ordered_json e;
        e["mu"] = wjson(c.mu);
        e["degree"] = c.degree;
        nlohmann::ordered_json ws = nlohmann::ordered_json::array();
        for (const SingularCertificate& s : c.certificates)
            ws.push_back({{"weight", wjson(s.weight)}, {"kernel_dim", s.kernel_dim}});
        e["certificates"] = ws;
        if (!c.error.empty()) e["error"] = c.error;
        cells.push_back(e);
    }
    j["cells_searched"] = r.cells.size();
    j["hits"] = cells;
    j["diff"] = {{"matched", r.matched}, {"unexplained", r.unexplained}, {"missing", r.missing}, {"errors", r.errors}};
    j["pass"] = r.pass();
    return nlohmann::json::parse(j.dump());
}

}  // namespace e510
