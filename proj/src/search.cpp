#include "e510/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace e510 {

std::vector<Weight> candidate_weights(const Weight& mu, int d) {
    if (!mu.dominant()) throw std::domain_error("candidate_weights: mu must be dominant");
    return verma_module(mu)->candidate_weights(d);
}

SparseRationalMatrix singular_system(const VermaModule& M, int d, const Weight& nu,
                                     const std::vector<std::uint64_t>& columns, long long dim_cap,
                                     SystemStats* stats) {
    (void)d;
    (void)nu;
    std::vector<std::unordered_map<std::uint64_t, int>> rowid(5);
    std::vector<std::vector<std::pair<int, Rational>>> cols(columns.size());
    int nrows = 0;
    long long nnz = 0;
    const int p45 = pair_index(4, 5);
    for (std::size_t j = 0; j < columns.size(); ++j) {
        VermaElement e = M.zero();
        e.add_key(columns[j], 1);
        for (int op = 0; op < 5; ++op) {
            VermaElement img = op < 4 ? M.act_gl(op + 1, op + 2, e) : M.act_symbol(5, p45, e);
            for (const auto& [k, c] : img.terms()) {
                auto [it, fresh] = rowid[op].try_emplace(k, nrows);
                if (fresh) ++nrows;
                cols[j].emplace_back(it->second, c);
            }
            nnz += static_cast<long long>(img.size());
        }
        if (dim_cap > 0 && nnz > dim_cap)
            throw ResourceError("system for weight " + nu.to_string() + " in degree " + std::to_string(d) +
                                " exceeds the cap of " + std::to_string(dim_cap) + " nonzero entries");
    }
    SparseRationalMatrix m(nrows, static_cast<int>(columns.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, c] : cols[j]) m.add(r, static_cast<int>(j), c);
    if (stats) {
        stats->columns = static_cast<int>(columns.size());
        stats->rows = nrows;
        stats->nonzeros = nnz;
    }
    return m;
}

VermaElement primitive(const VermaElement& w) {
    if (w.is_zero()) return w;
    mpz_class l = 1, g = 0;
    for (const auto& [k, c] : w.terms()) {
        mpq_class q = c.to_mpq();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    for (const auto& [k, c] : w.terms()) {
        mpq_class q = c.to_mpq() * l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    }
    mpq_class s(l, g);
    s.canonicalize();
    if (w.terms().begin()->second.sign() < 0) s = -s;
    VermaElement out = w;
    out *= Rational(s);
    return out;
}

bool proportional(const VermaElement& a, const VermaElement& b) {
    if (a.is_zero() || b.is_zero()) return false;
    if (a.size() != b.size()) return false;
    Rational ratio = a.terms().begin()->second / b.terms().begin()->second;
    VermaElement scaled = b;
    scaled *= ratio;
    return scaled == a;
}

int resolve_threads(int requested) {
    if (const char* env = std::getenv("E510_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

namespace {

nlohmann::json weight_json(const Weight& w) { return nlohmann::json::array({w.c[0], w.c[1], w.c[2], w.c[3]}); }

Weight weight_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("weight must be an array of 4 integers");
    return Weight(j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>());
}

std::optional<SingularCertificate> search_one(const VermaModule& M, int d, const Weight& nu, const SearchOptions& opt) {
    std::vector<std::uint64_t> columns = M.weight_space(d, nu);
    if (columns.empty()) return std::nullopt;
    if (opt.prune_height && d <= 10) {
        bool has_top = std::any_of(columns.begin(), columns.end(),
                                   [d](std::uint64_t k) { return term_monomial(k).height() == d; });
        if (!has_top) return std::nullopt;
    }
    SparseRationalMatrix m = singular_system(M, d, nu, columns, opt.dim_cap);
    std::vector<SparseVector> ker = kernel(m);
    if (ker.empty()) return std::nullopt;
    SingularCertificate cert;
    cert.mu = M.mu();
    cert.degree = d;
    cert.weight = nu;
    cert.kernel_dim = static_cast<int>(ker.size());
    for (const SparseVector& v : ker) {
        VermaElement w = M.zero();
        for (const auto& [c, x] : v) w.add_key(columns[c], x);
        w = primitive(w);
        if (opt.full_g1 && !M.is_singular(w, true).singular)
            throw std::logic_error("kernel vector fails the full g1 check at weight " + nu.to_string());
        cert.vectors.push_back(std::move(w));
    }
    cert.checked_full_g1 = opt.full_g1;
    return cert;
}

std::string checkpoint_key(const Weight& mu, int d, const Weight& nu) {
    return mu.to_string() + "/" + std::to_string(d) + "/" + nu.to_string();
}

class Checkpoint {
public:
    explicit Checkpoint(std::string path) : path_(std::move(path)) {
        if (path_.empty()) return;
        std::ifstream in(path_);
        if (!in) return;
        try {
            in >> data_;
        } catch (const nlohmann::json::exception&) {
            throw ResourceError("checkpoint file " + path_ + " is not valid JSON");
        }
    }

    std::optional<nlohmann::json> lookup(const std::string& key) {
        std::lock_guard<std::mutex> lock(mu_);
        if (path_.empty() || !data_.contains(key)) return std::nullopt;
        return data_[key];
    }

    void store(const std::string& key, const nlohmann::json& value) {
        if (path_.empty()) return;
        std::lock_guard<std::mutex> lock(mu_);
        data_[key] = value;
        std::string tmp = path_ + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) throw ResourceError("cannot write checkpoint " + tmp);
            out << data_.dump();
        }
        std::filesystem::rename(tmp, path_);
    }

private:
    std::string path_;
    std::mutex mu_;
    nlohmann::json data_ = nlohmann::json::object();
};

}  // namespace

std::vector<SingularCertificate> find_singular_vectors(const Weight& mu, int d, std::optional<Weight> nu,
                                                       const SearchOptions& opt) {
    if (!mu.dominant()) throw std::domain_error("find_singular_vectors: mu must be dominant");
    if (d < 1) throw std::domain_error("find_singular_vectors: degree must be positive");
    auto M = verma_module(mu);
    std::vector<Weight> targets;
    if (nu) {
        if (nu->dominant()) targets.push_back(*nu);
    } else {
        targets = M->candidate_weights(d);
    }

    Checkpoint ckpt(opt.checkpoint);
    std::vector<std::optional<SingularCertificate>> results(targets.size());
    std::vector<std::string> errors(targets.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < targets.size(); i = next++) {
            std::string key = checkpoint_key(mu, d, targets[i]);
            try {
                if (auto saved = ckpt.lookup(key)) {
                    if (!saved->is_null()) results[i] = certificate_from_json(*saved);
                    continue;
                }
                results[i] = search_one(*M, d, targets[i], opt);
                ckpt.store(key, results[i] ? certificate_json(*results[i]) : nlohmann::json());
            } catch (const ResourceError& e) {
                errors[i] = e.what();
            }
        }
    };
    int nthreads = std::min<int>(resolve_threads(opt.threads), static_cast<int>(std::max<std::size_t>(targets.size(), 1)));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const std::string& e : errors)
        if (!e.empty()) throw ResourceError(e);
    std::vector<SingularCertificate> out;
    for (auto& r : results)
        if (r) out.push_back(std::move(*r));
    return out;
}

bool dual_pair_check(const SingularCertificate& cert, const SearchOptions& opt) {
    SearchOptions o = opt;
    o.checkpoint.clear();
    auto dual = find_singular_vectors(dual_weight(cert.weight), cert.degree, dual_weight(cert.mu), o);
    return !dual.empty();
}

nlohmann::json certificate_json(const SingularCertificate& c) {
    auto M = verma_module(c.mu);
    nlohmann::ordered_json j;
    j["mu"] = weight_json(c.mu);
    j["degree"] = c.degree;
    j["weight"] = weight_json(c.weight);
    j["kernel_dim"] = c.kernel_dim;
    nlohmann::ordered_json vecs = nlohmann::ordered_json::array();
    for (const VermaElement& v : c.vectors) {
        nlohmann::ordered_json e;
        e["text"] = M->to_text(v);
        e["terms"] = nlohmann::ordered_json::parse(M->to_json(v));
        vecs.push_back(e);
    }
    j["vectors"] = vecs;
    j["full_g1"] = c.checked_full_g1;
    j["tool_version"] = kToolVersion;
    return nlohmann::json::parse(j.dump());
}

SingularCertificate certificate_from_json(const nlohmann::json& j) {
    SingularCertificate c;
    c.mu = weight_from_json(j.at("mu"));
    c.degree = j.at("degree").get<int>();
    c.weight = weight_from_json(j.at("weight"));
    c.kernel_dim = j.at("kernel_dim").get<int>();
    c.checked_full_g1 = j.value("full_g1", false);
    auto M = verma_module(c.mu);
    for (const auto& e : j.at("vectors")) {
        VermaElement w = M->zero();
        for (const auto& t : e.at("terms")) {
            std::array<int, 5> p = t.at("partials").get<std::array<int, 5>>();
            std::uint16_t mask = 0;
            for (const auto& f : t.at("forms")) {
                int a = f[0].get<int>(), b = f[1].get<int>();
                mask |= static_cast<std::uint16_t>(1u << pair_index(a, b));
            }
            w.add(PbwMonomial(p, mask), t.at("irrep_index").get<int>(), Rational(t.at("coeff").get<std::string>()));
        }
        c.vectors.push_back(std::move(w));
    }
    return c;
}

}  // namespace e510
