#include "e510/sl5.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

#include "e510/linalg.hpp"
#include "e510/text.hpp"
#include "e510/uminus.hpp"

namespace e510 {

int Weight::lambda(int i, int j) const {
    int s = 0;
    for (int k = i; k < j; ++k) s += c[k - 1];
    return s;
}

std::string Weight::to_string() const {
    return std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + "," +
           std::to_string(c[3]);
}

Weight operator+(const Weight& a, const Weight& b) {
    return Weight(a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]);
}

Weight operator-(const Weight& a, const Weight& b) {
    return Weight(a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]);
}

Weight to_sl(const GlWeight& w) { return Weight(w[0] - w[1], w[1] - w[2], w[2] - w[3], w[3] - w[4]); }

Weight parse_weight(const std::string& s) {
    std::vector<int> v = text::parse_int_list(s);
    if (v.size() != 4) throw std::invalid_argument("weight needs four coordinates: '" + s + "'");
    return Weight(v[0], v[1], v[2], v[3]);
}

Weight dual_weight(const Weight& w) { return Weight(w.c[3], w.c[2], w.c[1], w.c[0]); }

long long weyl_dim(const Weight& w) {
    if (!w.dominant()) throw std::domain_error("weyl_dim: weight not dominant");
    // prod_{i<j} (l_ij + j - i) / (j - i), accumulated exactly
    mpq_class r = 1;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) r *= mpq_class(w.lambda(i, j) + j - i, j - i);
    r.canonicalize();
    if (r.get_den() != 1) throw std::logic_error("weyl_dim: non-integral");
    return r.get_num().get_si();
}

int var_x(int i) { return i - 1; }
int var_x2(int i, int j) { return 5 + pair_index(i, j); }
int var_xs2(int i, int j) { return 15 + pair_index(i, j); }
int var_xs(int i) { return 24 + i; }

std::string var_name(int v) {
    if (v < 5) return "x" + std::to_string(v + 1);
    if (v < 15) return "x" + pair_name(v - 5);
    if (v < 25) return "x" + pair_name(v - 15) + "*";
    return "x" + std::to_string(v - 24) + "*";
}

void poly_add(AmbientPoly& p, const AmbientMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, ins] = p.try_emplace(m, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

void poly_add(AmbientPoly& p, const AmbientPoly& q, const Rational& c) {
    for (const auto& [m, v] : q) poly_add(p, m, v * c);
}

GlWeight ambient_weight(const AmbientMonomial& m) {
    GlWeight w{};
    for (int i = 1; i <= 5; ++i) {
        w[i - 1] += m[var_x(i)];
        w[i - 1] -= m[var_xs(i)];
    }
    for (int p = 0; p < kPairs; ++p) {
        FormPair f = pair_at(p);
        int e = m[5 + p] - m[15 + p];
        w[f.i - 1] += e;
        w[f.j - 1] += e;
    }
    return w;
}

std::string ambient_text(const AmbientMonomial& m) {
    std::string out;
    for (int v = 0; v < kAmbientVars; ++v) {
        if (!m[v]) continue;
        if (!out.empty()) out += ' ';
        out += var_name(v);
        if (m[v] > 1) out += "^" + std::to_string(m[v]);
    }
    return out.empty() ? "1" : out;
}

std::string poly_text(const AmbientPoly& p) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) out += "-";
        } else {
            out += a.sign() < 0 ? " - " : " + ";
        }
        if (a.sign() < 0) a = -a;
        std::string mt = ambient_text(m);
        if (!a.is_one()) {
            out += a.to_string();
            if (mt != "1") out += " " + mt;
        } else {
            out += mt;
        }
        first = false;
    }
    return out;
}

std::pair<AmbientMonomial, int> parse_ambient_monomial(const std::string& s) {
    AmbientMonomial m{};
    int sign = 1;
    for (const std::string& tok : text::tokens(s)) {
        if (tok == "1") continue;
        std::string body = tok;
        int power = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            body = tok.substr(0, caret);
            power = std::stoi(tok.substr(caret + 1));
        }
        bool star = !body.empty() && body.back() == '*';
        if (star) body.pop_back();
        int var = -1;
        int digits_at = 1;
        if (!body.empty() && body[0] == 'f') star = true;
        if (body.empty() || (body[0] != 'x' && body[0] != 'f'))
            throw std::invalid_argument("unknown ambient symbol '" + tok + "'");
        std::string idx = body.substr(digits_at);
        for (char ch : idx)
            if (ch < '1' || ch > '5') throw std::invalid_argument("bad index in '" + tok + "'");
        if (idx.size() == 1) {
            int i = idx[0] - '0';
            var = star ? var_xs(i) : var_x(i);
        } else if (idx.size() == 2) {
            int i = idx[0] - '0', j = idx[1] - '0';
            if (i == j) return {AmbientMonomial{}, 0};
            if (i > j) {
                std::swap(i, j);
                if (power % 2) sign = -sign;
            }
            var = star ? var_xs2(i, j) : var_x2(i, j);
        } else {
            throw std::invalid_argument("bad ambient symbol '" + tok + "'");
        }
        m[var] = static_cast<std::uint8_t>(m[var] + power);
    }
    return {m, sign};
}

AmbientPoly parse_ambient(const std::string& s) {
    AmbientPoly p;
    for (const auto& [sign, term] : text::split_terms(s)) {
        Rational c(sign);
        std::string rest;
        for (const std::string& tok : text::tokens(term)) {
            if (text::is_rational_token(tok) && tok != "1")
                c *= Rational(tok);
            else
                rest += tok + " ";
        }
        auto [m, sg] = parse_ambient_monomial(rest);
        poly_add(p, m, c * Rational(sg));
    }
    return p;
}

namespace {

// Image of one generating symbol under e_ab: list of (variable, sign).
std::vector<std::pair<int, int>> act_on_var(int a, int b, int v) {
    std::vector<std::pair<int, int>> out;
    auto pair_var = [&](int base, int i, int j, int s) {
        if (i == j) return;
        if (i < j)
            out.emplace_back(base + pair_index(i, j), s);
        else
            out.emplace_back(base + pair_index(j, i), -s);
    };
    if (v < 5) {
        if (b == v + 1) out.emplace_back(var_x(a), 1);
    } else if (v < 15) {
        FormPair f = pair_at(v - 5);
        if (b == f.i) pair_var(5, a, f.j, 1);
        if (b == f.j) pair_var(5, f.i, a, 1);
    } else if (v < 25) {
        FormPair f = pair_at(v - 15);
        if (a == f.i) pair_var(15, b, f.j, -1);
        if (a == f.j) pair_var(15, f.i, b, -1);
    } else {
        if (a == v - 24) out.emplace_back(var_xs(b), -1);
    }
    return out;
}

}  // namespace

AmbientPoly act_ambient(int a, int b, const AmbientPoly& p) {
    AmbientPoly out;
    for (const auto& [m, c] : p) {
        for (int v = 0; v < kAmbientVars; ++v) {
            if (!m[v]) continue;
            for (auto [w, s] : act_on_var(a, b, v)) {
                AmbientMonomial n = m;
                n[v] -= 1;
                n[w] += 1;
                poly_add(out, n, c * Rational(s * m[v]));
            }
        }
    }
    return out;
}

void AmbientSolver::reduce(AmbientPoly& r, std::map<int, Rational>& combo) const {
    for (const Row& row : rows_) {
        auto it = r.find(row.pivot);
        if (it == r.end()) continue;
        Rational f = it->second / row.poly.at(row.pivot);
        poly_add(r, row.poly, -f);
        for (const auto& [j, v] : row.combo) {
            Rational& slot = combo[j];
            slot += f * v;
            if (slot.is_zero()) combo.erase(j);
        }
    }
}

bool AmbientSolver::insert(const AmbientPoly& v) {
    AmbientPoly r = v;
    std::map<int, Rational> combo;
    reduce(r, combo);
    if (r.empty()) return false;
    // r = v - sum combo_j b_j
    Row row;
    row.pivot = r.begin()->first;
    row.poly = std::move(r);
    for (auto& [j, c] : combo) row.combo[j] = -c;
    row.combo[count_] = 1;
    rows_.push_back(std::move(row));
    ++count_;
    return true;
}

bool AmbientSolver::coordinates(const AmbientPoly& v, std::map<int, Rational>& out) const {
    AmbientPoly r = v;
    out.clear();
    reduce(r, out);
    return r.empty();
}

IrrepModule::IrrepModule(const Weight& lambda) : lambda_(lambda) {
    if (!lambda.dominant()) throw std::domain_error("build_irrep: weight " + lambda.to_string() + " not dominant");
    AmbientMonomial hw{};
    hw[var_x(1)] = static_cast<std::uint8_t>(lambda.c[0]);
    hw[var_x2(1, 2)] = static_cast<std::uint8_t>(lambda.c[1]);
    hw[var_xs2(4, 5)] = static_cast<std::uint8_t>(lambda.c[2]);
    hw[var_xs(5)] = static_cast<std::uint8_t>(lambda.c[3]);
    AmbientPoly v0;
    v0[hw] = 1;

    auto add_vector = [&](AmbientPoly v, std::pair<int, int> parent) {
        GlWeight gw = ambient_weight(v.begin()->first);
        Weight w = to_sl(gw);
        if (!solvers_[w].insert(v)) return;
        int idx = static_cast<int>(basis_.size());
        basis_.push_back(std::move(v));
        gl_weights_.push_back(gw);
        lowering_.push_back(parent);
        by_weight_[w].push_back(idx);
    };
    add_vector(v0, {-1, 0});
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        for (int i = 1; i <= 4; ++i) {
            AmbientPoly img = act_ambient(i + 1, i, basis_[k]);
            if (!img.empty()) add_vector(std::move(img), {static_cast<int>(k), i});
        }
    }
    // Local weight-space indices of the solvers are positions inside by_weight_.
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; b <= 5; ++b) {
            auto& cols = action_[(a - 1) * 5 + (b - 1)];
            cols.resize(basis_.size());
            for (std::size_t k = 0; k < basis_.size(); ++k) {
                AmbientPoly img = act_ambient(a, b, basis_[k]);
                if (img.empty()) continue;
                std::map<int, Rational> c = coordinates(img);
                for (auto& [j, v] : c) cols[k].emplace_back(j, v);
            }
        }
    }
}

std::map<int, Rational> IrrepModule::act(int a, int b, const std::map<int, Rational>& v) const {
    std::map<int, Rational> out;
    for (const auto& [i, c] : v)
        for (const auto& [j, x] : act(a, b, i)) {
            Rational& slot = out[j];
            slot += c * x;
            if (slot.is_zero()) out.erase(j);
        }
    return out;
}

const std::vector<int>& IrrepModule::indices_of_weight(const Weight& w) const {
    static const std::vector<int> empty;
    auto it = by_weight_.find(w);
    return it == by_weight_.end() ? empty : it->second;
}

std::map<int, Rational> IrrepModule::coordinates(const AmbientPoly& p) const {
    std::map<int, Rational> out;
    // Split by weight; each homogeneous part must lie in F.
    std::map<Weight, AmbientPoly> parts;
    for (const auto& [m, c] : p) parts[to_sl(ambient_weight(m))][m] = c;
    for (const auto& [w, part] : parts) {
        auto it = solvers_.find(w);
        std::map<int, Rational> local;
        if (it == solvers_.end() || !it->second.coordinates(part, local))
            throw std::domain_error("vector outside F(" + lambda_.to_string() + ")");
        const std::vector<int>& idx = by_weight_.at(w);
        for (const auto& [j, v] : local) out[idx[j]] += v;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

bool IrrepModule::contains(const AmbientPoly& p) const {
    try {
        (void)coordinates(p);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

namespace {

Rational fischer_weight(const AmbientMonomial& m) {
    mpz_class f = 1;
    for (auto e : m) {
        mpz_class t;
        mpz_fac_ui(t.get_mpz_t(), e);
        f *= t;
    }
    return Rational(mpq_class(f));
}

Rational fischer(const AmbientPoly& a, const AmbientPoly& b) {
    Rational s;
    for (const auto& [m, c] : a) {
        auto it = b.find(m);
        if (it != b.end()) s += c * it->second * fischer_weight(m);
    }
    return s;
}

}  // namespace

std::map<int, Rational> IrrepModule::project(const AmbientPoly& p) const {
    std::map<Weight, AmbientPoly> parts;
    for (const auto& [m, c] : p) parts[to_sl(ambient_weight(m))][m] = c;
    std::map<int, Rational> out;
    for (const auto& [w, part] : parts) {
        auto it = by_weight_.find(w);
        if (it == by_weight_.end()) continue;
        const std::vector<int>& idx = it->second;
        std::size_t k = idx.size();
        std::vector<std::vector<Rational>> g(k, std::vector<Rational>(k));
        std::vector<Rational> rhs(k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = i; j < k; ++j) g[i][j] = g[j][i] = fischer(basis_[idx[i]], basis_[idx[j]]);
            rhs[i] = fischer(basis_[idx[i]], part);
        }
        auto sol = solve_square(std::move(g), std::move(rhs));
        if (!sol) throw std::logic_error("project: singular Gram matrix");
        for (std::size_t i = 0; i < k; ++i)
            if (!(*sol)[i].is_zero()) out[idx[i]] = (*sol)[i];
    }
    return out;
}

AmbientPoly IrrepModule::to_ambient(const std::map<int, Rational>& coords) const {
    AmbientPoly out;
    for (const auto& [i, c] : coords) poly_add(out, basis_[i], c);
    return out;
}

std::string IrrepModule::basis_text(int i) const {
    const AmbientPoly& v = basis_[i];
    if (v.size() == 1 && v.begin()->second.is_one()) return ambient_text(v.begin()->first);
    return "(" + poly_text(v) + ")";
}

std::string IrrepModule::to_json() const {
    nlohmann::ordered_json j;
    j["highest_weight"] = lambda_.c;
    j["dim"] = dim();
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (int i = 0; i < dim(); ++i) {
        nlohmann::ordered_json b;
        b["index"] = i;
        b["weight"] = weight(i).c;
        b["vector"] = poly_text(basis_[i]);
        b["lowering"] = {lowering_[i].first, lowering_[i].second};
        basis.push_back(b);
    }
    j["basis"] = basis;
    nlohmann::ordered_json act = nlohmann::ordered_json::array();
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            nlohmann::ordered_json triplets = nlohmann::ordered_json::array();
            for (int k = 0; k < dim(); ++k)
                for (const auto& [r, v] : this->act(a, b, k)) triplets.push_back({r, k, v.to_string()});
            act.push_back({{"generator", "e" + std::to_string(a) + std::to_string(b)}, {"entries", triplets}});
        }
    j["action"] = act;
    return j.dump(2);
}

std::shared_ptr<const IrrepModule> irrep(const Weight& lambda) {
    static std::mutex mu;
    static std::map<Weight, std::shared_ptr<const IrrepModule>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
    }
    auto built = std::make_shared<const IrrepModule>(lambda);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(lambda, built).first->second;
}

std::vector<std::map<int, Rational>> highest_weight_vectors(const IrrepModule& F, const Weight& mu) {
    const std::vector<int>& idx = F.indices_of_weight(mu);
    if (idx.empty()) return {};
    std::map<int, int> local;
    for (std::size_t k = 0; k < idx.size(); ++k) local[idx[k]] = static_cast<int>(k);
    // Rows: (generator i, target basis index).
    std::map<std::pair<int, int>, int> row_of;
    std::vector<std::tuple<int, int, Rational>> entries;
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (int i = 1; i <= 4; ++i)
            for (const auto& [t, v] : F.act(i, i + 1, idx[k])) {
                auto key = std::make_pair(i, t);
                auto it = row_of.try_emplace(key, static_cast<int>(row_of.size())).first;
                entries.emplace_back(it->second, static_cast<int>(k), v);
            }
    SparseRationalMatrix m(static_cast<int>(row_of.size()), static_cast<int>(idx.size()));
    for (auto& [r, c, v] : entries) m.add(r, c, v);
    std::vector<std::map<int, Rational>> out;
    for (const SparseVector& kv : kernel(m)) {
        std::map<int, Rational> v;
        for (const auto& [c, x] : kv) v[idx[c]] = x;
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace e510
