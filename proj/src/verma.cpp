#include "e510/verma.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "e510/text.hpp"

namespace e510 {

void VermaElement::add_key(std::uint64_t k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void VermaElement::add(const VermaElement& o, const Rational& c) {
    if (o.mu_ != mu_ && !o.terms_.empty() && !terms_.empty())
        throw std::invalid_argument("VermaElement: adding elements of different modules");
    if (terms_.empty()) mu_ = o.mu_;
    for (const auto& [k, v] : o.terms_) add_key(k, v * c);
}

Rational VermaElement::coeff(PbwMonomial m, int v) const {
    auto it = terms_.find(term_key(m, v));
    return it == terms_.end() ? Rational(0) : it->second;
}

VermaElement& VermaElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

VermaElement VermaElement::degree_component(int d) const {
    VermaElement out(mu_);
    for (const auto& [k, v] : terms_)
        if (term_monomial(k).degree() == d) out.terms_.emplace(k, v);
    return out;
}

std::vector<int> VermaElement::degrees() const {
    std::set<int> s;
    for (const auto& [k, v] : terms_) s.insert(term_monomial(k).degree());
    return {s.begin(), s.end()};
}

VermaModule::VermaModule(const Weight& mu) : mu_(mu), F_(e510::irrep(mu)) {
    if (F_->dim() >= (1 << kIrrepIndexBits)) throw std::out_of_range("irrep too large for term packing");
}

VermaElement VermaModule::element(const UMinusElement& u, int v) const {
    if (v < 0 || v >= F_->dim()) throw std::out_of_range("irrep index");
    VermaElement out(mu_);
    for (const auto& [k, c] : u.terms()) out.add(PbwMonomial::from_key(k), v, c);
    return out;
}

VermaElement VermaModule::left_multiply(const UMinusElement& u, const VermaElement& w) const {
    VermaElement out(mu_);
    for (const auto& [ku, cu] : u.terms()) {
        PbwMonomial mu = PbwMonomial::from_key(ku);
        for (const auto& [k, c] : w.terms()) {
            UMinusElement prod = pbw_product(mu, term_monomial(k));
            int v = term_index(k);
            for (const auto& [kp, cp] : prod.terms()) out.add(PbwMonomial::from_key(kp), v, cu * c * cp);
        }
    }
    return out;
}

std::vector<std::pair<std::uint64_t, Rational>> VermaModule::compute_ad(int a, int b, PbwMonomial m) const {
    UMinusElement out;
    std::array<int, 5> P = m.partials();
    if (P[a - 1] > 0) {
        std::array<int, 5> Q = P;
        Q[a - 1] -= 1;
        Q[b - 1] += 1;
        out.add(PbwMonomial(Q, m.forms()), Rational(-P[a - 1]));
    }
    std::vector<int> forms = m.form_list();
    PbwMonomial pm(P, 0);
    for (std::size_t j = 0; j < forms.size(); ++j) {
        FormPair f = pair_at(forms[j]);
        // [e_ab, d_lm] = delta_bl d_am + delta_bm d_la
        std::vector<std::pair<int, int>> images;  // (i, j) of the new form, coefficient +1
        if (b == f.i) images.emplace_back(a, f.j);
        if (b == f.j) images.emplace_back(f.i, a);
        for (auto [i2, j2] : images) {
            if (i2 == j2) continue;
            int sign = i2 < j2 ? 1 : -1;
            std::vector<int> word = forms;
            word[j] = pair_index(std::min(i2, j2), std::max(i2, j2));
            UMinusElement prod = word_product(word);
            for (const auto& [k, c] : prod.terms()) out.add(pbw_product(pm, PbwMonomial::from_key(k)), c * Rational(sign));
        }
    }
    std::vector<std::pair<std::uint64_t, Rational>> res;
    for (const auto& [k, c] : out.terms()) res.emplace_back(k, c);
    return res;
}

const std::vector<std::pair<std::uint64_t, Rational>>& VermaModule::ad_gl(int a, int b, PbwMonomial m) const {
    std::uint64_t key = (static_cast<std::uint64_t>((a - 1) * 5 + (b - 1)) << kMonomialKeyBits) | m.key();
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = ad_memo_.find(key);
        if (it != ad_memo_.end()) return it->second;
    }
    auto value = compute_ad(a, b, m);
    std::lock_guard<std::mutex> lock(memo_mu_);
    return ad_memo_.emplace(key, std::move(value)).first->second;
}

const VermaModule::OpResult& VermaModule::symbol_op(int k, int p, PbwMonomial m) const {
    std::uint64_t key = (static_cast<std::uint64_t>((k - 1) * 10 + p) << kMonomialKeyBits) | m.key();
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = op_memo_.find(key);
        if (it != op_memo_.end()) return it->second;
    }
    OpResult value = compute_symbol_op(k, p, m);
    std::lock_guard<std::mutex> lock(memo_mu_);
    return op_memo_.emplace(key, std::move(value)).first->second;
}

// X (y u' (x) v) = [X, y] u' (x) v + (-1)^{|y|} y X (u' (x) v), with X = x_k d_p.
// The result is stored as sum_t c_t m_t (x) g_t v where g_t is e_ab or the identity.
VermaModule::OpResult VermaModule::compute_symbol_op(int k, int p, PbwMonomial m) const {
    std::map<std::pair<std::uint64_t, int>, Rational> acc;
    auto put = [&](std::uint64_t mono, int gen, const Rational& c) {
        if (c.is_zero()) return;
        Rational& slot = acc[{mono, gen}];
        slot += c;
    };
    if (m.degree() == 0) return {};
    std::array<int, 5> P = m.partials();
    int c = -1;
    for (int i = 0; i < 5; ++i)
        if (P[i] > 0) {
            c = i + 1;
            break;
        }
    if (c > 0) {
        std::array<int, 5> Q = P;
        Q[c - 1] -= 1;
        PbwMonomial rest(Q, m.forms());
        if (c == k) {
            // [x_k d_p, d_k] = -d_p
            UMinusElement prod = pbw_product(PbwMonomial({}, static_cast<std::uint16_t>(1u << p)), rest);
            for (const auto& [kk, cc] : prod.terms()) put(kk, 25, -cc);
        }
        const OpResult& sub = symbol_op(k, p, rest);
        for (const OpTerm& t : sub) {
            PbwMonomial mm = PbwMonomial::from_key(t.mono);
            std::array<int, 5> R = mm.partials();
            R[c - 1] += 1;
            put(PbwMonomial(R, mm.forms()).key(), t.gen, t.c);
        }
    } else {
        std::vector<int> forms = m.form_list();
        int q = forms.front();
        PbwMonomial rest({}, static_cast<std::uint16_t>(m.forms() & ~(1u << q)));
        int t = 0;
        int e = epsilon_t(p, q, &t);
        if (e != 0) {
            // Z = e * x_k d_t acting on rest (x) v
            for (const auto& [kk, cc] : ad_gl(k, t, rest)) put(kk, 25, cc * Rational(e));
            put(rest.key(), (k - 1) * 5 + (t - 1), Rational(e));
        }
        const OpResult& sub = symbol_op(k, p, rest);
        PbwMonomial dq({}, static_cast<std::uint16_t>(1u << q));
        for (const OpTerm& tt : sub) {
            UMinusElement prod = pbw_product(dq, PbwMonomial::from_key(tt.mono));
            for (const auto& [kk, cc] : prod.terms()) put(kk, tt.gen, -(cc * tt.c));
        }
    }
    OpResult out;
    for (auto& [key, v] : acc)
        if (!v.is_zero()) out.push_back({key.first, key.second, v});
    return out;
}

VermaElement VermaModule::act_symbol(int k, int p, const VermaElement& w) const {
    VermaElement out(mu_);
    for (const auto& [key, c] : w.terms()) {
        int v = term_index(key);
        for (const OpTerm& t : symbol_op(k, p, term_monomial(key))) {
            PbwMonomial mm = PbwMonomial::from_key(t.mono);
            if (t.gen == 25) {
                out.add(mm, v, c * t.c);
            } else {
                int a = t.gen / 5 + 1, b = t.gen % 5 + 1;
                for (const auto& [j, x] : F_->act(a, b, v)) out.add(mm, j, c * t.c * x);
            }
        }
    }
    return out;
}

VermaElement VermaModule::act_gl(int a, int b, const VermaElement& w) const {
    VermaElement out(mu_);
    for (const auto& [key, c] : w.terms()) {
        PbwMonomial m = term_monomial(key);
        int v = term_index(key);
        for (const auto& [km, cm] : ad_gl(a, b, m)) out.add(PbwMonomial::from_key(km), v, c * cm);
        for (const auto& [j, x] : F_->act(a, b, v)) out.add(m, j, c * x);
    }
    return out;
}

VermaElement VermaModule::act_g0(const SuperElement& E, const VermaElement& w) const {
    VermaElement out(mu_);
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            if (!E.g0[a - 1][b - 1].is_zero()) out.add(act_gl(a, b, w), E.g0[a - 1][b - 1]);
    return out;
}

VermaElement VermaModule::act_g1(const SuperElement& X, const VermaElement& w) const {
    VermaElement out(mu_);
    for (int k = 1; k <= 5; ++k)
        for (int p = 0; p < kPairs; ++p)
            if (!X.g1[k - 1][p].is_zero()) out.add(act_symbol(k, p, w), X.g1[k - 1][p]);
    return out;
}

VermaElement VermaModule::act(const SuperElement& X, const VermaElement& w) const {
    VermaElement out(mu_);
    UMinusElement u;
    for (int c = 1; c <= 5; ++c)
        if (!X.m2[c - 1].is_zero()) u.add(UMinusElement::partial(c), X.m2[c - 1]);
    for (int p = 0; p < kPairs; ++p)
        if (!X.m1[p].is_zero()) u.add(PbwMonomial({}, static_cast<std::uint16_t>(1u << p)), X.m1[p]);
    if (!u.is_zero()) out.add(left_multiply(u, w));
    out.add(act_g0(X, w));
    out.add(act_g1(X, w));
    return out;
}

SingularReport VermaModule::is_singular(const VermaElement& w, bool full_g1) const {
    if (w.is_zero()) throw std::domain_error("is_singular: zero vector");
    SingularReport rep;
    for (int d : w.degrees())
        if (d > 0) rep.positive_degree = true;
    for (int i = 1; i <= 4; ++i) {
        VermaElement r = act_gl(i, i + 1, w);
        if (!r.is_zero()) rep.residuals.emplace_back("E" + std::to_string(i), std::move(r));
    }
    VermaElement r = act_symbol(5, pair_index(4, 5), w);
    if (!r.is_zero()) rep.residuals.emplace_back("x5*d45", std::move(r));
    if (full_g1) {
        const auto& basis = g1_basis();
        for (std::size_t b = 0; b < basis.size(); ++b) {
            VermaElement rb = act_g1(basis[b], w);
            if (!rb.is_zero()) rep.residuals.emplace_back(basis[b].to_text(), std::move(rb));
        }
    }
    rep.singular = rep.positive_degree && rep.residuals.empty();
    return rep;
}

namespace {

const std::map<Weight, std::vector<PbwMonomial>>& monomials_by_weight(int d) {
    static std::mutex mu;
    static std::map<int, std::map<Weight, std::vector<PbwMonomial>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::map<Weight, std::vector<PbwMonomial>> by;
    for (PbwMonomial m : monomials_of_degree(d)) by[to_sl(m.gl_weight())].push_back(m);
    return cache.emplace(d, std::move(by)).first->second;
}

}  // namespace

Weight VermaModule::term_weight(std::uint64_t key) const {
    GlWeight a = term_monomial(key).gl_weight();
    const GlWeight& b = F_->gl_weight(term_index(key));
    GlWeight s{};
    for (int i = 0; i < 5; ++i) s[i] = a[i] + b[i];
    return to_sl(s);
}

std::vector<std::uint64_t> VermaModule::weight_space(int d, const Weight& nu) const {
    std::vector<std::uint64_t> out;
    const auto& by = monomials_by_weight(d);
    for (int v = 0; v < F_->dim(); ++v) {
        auto it = by.find(nu - F_->weight(v));
        if (it == by.end()) continue;
        for (PbwMonomial m : it->second) out.push_back(term_key(m, v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> VermaModule::candidate_weights(int d) const {
    std::set<Weight> s;
    std::set<Weight> irrep_weights;
    for (int v = 0; v < F_->dim(); ++v) irrep_weights.insert(F_->weight(v));
    for (const auto& [w, monos] : monomials_by_weight(d))
        for (const Weight& b : irrep_weights) {
            Weight nu = w + b;
            if (nu.dominant()) s.insert(nu);
        }
    return {s.begin(), s.end()};
}

std::map<std::uint64_t, AmbientPoly> VermaModule::to_ambient(const VermaElement& w) const {
    std::map<std::uint64_t, AmbientPoly> out;
    for (const auto& [k, c] : w.terms()) {
        AmbientPoly& p = out[term_monomial(k).key()];
        poly_add(p, F_->vector(term_index(k)), c);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

std::string VermaModule::to_text(const VermaElement& w) const {
    auto grouped = to_ambient(w);
    if (grouped.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mk, poly] : grouped) {
        std::string mono = e510::to_text(PbwMonomial::from_key(mk));
        for (const auto& [am, c] : poly) {
            Rational a = c;
            if (first)
                os << (a.sign() < 0 ? "-" : "");
            else
                os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
            if (!a.is_one()) os << a << ' ';
            os << mono << " ⊗ " << ambient_text(am);
            first = false;
        }
    }
    return os.str();
}

std::string VermaModule::to_json(const VermaElement& w) const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [k, c] : w.terms()) {
        PbwMonomial m = term_monomial(k);
        nlohmann::ordered_json t;
        t["partials"] = m.partials();
        nlohmann::ordered_json forms = nlohmann::ordered_json::array();
        for (int p : m.form_list()) forms.push_back({pair_at(p).i, pair_at(p).j});
        t["forms"] = forms;
        t["irrep_index"] = term_index(k);
        t["coeff"] = c.to_string();
        arr.push_back(t);
    }
    return arr.dump();
}

VermaElement VermaModule::from_ambient(const std::vector<std::pair<UMinusElement, AmbientPoly>>& parts,
                                       bool project) const {
    std::map<std::uint64_t, AmbientPoly> grouped;
    for (const auto& [u, poly] : parts)
        for (const auto& [k, c] : u.terms()) poly_add(grouped[k], poly, c);
    VermaElement out(mu_);
    for (const auto& [k, poly] : grouped) {
        if (poly.empty()) continue;
        std::map<int, Rational> coords = project ? F_->project(poly) : F_->coordinates(poly);
        for (const auto& [v, c] : coords) out.add(PbwMonomial::from_key(k), v, c);
    }
    return out;
}

VermaElement VermaModule::parse(const std::string& s, bool project) const {
    std::vector<std::pair<UMinusElement, AmbientPoly>> parts;
    for (const auto& [sign, term] : text::split_terms(s)) {
        std::string t = term;
        // normalize the tensor sign to '|'
        std::string norm;
        for (const std::string& tok : text::tokens(t)) norm += tok + " ";
        auto bar = norm.find('|');
        std::string left = bar == std::string::npos ? norm : norm.substr(0, bar);
        std::string right = bar == std::string::npos ? "1" : norm.substr(bar + 1);
        UMinusElement u = parse_uminus(text::trim(left).empty() ? "1" : left);
        AmbientPoly a = parse_ambient(text::trim(right).empty() ? "1" : right);
        u *= Rational(sign);
        parts.emplace_back(std::move(u), std::move(a));
    }
    return from_ambient(parts, project);
}

std::size_t VermaModule::memo_size() const {
    std::lock_guard<std::mutex> lock(memo_mu_);
    return ad_memo_.size() + op_memo_.size();
}

int height(const VermaElement& w) {
    if (w.is_zero()) throw std::domain_error("height: zero vector");
    int h = 0;
    for (const auto& [k, c] : w.terms()) h = std::max(h, term_monomial(k).height());
    return h;
}

VermaElement highest_term(const VermaElement& w) {
    int h = height(w);
    VermaElement out(w.mu());
    for (const auto& [k, c] : w.terms())
        if (term_monomial(k).height() == h) out.add_key(k, c);
    return out;
}

VermaElement leading_term(const VermaElement& w, const IrrepModule& F) {
    if (w.is_zero()) throw std::domain_error("leading_term: zero vector");
    VermaElement out(w.mu());
    for (const auto& [k, c] : w.terms())
        if (F.weight(term_index(k)) == F.highest_weight()) out.add_key(k, c);
    return out;
}

std::shared_ptr<VermaModule> verma_module(const Weight& mu) {
    static std::mutex m;
    static std::map<Weight, std::shared_ptr<VermaModule>> cache;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    auto vm = std::make_shared<VermaModule>(mu);
    cache.emplace(mu, vm);
    return vm;
}

}  // namespace e510
