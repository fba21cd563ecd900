#include "e510/uminus.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "e510/text.hpp"

namespace e510 {

namespace {

constexpr std::array<FormPair, kPairs> kPairTable{{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                                   {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}};

std::uint16_t reverse10(std::uint16_t m) {
    std::uint16_t r = 0;
    for (int p = 0; p < kPairs; ++p)
        if (m & (1u << p)) r |= static_cast<std::uint16_t>(1u << (9 - p));
    return r;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// d_I * d_q for a sorted set I: a short list of (t, mask, coeff) where t is
// the index of an extra partial (0 when none).
struct FormTerm {
    int t;
    std::uint16_t mask;
    int coeff;
};

const std::vector<FormTerm>& right_multiply_form(std::uint16_t mask, int q) {
    static std::vector<std::vector<FormTerm>> table = [] {
        std::vector<std::vector<FormTerm>> tab(1024 * kPairs);
        // Fill by increasing top element so that recursive entries exist.
        for (std::uint32_t m = 0; m < 1024; ++m) {
            for (int q2 = 0; q2 < kPairs; ++q2) {
                std::vector<FormTerm> out;
                if (m == 0) {
                    out.push_back({0, static_cast<std::uint16_t>(1u << q2), 1});
                } else {
                    int top = 31 - __builtin_clz(m);
                    if (q2 > top) {
                        out.push_back({0, static_cast<std::uint16_t>(m | (1u << q2)), 1});
                    } else if (q2 < top) {
                        std::uint16_t rest = static_cast<std::uint16_t>(m & ~(1u << top));
                        // -(d_rest d_q) d_top
                        for (const FormTerm& ft : tab[rest * kPairs + q2])
                            out.push_back({ft.t, static_cast<std::uint16_t>(ft.mask | (1u << top)), -ft.coeff});
                        // + [d_top, d_q] d_rest = eps partial_t d_rest
                        int t = 0;
                        int e = epsilon_t(top, q2, &t);
                        if (e != 0) out.push_back({t, rest, e});
                    }
                    // q2 == top: d_q d_q = 0
                }
                tab[m * kPairs + q2] = std::move(out);
            }
        }
        return tab;
    }();
    return table[mask * kPairs + q];
}

}  // namespace

int pair_index(int i, int j) {
    if (i < 1 || j > 5 || i >= j) throw std::invalid_argument("pair_index: need 1<=i<j<=5");
    for (int p = 0; p < kPairs; ++p)
        if (kPairTable[p].i == i && kPairTable[p].j == j) return p;
    throw std::logic_error("pair_index");
}

FormPair pair_at(int p) {
    if (p < 0 || p >= kPairs) throw std::out_of_range("pair_at");
    return kPairTable[p];
}

std::string pair_name(int p) {
    FormPair f = pair_at(p);
    return std::to_string(f.i) + std::to_string(f.j);
}

int epsilon_t(int p, int q, int* t_out) {
    FormPair a = pair_at(p), b = pair_at(q);
    int idx[4] = {a.i, a.j, b.i, b.j};
    int used = 0;
    for (int v : idx) {
        if (used & (1 << v)) {
            if (t_out) *t_out = 0;
            return 0;
        }
        used |= 1 << v;
    }
    int t = 0;
    for (int v = 1; v <= 5; ++v)
        if (!(used & (1 << v))) t = v;
    int perm[5] = {idx[0], idx[1], idx[2], idx[3], t};
    int inversions = 0;
    for (int x = 0; x < 5; ++x)
        for (int y = x + 1; y < 5; ++y)
            if (perm[x] > perm[y]) ++inversions;
    if (t_out) *t_out = t;
    return (inversions % 2) ? -1 : 1;
}

PbwMonomial::PbwMonomial(const std::array<int, 5>& partials, std::uint16_t form_mask) {
    if (form_mask >= 1024) throw std::invalid_argument("PbwMonomial: bad form mask");
    int deg = __builtin_popcount(form_mask);
    std::uint64_t k = 0;
    for (int c = 0; c < 5; ++c) {
        if (partials[c] < 0 || partials[c] > kMaxExponent)
            throw std::out_of_range("PbwMonomial: partial exponent out of range");
        deg += 2 * partials[c];
        k |= static_cast<std::uint64_t>(partials[c]) << (10 + 5 * (4 - c));
    }
    if (deg > 255) throw std::out_of_range("PbwMonomial: degree out of range");
    k |= static_cast<std::uint64_t>(deg) << 35;
    k |= static_cast<std::uint64_t>(1023 - reverse10(form_mask));
    key_ = k;
}

std::array<int, 5> PbwMonomial::partials() const {
    std::array<int, 5> a{};
    for (int c = 1; c <= 5; ++c) a[c - 1] = partial(c);
    return a;
}

std::uint16_t PbwMonomial::forms() const {
    return reverse10(static_cast<std::uint16_t>(1023 - (key_ & 1023)));
}

std::vector<int> PbwMonomial::form_list() const {
    std::vector<int> out;
    std::uint16_t m = forms();
    for (int p = 0; p < kPairs; ++p)
        if (m & (1u << p)) out.push_back(p);
    return out;
}

std::array<int, 5> PbwMonomial::gl_weight() const {
    std::array<int, 5> w{};
    for (int c = 1; c <= 5; ++c) w[c - 1] -= partial(c);
    for (int p : form_list()) {
        FormPair f = pair_at(p);
        w[f.i - 1] += 1;
        w[f.j - 1] += 1;
    }
    return w;
}

std::string to_text(PbwMonomial m) {
    std::ostringstream os;
    bool first = true;
    for (int c = 1; c <= 5; ++c) {
        int e = m.partial(c);
        if (e == 0) continue;
        if (!first) os << ' ';
        first = false;
        os << 'p' << c;
        if (e > 1) os << '^' << e;
    }
    for (int p : m.form_list()) {
        if (!first) os << ' ';
        first = false;
        os << 'd' << pair_name(p);
    }
    if (first) return "1";
    return os.str();
}

namespace {

// Parses one factor token into word entries (pair index or 100+c); returns
// the sign picked up from writing d_ji.
int parse_factor(const std::string& tok, std::vector<int>& word) {
    if (tok == "1") return 1;
    std::string body = tok;
    int power = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
        body = tok.substr(0, caret);
        std::string ps = tok.substr(caret + 1);
        if (ps.empty() || !std::all_of(ps.begin(), ps.end(), ::isdigit))
            throw std::invalid_argument("bad exponent in '" + tok + "'");
        power = std::stoi(ps);
    }
    if ((body.size() == 2 && (body[0] == 'p' || body[0] == 'D')) && body[1] >= '1' && body[1] <= '5') {
        for (int k = 0; k < power; ++k) word.push_back(100 + (body[1] - '0'));
        return 1;
    }
    if (body.size() == 3 && body[0] == 'd' && body[1] >= '1' && body[1] <= '5' && body[2] >= '1' && body[2] <= '5') {
        int i = body[1] - '0', j = body[2] - '0';
        if (i == j) return 0;
        if (power > 1) return 0;
        word.push_back(pair_index(std::min(i, j), std::max(i, j)));
        return i < j ? 1 : -1;
    }
    throw std::invalid_argument("unknown U(g_-) factor '" + tok + "'");
}

}  // namespace

PbwMonomial parse_monomial(const std::string& s) {
    UMinusElement e = parse_uminus(s);
    if (e.size() != 1 || !e.terms().begin()->second.is_one())
        throw std::invalid_argument("not a normal-ordered monomial: '" + s + "'");
    PbwMonomial m = PbwMonomial::from_key(e.terms().begin()->first);
    return m;
}

UMinusElement UMinusElement::partial(int c) {
    std::array<int, 5> p{};
    if (c < 1 || c > 5) throw std::out_of_range("partial index");
    p[c - 1] = 1;
    return UMinusElement(PbwMonomial(p, 0));
}

UMinusElement UMinusElement::form(int i, int j) {
    if (i == j) return {};
    int s = i < j ? 1 : -1;
    return UMinusElement(PbwMonomial({}, static_cast<std::uint16_t>(1u << pair_index(std::min(i, j), std::max(i, j)))),
                         Rational(s));
}

void UMinusElement::add(PbwMonomial m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m.key(), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void UMinusElement::add(const UMinusElement& o, const Rational& c) {
    for (const auto& [k, v] : o.terms_) add(PbwMonomial::from_key(k), v * c);
}

Rational UMinusElement::coeff(PbwMonomial m) const {
    auto it = terms_.find(m.key());
    return it == terms_.end() ? Rational(0) : it->second;
}

UMinusElement& UMinusElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

std::string UMinusElement::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        Rational a = v;
        if (first) {
            if (a.sign() < 0) os << "-";
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        if (a.sign() < 0) a = -a;
        PbwMonomial m = PbwMonomial::from_key(k);
        if (!a.is_one()) {
            os << a;
            if (m.degree() > 0) os << ' ' << e510::to_text(m);
        } else {
            os << e510::to_text(m);
        }
        first = false;
    }
    return os.str();
}

UMinusElement operator+(UMinusElement a, const UMinusElement& b) { return a += b; }
UMinusElement operator-(UMinusElement a, const UMinusElement& b) { return a -= b; }
UMinusElement operator*(const Rational& c, UMinusElement a) { return a *= c; }

UMinusElement pbw_product(PbwMonomial a, PbwMonomial b) {
    std::array<int, 5> base = a.partials();
    std::array<int, 5> pb = b.partials();
    for (int c = 0; c < 5; ++c) base[c] += pb[c];
    // Partials are central; multiply the form parts one factor at a time.
    struct Partial {
        std::array<int, 5> extra;
        std::uint16_t mask;
        int coeff;
    };
    std::vector<Partial> cur{{{}, a.forms(), 1}};
    for (int q : b.form_list()) {
        std::vector<Partial> next;
        for (const Partial& pt : cur) {
            for (const FormTerm& ft : right_multiply_form(pt.mask, q)) {
                Partial np{pt.extra, ft.mask, pt.coeff * ft.coeff};
                if (ft.t) np.extra[ft.t - 1] += 1;
                next.push_back(np);
            }
        }
        cur = std::move(next);
    }
    UMinusElement out;
    for (const Partial& pt : cur) {
        std::array<int, 5> p = base;
        for (int c = 0; c < 5; ++c) p[c] += pt.extra[c];
        out.add(PbwMonomial(p, pt.mask), Rational(pt.coeff));
    }
    return out;
}

UMinusElement pbw_product(const UMinusElement& a, const UMinusElement& b) {
    UMinusElement out;
    for (const auto& [ka, va] : a.terms())
        for (const auto& [kb, vb] : b.terms())
            out.add(pbw_product(PbwMonomial::from_key(ka), PbwMonomial::from_key(kb)), va * vb);
    return out;
}

UMinusElement word_product(const std::vector<int>& word) {
    UMinusElement acc = UMinusElement::one();
    for (int w : word) {
        PbwMonomial g;
        if (w >= 100) {
            std::array<int, 5> p{};
            p[w - 101] = 1;
            g = PbwMonomial(p, 0);
        } else {
            g = PbwMonomial({}, static_cast<std::uint16_t>(1u << w));
        }
        UMinusElement next;
        for (const auto& [k, v] : acc.terms()) next.add(pbw_product(PbwMonomial::from_key(k), g), v);
        acc = std::move(next);
    }
    return acc;
}

UMinusElement parse_uminus(const std::string& s) {
    UMinusElement out;
    auto terms = text::split_terms(s);
    if (terms.empty()) throw std::invalid_argument("empty U(g_-) expression");
    for (const auto& [sign, term] : terms) {
        Rational c(sign);
        std::vector<int> word;
        for (const std::string& tok : text::tokens(term)) {
            if (text::is_rational_token(tok) && tok != "1") {
                c *= Rational(tok);
                continue;
            }
            int sg = parse_factor(tok, word);
            c *= Rational(sg);
        }
        out.add(word_product(word), c);
    }
    return out;
}

long long uminus_dimension(int d) {
    if (d < 0) return 0;
    long long total = 0;
    for (int k = d % 2; k <= std::min(d, kPairs); k += 2) total += binom(kPairs, k) * binom((d - k) / 2 + 4, 4);
    return total;
}

const std::vector<PbwMonomial>& monomials_of_degree(int d) {
    static std::mutex mu;
    static std::map<int, std::vector<PbwMonomial>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<PbwMonomial> out;
    for (std::uint32_t mask = 0; mask < 1024; ++mask) {
        int h = __builtin_popcount(mask);
        if (h > d || (d - h) % 2) continue;
        int s = (d - h) / 2;
        std::array<int, 5> p{};
        // all compositions of s into five parts
        for (p[0] = s; p[0] >= 0; --p[0])
            for (p[1] = s - p[0]; p[1] >= 0; --p[1])
                for (p[2] = s - p[0] - p[1]; p[2] >= 0; --p[2])
                    for (p[3] = s - p[0] - p[1] - p[2]; p[3] >= 0; --p[3]) {
                        p[4] = s - p[0] - p[1] - p[2] - p[3];
                        out.emplace_back(p, static_cast<std::uint16_t>(mask));
                    }
    }
    std::sort(out.begin(), out.end());
    return cache.emplace(d, std::move(out)).first->second;
}

}  // namespace e510
