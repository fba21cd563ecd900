#include "e510/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "e510/text.hpp"
#include "e510/uminus.hpp"

namespace e510 {

namespace {

// Adds s * d_ij (antisymmetric) to a pair-indexed array.
void add_form(std::array<Rational, 10>& arr, int i, int j, const Rational& s) {
    if (i == j || s.is_zero()) return;
    if (i < j)
        arr[pair_index(i, j)] += s;
    else
        arr[pair_index(j, i)] -= s;
}

bool any_nonzero(const auto& arr) {
    for (const auto& x : arr)
        if (!x.is_zero()) return true;
    return false;
}

bool g0_nonzero(const SuperElement& e) {
    for (const auto& row : e.g0)
        if (any_nonzero(row)) return true;
    return false;
}

bool g1_nonzero(const SuperElement& e) {
    for (const auto& row : e.g1)
        if (any_nonzero(row)) return true;
    return false;
}

// [e_ab, x_k d_p] accumulated into out.g1 with factor s.
void gl_on_linear_form(int a, int b, int k, int p, const Rational& s, SuperElement& out) {
    FormPair f = pair_at(p);
    if (b == k) out.g1[a - 1][p] += s;
    if (b == f.i) add_form(out.g1[k - 1], a, f.j, s);
    if (b == f.j) add_form(out.g1[k - 1], f.i, a, s);
}

void gl_on_form(int a, int b, int p, const Rational& s, SuperElement& out) {
    FormPair f = pair_at(p);
    if (b == f.i) add_form(out.m1, a, f.j, s);
    if (b == f.j) add_form(out.m1, f.i, a, s);
}

}  // namespace

SuperElement SuperElement::partial(int c) {
    SuperElement e;
    e.m2.at(c - 1) = 1;
    return e;
}

SuperElement SuperElement::form(int i, int j) {
    SuperElement e;
    add_form(e.m1, i, j, 1);
    return e;
}

SuperElement SuperElement::gl(int a, int b) {
    SuperElement e;
    e.g0.at(a - 1).at(b - 1) = 1;
    return e;
}

SuperElement SuperElement::linear_form(int k, int i, int j) {
    SuperElement e;
    add_form(e.g1.at(k - 1), i, j, 1);
    return e;
}

bool SuperElement::has_degree(int deg) const {
    switch (deg) {
        case -2: return any_nonzero(m2);
        case -1: return any_nonzero(m1);
        case 0: return g0_nonzero(*this);
        case 1: return g1_nonzero(*this);
        default: return false;
    }
}

bool SuperElement::is_zero() const {
    return !has_degree(-2) && !has_degree(-1) && !has_degree(0) && !has_degree(1);
}

int SuperElement::degree() const {
    int found = 99;
    for (int d = -2; d <= 1; ++d) {
        if (!has_degree(d)) continue;
        if (found != 99) throw std::invalid_argument("element is not homogeneous");
        found = d;
    }
    if (found == 99) throw std::invalid_argument("zero element has no degree");
    return found;
}

SuperElement SuperElement::component(int deg) const {
    SuperElement e;
    if (deg == -2) e.m2 = m2;
    if (deg == -1) e.m1 = m1;
    if (deg == 0) e.g0 = g0;
    if (deg == 1) e.g1 = g1;
    return e;
}

Rational SuperElement::trace() const {
    Rational t;
    for (int a = 0; a < 5; ++a) t += g0[a][a];
    return t;
}

bool SuperElement::g1_closed() const {
    // Coefficient of dx_a dx_b dx_c in the differential of sum g1[k][p] x_k dx_p.
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
            for (int c = b + 1; c <= 5; ++c) {
                Rational s = g1[a - 1][pair_index(b, c)] - g1[b - 1][pair_index(a, c)] + g1[c - 1][pair_index(a, b)];
                if (!s.is_zero()) return false;
            }
    return true;
}

SuperElement& SuperElement::operator+=(const SuperElement& o) {
    for (int i = 0; i < 5; ++i) m2[i] += o.m2[i];
    for (int i = 0; i < 10; ++i) m1[i] += o.m1[i];
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) g0[a][b] += o.g0[a][b];
    for (int k = 0; k < 5; ++k)
        for (int p = 0; p < 10; ++p) g1[k][p] += o.g1[k][p];
    return *this;
}

SuperElement& SuperElement::operator*=(const Rational& c) {
    for (auto& x : m2) x *= c;
    for (auto& x : m1) x *= c;
    for (auto& r : g0)
        for (auto& x : r) x *= c;
    for (auto& r : g1)
        for (auto& x : r) x *= c;
    return *this;
}

bool operator==(const SuperElement& a, const SuperElement& b) { return (a - b).is_zero(); }

std::string SuperElement::to_text() const {
    std::vector<std::pair<Rational, std::string>> terms;
    for (int c = 1; c <= 5; ++c)
        if (!m2[c - 1].is_zero()) terms.emplace_back(m2[c - 1], "p" + std::to_string(c));
    for (int p = 0; p < 10; ++p)
        if (!m1[p].is_zero()) terms.emplace_back(m1[p], "d" + pair_name(p));
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            if (!g0[a - 1][b - 1].is_zero())
                terms.emplace_back(g0[a - 1][b - 1], "x" + std::to_string(a) + "*p" + std::to_string(b));
    for (int k = 1; k <= 5; ++k)
        for (int p = 0; p < 10; ++p)
            if (!g1[k - 1][p].is_zero()) terms.emplace_back(g1[k - 1][p], "x" + std::to_string(k) + "*d" + pair_name(p));
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [c, name] : terms) {
        Rational a = c;
        if (first)
            os << (a.sign() < 0 ? "-" : "");
        else
            os << (a.sign() < 0 ? " - " : " + ");
        if (a.sign() < 0) a = -a;
        if (!a.is_one()) os << a << ' ';
        os << name;
        first = false;
    }
    return os.str();
}

SuperElement bracket(const SuperElement& A, const SuperElement& B) {
    if (g1_nonzero(A) && g1_nonzero(B)) throw UnsupportedDegree("bracket: g1 x g1 lands in degree 2");
    SuperElement R;
    // [g-1, g-1]
    for (int p = 0; p < 10; ++p) {
        if (A.m1[p].is_zero()) continue;
        for (int q = 0; q < 10; ++q) {
            if (B.m1[q].is_zero()) continue;
            int t = 0;
            int e = epsilon_t(p, q, &t);
            if (e) R.m2[t - 1] += Rational(e) * A.m1[p] * B.m1[q];
        }
    }
    for (int a = 1; a <= 5; ++a) {
        for (int b = 1; b <= 5; ++b) {
            const Rational& ga = A.g0[a - 1][b - 1];
            const Rational& gb = B.g0[a - 1][b - 1];
            // [g0, g-2] and [g-2, g0]
            if (!ga.is_zero()) R.m2[b - 1] -= ga * B.m2[a - 1];
            if (!gb.is_zero()) R.m2[b - 1] += A.m2[a - 1] * gb;
            // [g0, g-1] and [g-1, g0]
            for (int p = 0; p < 10; ++p) {
                if (!ga.is_zero() && !B.m1[p].is_zero()) gl_on_form(a, b, p, ga * B.m1[p], R);
                if (!gb.is_zero() && !A.m1[p].is_zero()) gl_on_form(a, b, p, -(gb * A.m1[p]), R);
            }
            // [g0, g1] and [g1, g0]
            for (int k = 1; k <= 5; ++k)
                for (int p = 0; p < 10; ++p) {
                    if (!ga.is_zero() && !B.g1[k - 1][p].is_zero()) gl_on_linear_form(a, b, k, p, ga * B.g1[k - 1][p], R);
                    if (!gb.is_zero() && !A.g1[k - 1][p].is_zero())
                        gl_on_linear_form(a, b, k, p, -(gb * A.g1[k - 1][p]), R);
                }
        }
    }
    // [g0, g0] = AB - BA as matrices
    for (int a = 0; a < 5; ++a)
        for (int d = 0; d < 5; ++d) {
            Rational s;
            for (int b = 0; b < 5; ++b) s += A.g0[a][b] * B.g0[b][d] - B.g0[a][b] * A.g0[b][d];
            R.g0[a][d] += s;
        }
    for (int k = 1; k <= 5; ++k) {
        for (int p = 0; p < 10; ++p) {
            const Rational& xa = A.g1[k - 1][p];
            const Rational& xb = B.g1[k - 1][p];
            // [x_k d_p, d_c] = -delta_ck d_p ; [d_c, x_k d_p] = delta_ck d_p
            if (!xa.is_zero()) R.m1[p] -= xa * B.m2[k - 1];
            if (!xb.is_zero()) R.m1[p] += A.m2[k - 1] * xb;
            // [x_k d_p, d_q] = [d_q, x_k d_p] = eps x_k d_t
            for (int q = 0; q < 10; ++q) {
                int t = 0;
                int e = epsilon_t(p, q, &t);
                if (!e) continue;
                Rational s = xa * B.m1[q] + A.m1[q] * xb;
                if (!s.is_zero()) R.g0[k - 1][t - 1] += Rational(e) * s;
            }
        }
    }
    bool valid_inputs = A.trace().is_zero() && B.trace().is_zero() && A.g1_closed() && B.g1_closed();
    if (valid_inputs && !R.trace().is_zero()) throw std::logic_error("bracket produced a g0 part with nonzero trace");
    return R;
}

SuperElement jacobi_residual(const SuperElement& a, const SuperElement& b, const SuperElement& c) {
    int sign = (a.parity() && b.parity()) ? -1 : 1;
    return bracket(a, bracket(b, c)) - bracket(bracket(a, b), c) - Rational(sign) * bracket(b, bracket(a, c));
}

const std::vector<SuperElement>& g1_basis() {
    static const std::vector<SuperElement> basis = [] {
        std::vector<SuperElement> out;
        for (int p = 0; p < 10; ++p) {
            FormPair f = pair_at(p);
            out.push_back(SuperElement::linear_form(f.i, f.i, f.j));
            out.push_back(SuperElement::linear_form(f.j, f.i, f.j));
        }
        for (int a = 1; a <= 5; ++a)
            for (int b = a + 1; b <= 5; ++b)
                for (int c = b + 1; c <= 5; ++c) {
                    out.push_back(SuperElement::linear_form(a, b, c) + SuperElement::linear_form(b, a, c));
                    out.push_back(SuperElement::linear_form(b, a, c) + SuperElement::linear_form(c, a, b));
                }
        return out;
    }();
    return basis;
}

SuperElement lowest_g1() { return SuperElement::linear_form(5, 4, 5); }

SuperElement chevalley_e(int i) { return SuperElement::gl(i, i + 1); }
SuperElement chevalley_f(int i) { return SuperElement::gl(i + 1, i); }

namespace {

int digit(char c) {
    if (c < '1' || c > '5') throw std::invalid_argument(std::string("bad index '") + c + "'");
    return c - '0';
}

SuperElement parse_symbol(const std::string& s) {
    auto bad = [&]() { return std::invalid_argument("unknown generator '" + s + "'"); };
    if (s.size() == 2 && (s[0] == 'E' || s[0] == 'F' || s[0] == 'H')) {
        int i = s[1] - '0';
        if (i < 1 || i > 4) throw bad();
        if (s[0] == 'E') return chevalley_e(i);
        if (s[0] == 'F') return chevalley_f(i);
        return SuperElement::gl(i, i) - SuperElement::gl(i + 1, i + 1);
    }
    if (s.size() == 2 && s[0] == 'p') return SuperElement::partial(digit(s[1]));
    if (s.size() == 3 && s[0] == 'd') return SuperElement::form(digit(s[1]), digit(s[2]));
    if (s.size() == 4 && s[0] == 'x' && s[2] == 'p') return SuperElement::gl(digit(s[1]), digit(s[3]));
    if (s.size() == 5 && s[0] == 'x' && s[2] == 'd') return SuperElement::linear_form(digit(s[1]), digit(s[3]), digit(s[4]));
    throw bad();
}

}  // namespace

SuperElement parse_generator(const std::string& s) {
    SuperElement out;
    auto terms = text::split_terms(s);
    if (terms.empty()) throw std::invalid_argument("empty generator expression");
    for (const auto& [sign, term] : terms) {
        Rational c(sign);
        std::string sym;
        std::istringstream is(term);
        std::string tok;
        while (is >> tok) {
            if (text::is_rational_token(tok))
                c *= Rational(tok);
            else
                sym += tok;
        }
        sym.erase(std::remove(sym.begin(), sym.end(), '*'), sym.end());
        if (sym.empty()) throw std::invalid_argument("missing generator in '" + s + "'");
        out += c * parse_symbol(sym);
    }
    return out;
}

}  // namespace e510
