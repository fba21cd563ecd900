#include "e510/s5.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "e510/linalg.hpp"

namespace e510 {

namespace {

int xdeg(const std::array<int, 5>& x) { return x[0] + x[1] + x[2] + x[3] + x[4]; }

// d_i times an element (partials commute).
VermaElement shift(const VermaElement& w, int i) {
    VermaElement out(w.mu());
    for (const auto& [k, c] : w.terms()) {
        auto p = term_monomial(k).partials();
        ++p[i - 1];
        out.add(PbwMonomial(p, 0), term_index(k), c);
    }
    return out;
}

// [X, d_i] = - sum c (d_i x^alpha) d_k
VectorField bracket_partial(const VectorField& X, int i) {
    VectorField out;
    for (const FieldTerm& t : X.terms) {
        if (t.x[i - 1] == 0) continue;
        FieldTerm s = t;
        s.c = -t.c * Rational(t.x[i - 1]);
        --s.x[i - 1];
        out.terms.push_back(s);
    }
    return out;
}

}  // namespace

int VectorField::degree() const {
    if (terms.empty()) return 0;
    return 2 * xdeg(terms.front().x) - 2;
}

Rational VectorField::divergence_coeff(const std::array<int, 5>& x) const {
    Rational s;
    for (const FieldTerm& t : terms) {
        if (t.x[t.k - 1] == 0) continue;
        auto y = t.x;
        --y[t.k - 1];
        if (y == x) s += t.c * Rational(t.x[t.k - 1]);
    }
    return s;
}

std::string VectorField::to_text() const {
    std::ostringstream s;
    bool first = true;
    for (const FieldTerm& t : terms) {
        s << (first ? "" : " + ") << t.c.to_string();
        for (int a = 0; a < 5; ++a)
            for (int e = 0; e < t.x[a]; ++e) s << " x" << a + 1;
        s << " d" << t.k;
        first = false;
    }
    return first ? "0" : s.str();
}

VectorField linear_field(int a, int b) {
    FieldTerm t;
    t.c = 1;
    t.x[a - 1] = 1;
    t.k = b;
    return VectorField{{t}};
}

const std::vector<VectorField>& s5_degree2_fields() {
    static const std::vector<VectorField> fields = [] {
        // x^alpha d_k minus a correction from {x_m x_l d_l, l = m%5+1}, on which
        // the divergence is a bijection onto linear forms.
        std::vector<VectorField> out;
        std::set<std::string> seen;
        for (int k = 1; k <= 5; ++k)
            for (int i = 0; i < 5; ++i)
                for (int j = i; j < 5; ++j) {
                    FieldTerm t;
                    t.c = 1;
                    ++t.x[i];
                    ++t.x[j];
                    t.k = k;
                    std::map<std::pair<std::array<int, 5>, int>, Rational> acc;
                    acc[{t.x, k}] += Rational(1);
                    if (t.x[k - 1] > 0) {
                        int m = (i == k - 1) ? j + 1 : i + 1;
                        int l = m % 5 + 1;
                        std::array<int, 5> y{};
                        ++y[m - 1];
                        ++y[l - 1];
                        acc[{y, l}] -= Rational(t.x[k - 1]);
                    }
                    VectorField X;
                    for (const auto& [key, c] : acc)
                        if (!c.is_zero()) X.terms.push_back(FieldTerm{c, key.first, key.second});
                    if (X.terms.empty() || !seen.insert(X.to_text()).second) continue;
                    out.push_back(X);
                }
        return out;
    }();
    return fields;
}

S5Verma::S5Verma(const Weight& lambda) : lambda_(lambda), M_(verma_module(lambda)) {}

VermaElement S5Verma::act(const VectorField& X, const VermaElement& w) const {
    VermaElement out(lambda_);
    if (X.terms.empty()) return out;
    const IrrepModule& F = M_->irrep();
    for (const auto& [key, c] : w.terms()) {
        PbwMonomial m = term_monomial(key);
        if (m.forms() != 0) throw std::domain_error("S5 element with odd part");
        int v = term_index(key);
        auto p = m.partials();
        int i = 0;
        while (i < 5 && p[i] == 0) ++i;
        if (i == 5) {
            for (const FieldTerm& t : X.terms) {
                int deg = xdeg(t.x);
                if (deg == 0) {
                    std::array<int, 5> q{};
                    q[t.k - 1] = 1;
                    out.add(PbwMonomial(q, 0), v, c * t.c);
                } else if (deg == 1) {
                    int a = 0;
                    while (t.x[a] == 0) ++a;
                    for (const auto& [j, e] : F.act(a + 1, t.k, v)) out.add(PbwMonomial(), j, c * t.c * e);
                }
            }
            continue;
        }
        // X d_i u = d_i X u + [X, d_i] u
        --p[i];
        VermaElement rest(lambda_);
        rest.add(PbwMonomial(p, 0), v, c);
        out.add(shift(act(X, rest), i + 1));
        out.add(act(bracket_partial(X, i + 1), rest));
    }
    return out;
}

std::vector<std::uint64_t> S5Verma::basis(int k) const {
    std::vector<std::uint64_t> out;
    std::array<int, 5> p{};
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == 4) {
            p[4] = left;
            for (int v = 0; v < M_->irrep().dim(); ++v) out.push_back(term_key(PbwMonomial(p, 0), v));
            return;
        }
        for (int e = left; e >= 0; --e) {
            p[pos] = e;
            self(self, pos + 1, left - e);
        }
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end());
    return out;
}

VermaElement S5Verma::parse(const std::string& text) const { return M_->parse(text); }

bool s5_is_singular(const VermaElement& w, const Weight& lambda) {
    if (w.is_zero()) throw std::domain_error("s5_is_singular: zero vector");
    S5Verma M(lambda);
    for (const auto& [k, c] : w.terms())
        if (term_monomial(k).degree() == 0) return false;
    for (int i = 1; i <= 4; ++i)
        if (!M.act(linear_field(i, i + 1), w).is_zero()) return false;
    for (const VectorField& X : s5_degree2_fields())
        if (!M.act(X, w).is_zero()) return false;
    return true;
}

std::vector<RudakovVector> rudakov_vectors() {
    auto make = [](const std::string& name, Weight l, const std::string& text) {
        return RudakovVector{name, l, S5Verma(l).parse(text)};
    };
    std::vector<RudakovVector> out;
    const std::string r1 = "p1 | x1 + p2 | x2 + p3 | x3 + p4 | x4 + p5 | x5";
    out.push_back(make("R1", Weight(1, 0, 0, 0), r1));
    out.push_back(make("R2", Weight(0, 1, 0, 0), "p2 | x12 + p3 | x13 + p4 | x14 + p5 | x15"));
    // x53* = -x35*
    out.push_back(make("R3", Weight(0, 0, 1, 0), "p3 | x45* - p4 | x35* + p5 | x34*"));
    out.push_back(make("R4", Weight(0, 0, 0, 1), "p4 | x5* - p5 | x4*"));
    out.push_back(make("R5", Weight(0, 0, 0, 0), "p5 | 1"));
    auto M = verma_module(Weight(1, 0, 0, 0));
    out.push_back(RudakovVector{"R6", Weight(1, 0, 0, 0), M->left_multiply(parse_uminus("p5"), out[0].vector)});
    return out;
}

std::vector<SingularCertificate> s5_find_singular_vectors(const Weight& lambda, int degree) {
    if (degree <= 0 || degree % 2) throw std::domain_error("S5 degrees are positive and even");
    S5Verma M(lambda);
    std::map<Weight, std::vector<std::uint64_t>> by_weight;
    for (std::uint64_t k : M.basis(degree / 2)) by_weight[M.module().term_weight(k)].push_back(k);
    std::vector<VectorField> ops;
    for (int i = 1; i <= 4; ++i) ops.push_back(linear_field(i, i + 1));
    for (const VectorField& X : s5_degree2_fields()) ops.push_back(X);

    std::vector<SingularCertificate> out;
    for (const auto& [nu, cols] : by_weight) {
        if (!nu.dominant()) continue;
        std::map<std::pair<int, std::uint64_t>, int> row_of;
        std::vector<std::vector<std::pair<int, Rational>>> col_entries(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            VermaElement e(lambda);
            e.add_key(cols[j], Rational(1));
            for (std::size_t o = 0; o < ops.size(); ++o) {
                VermaElement img = M.act(ops[o], e);
                for (const auto& [k, c] : img.terms()) {
                    auto [it, fresh] = row_of.emplace(std::make_pair(static_cast<int>(o), k), static_cast<int>(row_of.size()));
                    col_entries[j].emplace_back(it->second, c);
                }
            }
        }
        SparseRationalMatrix A(static_cast<int>(row_of.size()), static_cast<int>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [r, c] : col_entries[j]) A.add(r, static_cast<int>(j), c);
        auto ker = kernel(A);
        if (ker.empty()) continue;
        SingularCertificate cert;
        cert.mu = lambda;
        cert.degree = degree;
        cert.weight = nu;
        cert.kernel_dim = static_cast<int>(ker.size());
        cert.checked_full_g1 = true;
        for (const SparseVector& v : ker) {
            VermaElement w(lambda);
            for (const auto& [j, c] : v) w.add_key(cols[j], c);
            cert.vectors.push_back(primitive(w));
        }
        out.push_back(std::move(cert));
    }
    return out;
}

nlohmann::json s5_certificate_json(const SingularCertificate& c) {
    nlohmann::json j = certificate_json(c);
    j["algebra"] = "S5";
    j.erase("full_g1");
    return j;
}

}  // namespace e510
