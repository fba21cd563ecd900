#include "e510/text.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace e510::text {

namespace {

std::string normalize(const std::string& s) {
    // Replace multi-byte symbols by ASCII stand-ins.
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c == 0xe2 && i + 2 < s.size()) {
            unsigned char c1 = static_cast<unsigned char>(s[i + 1]);
            unsigned char c2 = static_cast<unsigned char>(s[i + 2]);
            if (c1 == 0x88 && c2 == 0x92) {  // U+2212 minus
                out += '-';
                i += 2;
                continue;
            }
            if (c1 == 0x8a && c2 == 0x97) {  // U+2297 tensor
                out += " | ";
                i += 2;
                continue;
            }
            if (c1 == 0x8b && c2 == 0x85) {  // U+22C5 dot operator
                out += ' ';
                i += 2;
                continue;
            }
        }
        if (c == 0xc2 && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xb7) {  // middle dot
            out += ' ';
            i += 1;
            continue;
        }
        out += s[i];
    }
    return out;
}

}  // namespace

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::pair<int, std::string>> split_terms(const std::string& raw) {
    std::string s = normalize(raw);
    std::vector<std::pair<int, std::string>> out;
    int sign = 1;
    std::string cur;
    auto flush = [&]() {
        std::string t = trim(cur);
        if (!t.empty()) out.emplace_back(sign, t);
        cur.clear();
    };
    for (char c : s) {
        if (c == '+' || c == '-') {
            if (!trim(cur).empty()) {
                flush();
                sign = 1;
            }
            if (c == '-') sign = -sign;
        } else {
            cur += c;
        }
    }
    flush();
    return out;
}

std::vector<std::string> tokens(const std::string& raw) {
    std::string s = normalize(raw);
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool sep = std::isspace(static_cast<unsigned char>(c));
        // A '*' directly after an index digit is the dual marker (x5*), not a product.
        if (c == '*' && !(i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1])) && !cur.empty() && cur[0] == 'x'))
            sep = true;
        if (c == '(' || c == ')') sep = true;
        if (c == '|') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
            out.emplace_back("|");
            continue;
        }
        if (sep) {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

bool is_rational_token(const std::string& tok) {
    if (tok.empty()) return false;
    bool slash = false, digit = false;
    for (char c : tok) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digit = true;
        } else if (c == '/' && !slash) {
            slash = true;
        } else {
            return false;
        }
    }
    return digit && tok.back() != '/' && tok.front() != '/';
}

std::vector<int> parse_int_list(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != '(' && c != ')' && c != '[' && c != ']') s += (c == ',' ? ' ' : c);
    std::istringstream is(s);
    std::vector<int> out;
    std::string tok;
    while (is >> tok) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer list: '" + raw + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("not an integer list: '" + raw + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace e510::text
