#include "hyptrans/affine.hpp"

#include <cctype>
#include <stdexcept>

namespace hyptrans {

Affine::Affine(const char* text) : Affine(parse(text)) {}

Affine Affine::parse(std::string_view s) {
    Affine out;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && s[i] == ' ') ++i;
    };
    skip();
    if (i == s.size()) throw std::invalid_argument("empty affine expression");
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            throw std::invalid_argument("expected + or - in affine expression: " + std::string(s));
        }
        int num = 1;
        bool has_num = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            num = 0;
            has_num = true;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                num = num * 10 + (s[i++] - '0');
        }
        int sym = -1;
        for (int k = kNumSyms - 1; k >= 0 && sym < 0; --k) {
            std::string_view name = kSymNames[k];
            if (s.substr(i, name.size()) == name) {
                size_t end = i + name.size();
                if (end == s.size() || !std::isalpha(static_cast<unsigned char>(s[end]))) {
                    sym = k;
                    i = end;
                }
            }
        }
        if (sym < 0) {
            if (!has_num) throw std::invalid_argument("bad affine term in: " + std::string(s));
            out.constant += sign * num;
        } else {
            out.coef[sym] += sign * num;
        }
        first = false;
        skip();
    }
    return out;
}

bool Affine::is_zero() const {
    if (constant != 0) return false;
    for (int k : coef)
        if (k != 0) return false;
    return true;
}

std::string Affine::str() const {
    std::string out;
    for (int i = 0; i < kNumSyms; ++i) {
        int k = coef[i];
        if (k == 0) continue;
        if (k < 0) out += '-';
        else if (!out.empty()) out += '+';
        if (k != 1 && k != -1) out += std::to_string(k < 0 ? -k : k);
        out += kSymNames[i];
    }
    if (constant != 0 || out.empty()) {
        if (constant < 0) out += '-';
        else if (!out.empty()) out += '+';
        out += std::to_string(constant < 0 ? -constant : constant);
    }
    return out;
}

Affine& Affine::operator+=(const Affine& o) {
    for (int i = 0; i < kNumSyms; ++i) coef[i] += o.coef[i];
    constant += o.constant;
    return *this;
}

Affine& Affine::operator-=(const Affine& o) {
    for (int i = 0; i < kNumSyms; ++i) coef[i] -= o.coef[i];
    constant -= o.constant;
    return *this;
}

Affine operator*(int k, Affine x) {
    for (int& c : x.coef) c *= k;
    x.constant *= k;
    return x;
}

}  // namespace hyptrans
