#pragma once

#include <array>
#include <string>
#include <string_view>

namespace hyptrans {

enum class Sym : int { A = 0, B, C, Mu, Nu, D, E };
inline constexpr int kNumSyms = 7;
inline constexpr const char* kSymNames[kNumSyms] = {"a", "b", "c", "mu", "nu", "d", "e"};

using SymValues = std::array<double, kNumSyms>;

// Integer combination of the parameter symbols plus an integer constant.
struct Affine {
    std::array<int, kNumSyms> coef{};
    int constant = 0;

    Affine() = default;
    Affine(int k) : constant(k) {}
    // Parses forms like "c-a-b+1", "2-c-mu", "a+b-c+mu", "-a".
    Affine(const char* text);
    static Affine parse(std::string_view text);

    double eval(const SymValues& v) const {
        double s = constant;
        for (int i = 0; i < kNumSyms; ++i)
            if (coef[i] != 0) s += coef[i] * v[i];
        return s;
    }
    bool uses(Sym s) const { return coef[static_cast<int>(s)] != 0; }
    bool is_zero() const;
    std::string str() const;

    Affine& operator+=(const Affine& o);
    Affine& operator-=(const Affine& o);
    friend Affine operator+(Affine l, const Affine& r) { return l += r; }
    friend Affine operator-(Affine l, const Affine& r) { return l -= r; }
    friend Affine operator-(Affine x) { return Affine(0) - x; }
    friend Affine operator*(int k, Affine x);
    friend bool operator==(const Affine& l, const Affine& r) = default;
};

}  // namespace hyptrans
