#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyptrans/jet.hpp"
#include "hyptrans/special.hpp"

namespace hyptrans {

enum class SolutionKind { W1, W2, W3, W4, W5, W6 };
inline constexpr SolutionKind kAllKinds[] = {SolutionKind::W1, SolutionKind::W2,
                                             SolutionKind::W3, SolutionKind::W4,
                                             SolutionKind::W5, SolutionKind::W6};

struct OpenInterval {
    double lo;
    double hi;
    bool contains(double x) const { return lo < x && x < hi; }
};

std::vector<OpenInterval> domain_of(SolutionKind kind);
bool in_domain(SolutionKind kind, double x);

std::string to_string(SolutionKind kind);
std::optional<SolutionKind> parse_kind(std::string_view name);

// How the inner 2F1 argument depends on x.
enum class ArgMap { X, InvX, OneMinusX };

// w(x) = |x|^{e0} |1-x|^{e1} F(A,B;C;g(x)).
struct SolutionForm {
    double exp0;
    double exp1;
    double A, B, C;
    ArgMap arg;
};

SolutionForm solution_form(SolutionKind kind, const HypParams& p);

// Evaluation without the near-singular guard; one_minus_x must equal 1 - x.
Scaled eval_w_scaled(SolutionKind kind, double x, double one_minus_x, const HypParams& p);

// Rejects x within kSingularGuard of a finite singular point of the domain.
inline constexpr double kSingularGuard = 1e-8;
double eval_w(SolutionKind kind, double x, const HypParams& p);

// Value and first three derivatives (exact, through the 2F1 derivative rule).
Jet eval_w_jet(SolutionKind kind, double x, const HypParams& p, int order = 3);

}  // namespace hyptrans
