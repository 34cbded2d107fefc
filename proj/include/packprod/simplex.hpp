#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace packprod {

/// Exact rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" form, also for integers ("3/1").
std::string to_string(const Rational& value);
/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

/// maximize objective . x  subject to  rows . x <= rhs,  x >= 0.
struct LinearProgram {
    std::vector<Rational> objective;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> x;
    std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex in exact arithmetic. Bland's rule picks the
/// lowest-index improving column and breaks ratio ties by lowest basic index,
/// so it terminates without cycling.
LpSolution solve_lp(const LinearProgram& lp);

} // namespace packprod
