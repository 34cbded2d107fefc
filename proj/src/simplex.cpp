#include "packprod/simplex.hpp"

#include "packprod/error.hpp"

#include <optional>

namespace packprod {

std::string to_string(const Rational& value)
{
    return boost::multiprecision::numerator(value).str() + "/" + boost::multiprecision::denominator(value).str();
}

Rational parse_rational(const std::string& text)
{
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos)
            return Rational(boost::multiprecision::cpp_int(text));
        const boost::multiprecision::cpp_int num(text.substr(0, slash));
        const boost::multiprecision::cpp_int den(text.substr(slash + 1));
        if (den == 0)
            throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e) != nullptr)
            throw;
        throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
    }
}

namespace {

class Tableau {
public:
    Tableau(const LinearProgram& lp) : vars_(lp.objective.size()), rows_(lp.rows.size())
    {
        for (const auto& row : lp.rows)
            if (row.size() != vars_)
                throw Error(ErrorCode::BadParameters, "LP row width does not match the objective");
        if (lp.rhs.size() != rows_)
            throw Error(ErrorCode::BadParameters, "LP right-hand side length mismatch");

        std::size_t artificials = 0;
        for (const auto& b : lp.rhs)
            if (b < 0)
                ++artificials;
        cols_ = vars_ + rows_ + artificials;
        table_.assign(rows_, std::vector<Rational>(cols_ + 1));
        basis_.resize(rows_);
        std::size_t next_artificial = vars_ + rows_;
        for (std::size_t i = 0; i < rows_; ++i) {
            const bool negate = lp.rhs[i] < 0;
            const Rational sign = negate ? -1 : 1;
            for (std::size_t j = 0; j < vars_; ++j)
                table_[i][j] = sign * lp.rows[i][j];
            table_[i][vars_ + i] = sign;
            table_[i][cols_] = sign * lp.rhs[i];
            if (negate) {
                table_[i][next_artificial] = 1;
                basis_[i] = next_artificial++;
            } else {
                basis_[i] = vars_ + i;
            }
        }
        first_artificial_ = vars_ + rows_;
    }

    bool has_artificials() const { return cols_ > first_artificial_; }

    /// Maximizes cost . column-vector over the allowed columns; false if unbounded.
    bool optimize(const std::vector<Rational>& cost, std::size_t allowed_cols)
    {
        while (true) {
            std::optional<std::size_t> entering;
            for (std::size_t j = 0; j < allowed_cols && !entering; ++j) {
                Rational reduced = cost[j];
                for (std::size_t i = 0; i < rows_; ++i)
                    if (table_[i][j] != 0)
                        reduced -= cost[basis_[i]] * table_[i][j];
                if (reduced > 0)
                    entering = j;
            }
            if (!entering)
                return true;
            const std::size_t c = *entering;
            std::optional<std::size_t> leaving;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (table_[i][c] <= 0)
                    continue;
                const Rational ratio = table_[i][cols_] / table_[i][c];
                if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (!leaving)
                return false;
            pivot(*leaving, c);
        }
    }

    /// Pivots basic artificials out, dropping rows that are redundant.
    void expel_artificials()
    {
        for (std::size_t i = 0; i < rows_;) {
            if (basis_[i] < first_artificial_) {
                ++i;
                continue;
            }
            std::optional<std::size_t> col;
            for (std::size_t j = 0; j < first_artificial_ && !col; ++j)
                if (table_[i][j] != 0)
                    col = j;
            if (col) {
                pivot(i, *col);
                ++i;
            } else {
                table_.erase(table_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --rows_;
            }
        }
    }

    Rational objective(const std::vector<Rational>& cost) const
    {
        Rational total = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            total += cost[basis_[i]] * table_[i][cols_];
        return total;
    }

    std::vector<Rational> primal() const
    {
        std::vector<Rational> x(vars_);
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < vars_)
                x[basis_[i]] = table_[i][cols_];
        return x;
    }

    std::size_t cols() const { return cols_; }
    std::size_t first_artificial() const { return first_artificial_; }
    std::size_t pivots() const { return pivots_; }

private:
    void pivot(std::size_t r, std::size_t c)
    {
        ++pivots_;
        const Rational inv = 1 / table_[r][c];
        for (auto& entry : table_[r])
            if (entry != 0)
                entry *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || table_[i][c] == 0)
                continue;
            const Rational factor = table_[i][c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (table_[r][j] != 0)
                    table_[i][j] -= factor * table_[r][j];
        }
        basis_[r] = c;
    }

    std::size_t vars_;
    std::size_t rows_;
    std::size_t cols_ = 0;
    std::size_t first_artificial_ = 0;
    std::vector<std::vector<Rational>> table_;
    std::vector<std::size_t> basis_;
    std::size_t pivots_ = 0;
};

} // namespace

LpSolution solve_lp(const LinearProgram& lp)
{
    Tableau tableau(lp);
    LpSolution out;

    if (tableau.has_artificials()) {
        std::vector<Rational> phase_one(tableau.cols());
        for (std::size_t j = tableau.first_artificial(); j < tableau.cols(); ++j)
            phase_one[j] = -1;
        tableau.optimize(phase_one, tableau.cols());
        if (tableau.objective(phase_one) < 0) {
            out.status = LpStatus::Infeasible;
            out.pivots = tableau.pivots();
            return out;
        }
        tableau.expel_artificials();
    }

    std::vector<Rational> cost(tableau.cols());
    for (std::size_t j = 0; j < lp.objective.size(); ++j)
        cost[j] = lp.objective[j];
    if (!tableau.optimize(cost, tableau.first_artificial())) {
        out.status = LpStatus::Unbounded;
        out.pivots = tableau.pivots();
        return out;
    }
    out.status = LpStatus::Optimal;
    out.value = tableau.objective(cost);
    out.x = tableau.primal();
    out.pivots = tableau.pivots();
    return out;
}

} // namespace packprod
