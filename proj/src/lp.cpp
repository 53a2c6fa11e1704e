#include "polyskel/lp.hpp"

#include <stdexcept>
#include <string>

namespace polyskel {
namespace {

// Dictionary form: basic[r] = value[r] + sum_c row[r][c] * nonbasic[c], plus
// an objective z = z0 + sum_c objective[c] * nonbasic[c] to be maximised.
// Variable ids are only used for Bland's smallest-index rule.
class Dictionary {
 public:
  Dictionary(std::vector<std::vector<Rational>> rows, std::vector<Rational> values,
             std::vector<std::size_t> basic, std::vector<std::size_t> nonbasic)
      : rows_(std::move(rows)),
        values_(std::move(values)),
        basic_(std::move(basic)),
        nonbasic_(std::move(nonbasic)),
        objective_(nonbasic_.size()) {}

  std::vector<Rational>& objective() { return objective_; }
  Rational& objective_value() { return z0_; }
  std::size_t pivots() const { return pivots_; }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t basic(std::size_t r) const { return basic_[r]; }
  std::size_t nonbasic(std::size_t c) const { return nonbasic_[c]; }
  const Rational& value(std::size_t r) const { return values_[r]; }
  const Rational& coeff(std::size_t r, std::size_t c) const { return rows_[r][c]; }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    std::vector<Rational>& pr = rows_[r];
    // Solve row r for the entering variable.
    const Rational inv = -1 / pr[c];
    for (std::size_t k = 0; k < pr.size(); ++k) {
      if (k != c && pr[k] != 0) pr[k] *= inv;
    }
    values_[r] *= inv;
    pr[c] = -inv;  // coefficient of the leaving variable
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r) continue;
      substitute(rows_[i], values_[i], pr, values_[r], c);
    }
    substitute(objective_, z0_, pr, values_[r], c);
    std::swap(basic_[r], nonbasic_[c]);
  }

 private:
  // target = tv + ... + target[c] * entering, entering = pv + pr . nonbasic
  void substitute(std::vector<Rational>& target, Rational& tv, const std::vector<Rational>& pr,
                  const Rational& pv, std::size_t c) {
    if (target[c] == 0) return;
    factor_ = target[c];
    for (std::size_t k = 0; k < target.size(); ++k) {
      if (k == c || pr[k] == 0) continue;
      target[k] += factor_ * pr[k];
    }
    target[c] = factor_ * pr[c];
    tv += factor_ * pv;
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> values_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::vector<Rational> objective_;
  Rational z0_ = 0;
  std::size_t pivots_ = 0;
  Rational factor_;
};

struct Row {
  std::vector<Rational> coeffs;  // over the original free variables
  Rational bound;                // coeffs . x <= bound
};

std::vector<Row> to_less_equal_rows(const LPProblem& problem) {
  std::vector<Row> rows;
  for (std::size_t k = 0; k < problem.constraints.size(); ++k) {
    const Hyperplane& h = problem.constraints[k];
    if (h.coeffs.size() != problem.num_vars) {
      throw std::invalid_argument("constraint " + std::to_string(k) + " has " +
                                  std::to_string(h.coeffs.size()) + " coefficients, expected " +
                                  std::to_string(problem.num_vars));
    }
    Row negated{h.coeffs, -h.bound};
    for (auto& c : negated.coeffs) c = -c;
    switch (h.relation) {
      case Relation::less_equal:
        rows.push_back({h.coeffs, h.bound});
        break;
      case Relation::greater_equal:
        rows.push_back(std::move(negated));
        break;
      case Relation::equal:
        rows.push_back({h.coeffs, h.bound});
        rows.push_back(std::move(negated));
        break;
    }
  }
  return rows;
}

}  // namespace

LPResult lp_feasible(const LPProblem& problem) {
  const std::vector<Row> rows = to_less_equal_rows(problem);
  const std::size_t n = problem.num_vars;
  const std::size_t m = rows.size();

  // Columns: x+_j (id j), x-_j (id n + j), auxiliary x0 (id 2n); slack i has id 2n + 1 + i.
  const std::size_t aux = 2 * n;
  std::vector<std::vector<Rational>> coeffs(m, std::vector<Rational>(2 * n + 1));
  std::vector<Rational> values(m);
  std::vector<std::size_t> basic(m);
  std::vector<std::size_t> nonbasic(2 * n + 1);
  for (std::size_t c = 0; c <= 2 * n; ++c) nonbasic[c] = c;
  std::size_t most_negative = m;
  for (std::size_t i = 0; i < m; ++i) {
    // s_i = b_i - a_i . (x+ - x-) + x0
    for (std::size_t j = 0; j < n; ++j) {
      coeffs[i][j] = -rows[i].coeffs[j];
      coeffs[i][n + j] = rows[i].coeffs[j];
    }
    coeffs[i][aux] = 1;
    values[i] = rows[i].bound;
    basic[i] = 2 * n + 1 + i;
    if (values[i] < 0 && (most_negative == m || values[i] < values[most_negative])) {
      most_negative = i;
    }
  }

  Dictionary dict(std::move(coeffs), std::move(values), std::move(basic), std::move(nonbasic));
  // Maximise -x0.
  dict.objective()[aux] = -1;

  auto aux_column = [&]() -> std::optional<std::size_t> {
    for (std::size_t c = 0; c <= 2 * n; ++c) {
      if (dict.nonbasic(c) == aux) return c;
    }
    return std::nullopt;
  };

  if (most_negative != m) {
    dict.pivot(most_negative, aux);
    for (;;) {
      // Bland: smallest variable id with positive objective coefficient enters.
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c <= 2 * n; ++c) {
        if (dict.objective()[c] > 0 &&
            (!entering || dict.nonbasic(c) < dict.nonbasic(*entering))) {
          entering = c;
        }
      }
      if (!entering) break;
      const std::size_t c = *entering;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      Rational ratio;
      bool leaving_is_aux = false;
      for (std::size_t r = 0; r < dict.row_count(); ++r) {
        const Rational& a = dict.coeff(r, c);
        if (a >= 0) continue;
        mpq_div(ratio.get_mpq_t(), dict.value(r).get_mpq_t(), a.get_mpq_t());
        mpq_neg(ratio.get_mpq_t(), ratio.get_mpq_t());
        const bool is_aux = dict.basic(r) == aux;
        if (!leaving || ratio < best_ratio) {
          leaving = r;
          best_ratio = ratio;
          leaving_is_aux = is_aux;
        } else if (ratio == best_ratio) {
          // Ties: let x0 leave when possible, else the smallest id.
          if (is_aux || (!leaving_is_aux && dict.basic(r) < dict.basic(*leaving))) {
            leaving = r;
            leaving_is_aux = is_aux;
          }
        }
      }
      // Phase one is bounded above by zero, so a leaving row always exists.
      if (!leaving) throw std::logic_error("phase-one simplex reported unbounded");
      dict.pivot(*leaving, c);
      if (leaving_is_aux) break;
    }
  }

  LPResult result;
  result.pivots = dict.pivots();
  const bool aux_nonbasic = aux_column().has_value();
  if (!aux_nonbasic) {
    // x0 still basic: feasible only if its value is zero.
    for (std::size_t r = 0; r < dict.row_count(); ++r) {
      if (dict.basic(r) == aux && dict.value(r) != 0) return result;
    }
  }

  std::vector<Rational> column_values(2 * n + 1);
  for (std::size_t r = 0; r < dict.row_count(); ++r) {
    if (dict.basic(r) <= 2 * n) column_values[dict.basic(r)] = dict.value(r);
  }
  std::vector<Rational> witness(n);
  for (std::size_t j = 0; j < n; ++j) witness[j] = column_values[j] - column_values[n + j];
  for (std::size_t k = 0; k < problem.constraints.size(); ++k) {
    if (!problem.constraints[k].satisfied_by(witness)) {
      throw std::logic_error("simplex witness violates constraint " + std::to_string(k));
    }
  }
  result.feasible = true;
  result.witness = std::move(witness);
  return result;
}

}  // namespace polyskel
