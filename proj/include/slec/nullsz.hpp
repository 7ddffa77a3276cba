#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "slec/graph.hpp"

namespace slec::nullsz {

using BigInt = boost::multiprecision::cpp_int;
using VarId = std::size_t;

/// The binomial (x_plus - x_minus).
struct Factor {
    VarId plus;
    VarId minus;
};

/// Exponent per variable index.
using ExponentVector = std::vector<unsigned>;

class NullszError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Product of difference binomials over named variables.
class FactorProduct {
public:
    FactorProduct() = default;
    explicit FactorProduct(const std::vector<std::string>& variables);

    VarId add_variable(std::string name);
    [[nodiscard]] VarId variable(std::string_view name) const;
    void add_factor(VarId plus, VarId minus);
    void add_factor(std::string_view plus, std::string_view minus) { add_factor(variable(plus), variable(minus)); }

    [[nodiscard]] const std::vector<std::string>& variables() const { return variables_; }
    [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
    [[nodiscard]] std::size_t degree() const { return factors_.size(); }
    [[nodiscard]] std::vector<unsigned> variable_degrees() const;

    /// Exponent vector from name -> exponent pairs; unnamed variables get 0.
    [[nodiscard]] ExponentVector exponents(const std::vector<std::pair<std::string, unsigned>>& named) const;

    [[nodiscard]] BigInt evaluate(const std::vector<BigInt>& point) const;

private:
    std::vector<std::string> variables_;
    std::unordered_map<std::string, VarId> index_;
    std::vector<Factor> factors_;
};

struct CoefficientOptions {
    bool prune = true;    // drop monomials that overshoot a target exponent or can no longer reach it
    bool reorder = false;  // greedy factor order that retires variables early
};

/// Coefficient of the target monomial, by multiplying factors left to right into a sparse
/// accumulator keyed by packed exponent vectors. Exact: int64 with overflow checks, redone in
/// arbitrary precision when a check trips.
BigInt coefficient_of_monomial(const FactorProduct& p, const ExponentVector& target,
                               const CoefficientOptions& options = {});

/// Independent check: signed sum over all choices of x_plus or -x_minus per factor
/// (depth-first, cut when a tally exceeds the target). At most 22 factors.
BigInt brute_coefficient_oracle(const FactorProduct& p, const ExponentVector& target);

/// One factor (x_e - x_f) per conflicting pair, e before f in `ordering`; variables named "e<id>"
/// in ordering order unless `names` (indexed by node) is given. Factors are emitted by position of e, then position of f.
FactorProduct build_strong_conflict_polynomial(const ConflictGraph& cg, const std::vector<EdgeId>& ordering,
                                              const std::vector<std::string>& names = {});

/// Sparse multivariate polynomial over the integers; monomials are sorted (var, exponent) lists.
class SparsePoly {
public:
    using Monomial = std::vector<std::pair<VarId, unsigned>>;

    SparsePoly() = default;
    static SparsePoly constant(BigInt c);

    [[nodiscard]] const std::map<Monomial, BigInt>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

    void add_term(Monomial m, const BigInt& c);
    [[nodiscard]] SparsePoly times_factor(const Factor& f) const;
    [[nodiscard]] SparsePoly operator*(const SparsePoly& other) const;
    [[nodiscard]] SparsePoly operator-() const;
    [[nodiscard]] SparsePoly operator+(const SparsePoly& other) const;
    friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

    /// Coefficient (a polynomial in the other variables) of prod v^e over `partial`.
    /// Variables listed in `partial` with exponent 0 must be absent from the extracted terms.
    [[nodiscard]] SparsePoly coefficient_of(const std::map<VarId, unsigned>& partial) const;

    [[nodiscard]] BigInt evaluate(const std::vector<BigInt>& point) const;
    [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;

    /// Builds a polynomial from (coefficient, monomial) pairs.
    static SparsePoly from_terms(const std::vector<std::pair<BigInt, Monomial>>& terms);

private:
    std::map<Monomial, BigInt> terms_;
};

/// Full expansion (no truncation); intended for small products.
SparsePoly expand(const FactorProduct& p);

/// Variables x0..x{k-1} then y0..y{k-1} (ids i and k+i). Factors for i = 0..k-1, indices mod k:
/// (x_i-x_{i+1})(x_i-x_{i+2})(y_i-y_{i+1})(x_i-y_{i-1})(x_i-y_i)(x_i-y_{i+1})(x_i-y_{i+2}).
FactorProduct cycle_conflict_polynomial(std::size_t k);

/// x0^4 y0^3 x1^2 y1^2 x2^5 y2^3 x3^5 y3^3 x4^4 y4^3 x5^5 y5^3 prod_{i>=6} x_i^4 y_i^3.
ExponentVector cycle_target(std::size_t k);

/// The 6-cycle configuration: x0..x5, y1..y5 with 38 factors.
FactorProduct six_cycle_polynomial();
ExponentVector six_cycle_target();

/// One stage of the staged cycle computation.
struct ChainStage {
    std::vector<std::size_t> indices;   // cycle positions whose x_i, y_i are extracted
    std::size_t factors_used = 0;       // factors of the cycle polynomial consumed
    SparsePoly residual;                // coefficient after extraction
};

struct ChainTrace {
    std::size_t k = 0;
    std::vector<std::string> names;  // variable names, as in cycle_conflict_polynomial
    std::vector<ChainStage> stages;
    BigInt coefficient;
};

/// Staged extraction over position groups {2,3,4}, {5,6}, {7}, ..., {k-1}, {0}, {1}: each stage
/// multiplies the still unused factors touching its positions into the running residual and
/// extracts that stage's target exponents (stage {0} also takes the factors touching only x1, y1). Requires k >= 7.
ChainTrace ck_chain_trace(std::size_t k);
BigInt ck_chain_coefficient(std::size_t k);

/// File format: "vars: a b c", then one "a - b" per line, then "target: a^2 b c^0".
struct ProductFile {
    FactorProduct product;
    ExponentVector target;
};
ProductFile parse_product_file(std::string_view text);
std::string write_product_file(const FactorProduct& p, const ExponentVector& target);

}  // namespace slec::nullsz
