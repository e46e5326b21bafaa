#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "flagbott/lr.hpp"
#include "flagbott/partition.hpp"

namespace flagbott {

/// Sparse integer polynomial in a fixed number of variables, exponent
/// vectors as keys. Zero coefficients are never stored. Test-side ground
/// truth, deliberately slow and independent of the filling machinery.
class MultivariatePolynomial {
public:
    using Coefficient = boost::multiprecision::cpp_int;
    using TermMap = std::map<std::vector<int>, Coefficient>;

    explicit MultivariatePolynomial(int variables) : variables_(variables) {}

    int variables() const { return variables_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exponents, const Coefficient& c);
    MultivariatePolynomial operator*(const MultivariatePolynomial& other) const;
    MultivariatePolynomial& operator-=(const MultivariatePolynomial& other);

    Coefficient evaluate_at_ones() const;

    friend bool operator==(const MultivariatePolynomial&, const MultivariatePolynomial&) = default;

private:
    int variables_;
    TermMap terms_;
};

/// Generating polynomial of the column-strict row-weak fillings of lam with
/// entries at most k. Zero when lam has more than k rows.
MultivariatePolynomial schur_polynomial(const Partition& lam, int k);

/// Repeated leading-monomial subtraction. The lexicographically greatest
/// monomial of a symmetric polynomial is the leading monomial of a unique
/// Schur polynomial; a negative coefficient or a non-decreasing leading
/// exponent signals a non-Schur-positive input and throws.
SchurDecomposition expand_in_schur_basis(const MultivariatePolynomial& p, int k);

}  // namespace flagbott
