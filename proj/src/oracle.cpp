#include "flagbott/oracle.hpp"

#include <stdexcept>

namespace flagbott {

void MultivariatePolynomial::add_term(const std::vector<int>& exponents, const Coefficient& c) {
    if (static_cast<int>(exponents.size()) != variables_)
        throw std::invalid_argument("bad-polynomial: exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultivariatePolynomial MultivariatePolynomial::operator*(const MultivariatePolynomial& other) const {
    if (variables_ != other.variables_)
        throw std::invalid_argument("bad-polynomial: variable count mismatch");
    MultivariatePolynomial out(variables_);
    std::vector<int> exps(static_cast<std::size_t>(variables_));
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = e1[i] + e2[i];
            out.add_term(exps, c1 * c2);
        }
    return out;
}

MultivariatePolynomial& MultivariatePolynomial::operator-=(const MultivariatePolynomial& other) {
    if (variables_ != other.variables_)
        throw std::invalid_argument("bad-polynomial: variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultivariatePolynomial::Coefficient MultivariatePolynomial::evaluate_at_ones() const {
    Coefficient total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

MultivariatePolynomial schur_polynomial(const Partition& lam, int k) {
    MultivariatePolynomial out(k);
    if (static_cast<int>(lam.length()) > k) return out;
    if (lam.is_zero()) {
        out.add_term(std::vector<int>(static_cast<std::size_t>(k), 0), 1);
        return out;
    }

    // row-major fill: weakly increasing along rows, strictly down columns
    const std::size_t rows = lam.length();
    std::vector<std::vector<int>> entries(rows);
    for (std::size_t i = 0; i < rows; ++i) entries[i].assign(static_cast<std::size_t>(lam.part(i)), 0);
    std::vector<int> exps(static_cast<std::size_t>(k), 0);

    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == rows) {
            out.add_term(exps, 1);
            return;
        }
        std::size_t ni = i, nj = j + 1;
        if (nj >= entries[i].size()) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = entries[i][j - 1];
        if (i > 0 && j < entries[i - 1].size()) lo = std::max(lo, entries[i - 1][j] + 1);
        for (int v = lo; v <= k; ++v) {
            entries[i][j] = v;
            ++exps[static_cast<std::size_t>(v - 1)];
            self(self, ni, nj);
            --exps[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(rec, 0, 0);
    return out;
}

SchurDecomposition expand_in_schur_basis(const MultivariatePolynomial& p, int k) {
    if (p.variables() != k)
        throw std::invalid_argument("bad-polynomial: variable count mismatch");
    SchurDecomposition dec(static_cast<std::size_t>(k));
    MultivariatePolynomial rest = p;
    while (!rest.is_zero()) {
        auto lead = std::prev(rest.terms().end());
        const std::vector<int>& exps = lead->first;
        for (std::size_t i = 1; i < exps.size(); ++i)
            if (exps[i - 1] < exps[i])
                throw std::invalid_argument("bad-polynomial: leading exponent not a partition");
        if (lead->second < 0)
            throw std::invalid_argument("bad-polynomial: not Schur positive");
        long long mult = lead->second.convert_to<long long>();

        Partition lam(exps);
        MultivariatePolynomial s = schur_polynomial(lam, k);
        for (const auto& [e, c] : s.terms()) rest.add_term(e, -c * mult);
        dec.add(lam.padded(static_cast<std::size_t>(k)), mult);
    }
    return dec;
}

}  // namespace flagbott
