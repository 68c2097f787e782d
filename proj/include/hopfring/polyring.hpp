#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "hopfring/matrix.hpp"

namespace hopfring {

// Exponent vector of a monomial; one entry per variable.
using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& e);
ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b);
// Pointwise a <= b, i.e. the monomial of a divides the monomial of b.
bool exp_divides(const ExponentVector& a, const ExponentVector& b);

// All monomials of total degree d in r variables, in descending
// lexicographic order on exponent vectors.
std::vector<ExponentVector> sym_monomials(int r, int d);
long long sym_dim(int r, int d);

// Polynomial with exact rational coefficients. Terms keep no zeros.
struct Polynomial {
    std::map<ExponentVector, Rational> terms;

    static Polynomial monomial(ExponentVector e, Rational c = Rational(1));
    void add_term(const ExponentVector& e, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    // Degree if homogeneous (zero polynomial gives -1); throws otherwise.
    int homogeneous_degree() const;
    bool is_homogeneous() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial operator*(const Polynomial& other) const;
};

std::string to_string(const Polynomial& p);

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t position);
};

// Parses the textual polynomial grammar over variables x0..x(r-1):
//   poly   := ['-'] term (('+' | '-') term)*
//   term   := [integer '*']? factor ('*' factor)*
//   factor := 'x' index ['^' positive-integer]
// Whitespace between tokens is ignored.
Polynomial parse_poly(const std::string& text, int r);

// Graded quotient ring B = k[x0..x(r-1)] / (relations), truncated by degree.
// Every graded piece is handled by exact linear algebra: the degree-d part of
// the ideal is spanned by {m * g} over relations g and monomials m, and the
// basis of B_d is the set of non-pivot monomials of its reduced form.
// Degree data is computed on demand, cached, and synchronized.
class GradedRing {
public:
    GradedRing(int vars, std::vector<Polynomial> relations);
    static GradedRing free_ring(int vars);

    int vars() const { return vars_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    bool is_free() const { return relations_.empty(); }

    int dim(int d) const;
    // Monomial basis of B_d (non-pivot monomials, descending lex).
    const std::vector<ExponentVector>& basis(int d) const;
    // Full monomial list of the ambient degree-d space.
    const std::vector<ExponentVector>& monomials(int d) const;
    // rref of the degree-d ideal piece in ambient monomial coordinates.
    const RatMatrix& ideal_piece(int d) const;
    const std::vector<int>& ideal_pivots(int d) const;

    // Coordinates of p modulo the ideal, in basis(d) order. Rejects terms of
    // the wrong degree or variable count.
    SparseVec reduce(int d, const Polynomial& p) const;
    // Product of elements given in basis coordinates of B_da and B_db,
    // reduced into basis coordinates of B_{da+db}.
    SparseVec multiply(int da, const SparseVec& a, int db, const SparseVec& b) const;
    // Cached product of two basis elements.
    const SparseVec& basis_product(int da, int ia, int db, int ib) const;
    // Polynomial representative of an element of B_d.
    Polynomial lift(int d, const SparseVec& v) const;

private:
    struct DegreeData {
        std::vector<ExponentVector> monomials;
        std::map<ExponentVector, int> monomial_index;
        RatMatrix ideal;
        std::vector<int> pivots;
        std::vector<ExponentVector> basis;
        std::vector<int> col_to_basis;  // ambient column -> basis position, -1 on pivots
    };

    const DegreeData& degree(int d) const;
    DegreeData compute_degree(int d) const;
    SparseVec reduce_in(const DegreeData& dd, const Polynomial& p, int d) const;

    int vars_;
    std::vector<Polynomial> relations_;
    mutable std::mutex mu_;
    mutable std::map<int, DegreeData> degrees_;
    mutable std::mutex prod_mu_;
    mutable std::map<std::tuple<int, int, int, int>, SparseVec> products_;
};

}  // namespace hopfring
