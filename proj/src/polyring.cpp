#include "hopfring/polyring.hpp"

#include <algorithm>
#include <cctype>

namespace hopfring {

int total_degree(const ExponentVector& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exp_add: variable count mismatch");
    ExponentVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

bool exp_divides(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exp_divides: variable count mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

namespace {
void enum_monomials(int r, int d, ExponentVector& cur, std::vector<ExponentVector>& out) {
    if (static_cast<int>(cur.size()) + 1 == r) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur.push_back(k);
        enum_monomials(r, d - k, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<ExponentVector> sym_monomials(int r, int d) {
    if (r < 1) throw std::invalid_argument("sym_monomials: need at least one variable");
    if (d < 0) throw std::invalid_argument("sym_monomials: negative degree");
    std::vector<ExponentVector> out;
    ExponentVector cur;
    enum_monomials(r, d, cur, out);
    return out;
}

long long sym_dim(int r, int d) { return binom_ll(d + r - 1, r - 1); }

Polynomial Polynomial::monomial(ExponentVector e, Rational c) {
    Polynomial p;
    if (c != 0) p.terms.emplace(std::move(e), std::move(c));
    return p;
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

int Polynomial::homogeneous_degree() const {
    if (terms.empty()) return -1;
    int d = total_degree(terms.begin()->first);
    for (const auto& [e, c] : terms)
        if (total_degree(e) != d) throw std::invalid_argument("polynomial is not homogeneous");
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms.empty()) return true;
    int d = total_degree(terms.begin()->first);
    for (const auto& [e, c] : terms)
        if (total_degree(e) != d) return false;
    return true;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [e, c] : other.terms) add_term(e, c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out;
    for (const auto& [ea, ca] : terms)
        for (const auto& [eb, cb] : other.terms) out.add_term(exp_add(ea, eb), ca * cb);
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.terms.empty()) return "0";
    std::string out;
    // map order is ascending lex; canonical printing is descending lex
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        std::string vars;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i);
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out += to_string(abs);
        } else {
            if (abs != 1) out += to_string(abs) + "*";
            out += vars;
        }
    }
    return out;
}

ParseError::ParseError(const std::string& msg, size_t position)
    : std::runtime_error(msg + " (position " + std::to_string(position) + ")"), pos(position) {}

namespace {

class Parser {
public:
    Parser(const std::string& text, int r) : text_(text), r_(r) {}

    Polynomial parse() {
        skip_ws();
        if (done()) throw ParseError("empty polynomial", pos_);
        Polynomial p;
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        p += term(negate);
        skip_ws();
        while (!done()) {
            char op = peek();
            if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_);
            ++pos_;
            p += term(op == '-');
        }
        return p;
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    long long integer() {
        size_t start = pos_;
        long long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000000LL) throw ParseError("integer too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected integer", pos_);
        if (!done() && (peek() == '.' || peek() == '/'))
            throw ParseError("non-integer coefficient", pos_);
        return v;
    }

    ExponentVector factor() {
        skip_ws();
        if (done() || peek() != 'x') throw ParseError("expected variable", pos_);
        ++pos_;
        size_t ipos = pos_;
        long long index = integer();
        if (index >= r_)
            throw ParseError("variable index " + std::to_string(index) + " out of range for " +
                                 std::to_string(r_) + " variables",
                             ipos);
        long long exp = 1;
        skip_ws();
        if (!done() && peek() == '^') {
            ++pos_;
            skip_ws();
            size_t epos = pos_;
            exp = integer();
            if (exp < 1) throw ParseError("exponent must be positive", epos);
            if (exp > 10000) throw ParseError("exponent too large", epos);
        }
        ExponentVector e(r_, 0);
        e[index] = static_cast<int>(exp);
        return e;
    }

    Polynomial term(bool negate) {
        skip_ws();
        Rational coeff(negate ? -1 : 1);
        if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= Rational(static_cast<long>(integer()));
            skip_ws();
            if (done() || peek() != '*') throw ParseError("expected '*'", pos_);
            ++pos_;
        }
        ExponentVector e = factor();
        skip_ws();
        while (!done() && peek() == '*') {
            ++pos_;
            e = exp_add(e, factor());
            skip_ws();
        }
        return Polynomial::monomial(std::move(e), coeff);
    }

    const std::string& text_;
    int r_;
    size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, int r) {
    if (r < 1) throw std::invalid_argument("parse_poly: need at least one variable");
    return Parser(text, r).parse();
}

GradedRing::GradedRing(int vars, std::vector<Polynomial> relations) : vars_(vars) {
    if (vars < 1) throw std::invalid_argument("GradedRing: need at least one variable");
    for (auto& g : relations) {
        if (g.is_zero()) continue;
        for (const auto& [e, c] : g.terms)
            if (static_cast<int>(e.size()) != vars)
                throw std::invalid_argument("GradedRing: relation variable count mismatch");
        if (g.homogeneous_degree() < 1)
            throw std::invalid_argument("GradedRing: relations must be homogeneous of degree >= 1");
        relations_.push_back(std::move(g));
    }
}

GradedRing GradedRing::free_ring(int vars) { return GradedRing(vars, {}); }

GradedRing::DegreeData GradedRing::compute_degree(int d) const {
    DegreeData dd;
    dd.monomials = sym_monomials(vars_, d);
    for (int i = 0; i < static_cast<int>(dd.monomials.size()); ++i)
        dd.monomial_index.emplace(dd.monomials[i], i);

    SpanBuilder span(static_cast<int>(dd.monomials.size()));
    for (const auto& g : relations_) {
        int e = g.homogeneous_degree();
        if (e > d) continue;
        for (const auto& m : sym_monomials(vars_, d - e)) {
            std::vector<std::pair<int, Rational>> entries;
            for (const auto& [ge, gc] : g.terms)
                entries.emplace_back(dd.monomial_index.at(exp_add(m, ge)), gc);
            span.insert(sparse_normalize(std::move(entries)));
        }
    }
    dd.ideal = span.matrix();
    dd.pivots = span.pivots();

    std::vector<bool> is_pivot(dd.monomials.size(), false);
    for (int p : dd.pivots) is_pivot[p] = true;
    dd.col_to_basis.assign(dd.monomials.size(), -1);
    for (int c = 0; c < static_cast<int>(dd.monomials.size()); ++c) {
        if (is_pivot[c]) continue;
        dd.col_to_basis[c] = static_cast<int>(dd.basis.size());
        dd.basis.push_back(dd.monomials[c]);
    }
    return dd;
}

const GradedRing::DegreeData& GradedRing::degree(int d) const {
    if (d < 0) throw std::invalid_argument("GradedRing: negative degree");
    {
        std::scoped_lock lock(mu_);
        auto it = degrees_.find(d);
        if (it != degrees_.end()) return it->second;
    }
    DegreeData dd = compute_degree(d);
    std::scoped_lock lock(mu_);
    return degrees_.emplace(d, std::move(dd)).first->second;
}

int GradedRing::dim(int d) const { return static_cast<int>(degree(d).basis.size()); }

const std::vector<ExponentVector>& GradedRing::basis(int d) const { return degree(d).basis; }

const std::vector<ExponentVector>& GradedRing::monomials(int d) const {
    return degree(d).monomials;
}

const RatMatrix& GradedRing::ideal_piece(int d) const { return degree(d).ideal; }

const std::vector<int>& GradedRing::ideal_pivots(int d) const { return degree(d).pivots; }

SparseVec GradedRing::reduce_in(const DegreeData& dd, const Polynomial& p, int d) const {
    std::vector<Rational> v(dd.monomials.size(), Rational(0));
    for (const auto& [e, c] : p.terms) {
        if (static_cast<int>(e.size()) != vars_)
            throw std::invalid_argument("GradedRing::reduce: variable count mismatch");
        auto it = dd.monomial_index.find(e);
        if (it == dd.monomial_index.end())
            throw std::invalid_argument("GradedRing::reduce: term of degree != " +
                                        std::to_string(d));
        v[it->second] = c;
    }
    for (int i = 0; i < dd.ideal.rows; ++i) {
        const Rational& c = v[dd.pivots[i]];
        if (c == 0) continue;
        Rational factor = c;  // pivot entries are 1
        for (const auto& [col, val] : dd.ideal.data[i]) v[col] -= factor * val;
    }
    SparseVec out;
    for (int c = 0; c < static_cast<int>(v.size()); ++c)
        if (v[c] != 0) out.emplace_back(dd.col_to_basis[c], v[c]);
    // non-pivot columns keep their relative order, so out is sorted already
    return out;
}

SparseVec GradedRing::reduce(int d, const Polynomial& p) const {
    return reduce_in(degree(d), p, d);
}

Polynomial GradedRing::lift(int d, const SparseVec& v) const {
    const DegreeData& dd = degree(d);
    Polynomial p;
    for (const auto& [i, c] : v) {
        if (i < 0 || i >= static_cast<int>(dd.basis.size()))
            throw std::out_of_range("GradedRing::lift: coordinate out of range");
        p.add_term(dd.basis[i], c);
    }
    return p;
}

SparseVec GradedRing::multiply(int da, const SparseVec& a, int db, const SparseVec& b) const {
    Polynomial prod = lift(da, a) * lift(db, b);
    return reduce(da + db, prod);
}

const SparseVec& GradedRing::basis_product(int da, int ia, int db, int ib) const {
    std::tuple<int, int, int, int> key(da, ia, db, ib);
    {
        std::scoped_lock lock(prod_mu_);
        auto it = products_.find(key);
        if (it != products_.end()) return it->second;
    }
    SparseVec v = multiply(da, {{ia, Rational(1)}}, db, {{ib, Rational(1)}});
    std::scoped_lock lock(prod_mu_);
    return products_.emplace(std::move(key), std::move(v)).first->second;
}

}  // namespace hopfring
