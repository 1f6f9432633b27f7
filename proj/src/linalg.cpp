#include "nilform/linalg.hpp"

#include "nilform/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <tuple>

namespace nilform {

namespace {

using IntRow = std::vector<mpz_class>;

IntRow integer_row(std::span<const Rational> row) {
    mpz_class l = 1;
    for (const auto& x : row)
        if (!x.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    IntRow out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero()) out[j] = row[j].raw().get_num() * (l / row[j].raw().get_den());
    return out;
}

}  // namespace

Echelon rref(const Matrix& a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<IntRow> m;
    m.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) m.push_back(integer_row(a.row(i)));

    Echelon out;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const mpz_class& piv = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const mpz_class lead = m[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = piv * m[i][j] - lead * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = piv;
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;

    out.reduced = Matrix(rows, cols);
    for (std::size_t i = 0; i < r; ++i) {
        const mpz_class& piv = m[i][out.pivots[i]];
        for (std::size_t j = out.pivots[i]; j < cols; ++j)
            if (sgn(m[i][j]) != 0) out.reduced(i, j) = Rational(mpq_class(m[i][j], piv));
    }
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t pc = out.pivots[i];
        for (std::size_t k = 0; k < i; ++k) {
            const Rational f = out.reduced(k, pc);
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < cols; ++j)
                if (!out.reduced(i, j).is_zero()) out.reduced(k, j) -= f * out.reduced(i, j);
        }
    }
    return out;
}

std::size_t rank(const Matrix& a) { return rref(a).rank; }

std::vector<Vector> kernel_basis(const Matrix& a) {
    const Echelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vector> out;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(a.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.reduced(r, f);
        out.push_back(std::move(v));
    }
    return out;
}

Matrix random_invertible(std::size_t n, Rng& rng, long bound) {
    for (;;) {
        Matrix t(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t(i, j) = Rational(static_cast<long>(rng.uniform(-bound, bound)));
        if (rank(t) == n) return t;
    }
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse: matrix not square");
    const std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    const Echelon e = rref(aug);
    if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw SingularTransform("inverse: singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve: rhs length");
    const std::size_t n = a.cols();
    Matrix aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    const Echelon e = rref(aug);
    if (e.rank > 0 && e.pivots[e.rank - 1] == n) return std::nullopt;
    Vector x(n);
    for (std::size_t r = 0; r < e.rank; ++r) x[e.pivots[r]] = e.reduced(r, n);
    return x;
}

std::vector<std::size_t> power_ranks(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("power_ranks: matrix not square");
    std::vector<std::size_t> ranks{a.rows()};
    Matrix p = Matrix::identity(a.rows());
    for (std::size_t k = 1; k <= a.rows() + 1; ++k) {
        p = p * a;
        ranks.push_back(rank(p));
        if (ranks.back() == ranks[ranks.size() - 2]) break;
    }
    return ranks;
}

std::vector<std::size_t> conjugate_partition(const std::vector<std::size_t>& parts) {
    std::vector<std::size_t> out;
    const std::size_t largest = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
    for (std::size_t k = 1; k <= largest; ++k)
        out.push_back(static_cast<std::size_t>(
            std::count_if(parts.begin(), parts.end(), [k](std::size_t p) { return p >= k; })));
    return out;
}

std::vector<std::size_t> nilpotent_jordan_profile(const Matrix& a) {
    const auto ranks = power_ranks(a);
    if (ranks.back() != 0) throw NotNilpotent("nilpotent_jordan_profile: matrix is not nilpotent");
    // ranks[k-1] - ranks[k] blocks have size >= k
    std::vector<std::size_t> at_least;
    for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
    return conjugate_partition(at_least);
}

Polynomial char_poly(const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("char_poly: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return {Rational(1)};
    // descending coefficients of the trailing principal block, grown one row/column at a time
    std::vector<Rational> p{Rational(1), -a(n - 1, n - 1)};
    for (std::size_t k = n - 1; k-- > 0;) {
        const std::size_t m = n - 1 - k;
        std::vector<Rational> t(m + 2);
        t[0] = 1;
        t[1] = -a(k, k);
        Vector v(m);
        for (std::size_t i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
        for (std::size_t j = 0; j < m; ++j) {
            Rational s;
            for (std::size_t i = 0; i < m; ++i)
                if (!v[i].is_zero()) s += a(k, k + 1 + i) * v[i];
            t[j + 2] = -s;
            if (j + 1 < m) {
                Vector w(m);
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t c = 0; c < m; ++c)
                        if (!v[c].is_zero()) w[r] += a(k + 1 + r, k + 1 + c) * v[c];
                v = std::move(w);
            }
        }
        std::vector<Rational> q(m + 2);
        for (std::size_t i = 0; i < m + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, m); ++j)
                if (!p[j].is_zero() && !t[i - j].is_zero()) q[i] += t[i - j] * p[j];
        p = std::move(q);
    }
    std::reverse(p.begin(), p.end());
    return p;
}

Matrix evaluate(const Polynomial& p, const Matrix& a) {
    if (!a.is_square()) throw DimensionMismatch("evaluate: matrix not square");
    Matrix acc(a.rows(), a.cols());
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * a + Matrix::identity(a.rows()) * p[i];
    return acc;
}

Rational evaluate(const Polynomial& p, const Rational& x) {
    Rational acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

std::string poly_to_string(const Polynomial& p, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        Rational c = p[i];
        if (!first) os << (c.sign() < 0 ? "-" : "+");
        else if (c.sign() < 0) os << "-";
        if (c.sign() < 0) c = -c;
        if (!c.is_one() || i == 0) os << c;
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
        first = false;
    }
    return first ? "0" : os.str();
}

void poly_trim(Polynomial& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Polynomial poly_derivative(const Polynomial& p) {
    Polynomial d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    poly_trim(d);
    return d;
}

Polynomial poly_monic(Polynomial p) {
    poly_trim(p);
    if (p.empty()) return p;
    const Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    poly_trim(out);
    return out;
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a, d = b;
    poly_trim(r);
    poly_trim(d);
    if (d.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    Polynomial q(r.size() >= d.size() ? r.size() - d.size() + 1 : 0);
    while (!r.empty() && r.size() >= d.size()) {
        const std::size_t shift = r.size() - d.size();
        const Rational f = r.back() / d.back();
        q[shift] = f;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
        poly_trim(r);
    }
    poly_trim(q);
    return {q, r};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        auto r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

std::vector<std::pair<std::size_t, std::size_t>> squarefree_profile(const Polynomial& p) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    Polynomial f = poly_monic(p);
    if (f.size() <= 1) return out;
    const Polynomial fp = poly_derivative(f);
    const Polynomial a0 = poly_gcd(f, fp);
    Polynomial b = poly_divmod(f, a0).first;
    Polynomial c = poly_divmod(fp, a0).first;
    Polynomial d = c;
    {
        auto bd = poly_derivative(b);
        d.resize(std::max(d.size(), bd.size()));
        for (std::size_t i = 0; i < bd.size(); ++i) d[i] -= bd[i];
        poly_trim(d);
    }
    for (std::size_t i = 1; b.size() > 1; ++i) {
        const Polynomial a = poly_gcd(b, d);
        if (a.size() > 1) out.emplace_back(i, a.size() - 1);
        b = poly_divmod(b, a).first;
        c = poly_divmod(d, a).first;
        auto bd = poly_derivative(b);
        d = c;
        d.resize(std::max(d.size(), bd.size()));
        for (std::size_t k = 0; k < bd.size(); ++k) d[k] -= bd[k];
        poly_trim(d);
    }
    return out;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    const Echelon e = rref(Matrix::from_rows(vectors, ambient));
    s.basis_ = Matrix(e.rank, ambient);
    for (std::size_t r = 0; r < e.rank; ++r)
        for (std::size_t c = 0; c < ambient; ++c) s.basis_(r, c) = e.reduced(r, c);
    s.pivots_ = e.pivots;
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vector(ambient, i));
    return span(ambient, vs);
}

std::vector<Vector> Subspace::vectors() const {
    std::vector<Vector> out;
    for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
    return out;
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient()) throw DimensionMismatch("Subspace::contains: length");
    Vector w = v;
    for (std::size_t r = 0; r < dim(); ++r) {
        const Rational f = w[pivots_[r]];
        if (!f.is_zero()) axpy(w, -f, basis_.row(r));
    }
    return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.vectors())
        if (!contains(v)) return false;
    return true;
}

Vector Subspace::coordinates(const Vector& v) const {
    if (!contains(v)) throw DimensionMismatch("Subspace::coordinates: vector not in subspace");
    Vector out(dim());
    for (std::size_t r = 0; r < dim(); ++r) out[r] = v[pivots_[r]];
    return out;
}

bool SparseEchelon::add_row(Row row) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->second.is_zero()) {
            it = row.erase(it);
            continue;
        }
        const auto p = pivots_.find(it->first);
        if (p == pivots_.end()) {
            ++it;
            continue;
        }
        const std::size_t col = it->first;
        const Rational f = it->second;
        for (const auto& [c, v] : p->second) {
            auto& x = row[c];
            x -= f * v;
        }
        row.erase(col);
        it = row.upper_bound(col);
    }
    for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
    if (row.empty()) return false;
    const Rational lead = row.begin()->second;
    for (auto& [c, v] : row) v /= lead;
    pivots_.emplace(row.begin()->first, std::move(row));
    return true;
}

std::vector<Vector> SparseEchelon::kernel_basis() const {
    std::vector<Vector> out;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (pivots_.count(f)) continue;
        Vector v(cols_);
        v[f] = 1;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            Rational s;
            for (const auto& [c, x] : it->second)
                if (c != it->first && !v[c].is_zero()) s += x * v[c];
            v[it->first] = -s;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::size_t> SparseEchelon::free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < cols_; ++f)
        if (!pivots_.count(f)) out.push_back(f);
    return out;
}

LinearForm LinearForm::variable(const std::string& name, Rational coeff) {
    LinearForm f;
    if (!coeff.is_zero()) f.terms_.emplace(name, std::move(coeff));
    return f;
}

Rational LinearForm::coefficient(const std::string& name) const {
    const auto it = terms_.find(name);
    return it == terms_.end() ? Rational() : it->second;
}

Rational LinearForm::evaluate(const std::map<std::string, Rational>& values) const {
    Rational acc = constant_;
    for (const auto& [name, c] : terms_) {
        const auto it = values.find(name);
        if (it == values.end()) throw MissingParameter("LinearForm::evaluate: no value for " + name);
        acc += c * it->second;
    }
    return acc;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
    constant_ += o.constant_;
    for (const auto& [name, c] : o.terms_) {
        auto& x = terms_[name];
        x += c;
        if (x.is_zero()) terms_.erase(name);
    }
    return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += Rational(-1) * o; }

LinearForm& LinearForm::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        constant_ = 0;
        return *this;
    }
    constant_ *= s;
    for (auto& [name, c] : terms_) c *= s;
    return *this;
}

bool operator<(const LinearForm& a, const LinearForm& b) { return a.to_string() < b.to_string(); }

bool parameter_less(const std::string& a, const std::string& b) {
    auto key = [](const std::string& s) {
        int group = 2;
        if (s == "f11") group = 0;
        else if (s == "f22") group = 1;
        std::size_t cut = s.size();
        while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
        const std::string stem = s.substr(0, cut);
        const long num = cut < s.size() ? std::stol(s.substr(cut)) : -1;
        return std::make_tuple(group, stem, num, s);
    };
    return key(a) < key(b);
}

std::string LinearForm::to_string() const {
    std::vector<std::string> names;
    for (const auto& [name, c] : terms_) names.push_back(name);
    std::sort(names.begin(), names.end(), parameter_less);
    std::ostringstream os;
    bool first = true;
    auto emit = [&](Rational c, const std::string& name) {
        if (c.sign() < 0) {
            os << '-';
            c = -c;
        } else if (!first) {
            os << '+';
        }
        if (!c.is_one() || name.empty()) os << c;
        os << name;
        first = false;
    };
    for (const auto& name : names) emit(terms_.at(name), name);
    if (!constant_.is_zero()) emit(constant_, "");
    return first ? "0" : os.str();
}

}  // namespace nilform
