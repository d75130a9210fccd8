#include "s2r/graded_ring.hpp"

#include <random>
#include <stdexcept>

namespace s2r {

GradedRing::GradedRing(int characteristic, GradingGroup group, SignForm eps,
                       std::vector<std::string> basis_names, std::vector<int> basis_degrees,
                       std::vector<Vec> mult_table)
    : p_(characteristic),
      group_(std::move(group)),
      eps_(std::move(eps)),
      names_(std::move(basis_names)),
      degs_(std::move(basis_degrees)),
      mult_(std::move(mult_table)) {
    if (p_ != 2 && p_ != 3 && p_ != 5 && p_ != 7)
        throw std::invalid_argument("GradedRing: characteristic must be a small prime");
    if (names_.size() != degs_.size())
        throw std::invalid_argument("GradedRing: names/degrees size mismatch");
    if (mult_.size() != names_.size() * names_.size())
        throw std::invalid_argument("GradedRing: mult table size mismatch");
    for (const Vec& v : mult_)
        if (v.size() != names_.size())
            throw std::invalid_argument("GradedRing: mult table entry size mismatch");
    for (int d : degs_)
        if (d < 0 || d >= group_.size())
            throw std::invalid_argument("GradedRing: basis degree out of range");
    build_components();
    find_unit();
}

void GradedRing::build_components() {
    comp_basis_.assign(group_.size(), {});
    for (int i = 0; i < dim(); ++i) comp_basis_[degs_[i]].push_back(i);

    comp_values_.assign(group_.size(), {});
    for (int d = 0; d < group_.size(); ++d) {
        const auto& cb = comp_basis_[d];
        long count = 1;
        for (std::size_t k = 0; k < cb.size(); ++k) count *= p_;
        if (count > (1L << 20))
            throw std::invalid_argument("GradedRing: component too large for exhaustive work");
        comp_values_[d].reserve(count);
        Vec digits(cb.size(), 0);
        for (long n = 0; n < count; ++n) {
            Vec v = zero();
            for (std::size_t k = 0; k < cb.size(); ++k) v[cb[k]] = digits[k];
            comp_values_[d].push_back(std::move(v));
            for (std::size_t k = 0; k < cb.size(); ++k) {
                if (++digits[k] < p_) break;
                digits[k] = 0;
            }
        }
    }
}

void GradedRing::find_unit() {
    one_ = zero();
    for (const Vec& u : comp_values_[group_.zero()]) {
        bool ok = true;
        for (int i = 0; i < dim() && ok; ++i) {
            Vec b = zero();
            b[i] = 1;
            if (multiply(u, b) != b || multiply(b, u) != b) ok = false;
        }
        if (ok) {
            one_ = u;
            break;
        }
    }
    // the zero ring has unit 0; anything else must have found one, which
    // check_axioms reports if missing

    comp_units_.assign(group_.size(), {});
    for (int d = 0; d < group_.size(); ++d)
        for (std::size_t i = 0; i < comp_values_[d].size(); ++i)
            if (is_unit(comp_values_[d][i])) comp_units_[d].push_back(static_cast<int>(i));
}

Vec GradedRing::multiply(const Vec& a, const Vec& b) const {
    Vec r = zero();
    for (int i = 0; i < dim(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b[j] == 0) continue;
            Coef c = fp_mul(a[i], b[j], p_);
            const Vec& t = table(i, j);
            for (int k = 0; k < dim(); ++k)
                if (t[k] != 0) r[k] = fp_add(r[k], fp_mul(c, t[k], p_), p_);
        }
    }
    return r;
}

int GradedRing::value_index(int d, const Vec& v) const {
    const auto& cb = comp_basis_[d];
    long idx = 0;
    for (int k = static_cast<int>(cb.size()) - 1; k >= 0; --k) idx = idx * p_ + v[cb[k]];
    // reject values supported outside the component
    Vec check = zero();
    for (std::size_t k = 0; k < cb.size(); ++k) check[cb[k]] = v[cb[k]];
    if (check != v) throw std::invalid_argument("value_index: not supported in degree");
    return static_cast<int>(idx);
}

Vec GradedRing::component_coords(int d, const Vec& v) const {
    const auto& cb = comp_basis_[d];
    Vec c(cb.size(), 0);
    for (std::size_t k = 0; k < cb.size(); ++k) c[k] = v[cb[k]];
    return c;
}

Vec GradedRing::component_embed(int d, const Vec& coords) const {
    const auto& cb = comp_basis_[d];
    Vec v = zero();
    for (std::size_t k = 0; k < cb.size(); ++k) v[cb[k]] = coords[k];
    return v;
}

std::optional<int> GradedRing::degree_of(const Vec& v) const {
    std::optional<int> deg;
    for (int i = 0; i < dim(); ++i) {
        if (v[i] == 0) continue;
        if (!deg)
            deg = degs_[i];
        else if (*deg != degs_[i])
            return std::nullopt;
    }
    return deg;
}

bool GradedRing::is_unit(const Vec& v) const { return unit_inverse(v).has_value(); }

std::optional<Vec> GradedRing::unit_inverse(const Vec& v) const {
    if (vec_is_zero(v)) {
        if (is_zero_ring()) return v;  // the zero ring's 0 is its 1
        return std::nullopt;
    }
    auto d = degree_of(v);
    if (!d) return std::nullopt;  // only homogeneous units are considered
    int nd = group_.neg(*d);
    for (const Vec& w : comp_values_[nd])
        if (multiply(w, v) == one_ && multiply(v, w) == one_) return w;
    return std::nullopt;
}

std::vector<RingViolation> GradedRing::check_axioms() const {
    std::vector<RingViolation> out;

    if (!eps_.well_defined_for(group_))
        out.push_back({"eps-form", "sign form not well-defined on residues"});
    if (!eps_.is_symmetric()) out.push_back({"eps-form", "sign form not symmetric"});

    // degree-additivity of the table
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            int want = group_.add(degs_[i], degs_[j]);
            const Vec& t = table(i, j);
            for (int k = 0; k < dim(); ++k)
                if (t[k] != 0 && degs_[k] != want)
                    out.push_back({"degree", names_[i] + "*" + names_[j] + " hits degree of " + names_[k]});
        }

    // associativity on basis triples
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k) {
                Vec bi = zero(), bj = zero(), bk = zero();
                bi[i] = bj[j] = bk[k] = 1;
                if (multiply(multiply(bi, bj), bk) != multiply(bi, multiply(bj, bk)))
                    out.push_back({"assoc", names_[i] + "," + names_[j] + "," + names_[k]});
            }

    // two-sided unit of degree 0
    if (!is_zero_ring() && vec_is_zero(one_))
        out.push_back({"unit", "no two-sided unit in degree 0"});

    // graded eps-commutativity on basis pairs
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            Vec bi = zero(), bj = zero();
            bi[i] = bj[j] = 1;
            Coef s = eps_sign(degs_[i], degs_[j]);
            if (multiply(bi, bj) != scale(s, multiply(bj, bi)))
                out.push_back({"eps-comm", names_[i] + "," + names_[j]});
        }

    return out;
}

bool GradedRing::operator==(const GradedRing& o) const {
    return p_ == o.p_ && group_ == o.group_ && eps_ == o.eps_ && names_ == o.names_ &&
           degs_ == o.degs_ && mult_ == o.mult_;
}

RingElement multiply(const RingElement& a, const RingElement& b) {
    if (a.ring != b.ring) throw std::invalid_argument("multiply: parent ring mismatch");
    return {a.ring, a.ring->multiply(a.coeffs, b.coeffs)};
}

std::string value_to_string(const GradedRing& R, const Vec& v) {
    std::string out;
    for (int i = 0; i < R.dim(); ++i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (v[i] != 1) out += std::to_string(static_cast<int>(v[i]));
        out += R.basis_names()[i];
    }
    return out.empty() ? "0" : out;
}

// --- fixtures ---------------------------------------------------------------

namespace {

Vec basis_vec(int dim, int i, Coef c = 1) {
    Vec v(dim, 0);
    v[i] = c;
    return v;
}

}  // namespace

GradedRing fixture_Z0() {
    return GradedRing(2, GradingGroup(std::vector<int>{}), SignForm::zero(0), {}, {}, {});
}

GradedRing fixture_D2() {
    // F2[x]/(x^2), G = Z/2, |x| = 1
    std::vector<Vec> t(4, Vec(2, 0));
    t[0 * 2 + 0] = basis_vec(2, 0);  // 1*1 = 1
    t[0 * 2 + 1] = basis_vec(2, 1);  // 1*x = x
    t[1 * 2 + 0] = basis_vec(2, 1);  // x*1 = x
    t[1 * 2 + 1] = Vec(2, 0);        // x*x = 0
    return GradedRing(2, GradingGroup(std::vector<int>{2}), SignForm::zero(1), {"1", "x"}, {0, 1}, t);
}

GradedRing fixture_P2() {
    // F2 x F2, trivial grading, orthogonal idempotents
    std::vector<Vec> t(4, Vec(2, 0));
    t[0 * 2 + 0] = basis_vec(2, 0);
    t[1 * 2 + 1] = basis_vec(2, 1);
    return GradedRing(2, GradingGroup(std::vector<int>{}), SignForm::zero(0), {"e1", "e2"}, {0, 0}, t);
}

GradedRing fixture_U2() {
    // F2[x]/(x^2+1), G = Z/2, |x| = 1; x is a degree-1 unit
    std::vector<Vec> t(4, Vec(2, 0));
    t[0 * 2 + 0] = basis_vec(2, 0);
    t[0 * 2 + 1] = basis_vec(2, 1);
    t[1 * 2 + 0] = basis_vec(2, 1);
    t[1 * 2 + 1] = basis_vec(2, 0);  // x*x = 1
    return GradedRing(2, GradingGroup(std::vector<int>{2}), SignForm::zero(1), {"1", "x"}, {0, 1}, t);
}

GradedRing fixture_E3() {
    // F3[theta]/(theta^2), G = Z/2, |theta| = 1, eps(a,b) = ab
    std::vector<Vec> t(4, Vec(2, 0));
    t[0 * 2 + 0] = basis_vec(2, 0);
    t[0 * 2 + 1] = basis_vec(2, 1);
    t[1 * 2 + 0] = basis_vec(2, 1);
    t[1 * 2 + 1] = Vec(2, 0);  // theta^2 = 0, forced by the sign form over F3
    return GradedRing(3, GradingGroup(std::vector<int>{2}), SignForm(std::vector<std::vector<int>>{{1}}), {"1", "th"}, {0, 1}, t);
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {"Z0", "D2", "P2", "U2", "E3"};
    return names;
}

GradedRing fixture_by_name(const std::string& name) {
    if (name == "Z0") return fixture_Z0();
    if (name == "D2") return fixture_D2();
    if (name == "P2") return fixture_P2();
    if (name == "U2") return fixture_U2();
    if (name == "E3") return fixture_E3();
    throw std::invalid_argument("unknown fixture: " + name);
}

GradedRing random_ring(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    auto pick = [&](int n) { return static_cast<int>(rng() % n); };

    for (int attempt = 0; attempt < 200000; ++attempt) {
        int p = (pick(2) == 0) ? 2 : 3;
        int max_dim = (p == 2) ? 6 : 4;  // keep |R| = p^dim <= 81 for p = 3, 64 for p = 2
        int dim = 1 + pick(max_dim);

        std::vector<int> factors;
        int nf = pick(3);  // 0, 1 or 2 invariant factors
        for (int i = 0; i < nf; ++i) factors.push_back(2 + pick(3));
        GradingGroup G(factors);

        std::vector<std::vector<int>> m(G.rank(), std::vector<int>(G.rank(), 0));
        for (int i = 0; i < G.rank(); ++i)
            for (int j = 0; j <= i; ++j) {
                if (G.factors()[i] % 2 != 0 || G.factors()[j] % 2 != 0) continue;
                m[i][j] = m[j][i] = pick(2);
            }
        SignForm eps(m);

        std::vector<std::string> names(dim);
        std::vector<int> degs(dim);
        names[0] = "e0";
        degs[0] = G.zero();
        for (int i = 1; i < dim; ++i) {
            names[i] = "e" + std::to_string(i);
            degs[i] = pick(G.size());
        }

        std::vector<Vec> table(static_cast<std::size_t>(dim) * dim, Vec(dim, 0));
        auto set = [&](int i, int j, const Vec& v) { table[static_cast<std::size_t>(i) * dim + j] = v; };
        for (int i = 0; i < dim; ++i) {
            set(0, i, basis_vec(dim, i));
            set(i, 0, basis_vec(dim, i));
        }
        std::vector<std::vector<int>> comp(G.size());
        for (int i = 0; i < dim; ++i) comp[degs[i]].push_back(i);

        auto random_component_value = [&](int d) {
            Vec v(dim, 0);
            if (pick(2) == 0) return v;  // bias toward sparse tables
            for (int b : comp[d]) v[b] = static_cast<Coef>(pick(p));
            return v;
        };

        for (int i = 1; i < dim; ++i)
            for (int j = 1; j <= i; ++j) {
                int d = G.add(degs[i], degs[j]);
                int e = eps.eval(G.elt(degs[i]), G.elt(degs[j]));
                Vec v = random_component_value(d);
                if (i == j && e == 1 && p != 2) v = Vec(dim, 0);  // x*x = -x*x forces 0
                set(i, j, v);
                if (i != j) set(j, i, vec_scale(fp_sign(e, p), v, p));
            }

        try {
            GradedRing R(p, G, eps, names, degs, table);
            if (R.check_axioms().empty()) return R;
        } catch (const std::exception&) {
            continue;
        }
    }
    throw std::runtime_error("random_ring: rejection sampling failed to converge");
}

}  // namespace s2r
