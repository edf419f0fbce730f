#include "angelesco/moments.hpp"

namespace angelesco {

Real ray_moment(long m, const StarWeight& w) {
    if (!(Real(m) + w.beta > -1))
        throw std::domain_error("ray_moment requires m + beta > -1");
    return exp(log_gamma((w.beta + m + 1) / w.r)) / w.r;
}

MomentTable::MomentTable(const StarWeight& w, long max_m) : w_(w) {
    moments_.reserve(static_cast<size_t>(max_m) + 1);
    for (long m = 0; m <= max_m; ++m) moments_.push_back(ray_moment(m, w));
}

const Real& MomentTable::operator()(long m) const {
    if (m < 0 || m >= static_cast<long>(moments_.size()))
        throw std::out_of_range("moment index outside the cached range");
    return moments_[static_cast<size_t>(m)];
}

namespace {

Residual ray_integral_impl(const Poly& q, long k, int ray, const StarWeight& w,
                           const MomentTable* table) {
    if (k < 0) throw std::invalid_argument("ray_integral requires k >= 0");
    if (ray < 1 || ray > w.r) throw std::invalid_argument("ray index must be in 1..r");
    Complex acc;
    Real scale(0);
    const auto& c = q.coeffs();
    for (long m = 0; m < static_cast<long>(c.size()); ++m) {
        if (c[static_cast<size_t>(m)].is_zero()) continue;
        Real mom = table ? (*table)(k + m) : ray_moment(k + m, w);
        Complex term = c[static_cast<size_t>(m)] * root_of_unity(w.r, (ray - 1) * m) * mom;
        Real a = abs(term);
        if (a > scale) scale = a;
        acc += term;
    }
    acc *= root_of_unity(w.r, static_cast<long>(ray - 1) * (k + 1));
    return Residual{acc, scale};
}

}  // namespace

Residual ray_integral(const Poly& q, long k, int ray, const StarWeight& w) {
    return ray_integral_impl(q, k, ray, w, nullptr);
}

Residual ray_integral(const Poly& q, long k, int ray, const MomentTable& moments) {
    return ray_integral_impl(q, k, ray, moments.weight(), &moments);
}

std::vector<Residual> type1_residuals(const std::vector<Poly>& A, const StarWeight& w,
                                      long total_degree) {
    if (static_cast<int>(A.size()) != w.r)
        throw std::invalid_argument("type1_residuals needs one polynomial per ray");
    long max_degree = 0;
    for (const auto& p : A) max_degree = std::max(max_degree, p.degree());
    MomentTable table(w, total_degree - 1 + std::max<long>(max_degree, 0));

    std::vector<Residual> out;
    out.reserve(static_cast<size_t>(total_degree));
    for (long k = 0; k < total_degree; ++k) {
        Complex acc;
        Real scale(0);
        for (int j = 1; j <= w.r; ++j) {
            Residual rj = ray_integral(A[static_cast<size_t>(j - 1)], k, j, table);
            acc += rj.value;
            if (rj.scale > scale) scale = rj.scale;
        }
        out.push_back(Residual{acc, scale});
    }
    return out;
}

std::vector<Type2ResidualEntry> type2_residuals(const Poly& L, const StarWeight& w,
                                                const std::vector<long>& degrees) {
    if (static_cast<int>(degrees.size()) != w.r)
        throw std::invalid_argument("type2_residuals needs one degree bound per ray");
    long total = 0;
    for (long d : degrees) total += d;
    if (L.degree() != total)
        throw std::invalid_argument("type II polynomial degree must equal the sum of the degrees");
    long max_k = 0;
    for (long d : degrees) max_k = std::max(max_k, d - 1);
    MomentTable table(w, max_k + std::max<long>(L.degree(), 0));

    std::vector<Type2ResidualEntry> out;
    for (int j = 1; j <= w.r; ++j)
        for (long k = 0; k < degrees[static_cast<size_t>(j - 1)]; ++k)
            out.push_back(Type2ResidualEntry{j, k, ray_integral(L, k, j, table)});
    return out;
}

}  // namespace angelesco
