#include "chipfire/semiorder_count.hpp"

#include <stdexcept>

#include "chipfire/semiorder.hpp"

namespace chipfire {

std::vector<Int> catalan_numbers(int max_k) {
    std::vector<Int> c(max_k + 1);
    c[0] = 1;
    for (int k = 1; k <= max_k; ++k) c[k] = c[k - 1] * 2 * (2 * k - 1) / (k + 1);
    return c;
}

namespace {

using Series = std::vector<Rat>;  // coefficients of x^0..x^K

Series mul(const Series& a, const Series& b) {
    size_t k = a.size();
    Series out(k, Rat(0));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; i + j < k; ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

std::vector<Int> labeled_semiorder_counts_egf(int max_k) {
    if (max_k < 0) throw std::invalid_argument("max_k must be nonnegative");
    int k = max_k + 1;
    // u = 1 - e^{-x} = sum_{m>=1} (-1)^{m+1} x^m / m!
    Series u(k, Rat(0));
    Int fact = 1;
    for (int m = 1; m < k; ++m) {
        fact *= m;
        u[m] = Rat(m % 2 == 1 ? 1 : -1, fact);
    }
    // compose the Catalan OGF with u
    std::vector<Int> cat = catalan_numbers(max_k);
    Series result(k, Rat(0));
    Series power(k, Rat(0));
    power[0] = 1;
    for (int m = 0; m <= max_k; ++m) {
        for (int i = 0; i < k; ++i) result[i] += cat[m] * power[i];
        power = mul(power, u);
    }
    std::vector<Int> f(k);
    fact = 1;
    for (int i = 0; i < k; ++i) {
        if (i > 0) fact *= i;
        Rat coeff = result[i] * fact;
        if (denominator(coeff) != 1) throw std::logic_error("EGF coefficient not integral");
        f[i] = numerator(coeff);
    }
    return f;
}

std::vector<Int> labeled_semiorder_counts_enum(int max_k) {
    std::vector<Int> f(max_k + 1);
    for (int k = 0; k <= max_k; ++k) f[k] = static_cast<long long>(all_semiorders(k).size());
    return f;
}

}  // namespace chipfire
