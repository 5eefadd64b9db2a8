#include "ezn/ring_ideals.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace ezn {

namespace {

// Advances an odometer over [0, top_i]; returns false after the last vector.
bool next_exponents(Exponents& r, const Exponents& top) {
    for (std::size_t i = r.size(); i-- > 0;) {
        if (r[i] < top[i]) {
            ++r[i];
            return true;
        }
        r[i] = 0;
    }
    return false;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
        throw DomainError("n does not fit in 64 bits");
    return a * b;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

Factorization Factorization::from_parts(std::vector<std::uint64_t> primes, std::vector<int> exponents) {
    if (primes.empty() || primes.size() != exponents.size())
        throw DomainError("factorization needs one exponent per prime");
    if (primes.size() > 31) throw DomainError("at most 31 distinct primes are supported");
    Factorization f;
    f.n = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i])) throw DomainError(std::to_string(primes[i]) + " is not prime");
        if (i > 0 && primes[i] <= primes[i - 1]) throw DomainError("primes must be strictly ascending");
        if (exponents[i] < 1) throw DomainError("exponents must be positive");
        for (int e = 0; e < exponents[i]; ++e) f.n = checked_mul(f.n, primes[i]);
    }
    f.primes = std::move(primes);
    f.exponents = std::move(exponents);
    if (f.k() == 1 && f.exponents[0] == 1)
        throw DomainError(std::to_string(f.n) + " is prime: Z_n has no nonzero proper ideals");
    return f;
}

std::uint64_t Factorization::ideal_count() const {
    std::uint64_t t = 1;
    for (int m : exponents) t *= static_cast<std::uint64_t>(m + 1);
    return t - 2;
}

std::uint64_t Factorization::essential_count() const {
    std::uint64_t t = 1;
    for (int m : exponents) t *= static_cast<std::uint64_t>(m);
    return t - 1;
}

bool Factorization::squarefree() const {
    return std::all_of(exponents.begin(), exponents.end(), [](int m) { return m == 1; });
}

std::uint64_t Factorization::generator(const Exponents& exps) const {
    std::uint64_t g = 1;
    for (std::size_t i = 0; i < exps.size(); ++i)
        for (int e = 0; e < exps[i]; ++e) g *= primes[i];
    return g;
}

std::string Factorization::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < k(); ++i) {
        if (i) out << " * ";
        out << primes[i];
        if (exponents[i] > 1) out << '^' << exponents[i];
    }
    return out.str();
}

Factorization factorize(std::uint64_t n) {
    if (n < 4) throw DomainError("n = " + std::to_string(n) + " is below 4: the graph is empty");
    std::vector<std::uint64_t> primes;
    std::vector<int> exps;
    std::uint64_t rest = n;
    for (std::uint64_t d = 2; d <= rest / d; d += (d == 2 ? 1 : 2)) {
        if (rest % d != 0) continue;
        int e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        primes.push_back(d);
        exps.push_back(e);
    }
    if (rest > 1) {
        primes.push_back(rest);
        exps.push_back(1);
    }
    if (primes.size() == 1 && exps[0] == 1)
        throw DomainError("n = " + std::to_string(n) + " is prime: Z_n has no nonzero proper ideals");
    return Factorization::from_parts(std::move(primes), std::move(exps));
}

IndexSet IndexSet::of(std::initializer_list<int> members) {
    std::uint32_t bits = 0;
    for (int i : members) bits |= 1u << (i - 1);
    return IndexSet(bits);
}

int IndexSet::size() const { return std::popcount(bits_); }

std::vector<int> IndexSet::members() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
        if ((bits_ >> i) & 1u) out.push_back(i + 1);
    return out;
}

std::string IndexSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : members()) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

bool operator<(IndexSet a, IndexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
}

std::vector<IdealZn> enumerate_ideals(const Factorization& f) {
    std::vector<IdealZn> out;
    out.reserve(f.ideal_count());
    Exponents r(f.k(), 0);
    while (next_exponents(r, f.top())) {
        if (r == f.top()) continue;
        out.push_back(IdealZn{r});
    }
    return out;
}

Exponents ideal_sum(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

Exponents ideal_intersection(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

bool is_zero_ideal(const Exponents& a, const Factorization& f) { return a == f.top(); }

bool is_unit_ideal(const Exponents& a) {
    return std::all_of(a.begin(), a.end(), [](int r) { return r == 0; });
}

bool is_essential_criterion(const Exponents& a, const Factorization& f) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] == f.exponents[j]) return false;
    return true;
}

bool is_essential_oracle(const Exponents& a, const Factorization& f) {
    // Quantifies over every nonzero ideal J, starting from the unit ideal.
    Exponents j(f.k(), 0);
    do {
        if (j == f.top()) continue;
        if (is_zero_ideal(ideal_intersection(a, j), f)) return false;
    } while (next_exponents(j, f.top()));
    return true;
}

IndexSet xi_set(const Exponents& a, const Factorization& f) {
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == f.exponents[i]) bits |= 1u << i;
    return IndexSet(bits);
}

std::string ideal_to_string(const Exponents& a, const Factorization& f) {
    return "<" + std::to_string(f.generator(a)) + ">";
}

}  // namespace ezn
