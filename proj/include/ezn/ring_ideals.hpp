#pragma once

// Ideal lattice of Z_n.
//
// Every ideal of Z_n is principal and generated by a divisor of n, so an ideal
// is stored as the exponent vector r of its generator p_1^{r_1} ... p_k^{r_k}
// relative to the factorization of n. The all-zero vector is the whole ring,
// the vector (m_1, ..., m_k) is the zero ideal.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ezn {

/// Raised when an input lies outside the mathematical domain (prime n, n < 4, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Exponents = std::vector<int>;

struct Factorization {
    std::vector<std::uint64_t> primes;  // ascending
    std::vector<int> exponents;         // m_i >= 1
    std::uint64_t n = 0;

    /// Builds and validates a factorization from explicit parts. Throws
    /// DomainError if the primes are not ascending distinct primes, an exponent
    /// is < 1, n overflows 64 bits, or n is prime.
    static Factorization from_parts(std::vector<std::uint64_t> primes, std::vector<int> exponents);

    std::size_t k() const { return primes.size(); }

    /// T: number of nonzero proper ideals, prod(m_i + 1) - 2.
    std::uint64_t ideal_count() const;
    /// m: number of essential ideals, prod(m_i) - 1.
    std::uint64_t essential_count() const;

    bool squarefree() const;
    bool prime_power() const { return k() == 1; }

    /// The zero-ideal exponent vector (m_1, ..., m_k).
    const Exponents& top() const { return exponents; }

    /// Generator of the ideal with the given exponents.
    std::uint64_t generator(const Exponents& exps) const;

    std::string to_string() const;  // e.g. "2^2 * 3 * 5"
};

bool is_prime(std::uint64_t n);

/// Trial-division factorization. Requires n >= 4 composite.
Factorization factorize(std::uint64_t n);

/// A nonzero proper ideal of Z_n.
struct IdealZn {
    Exponents exps;

    friend auto operator<=>(const IdealZn&, const IdealZn&) = default;
};

/// Subset of {1, ..., k} stored as a bitmask; bit i-1 marks index i.
class IndexSet {
public:
    constexpr IndexSet() = default;
    constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}

    static IndexSet of(std::initializer_list<int> members);

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int index) const { return (bits_ >> (index - 1)) & 1u; }
    constexpr bool disjoint(IndexSet other) const { return (bits_ & other.bits_) == 0; }
    int size() const;

    /// 1-based members in ascending order.
    std::vector<int> members() const;
    std::string to_string() const;  // "{1,3}"

    /// Subset order: cardinality first, then lexicographic on sorted members.
    friend bool operator<(IndexSet a, IndexSet b);
    friend constexpr bool operator==(IndexSet a, IndexSet b) { return a.bits_ == b.bits_; }

private:
    std::uint32_t bits_ = 0;
};

/// All nonzero proper ideals in lexicographic order of exponent vectors.
std::vector<IdealZn> enumerate_ideals(const Factorization& f);

/// Componentwise min. The result may be the unit ideal (all zeros).
Exponents ideal_sum(const Exponents& a, const Exponents& b);
/// Componentwise max. The result equals f.top() iff the intersection is zero.
Exponents ideal_intersection(const Exponents& a, const Exponents& b);

bool is_zero_ideal(const Exponents& a, const Factorization& f);
bool is_unit_ideal(const Exponents& a);

/// Essential iff r_j < m_j for every j. The unit ideal counts as essential.
bool is_essential_criterion(const Exponents& a, const Factorization& f);

/// Definitional check: a meets every nonzero ideal (unit ideal included) nontrivially.
bool is_essential_oracle(const Exponents& a, const Factorization& f);

/// Positions where r_i = m_i.
IndexSet xi_set(const Exponents& a, const Factorization& f);

std::string ideal_to_string(const Exponents& a, const Factorization& f);  // "<12>"

}  // namespace ezn
