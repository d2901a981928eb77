#pragma once

#include <gmpxx.h>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace overasym {

enum class TableMethod { theta_recurrence, convolution_oracle };

/// Exact values of the overpartition function p(0..n_max), overlines counted.
/// Two independent constructions are provided so each can guard the other:
///   theta   — sparse recurrence p(n) = 2 * sum_{s>=1} (-1)^{s+1} p(n - s^2),
///             from the classical theta identity; O(n^{3/2}) additions.
///   oracle  — convolution of the distinct-parts and ordinary partition
///             counting sequences (overlined parts form a distinct-parts
///             partition, plain parts an ordinary one); O(n^2), intended for
///             n_max up to a few thousand.
class OverpartitionTable {
public:
    static OverpartitionTable theta(long n_max);
    static OverpartitionTable oracle(long n_max);

    /// Loads from cache when a valid file exists, otherwise builds and (when a
    /// cache directory is given) stores. Cache corruption falls back to a
    /// rebuild; caching never changes values.
    static OverpartitionTable load_or_build(TableMethod method, long n_max,
                                            const std::optional<std::filesystem::path>& cache_dir);

    long n_max() const { return static_cast<long>(values_.size()) - 1; }
    TableMethod method() const { return method_; }

    /// p(n); throws std::out_of_range outside [0, n_max]. Values for n < 0 are
    /// undefined rather than zero, so misuse surfaces instead of vanishing.
    const mpz_class& value(long n) const;
    const std::vector<mpz_class>& values() const { return values_; }

    void write_cache(const std::filesystem::path& file) const;
    static OverpartitionTable read_cache(const std::filesystem::path& file, TableMethod method);

    /// CSV with header "n,overpartition".
    void write_csv(std::ostream& out) const;

private:
    OverpartitionTable(std::vector<mpz_class> values, TableMethod method)
        : values_(std::move(values)), method_(method) {}

    std::vector<mpz_class> values_;
    TableMethod method_;
};

/// The j-shifted difference operator of order r.
struct DifferenceSpec {
    long j = 1;  // shift, >= 1
    long r = 0;  // order, >= 0
};

/// Delta^r_j applied to the overpartition sequence at n:
/// sum_{m=0}^{r} (-1)^m binom(r,m) p(n - m j). May be negative. Requires
/// n - r*j >= 0 and n <= table.n_max().
mpz_class shifted_difference(const OverpartitionTable& table, const DifferenceSpec& spec, long n);

}  // namespace overasym
