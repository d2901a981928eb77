#include "overasym/overpartition.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace overasym {

namespace {

// First eleven values, used to re-verify every cache read.
const std::array<long, 11> kKnownPrefix = {1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232};

void check_n_max(long n_max) {
    if (n_max < 0) throw std::domain_error("OverpartitionTable: n_max must be >= 0");
}

std::string method_tag(TableMethod m) {
    return m == TableMethod::theta_recurrence ? "theta" : "oracle";
}

void write_u32le(std::ostream& out, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                          static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

void write_u64le(std::ostream& out, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t read_u32le(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (!in) throw std::runtime_error("overpartition cache: truncated file");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint64_t read_u64le(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (!in) throw std::runtime_error("overpartition cache: truncated file");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

}  // namespace

OverpartitionTable OverpartitionTable::theta(long n_max) {
    check_n_max(n_max);
    std::vector<mpz_class> p(n_max + 1);
    p[0] = 1;
    mpz_class acc;
    for (long n = 1; n <= n_max; ++n) {
        acc = 0;
        int sign = +1;
        for (long s = 1, sq = 1; sq <= n; ++s, sq = s * s) {
            if (sign > 0)
                acc += p[n - sq];
            else
                acc -= p[n - sq];
            sign = -sign;
        }
        p[n] = acc << 1;
    }
    return OverpartitionTable(std::move(p), TableMethod::theta_recurrence);
}

OverpartitionTable OverpartitionTable::oracle(long n_max) {
    check_n_max(n_max);
    // Distinct-parts partition counts (each part size used at most once).
    std::vector<mpz_class> distinct(n_max + 1);
    distinct[0] = 1;
    for (long part = 1; part <= n_max; ++part)
        for (long s = n_max; s >= part; --s) distinct[s] += distinct[s - part];
    // Ordinary partition counts (unbounded multiplicity).
    std::vector<mpz_class> ordinary(n_max + 1);
    ordinary[0] = 1;
    for (long part = 1; part <= n_max; ++part)
        for (long s = part; s <= n_max; ++s) ordinary[s] += ordinary[s - part];
    std::vector<mpz_class> p(n_max + 1);
    for (long n = 0; n <= n_max; ++n) {
        mpz_class acc = 0;
        for (long m = 0; m <= n; ++m) mpz_addmul(acc.get_mpz_t(), distinct[m].get_mpz_t(), ordinary[n - m].get_mpz_t());
        p[n] = acc;
    }
    return OverpartitionTable(std::move(p), TableMethod::convolution_oracle);
}

const mpz_class& OverpartitionTable::value(long n) const {
    if (n < 0 || n > n_max())
        throw std::out_of_range("OverpartitionTable::value: n=" + std::to_string(n) +
                                " outside [0," + std::to_string(n_max()) + "]");
    return values_[n];
}

void OverpartitionTable::write_cache(const std::filesystem::path& file) const {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("overpartition cache: cannot open for write: " + file.string());
    out.write("OPT1", 4);
    write_u64le(out, static_cast<std::uint64_t>(n_max()));
    std::vector<unsigned char> buf;
    for (const mpz_class& v : values_) {
        const std::size_t bytes = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
        buf.resize(bytes);
        std::size_t written = 0;
        if (v != 0) mpz_export(buf.data(), &written, -1, 1, 0, 0, v.get_mpz_t());
        write_u32le(out, static_cast<std::uint32_t>(written));
        if (written > 0) out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(written));
    }
    if (!out) throw std::runtime_error("overpartition cache: write failed: " + file.string());
}

OverpartitionTable OverpartitionTable::read_cache(const std::filesystem::path& file, TableMethod method) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("overpartition cache: cannot open: " + file.string());
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "OPT1", 4) != 0)
        throw std::runtime_error("overpartition cache: bad magic: " + file.string());
    const std::uint64_t n_max = read_u64le(in);
    std::vector<mpz_class> values(n_max + 1);
    std::vector<unsigned char> buf;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const std::uint32_t len = read_u32le(in);
        buf.resize(len);
        if (len > 0) {
            in.read(reinterpret_cast<char*>(buf.data()), len);
            if (!in) throw std::runtime_error("overpartition cache: truncated value: " + file.string());
            mpz_import(values[n].get_mpz_t(), len, -1, 1, 0, 0, buf.data());
        }
    }
    for (std::size_t i = 0; i < kKnownPrefix.size() && i <= n_max; ++i)
        if (values[i] != kKnownPrefix[i])
            throw std::runtime_error("overpartition cache: prefix check failed: " + file.string());
    return OverpartitionTable(std::move(values), method);
}

OverpartitionTable OverpartitionTable::load_or_build(
    TableMethod method, long n_max, const std::optional<std::filesystem::path>& cache_dir) {
    check_n_max(n_max);
    std::optional<std::filesystem::path> file;
    if (cache_dir) {
        file = *cache_dir / (method_tag(method) + "_" + std::to_string(n_max) + ".opt1");
        if (std::filesystem::exists(*file)) {
            try {
                return read_cache(*file, method);
            } catch (const std::runtime_error&) {
                // Corrupt cache: rebuild below and overwrite.
            }
        }
    }
    OverpartitionTable table =
        method == TableMethod::theta_recurrence ? theta(n_max) : oracle(n_max);
    if (file) {
        std::error_code ec;
        std::filesystem::create_directories(*cache_dir, ec);
        if (!ec) table.write_cache(*file);
    }
    return table;
}

void OverpartitionTable::write_csv(std::ostream& out) const {
    out << "n,overpartition\n";
    for (long n = 0; n <= n_max(); ++n) out << n << "," << values_[n].get_str() << "\n";
}

mpz_class shifted_difference(const OverpartitionTable& table, const DifferenceSpec& spec, long n) {
    if (spec.j < 1) throw std::domain_error("shifted_difference: j must be >= 1");
    if (spec.r < 0) throw std::domain_error("shifted_difference: r must be >= 0");
    if (n - spec.r * spec.j < 0)
        throw std::out_of_range("shifted_difference: n - r*j < 0 (n=" + std::to_string(n) + ")");
    if (n > table.n_max())
        throw std::out_of_range("shifted_difference: n exceeds table n_max");
    mpz_class acc = 0, coeff;
    for (long m = 0; m <= spec.r; ++m) {
        mpz_bin_uiui(coeff.get_mpz_t(), static_cast<unsigned long>(spec.r), static_cast<unsigned long>(m));
        if (m % 2 == 0)
            mpz_addmul(acc.get_mpz_t(), coeff.get_mpz_t(), table.value(n - m * spec.j).get_mpz_t());
        else
            mpz_submul(acc.get_mpz_t(), coeff.get_mpz_t(), table.value(n - m * spec.j).get_mpz_t());
    }
    return acc;
}

}  // namespace overasym
