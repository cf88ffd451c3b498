#include "aliquot/sieve.hpp"

#include <atomic>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace aliquot {

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    std::vector<bool> comp(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (!comp[i]) {
            primes.push_back(i);
            for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
        }
        if (i * i > limit) {
            for (u64 j = i + 1; j <= limit; ++j)
                if (!comp[j]) primes.push_back(j);
            break;
        }
    }
    return primes;
}

SieveBlock sieve_block(u64 lo, u64 hi, const std::vector<u64>& base_primes) {
    if (lo < 1 || lo > hi) throw std::invalid_argument("sieve_block: bad range");
    if (hi > ((u64)1 << 60)) throw std::overflow_error("sieve_block: sigma may exceed 64 bits above 2^60");
    u64 root = 1;
    while ((u128)(root + 1) * (root + 1) <= hi) ++root;
    if (base_primes.empty() ? root >= 2 : base_primes.back() < root) {
        // last base prime below sqrt(hi) is only OK if no prime lies between
        bool ok = true;
        u64 from = base_primes.empty() ? 2 : base_primes.back() + 1;
        for (u64 c = from; c <= root; ++c)
            if (is_prime(c)) { ok = false; break; }
        if (!ok) throw std::invalid_argument("sieve_block: base_primes must cover sqrt(hi)");
    }

    const u64 n_items = hi - lo + 1;
    SieveBlock b;
    b.lo = lo;
    b.hi = hi;
    b.spf.assign(n_items, 0);
    b.sigma.assign(n_items, 1);
    b.s.assign(n_items, 0);
    std::vector<u64> rem(n_items);
    for (u64 i = 0; i < n_items; ++i) rem[i] = lo + i;

    for (u64 p : base_primes) {
        if ((u128)p * p > hi) break;
        u64 first = ((lo + p - 1) / p) * p;
        for (u64 n = first; n >= lo && n <= hi; n += p) {
            u64 i = n - lo;
            u64 pe = 1, term = 1;
            while (rem[i] % p == 0) {
                rem[i] /= p;
                pe *= p;
                term += pe;
            }
            b.sigma[i] *= term;  // sigma < 6n for all desk-scale n, no wrap
            if (b.spf[i] == 0) b.spf[i] = p;
        }
    }
    for (u64 i = 0; i < n_items; ++i) {
        u64 n = lo + i;
        if (rem[i] > 1) {
            u128 sg = (u128)b.sigma[i] * (rem[i] + 1);
            if (sg > ~(u64)0) throw std::overflow_error("sigma exceeds 64 bits");
            b.sigma[i] = (u64)sg;
            if (b.spf[i] == 0) b.spf[i] = rem[i];  // n itself prime
        }
        if (n == 1) {
            b.spf[i] = 1;
            b.sigma[i] = 1;
        }
        b.s[i] = b.sigma[i] - n;
    }
    return b;
}

void for_each_block_parallel(u64 x, unsigned threads, u64 block_size,
                             const std::function<void(std::size_t, const SieveBlock&)>& fn) {
    if (x < 1) return;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    u64 root = 1;
    while ((u128)(root + 1) * (root + 1) <= x) ++root;
    auto base = primes_up_to(root);
    const std::size_t n_blocks = (std::size_t)((x - 1) / block_size + 1);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n_blocks) return;
            u64 lo = 1 + (u64)i * block_size;
            u64 hi = std::min(x, lo + block_size - 1);
            fn(i, sieve_block(lo, hi, base));
        }
    };
    if (threads <= 1 || n_blocks <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

namespace {

constexpr char kDumpMagic[8] = {'A', 'L', 'Q', 'S', 'G', 'M', 'A', '1'};

void put_u64(std::ostream& out, u64 v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = (unsigned char)(v >> (8 * i));
    out.write((const char*)buf, 8);
}

u64 get_u64(std::istream& in) {
    unsigned char buf[8];
    in.read((char*)buf, 8);
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= (u64)buf[i] << (8 * i);
    return v;
}

}  // namespace

void write_block_dump(std::ostream& out, const SieveBlock& b) {
    out.write(kDumpMagic, 8);
    put_u64(out, b.lo);
    put_u64(out, b.hi);
    put_u64(out, 0);  // reserved
    for (u64 n = b.lo; n <= b.hi; ++n) {
        put_u64(out, n);
        put_u64(out, b.sigma_of(n));
    }
}

void write_range_dump(std::ostream& out, u64 x, u64 block_size) {
    out.write(kDumpMagic, 8);
    put_u64(out, 1);
    put_u64(out, x);
    put_u64(out, 0);
    sieve_scan(x, [&](u64 n, u64 sigma, u64, u64) {
        put_u64(out, n);
        put_u64(out, sigma);
    }, block_size);
}

bool read_block_dump(std::istream& in, SieveBlock& b) {
    char magic[8];
    in.read(magic, 8);
    if (!in || std::memcmp(magic, kDumpMagic, 8) != 0) return false;
    b.lo = get_u64(in);
    b.hi = get_u64(in);
    get_u64(in);
    if (!in || b.lo < 1 || b.lo > b.hi) return false;
    b.spf.clear();
    b.sigma.assign(b.hi - b.lo + 1, 0);
    b.s.assign(b.hi - b.lo + 1, 0);
    for (u64 n = b.lo; n <= b.hi; ++n) {
        u64 rn = get_u64(in);
        u64 sg = get_u64(in);
        if (!in || rn != n || sg < n - (n == 1)) return false;
        b.sigma[n - b.lo] = sg;
        b.s[n - b.lo] = sg - n;
    }
    return true;
}

u128 sigma_sum_hyperbola(u64 x) {
    u128 total = 0;
    for (u64 d = 1; d <= x; ++d) total += (u128)d * (x / d);
    return total;
}

}  // namespace aliquot
