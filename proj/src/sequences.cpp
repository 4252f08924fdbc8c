#include "ktile/sequences.hpp"

#include <fstream>
#include <vector>

namespace ktile {

namespace {

void require_args(int k, long n) {
  if (k < 2)
    fail(Errc::InvalidArgument, "k must be >= 2, got " + std::to_string(k));
  if (n < 0)
    fail(Errc::InvalidArgument, "n must be >= 0, got " + std::to_string(n));
}

}  // namespace

Natural gen_fib(int k, long n, SequenceCache& cache) {
  require_args(k, n);
  if (const Natural* hit = cache.find({SequenceKind::GenFib, k, n}))
    return *hit;
  for (long i = 0; i <= n; ++i) {
    SequenceKey key{SequenceKind::GenFib, k, i};
    if (cache.find(key)) continue;
    if (i < k) {
      cache.insert(key, Natural(i + 1));
    } else {
      const Natural* prev = cache.find({SequenceKind::GenFib, k, i - 1});
      const Natural* back = cache.find({SequenceKind::GenFib, k, i - k});
      cache.insert(key, Natural(*prev + *back));
    }
  }
  return *cache.find({SequenceKind::GenFib, k, n});
}

Natural gen_lucas(int k, long n, SequenceCache& cache) {
  require_args(k, n);
  SequenceKey key{SequenceKind::GenLucas, k, n};
  if (const Natural* hit = cache.find(key)) return *hit;
  Natural value =
      n <= 2 * k - 1
          ? Natural(n + 1)
          : Natural((k - 1) * gen_fib(k, n - (2 * k - 1), cache) +
                    gen_fib(k, n - (k - 1), cache));
  return cache.insert(key, std::move(value));
}

Natural gen_lucas_rec(int k, long n) {
  require_args(k, n);
  if (n <= 2 * k - 1) return Natural(n + 1);
  std::vector<Natural> row(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i <= n; ++i)
    row[i] = i <= 2 * k - 1 ? Natural(i + 1) : Natural(row[i - 1] + row[i - k]);
  return row[n];
}

Natural classic_fib(long n, SequenceCache& cache) {
  return gen_fib(2, n, cache);
}

Natural classic_lucas(long n, SequenceCache& cache) {
  require_args(2, n);
  switch (n) {
    case 0: return Natural(2);
    case 1: return Natural(1);
    case 2: return Natural(3);
    default: return gen_lucas(2, n, cache);
  }
}

void load_cache_file(const std::string& path, SequenceCache& cache) {
  std::ifstream in(path);
  if (!in) fail(Errc::IoError, "cannot open cache file " + path);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto bad = [&](const std::string& why) {
      fail(Errc::IoError,
           path + ":" + std::to_string(lineno) + ": " + why);
    };
    std::size_t c1 = line.find(',');
    std::size_t c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    std::size_t c3 = line.find(',', c2 == std::string::npos ? c2 : c2 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        c3 == std::string::npos)
      bad("expected kind,k,n,value");
    std::string kind_tok = line.substr(0, c1);
    SequenceKind kind;
    if (kind_tok == "fib") {
      kind = SequenceKind::GenFib;
    } else if (kind_tok == "lucas") {
      kind = SequenceKind::GenLucas;
    } else {
      bad("unknown kind '" + kind_tok + "'");
      return;  // unreachable
    }
    int k = 0;
    long n = 0;
    Natural value;
    try {
      k = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
      n = std::stol(line.substr(c2 + 1, c3 - c2 - 1));
      value = Natural(line.substr(c3 + 1), 10);
    } catch (const std::exception&) {
      bad("unparseable entry");
    }
    if (k < 2 || n < 0) bad("key out of range");
    cache.insert({kind, k, n}, std::move(value));
  }
}

void save_cache_file(const std::string& path, const SequenceCache& cache) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(Errc::IoError, "cannot write cache file " + path);
  for (const auto& [key, value] : cache.entries()) {
    out << (key.kind == SequenceKind::GenFib ? "fib" : "lucas") << ','
        << key.k << ',' << key.n << ',' << value.get_str() << '\n';
  }
  if (!out) fail(Errc::IoError, "short write to cache file " + path);
}

}  // namespace ktile
