#include "reflectia/enumerate.hpp"

#include <array>
#include <atomic>
#include <cstring>
#include <limits>
#include <unordered_map>

#include "reflectia/error.hpp"

namespace reflectia {

namespace {

constexpr int kMaxPhi = 24;

struct PackedField {
  int m = 1;
  int phi = 1;
  std::array<std::int64_t, kMaxPhi + 1> poly{};  // Phi_m, lowest degree first
};

PackedField make_field(int m) {
  PackedField f;
  f.m = m;
  const auto& p = cyclotomic_polynomial(m);
  f.phi = static_cast<int>(p.size()) - 1;
  if (f.phi > kMaxPhi) throw InvalidArgument("packed kernel supports phi(m) <= " + std::to_string(kMaxPhi));
  for (std::size_t k = 0; k < p.size(); ++k) f.poly[k] = p[k];
  return f;
}

struct Overflow {};
struct DenominatorGrowth {};

inline std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return static_cast<std::int64_t>(v);
}

inline void reduce_mod_phi(__int128* acc, int len, const PackedField& f) {
  for (int top = len - 1; top >= f.phi; --top) {
    const __int128 lead = acc[top];
    if (lead == 0) continue;
    for (int k = 0; k < f.phi; ++k) acc[top - f.phi + k] -= lead * f.poly[static_cast<std::size_t>(k)];
    acc[top] = 0;
  }
}

// A generator with its nonzero entries listed per column.
struct PackedGen {
  std::vector<std::int64_t> data;
  std::vector<std::vector<int>> col_nz;  // for column j, the rows k with G_kj != 0
};

struct Kernel {
  int n = 0;
  PackedField field;
  long scale = 1;
  std::vector<PackedGen> gens;
  std::vector<std::int64_t> identity;

  std::size_t stride() const { return static_cast<std::size_t>(n * n * field.phi); }

  // out = a * g / scale.
  void multiply(const std::int64_t* a, const PackedGen& g, std::int64_t* out) const {
    const int phi = field.phi;
    std::array<__int128, 2 * kMaxPhi> acc{};
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::fill(acc.begin(), acc.begin() + 2 * phi - 1, 0);
        for (int k : g.col_nz[static_cast<std::size_t>(j)]) {
          const std::int64_t* x = a + static_cast<std::size_t>((i * n + k) * phi);
          const std::int64_t* y = g.data.data() + static_cast<std::size_t>((k * n + j) * phi);
          for (int u = 0; u < phi; ++u) {
            if (x[u] == 0) continue;
            for (int v = 0; v < phi; ++v) acc[static_cast<std::size_t>(u + v)] += static_cast<__int128>(x[u]) * y[v];
          }
        }
        reduce_mod_phi(acc.data(), 2 * phi - 1, field);
        std::int64_t* o = out + static_cast<std::size_t>((i * n + j) * phi);
        for (int u = 0; u < phi; ++u) {
          const __int128 v = acc[static_cast<std::size_t>(u)];
          if (v % scale != 0) throw DenominatorGrowth{};
          o[u] = narrow(v / scale);
        }
      }
    }
  }
};

inline std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_element(const std::int64_t* x, std::size_t len) {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (std::size_t i = 0; i < len; ++i) h = splitmix(h ^ static_cast<std::uint64_t>(x[i]));
  return h;
}

// Open addressing set of element indices keyed by packed contents.
class ElementTable {
 public:
  explicit ElementTable(std::size_t stride) : stride_(stride), slots_(1024, kEmpty), mask_(1023) {}

  // Index of x if present, else inserts it (appending to data) and returns
  // (new index, true).
  std::pair<std::uint32_t, bool> insert(const std::int64_t* x, std::uint64_t h, std::vector<std::int64_t>& data) {
    std::size_t pos = h & mask_;
    while (slots_[pos] != kEmpty) {
      const std::uint32_t idx = slots_[pos];
      if (hashes_[idx] == h && std::memcmp(data.data() + idx * stride_, x, stride_ * sizeof(std::int64_t)) == 0) return {idx, false};
      pos = (pos + 1) & mask_;
    }
    const auto idx = static_cast<std::uint32_t>(hashes_.size());
    data.insert(data.end(), x, x + stride_);
    hashes_.push_back(h);
    slots_[pos] = idx;
    if (2 * hashes_.size() > slots_.size()) grow();
    return {idx, true};
  }

 private:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

  void grow() {
    std::vector<std::uint32_t> next(slots_.size() * 2, kEmpty);
    const std::size_t mask = next.size() - 1;
    for (std::uint32_t idx = 0; idx < hashes_.size(); ++idx) {
      std::size_t pos = hashes_[idx] & mask;
      while (next[pos] != kEmpty) pos = (pos + 1) & mask;
      next[pos] = idx;
    }
    slots_ = std::move(next);
    mask_ = mask;
  }

  std::size_t stride_;
  std::vector<std::uint32_t> slots_;
  std::size_t mask_;
  std::vector<std::uint64_t> hashes_;
};

long denominator_lcm(const GroupSpec& spec) {
  long D = 1;
  for (const auto& g : spec.generators) {
    for (int i = 0; i < spec.n; ++i) {
      for (int j = 0; j < spec.n; ++j) {
        for (const auto& c : g.at(i, j).coeffs()) {
          const mpz_class den = c.den();
          if (!den.fits_slong_p()) throw InvalidArgument("generator denominator too large");
          D = lcm_int(D, den.get_si());
        }
      }
    }
  }
  return D;
}

bool all_rational(const GroupSpec& spec) {
  for (const auto& g : spec.generators) {
    for (int i = 0; i < spec.n; ++i) {
      for (int j = 0; j < spec.n; ++j) {
        if (!g.at(i, j).is_rational()) return false;
      }
    }
  }
  return true;
}

Kernel make_kernel(const GroupSpec& spec, long scale) {
  Kernel k;
  k.n = spec.n;
  k.field = make_field(all_rational(spec) ? 1 : spec.m);
  k.scale = scale;
  const int phi = k.field.phi;
  k.identity.assign(k.stride(), 0);
  for (int i = 0; i < k.n; ++i) k.identity[static_cast<std::size_t>((i * k.n + i) * phi)] = scale;
  for (const auto& g : spec.generators) {
    PackedGen pg;
    pg.data.assign(k.stride(), 0);
    pg.col_nz.resize(static_cast<std::size_t>(k.n));
    for (int i = 0; i < k.n; ++i) {
      for (int j = 0; j < k.n; ++j) {
        const Cyclotomic v = k.field.m == 1 ? Cyclotomic(g.at(i, j).rational_value()) : g.at(i, j).embed(k.field.m);
        bool nz = false;
        for (int u = 0; u < phi; ++u) {
          const Rational scaled = v.coeffs()[static_cast<std::size_t>(u)] * Rational(scale);
          if (!scaled.is_integer()) throw InvalidArgument("generator entry does not clear the common denominator");
          pg.data[static_cast<std::size_t>((i * k.n + j) * phi + u)] = scaled.to_long();
          nz = nz || !scaled.is_zero();
        }
        if (nz) pg.col_nz[static_cast<std::size_t>(j)].push_back(i);
      }
    }
    k.gens.push_back(std::move(pg));
  }
  return k;
}

GroupElements closure(const Kernel& k, int spec_m, std::uint64_t cap, ExecMode mode) {
  GroupElements out(k.n, spec_m, k.field.m, k.field.phi, k.scale);
  auto& data = out.data();
  const std::size_t E = k.stride();
  ElementTable table(E);
  table.insert(k.identity.data(), hash_element(k.identity.data(), E), data);
  const std::size_t G = k.gens.size();
  auto check_cap = [&] {
    if (data.size() / E > cap) throw CapExceeded("group too large or not finite (closure passed " + std::to_string(cap) + " elements)");
  };

  if (mode == ExecMode::serial) {
    std::vector<std::int64_t> buf(E);
    for (std::size_t f = 0; f < data.size() / E; ++f) {
      for (std::size_t g = 0; g < G; ++g) {
        k.multiply(data.data() + f * E, k.gens[g], buf.data());
        table.insert(buf.data(), hash_element(buf.data(), E), data);
      }
      check_cap();
    }
    return out;
  }

  // Level synchronous: products of a frontier chunk are formed in parallel,
  // then inserted serially in (element, generator) order, which reproduces
  // the serial element order exactly.
  constexpr std::size_t kChunk = 8192;
  std::vector<std::int64_t> buf;
  std::vector<std::uint64_t> hashes;
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  while (level_begin < level_end) {
    for (std::size_t start = level_begin; start < level_end; start += kChunk) {
      const std::size_t cnt = std::min(kChunk, level_end - start);
      const std::size_t jobs = cnt * G;
      buf.resize(jobs * E);
      hashes.resize(jobs);
      std::atomic<int> failure{0};
      const std::int64_t* base = data.data();
#pragma omp parallel for schedule(static)
      for (std::int64_t t = 0; t < static_cast<std::int64_t>(jobs); ++t) {
        const std::size_t tt = static_cast<std::size_t>(t);
        try {
          k.multiply(base + (start + tt / G) * E, k.gens[tt % G], buf.data() + tt * E);
          hashes[tt] = hash_element(buf.data() + tt * E, E);
        } catch (const DenominatorGrowth&) {
          failure.store(1);
        } catch (const Overflow&) {
          failure.store(2);
        }
      }
      if (failure.load() == 1) throw DenominatorGrowth{};
      if (failure.load() == 2) throw Overflow{};
      for (std::size_t t = 0; t < jobs; ++t) table.insert(buf.data() + t * E, hashes[t], data);
      check_cap();
    }
    level_begin = level_end;
    level_end = data.size() / E;
  }
  return out;
}

// Ring operations on packed cyclotomic integers for Berkowitz.
using ZC = std::array<std::int64_t, kMaxPhi>;

struct ZOps {
  const PackedField* f;
  ZC zero() const { return ZC{}; }
  ZC one() const {
    ZC z{};
    z[0] = 1;
    return z;
  }
  ZC add(const ZC& a, const ZC& b) const {
    ZC z{};
    for (int u = 0; u < f->phi; ++u) z[static_cast<std::size_t>(u)] = narrow(static_cast<__int128>(a[static_cast<std::size_t>(u)]) + b[static_cast<std::size_t>(u)]);
    return z;
  }
  ZC neg(const ZC& a) const {
    ZC z{};
    for (int u = 0; u < f->phi; ++u) z[static_cast<std::size_t>(u)] = -a[static_cast<std::size_t>(u)];
    return z;
  }
  ZC mul(const ZC& a, const ZC& b) const {
    std::array<__int128, 2 * kMaxPhi> acc{};
    const int phi = f->phi;
    for (int u = 0; u < phi; ++u) {
      if (a[static_cast<std::size_t>(u)] == 0) continue;
      for (int v = 0; v < phi; ++v) acc[static_cast<std::size_t>(u + v)] += static_cast<__int128>(a[static_cast<std::size_t>(u)]) * b[static_cast<std::size_t>(v)];
    }
    reduce_mod_phi(acc.data(), 2 * phi - 1, *f);
    ZC z{};
    for (int u = 0; u < phi; ++u) z[static_cast<std::size_t>(u)] = narrow(acc[static_cast<std::size_t>(u)]);
    return z;
  }
};

void charpoly_key(const std::int64_t* x, int n, const PackedField& f, std::int64_t* key) {
  std::vector<ZC> A(static_cast<std::size_t>(n * n));
  for (int e = 0; e < n * n; ++e) {
    ZC z{};
    for (int u = 0; u < f.phi; ++u) z[static_cast<std::size_t>(u)] = x[static_cast<std::size_t>(e * f.phi + u)];
    A[static_cast<std::size_t>(e)] = z;
  }
  const auto cp = berkowitz_charpoly(A, n, ZOps{&f});
  for (int k = 0; k <= n; ++k) {
    for (int u = 0; u < f.phi; ++u) key[static_cast<std::size_t>(k * f.phi + u)] = cp[static_cast<std::size_t>(k)][static_cast<std::size_t>(u)];
  }
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const { return hash_element(v.data(), v.size()); }
};

}  // namespace

CycMatrix GroupElements::element(std::size_t i) const {
  CycMatrix out(n_, spec_m_);
  const std::int64_t* x = raw(i);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) {
      std::vector<Rational> coeffs;
      for (int u = 0; u < phi_; ++u) coeffs.emplace_back(x[static_cast<std::size_t>((r * n_ + c) * phi_ + u)], scale_);
      out.set(r, c, Cyclotomic::from_coeffs(packed_m_, std::move(coeffs)).embed(spec_m_));
    }
  }
  return out;
}

GroupElements enumerate_elements(const GroupSpec& spec, std::uint64_t cap, ExecMode mode) {
  const long D0 = denominator_lcm(spec);
  long D = D0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      return closure(make_kernel(spec, D), spec.m, cap, mode);
    } catch (const DenominatorGrowth&) {
      if (D0 == 1) break;
      D *= D0;
    } catch (const Overflow&) {
      throw CapExceeded("packed arithmetic overflow while enumerating " + spec.name);
    }
  }
  throw CapExceeded("denominators keep growing; " + spec.name + " is probably not finite");
}

std::vector<EigenBucket> bucket_elements(const GroupElements& elems, ExecMode mode) {
  const int n = elems.n();
  PackedField f = make_field(elems.packed_order());
  const std::size_t K = static_cast<std::size_t>((n + 1) * f.phi);
  const std::size_t total = elems.size();
  std::unordered_map<std::vector<std::int64_t>, std::size_t, KeyHash> index;
  std::vector<std::pair<std::size_t, std::uint64_t>> firsts;  // (element index, count)
  constexpr std::size_t kChunk = 1 << 16;
  std::vector<std::int64_t> keys;
  for (std::size_t start = 0; start < total; start += kChunk) {
    const std::size_t cnt = std::min(kChunk, total - start);
    keys.assign(cnt * K, 0);
    std::atomic<bool> overflow{false};
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(static)
      for (std::int64_t t = 0; t < static_cast<std::int64_t>(cnt); ++t) {
        try {
          charpoly_key(elems.raw(start + static_cast<std::size_t>(t)), n, f, keys.data() + static_cast<std::size_t>(t) * K);
        } catch (const Overflow&) {
          overflow.store(true);
        }
      }
    } else {
      for (std::size_t t = 0; t < cnt; ++t) {
        try {
          charpoly_key(elems.raw(start + t), n, f, keys.data() + t * K);
        } catch (const Overflow&) {
          overflow.store(true);
        }
      }
    }
    if (overflow.load()) throw CapExceeded("packed arithmetic overflow in char poly");
    for (std::size_t t = 0; t < cnt; ++t) {
      std::vector<std::int64_t> key(keys.begin() + static_cast<std::ptrdiff_t>(t * K), keys.begin() + static_cast<std::ptrdiff_t>((t + 1) * K));
      auto [it, inserted] = index.try_emplace(std::move(key), firsts.size());
      if (inserted) {
        firsts.emplace_back(start + t, 1);
      } else {
        ++firsts[it->second].second;
      }
    }
  }
  std::vector<EigenBucket> out;
  out.reserve(firsts.size());
  for (const auto& [idx, count] : firsts) {
    EigenBucket b;
    b.representative = elems.element(idx);
    b.key = b.representative.charpoly();
    b.count = count;
    out.push_back(std::move(b));
  }
  return out;
}

Enumeration generate(const GroupSpec& spec, const GenerateOptions& opts) {
  if (spec.expected_order) {
    if (*spec.expected_order > opts.cap) {
      throw CapExceeded(spec.name + " has " + std::to_string(*spec.expected_order) + " elements, above the cap " + std::to_string(opts.cap) + "; it is served by formulas only");
    }
    if (*spec.expected_order > kLargeGroupThreshold && !opts.allow_large) {
      throw CapExceeded(spec.name + " has " + std::to_string(*spec.expected_order) + " elements; enumeration needs the allow-large flag");
    }
  }
  Enumeration e;
  e.elements = enumerate_elements(spec, opts.cap, opts.mode);
  if (spec.expected_order && e.elements.size() != *spec.expected_order) {
    throw VerificationFailure(spec.name + ": closure has " + std::to_string(e.elements.size()) + " elements, expected " + std::to_string(*spec.expected_order));
  }
  if (opts.bucket) e.buckets = bucket_elements(e.elements, opts.mode);
  return e;
}

}  // namespace reflectia
