#include "line_engine.hpp"

#include <algorithm>
#include <thread>
#include <utility>

namespace orchard::detail {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

int ctz128(u128 x) {
  const auto lo = static_cast<std::uint64_t>(x);
  return lo != 0 ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<std::uint64_t>(x >> 64));
}

u128 gcd128(u128 a, u128 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = ctz128(a | b);
  a >>= ctz128(a);
  do {
    b >>= ctz128(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

u128 abs128(i128 v) { return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v); }

Integer to_integer(i128 v) {
  const u128 mag = abs128(v);
  const std::uint64_t limbs[2] = {static_cast<std::uint64_t>(mag),
                                  static_cast<std::uint64_t>(mag >> 64)};
  Integer out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  if (v < 0) out = -out;
  return out;
}

// Exact key for the fast path: coordinates below 2^62 in magnitude make every
// cross product fit in a signed 128-bit integer.
struct SmallKey {
  i128 v[3];
  friend bool operator<(const SmallKey& a, const SmallKey& b) {
    if (a.v[0] != b.v[0]) return a.v[0] < b.v[0];
    if (a.v[1] != b.v[1]) return a.v[1] < b.v[1];
    return a.v[2] < b.v[2];
  }
  friend bool operator==(const SmallKey& a, const SmallKey& b) {
    return a.v[0] == b.v[0] && a.v[1] == b.v[1] && a.v[2] == b.v[2];
  }
};

struct SmallDomain {
  using Key = SmallKey;
  std::vector<std::array<std::int64_t, 3>> p;

  explicit SmallDomain(std::span<const ProjPoint> pts) {
    p.reserve(pts.size());
    for (const auto& q : pts) p.push_back({q[0].get_si(), q[1].get_si(), q[2].get_si()});
  }

  Key key(std::size_t i, std::size_t j) const {
    const auto& a = p[i];
    const auto& b = p[j];
    Key k{{static_cast<i128>(a[1]) * b[2] - static_cast<i128>(a[2]) * b[1],
           static_cast<i128>(a[2]) * b[0] - static_cast<i128>(a[0]) * b[2],
           static_cast<i128>(a[0]) * b[1] - static_cast<i128>(a[1]) * b[0]}};
    u128 g = gcd128(gcd128(abs128(k.v[0]), abs128(k.v[1])), abs128(k.v[2]));
    const i128 lead = k.v[0] != 0 ? k.v[0] : k.v[1] != 0 ? k.v[1] : k.v[2];
    if (g > 1 || lead < 0) {
      const i128 d = lead < 0 ? -static_cast<i128>(g) : static_cast<i128>(g);
      for (auto& c : k.v) c /= d;
    }
    return k;
  }

  static ProjLine line(const Key& k) {
    return ProjLine(to_integer(k.v[0]), to_integer(k.v[1]), to_integer(k.v[2]));
  }
};

struct BigDomain {
  using Key = ProjLine;
  std::span<const ProjPoint> p;

  explicit BigDomain(std::span<const ProjPoint> pts) : p(pts) {}
  Key key(std::size_t i, std::size_t j) const { return join(p[i], p[j]); }
  static ProjLine line(const Key& k) { return k; }
};

template <class Key>
struct Emitted {
  Key key;
  std::uint32_t multiplicity;
  std::uint32_t offset;  // into the worker's flat point buffer
};

template <class Key>
struct WorkerOutput {
  std::vector<Emitted<Key>> lines;
  std::vector<std::uint32_t> points;
};

template <class Domain>
void scan_anchors(const Domain& dom, std::size_t n, std::size_t first, std::size_t stride,
                  std::size_t min_mult, bool keep_points,
                  WorkerOutput<typename Domain::Key>& out) {
  using Key = typename Domain::Key;
  std::vector<std::pair<Key, std::uint32_t>> buf;
  buf.reserve(n);
  for (std::size_t i = first; i < n; i += stride) {
    buf.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) buf.emplace_back(dom.key(i, j), static_cast<std::uint32_t>(j));
    }
    std::sort(buf.begin(), buf.end(), [](const auto& a, const auto& b) {
      if (a.first < b.first) return true;
      if (b.first < a.first) return false;
      return a.second < b.second;
    });
    std::size_t s = 0;
    while (s < buf.size()) {
      std::size_t e = s + 1;
      while (e < buf.size() && buf[e].first == buf[s].first) ++e;
      // buf[s].second is the smallest other index on this line.
      const std::size_t mult = e - s + 1;
      if (i < buf[s].second && mult >= min_mult) {
        const auto offset = static_cast<std::uint32_t>(out.points.size());
        if (keep_points) {
          out.points.push_back(static_cast<std::uint32_t>(i));
          for (std::size_t t = s; t < e; ++t) out.points.push_back(buf[t].second);
        }
        out.lines.push_back({buf[s].first, static_cast<std::uint32_t>(mult), offset});
      }
      s = e;
    }
  }
}

template <class Domain>
std::vector<LineGroup> run(const Domain& dom, std::size_t n, std::size_t min_mult,
                           bool keep_points, unsigned workers) {
  using Key = typename Domain::Key;
  std::vector<WorkerOutput<Key>> outs(workers);
  if (workers == 1) {
    scan_anchors(dom, n, 0, 1, min_mult, keep_points, outs[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] { scan_anchors(dom, n, w, workers, min_mult, keep_points, outs[w]); });
    }
    for (auto& t : threads) t.join();
  }

  struct Ref {
    const Emitted<Key>* e;
    const WorkerOutput<Key>* w;
  };
  std::vector<Ref> refs;
  std::size_t total = 0;
  for (const auto& o : outs) total += o.lines.size();
  refs.reserve(total);
  for (const auto& o : outs) {
    for (const auto& e : o.lines) refs.push_back({&e, &o});
  }
  std::sort(refs.begin(), refs.end(), [](const Ref& a, const Ref& b) { return a.e->key < b.e->key; });

  std::vector<LineGroup> result;
  result.reserve(refs.size());
  for (const auto& r : refs) {
    LineGroup g{Domain::line(r.e->key), r.e->multiplicity, {}};
    if (keep_points) {
      const auto* first = r.w->points.data() + r.e->offset;
      g.points.assign(first, first + r.e->multiplicity);
      std::sort(g.points.begin(), g.points.end());
    }
    result.push_back(std::move(g));
  }
  return result;
}

}  // namespace

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

bool fits_fast_path(std::span<const ProjPoint> pts) {
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (sgn(p[i]) != 0 && mpz_sizeinbase(p[i].get_mpz_t(), 2) > 62) return false;
    }
  }
  return true;
}

std::vector<LineGroup> enumerate_lines(std::span<const ProjPoint> pts,
                                       std::size_t min_multiplicity, bool keep_points,
                                       unsigned workers, bool force_bignum) {
  if (min_multiplicity < 2) min_multiplicity = 2;
  const unsigned w = std::max(1u, std::min<unsigned>(resolve_workers(workers),
                                                     static_cast<unsigned>(std::max<std::size_t>(pts.size(), 1))));
  if (!force_bignum && fits_fast_path(pts)) {
    return run(SmallDomain(pts), pts.size(), min_multiplicity, keep_points, w);
  }
  return run(BigDomain(pts), pts.size(), min_multiplicity, keep_points, w);
}

}  // namespace orchard::detail
