#include "socle/fp_matrix.hpp"

#include <stdexcept>

namespace socle {

u32 mod_inv(u32 a, u32 m) {
  i64 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    i64 q = r / nr;
    i64 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::invalid_argument("mod_inv: not a unit");
  return mod_reduce(t, m);
}

bool is_prime(u32 n) {
  if (n < 2) return false;
  for (u32 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u32 primitive_root(u32 p, u32 n) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("primitive_root: need an odd prime");
  u32 q = 1;
  for (u32 i = 0; i < n; ++i) q *= p;
  // Generator of (Z/p)^x by direct order test (p is tiny at desk scale).
  u32 g = 0;
  for (u32 cand = 2; cand < p; ++cand) {
    u32 x = cand % p, ord = 1;
    while (x != 1) {
      x = mod_mul(x, cand, p);
      ++ord;
    }
    if (ord == p - 1) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw std::logic_error("primitive_root: none found");
  if (n == 1) return g;
  // g generates (Z/p^N)^x iff g^(p-1) != 1 mod p^2; otherwise g+p works.
  u32 p2 = p * p;
  if (mod_pow(g, p - 1, p2) == 1) g += p;
  return g % q;
}

std::vector<u32> FpMatrix::row(std::size_t i) const {
  return std::vector<u32>(e.begin() + i * cols, e.begin() + (i + 1) * cols);
}

std::vector<u32> FpMatrix::col(std::size_t j) const {
  std::vector<u32> v(rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

void FpMatrix::set_row(std::size_t i, const std::vector<u32>& v) {
  if (v.size() != cols) throw std::invalid_argument("set_row: size mismatch");
  for (std::size_t j = 0; j < cols; ++j) at(i, j) = v[j] % p;
}

FpMatrix FpMatrix::identity(u32 p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

FpMatrix FpMatrix::from_rows(u32 p, const std::vector<std::vector<u32>>& rows) {
  if (rows.empty()) return FpMatrix(p, 0, 0);
  FpMatrix m(p, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
  if (a.p != b.p || a.cols != b.rows) throw std::invalid_argument("mat_mul: shape/modulus mismatch");
  FpMatrix out(a.p, a.rows, b.cols);
  std::vector<u64> acc(b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols; ++k) {
      u64 aik = a.at(i, k);
      if (!aik) continue;
      const u32* brow = &b.e[k * b.cols];
      for (std::size_t j = 0; j < b.cols; ++j) acc[j] += aik * brow[j];
    }
    for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) = static_cast<u32>(acc[j] % a.p);
  }
  return out;
}

FpMatrix mat_add(const FpMatrix& a, const FpMatrix& b) {
  if (a.p != b.p || a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("mat_add: shape mismatch");
  FpMatrix out = a;
  for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] = (out.e[i] + b.e[i]) % a.p;
  return out;
}

FpMatrix mat_sub(const FpMatrix& a, const FpMatrix& b) {
  if (a.p != b.p || a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("mat_sub: shape mismatch");
  FpMatrix out = a;
  for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] = (out.e[i] + a.p - b.e[i]) % a.p;
  return out;
}

FpMatrix mat_scale(const FpMatrix& a, u32 c) {
  FpMatrix out = a;
  c %= a.p;
  for (auto& x : out.e) x = mod_mul(x, c, a.p);
  return out;
}

FpMatrix mat_pow(const FpMatrix& a, u64 k) {
  if (a.rows != a.cols) throw std::invalid_argument("mat_pow: square only");
  FpMatrix acc = FpMatrix::identity(a.p, a.rows), base = a;
  while (k) {
    if (k & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    k >>= 1;
  }
  return acc;
}

FpMatrix transpose(const FpMatrix& a) {
  FpMatrix out(a.p, a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
  return out;
}

FpMatrix kron(const FpMatrix& a, const FpMatrix& b) {
  if (a.p != b.p) throw std::invalid_argument("kron: modulus mismatch");
  FpMatrix out(a.p, a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) {
      u32 f = a.at(i, j);
      if (!f) continue;
      for (std::size_t k = 0; k < b.rows; ++k)
        for (std::size_t l = 0; l < b.cols; ++l)
          out.at(i * b.rows + k, j * b.cols + l) = mod_mul(f, b.at(k, l), a.p);
    }
  return out;
}

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.p != b.p || a.cols != b.cols) throw std::invalid_argument("vstack: shape mismatch");
  FpMatrix out(a.p, a.rows + b.rows, a.cols);
  std::copy(a.e.begin(), a.e.end(), out.e.begin());
  std::copy(b.e.begin(), b.e.end(), out.e.begin() + a.e.size());
  return out;
}

std::vector<u32> mat_vec(const FpMatrix& a, const std::vector<u32>& v) {
  if (v.size() != a.cols) throw std::invalid_argument("mat_vec: size mismatch");
  std::vector<u32> out(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < a.cols; ++j) acc += static_cast<u64>(a.at(i, j)) * v[j];
    out[i] = static_cast<u32>(acc % a.p);
  }
  return out;
}

RrefResult rref(const FpMatrix& a) {
  FpMatrix w = a;
  const u32 p = w.p;
  // Elimination adds products bounded by (p-1)^2 into unreduced accumulators;
  // rows are renormalized whenever the running bound nears 2^32.
  const u64 prod = static_cast<u64>(p - 1) * (p - 1);
  const u64 max_hits = prod ? (0xFFFF0000ull / prod) : ~0ull;
  std::vector<u64> hits(w.rows, 0);
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < w.cols && pr < w.rows; ++c) {
    std::size_t sel = w.rows;
    for (std::size_t i = pr; i < w.rows; ++i)
      if (w.at(i, c) % p != 0) {
        sel = i;
        break;
      }
    if (sel == w.rows) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(sel, j), w.at(pr, j));
    std::swap(hits[sel], hits[pr]);
    u32 inv = mod_inv(w.at(pr, c) % p, p);
    for (std::size_t j = 0; j < w.cols; ++j) w.at(pr, j) = mod_mul(w.at(pr, j) % p, inv, p);
    hits[pr] = 0;
    const u32* src = &w.e[pr * w.cols];
    for (std::size_t i = 0; i < w.rows; ++i) {
      if (i == pr) continue;
      u32 f = w.at(i, c) % p;
      if (!f) {
        w.at(i, c) = 0;
        continue;
      }
      if (++hits[i] >= max_hits) {
        u32* r = &w.e[i * w.cols];
        for (std::size_t j = 0; j < w.cols; ++j) r[j] %= p;
        hits[i] = 1;
      }
      u32 g = p - f;
      u32* dst = &w.e[i * w.cols];
      for (std::size_t j = c; j < w.cols; ++j) dst[j] += g * src[j];
      dst[c] = 0;
    }
    pivots.push_back(c);
    ++pr;
  }
  for (auto& x : w.e) x %= p;
  return RrefResult{std::move(w), std::move(pivots), pr};
}

std::size_t rank_of(const FpMatrix& a) { return rref(a).rank; }

FpMatrix kernel_basis(const FpMatrix& a) {
  RrefResult rr = rref(a);
  std::vector<bool> is_pivot(a.cols, false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  FpMatrix out(a.p, a.cols - rr.rank, a.cols);
  std::size_t row = 0;
  for (std::size_t f = 0; f < a.cols; ++f) {
    if (is_pivot[f]) continue;
    out.at(row, f) = 1;
    for (std::size_t i = 0; i < rr.rank; ++i)
      out.at(row, rr.pivots[i]) = (a.p - rr.r.at(i, f)) % a.p;
    ++row;
  }
  return rref(out).r;  // canonical basis
}

std::optional<std::vector<u32>> solve(const FpMatrix& a, const std::vector<u32>& b) {
  if (b.size() != a.rows) throw std::invalid_argument("solve: rhs size mismatch");
  FpMatrix aug(a.p, a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i] % a.p;
  }
  RrefResult rr = rref(aug);
  for (auto c : rr.pivots)
    if (c == a.cols) return std::nullopt;
  std::vector<u32> x(a.cols, 0);
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.r.at(i, a.cols);
  return x;
}

}  // namespace socle
