// Copyright 2026 The hecke-topo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "hecke/modforms.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hecke/eigenspace.hpp"

namespace hecke {

long dim_Mk(long k) {
  if (k < 0 || k % 2 || k == 2) return 0;
  return k % 12 == 2 ? k / 12 : k / 12 + 1;
}

namespace {

// Powers of E_4, E_6 and Delta at one fixed precision.
class SeriesStore {
 public:
  explicit SeriesStore(std::size_t prec)
      : prec_(prec), e4_pow_{e4_integral(prec)}, delta_pow_{delta_integral(prec)}, e6_(e6_integral(prec)) {}

  const std::vector<IntSeries>& basis(long k) {
    auto it = bases_.find(k);
    if (it == bases_.end()) it = bases_.emplace(k, build(k)).first;
    return it->second;
  }

 private:
  const IntSeries& e4_power(long a) {
    while (static_cast<long>(e4_pow_.size()) < a)
      e4_pow_.push_back(mul_truncated(e4_pow_.back(), e4_pow_.front(), prec_));
    return e4_pow_[static_cast<std::size_t>(a - 1)];
  }
  const IntSeries& delta_power(long j) {
    while (static_cast<long>(delta_pow_.size()) < j)
      delta_pow_.push_back(mul_truncated(delta_pow_.back(), delta_pow_.front(), prec_));
    return delta_pow_[static_cast<std::size_t>(j - 1)];
  }

  std::vector<IntSeries> build(long k) {
    const long d = dim_Mk(k);
    std::vector<IntSeries> g;
    for (long j = 0; j < d; ++j) {
      long rest = k - 12 * j;
      long b = (rest % 4 == 2) ? 1 : 0;
      long a = (rest - 6 * b) / 4;
      IntSeries s(prec_);
      s[0] = 1;
      if (a > 0) s = e4_power(a);
      if (b) s = mul_truncated(s, e6_, prec_);
      if (j > 0) s = mul_truncated(s, delta_power(j), prec_);
      g.push_back(std::move(s));
    }
    // Clear a_i(g_j) for i > j, using the already reduced later vectors.
    for (long j = d - 2; j >= 0; --j)
      for (long i = j + 1; i < d; ++i) {
        Integer c = g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
        if (c == 0) continue;
        auto& gj = g[static_cast<std::size_t>(j)];
        const auto& gi = g[static_cast<std::size_t>(i)];
        for (std::size_t m = 0; m < prec_; ++m) mpz_submul(gj[m].get_mpz_t(), c.get_mpz_t(), gi[m].get_mpz_t());
      }
    return g;
  }

  std::size_t prec_;
  std::vector<IntSeries> e4_pow_, delta_pow_;
  IntSeries e6_;
  std::map<long, std::vector<IntSeries>> bases_;
};

// One store per precision bucket (four per octave), so small requests never
// pay for the largest precision seen so far.
class SeriesStores {
 public:
  std::vector<IntSeries> basis(long k, std::size_t prec) {
    const std::size_t step = std::max<std::size_t>(64, std::bit_floor(std::max<std::size_t>(prec, 1)) / 4);
    const std::size_t bucket = (std::max<std::size_t>(prec, 1) + step - 1) / step * step;
    std::lock_guard lock(mu_);
    auto it = stores_.find(bucket);
    if (it == stores_.end()) it = stores_.emplace(bucket, SeriesStore(bucket)).first;
    const auto& full = it->second.basis(k);
    std::vector<IntSeries> out;
    out.reserve(full.size());
    for (const auto& s : full) out.emplace_back(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(prec));
    return out;
  }

  void clear() {
    std::lock_guard lock(mu_);
    stores_.clear();
  }

 private:
  std::mutex mu_;
  std::map<std::size_t, SeriesStore> stores_;
};

SeriesStores& series_store() {
  static SeriesStores store;
  return store;
}

}  // namespace

std::vector<IntSeries> miller_basis_integral(long k, std::size_t prec) {
  const long d = dim_Mk(k);
  if (static_cast<long>(prec) < d) throw std::invalid_argument("miller_basis: precision below dim M_k");
  if (d == 0) return {};
  return series_store().basis(k, prec);
}

std::vector<QSeries> miller_basis(long k, std::size_t prec) {
  std::vector<QSeries> out;
  for (const auto& s : miller_basis_integral(k, prec)) out.push_back(QSeries::from_integers(s, k));
  return out;
}

QSeries ModularForm::expansion(std::size_t prec) const {
  const long d = dim_Mk(weight);
  if (static_cast<long>(coords.size()) != d) throw std::invalid_argument("ModularForm: coordinate count != dim M_k");
  std::vector<Rational> c(prec);
  if (d == 0) return QSeries(std::move(c), weight);
  auto basis = miller_basis_integral(weight, std::max<std::size_t>(prec, static_cast<std::size_t>(d)));
  for (long j = 0; j < d; ++j) {
    const Rational& cj = coords[static_cast<std::size_t>(j)];
    if (cj == 0) continue;
    for (std::size_t m = 0; m < prec; ++m) c[m] += cj * Rational(basis[static_cast<std::size_t>(j)][m]);
  }
  return QSeries(std::move(c), weight);
}

ModularForm ModularForm::from_series(long k, const QSeries& f) {
  const auto d = static_cast<std::size_t>(dim_Mk(k));
  if (f.prec() < d) throw std::invalid_argument("from_series: precision below dim M_k");
  ModularForm m{k, std::vector<Rational>(f.coeffs().begin(), f.coeffs().begin() + static_cast<std::ptrdiff_t>(d))};
  if (!(m.expansion(f.prec()).coeffs() == f.coeffs()))
    throw std::invalid_argument("from_series: series is not a weight-" + std::to_string(k) + " form");
  return m;
}

std::vector<QuadraticNumber> expansion(long k, const std::vector<QuadraticNumber>& coords, std::size_t prec) {
  const long d = dim_Mk(k);
  if (static_cast<long>(coords.size()) != d) throw std::invalid_argument("expansion: coordinate count != dim M_k");
  std::vector<QuadraticNumber> c(prec, QuadraticNumber(0));
  if (d == 0) return c;
  auto basis = miller_basis_integral(k, std::max<std::size_t>(prec, static_cast<std::size_t>(d)));
  for (long j = 0; j < d; ++j)
    for (std::size_t m = 0; m < prec; ++m)
      if (basis[static_cast<std::size_t>(j)][m] != 0)
        c[m] += coords[static_cast<std::size_t>(j)] * QuadraticNumber(basis[static_cast<std::size_t>(j)][m]);
  return c;
}

// ---------------------------------------------------------------------------
// Matrix cache

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string serialize(long k, long n, const QMatrix& m) {
  std::ostringstream os;
  os << "hecke-matrix 1\n" << k << " " << n << " " << m.rows() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) os << to_string(m(i, j)) << "\n";
  return os.str();
}

std::optional<QMatrix> deserialize(long k, long n, const std::string& text) {
  auto cut = text.rfind("digest ");
  if (cut == std::string::npos) return std::nullopt;
  std::string body = text.substr(0, cut);
  std::istringstream tail(text.substr(cut + 7));
  std::uint64_t digest = 0;
  if (!(tail >> std::hex >> digest) || digest != fnv1a(body)) return std::nullopt;
  std::istringstream is(body);
  std::string magic;
  int version = 0;
  long kk = 0, nn = 0;
  std::size_t d = 0;
  if (!(is >> magic >> version >> kk >> nn >> d) || magic != "hecke-matrix" || version != 1 || kk != k || nn != n ||
      static_cast<long>(d) != dim_Mk(k))
    return std::nullopt;
  QMatrix m(d, d);
  try {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::string tok;
        if (!(is >> tok)) return std::nullopt;
        m(i, j) = parse_rational(tok);
      }
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return m;
}

class FileLock {
 public:
  FileLock(const std::filesystem::path& path, bool exclusive) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ >= 0 && ::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      ::close(fd_);
      fd_ = -1;
    }
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;
  bool held() const { return fd_ >= 0; }

 private:
  int fd_ = -1;
};

class MatrixCache {
 public:
  MatrixCache() {
    const char* env = std::getenv("HECKE_TOPO_CACHE");
    dir_ = std::filesystem::path(env && *env ? env : ".cache");
  }

  QMatrix get(long k, long n, const std::function<QMatrix()>& compute) {
    {
      std::lock_guard lock(mu_);
      auto it = memory_.find({k, n});
      if (it != memory_.end()) return it->second;
    }
    std::optional<QMatrix> m = load(k, n);
    if (!m) {
      m = compute();
      store(k, n, *m);
    }
    std::lock_guard lock(mu_);
    memory_.emplace(std::make_pair(k, n), *m);
    return *m;
  }

  void set_dir(std::optional<std::filesystem::path> dir) {
    std::lock_guard lock(mu_);
    dir_ = std::move(dir);
  }
  std::optional<std::filesystem::path> dir() {
    std::lock_guard lock(mu_);
    return dir_;
  }
  void clear() {
    std::lock_guard lock(mu_);
    memory_.clear();
  }

 private:
  std::filesystem::path file_for(const std::filesystem::path& d, long k, long n) const {
    return d / ("hecke_k" + std::to_string(k) + "_n" + std::to_string(n) + ".txt");
  }

  std::optional<QMatrix> load(long k, long n) {
    auto d = dir();
    if (!d) return std::nullopt;
    std::error_code ec;
    if (!std::filesystem::exists(file_for(*d, k, n), ec)) return std::nullopt;
    FileLock lock(*d / ".lock", false);
    if (!lock.held()) return std::nullopt;
    std::ifstream in(file_for(*d, k, n), std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    return deserialize(k, n, ss.str());
  }

  void store(long k, long n, const QMatrix& m) {
    auto d = dir();
    if (!d) return;
    std::error_code ec;
    std::filesystem::create_directories(*d, ec);
    if (ec) return;
    FileLock lock(*d / ".lock", true);
    if (!lock.held()) return;
    std::string body = serialize(k, n, m);
    std::ostringstream digest;
    digest << "digest " << std::hex << fnv1a(body) << "\n";
    auto target = file_for(*d, k, n);
    auto tmp = target;
    tmp += ".tmp" + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << body << digest.str();
      if (!out) return;
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

  std::mutex mu_;
  std::optional<std::filesystem::path> dir_;
  std::map<std::pair<long, long>, QMatrix> memory_;
};

MatrixCache& matrix_cache() {
  static MatrixCache cache;
  return cache;
}

QMatrix compute_hecke_matrix(long k, long n) {
  const auto d = static_cast<std::size_t>(dim_Mk(k));
  QMatrix t(d, d);
  if (d == 0) return t;
  const std::size_t prec = static_cast<std::size_t>(n) * d + 1;
  auto basis = miller_basis_integral(k, prec);
  std::vector<long> divisors;
  for (long e = 1; e <= n; ++e)
    if (n % e == 0) divisors.push_back(e);
  for (std::size_t m = 0; m < d; ++m) {
    for (long e : divisors) {
      if (m != 0 && static_cast<long>(m) % e != 0) continue;
      Rational w = rpow(Rational(e), k - 1);
      auto idx = static_cast<std::size_t>(static_cast<long>(m) * n / (e * e));
      for (std::size_t j = 0; j < d; ++j) t(m, j) += w * Rational(basis[j][idx]);
    }
  }
  return t;
}

}  // namespace

QMatrix hecke_matrix(long k, long n) {
  if (n < 1) throw std::invalid_argument("hecke_matrix: index must be positive");
  if (dim_Mk(k) == 0) return QMatrix();
  return matrix_cache().get(k, n, [=] { return compute_hecke_matrix(k, n); });
}

HeckeMatrix hecke_matrix(long k, long n, const PLocalContext& ctx) {
  HeckeMatrix h{k, n, hecke_matrix(k, n)};
  if (n % ctx.p() != 0)
    for (std::size_t i = 0; i < h.entries.rows(); ++i)
      for (std::size_t j = 0; j < h.entries.cols(); ++j)
        check(is_p_integral(h.entries(i, j), ctx.p()), "Hecke matrix entry not p-integral");
  return h;
}

QMatrix multiplication_matrix(const QSeries& f, long w, long k) {
  const auto din = static_cast<std::size_t>(dim_Mk(k));
  const auto dout = static_cast<std::size_t>(dim_Mk(k + w));
  QMatrix m(dout, din);
  if (din == 0 || dout == 0) return m;
  if (f.prec() < dout) throw std::invalid_argument("multiplication_matrix: factor precision too low");
  auto basis = miller_basis(k, dout);
  for (std::size_t j = 0; j < din; ++j) {
    QSeries prod = series_product(f.truncate(dout), basis[j]);
    for (std::size_t i = 0; i < dout; ++i) m(i, j) = prod[i];
  }
  return m;
}

void set_cache_directory(std::optional<std::filesystem::path> dir) { matrix_cache().set_dir(std::move(dir)); }
std::optional<std::filesystem::path> cache_directory() { return matrix_cache().dir(); }

void clear_memory_caches() {
  matrix_cache().clear();
  series_store().clear();
}

// ---------------------------------------------------------------------------
// Eigencharacters

std::vector<QuadraticNumber> normalize_first_nonzero(std::vector<QuadraticNumber> v) {
  for (const auto& x : v)
    if (!(x == QuadraticNumber(0))) {
      QuadraticNumber inv = QuadraticNumber(1) / x;
      for (auto& y : v) y *= inv;
      break;
    }
  return v;
}

EigenSystem eigencharacters(long k, const std::vector<long>& primes) {
  EigenSystem out;
  if (dim_Mk(k) == 0) return out;
  if (primes.empty()) throw std::invalid_argument("eigencharacters: empty prime list");
  std::vector<std::pair<long, QMatrix>> ops;
  for (long l : primes) {
    if (!is_prime(l)) throw std::invalid_argument("eigencharacters: " + std::to_string(l) + " is not prime");
    ops.emplace_back(l, hecke_matrix(k, l));
  }
  JointDecomposition dec = joint_eigenspaces(ops);
  for (const auto& [label, f] : dec.not_enumerated)
    if (label == primes.front()) out.not_enumerated.push_back(f);
  std::vector<Eigencharacter> eis, cusp;
  for (const auto& space : dec.spaces) {
    check(space.rank() == 1, "classical eigenspace of rank != 1 in weight " + std::to_string(k));
    Eigencharacter c;
    c.weight = k;
    c.eigenvalues = space.eigenvalues;
    c.char_poly = space.minimal_polynomials.at(primes.front());
    c.choice = space.choices.at(primes.front());
    c.radicand = space.radicand;
    c.eigenform = normalize_first_nonzero(space.basis.col(0));
    if (!(c.eigenform[0] == QuadraticNumber(0))) {
      c.kind = FormKind::Eisenstein;
      for (long l : primes)
        check(c.eigenvalues.at(l) == QuadraticNumber(Rational(1 + rpow(Rational(l), k - 1))),
              "Eisenstein eigenvalue differs from 1 + l^(k-1)");
      eis.push_back(std::move(c));
    } else {
      c.kind = FormKind::Cuspidal;
      cusp.push_back(std::move(c));
    }
  }
  check(eis.size() == 1, "expected exactly one Eisenstein character in weight " + std::to_string(k));
  out.characters = std::move(eis);
  for (auto& c : cusp) out.characters.push_back(std::move(c));
  return out;
}

}  // namespace hecke
