#include "gelfand/oracle.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <random>

#include "gelfand/errors.hpp"

namespace gelfand {

namespace {

constexpr long long kGroupCap = 20000;
constexpr int kWreathNCap = 3;

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> line(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) line[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

int perm_index(const std::vector<std::vector<int>>& perms,
               const std::vector<int>& line) {
  auto it = std::find(perms.begin(), perms.end(), line);
  return static_cast<int>(it - perms.begin());
}

int perm_sign(const std::vector<int>& line) {
  int inversions = 0;
  for (size_t i = 0; i < line.size(); ++i) {
    for (size_t j = i + 1; j < line.size(); ++j) {
      if (line[i] > line[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

using Mat3 = std::array<std::array<long long, 3>, 3>;

Mat3 perm_matrix(const std::vector<int>& line) {
  Mat3 m{};
  for (int b = 0; b < 3; ++b) m[static_cast<size_t>(line[b])][b] = 1;
  return m;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int l = 0; l < 3; ++l) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

long long mat_trace_power(const Mat3& a, int power) {
  Mat3 acc{};
  for (int i = 0; i < 3; ++i) acc[i][i] = 1;
  for (int p = 0; p < power; ++p) acc = mat_mul(acc, a);
  long long tr = 0;
  for (int i = 0; i < 3; ++i) tr += acc[i][i];
  return tr;
}

std::vector<std::vector<int>> perm_cycles(const std::vector<int>& line) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(line.size(), false);
  for (size_t start = 0; start < line.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    size_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      cycle.push_back(static_cast<int>(x));
      x = static_cast<size_t>(line[x]);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

struct WreathContext {
  ExplicitGroup gamma;
  int gamma_size = 0;
  int n = 0;
  int n_factorial = 0;
  std::vector<std::vector<int>> perms;          // one-line forms
  std::vector<std::vector<int>> perm_inv_line;  // inverse one-line per perm
  std::vector<int> perm_inv;                    // inverse index per perm
  std::vector<std::vector<int>> perm_comp;      // comp[s][t] = index of s.t

  void decode(int idx, std::vector<int>& tuple, int& perm) const {
    perm = idx % n_factorial;
    int rest = idx / n_factorial;
    tuple.resize(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      tuple[static_cast<size_t>(i)] = rest % gamma_size;
      rest /= gamma_size;
    }
  }

  int encode(const std::vector<int>& tuple, int perm) const {
    int rest = 0;
    for (int i = 0; i < n; ++i) rest = rest * gamma_size + tuple[static_cast<size_t>(i)];
    return rest * n_factorial + perm;
  }
};

}  // namespace

void ExplicitGroup::check_axioms(int random_triples,
                                 std::uint64_t seed) const {
  for (int x = 0; x < size; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) {
      throw ValidationError("group '" + name + "': identity fails at element " +
                            std::to_string(x));
    }
    if (mul(inv(x), x) != 0 || mul(x, inv(x)) != 0) {
      throw ValidationError("group '" + name + "': inverse fails at element " +
                            std::to_string(x));
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, size - 1);
  for (int t = 0; t < random_triples; ++t) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw ValidationError("group '" + name + "': associativity fails at (" +
                            std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ")");
    }
  }
}

ExplicitGroup small_group(SmallGroupKind kind, int param) {
  ExplicitGroup g;
  if (kind == SmallGroupKind::symmetric) {
    if (param < 1 || param > 3) {
      throw SizeLimitError("oracle symmetric group needs 1 <= k <= 3");
    }
    auto perms = std::make_shared<std::vector<std::vector<int>>>(
        all_perms(param));
    const int size = static_cast<int>(perms->size());
    g.name = "S" + std::to_string(param);
    g.size = size;
    g.mul = [perms, param](int a, int b) {
      std::vector<int> line(static_cast<size_t>(param));
      for (int x = 0; x < param; ++x) {
        line[static_cast<size_t>(x)] =
            (*perms)[a][static_cast<size_t>((*perms)[b][static_cast<size_t>(x)])];
      }
      return perm_index(*perms, line);
    };
    g.inv = [perms, param](int a) {
      std::vector<int> line(static_cast<size_t>(param));
      for (int x = 0; x < param; ++x) {
        line[static_cast<size_t>((*perms)[a][static_cast<size_t>(x)])] = x;
      }
      return perm_index(*perms, line);
    };
    return g;
  }
  if (param < 1 || param > 4) {
    throw SizeLimitError("oracle cyclic group needs 1 <= m <= 4");
  }
  g.name = "C" + std::to_string(param);
  g.size = param;
  g.mul = [param](int a, int b) { return (a + b) % param; };
  g.inv = [param](int a) { return (param - a) % param; };
  return g;
}

WreathPair build_wreath(SmallGroupKind kind, int param, int n) {
  if (n < 1 || n > kWreathNCap) {
    throw SizeLimitError("wreath oracle needs 1 <= n <= " +
                         std::to_string(kWreathNCap));
  }
  auto ctx = std::make_shared<WreathContext>();
  ctx->gamma = small_group(kind, param);
  ctx->gamma_size = ctx->gamma.size;
  ctx->n = n;
  ctx->perms = all_perms(n);
  ctx->n_factorial = static_cast<int>(ctx->perms.size());

  long long total = ctx->n_factorial;
  for (int i = 0; i < n; ++i) total *= ctx->gamma_size;
  if (total > kGroupCap) {
    throw SizeLimitError("wreath group order " + std::to_string(total) +
                         " exceeds " + std::to_string(kGroupCap));
  }

  for (const auto& line : ctx->perms) {
    std::vector<int> inv_line(line.size());
    for (size_t i = 0; i < line.size(); ++i) {
      inv_line[static_cast<size_t>(line[i])] = static_cast<int>(i);
    }
    ctx->perm_inv.push_back(perm_index(ctx->perms, inv_line));
    ctx->perm_inv_line.push_back(std::move(inv_line));
  }
  for (int s = 0; s < ctx->n_factorial; ++s) {
    std::vector<int> row;
    for (int t = 0; t < ctx->n_factorial; ++t) {
      std::vector<int> line(static_cast<size_t>(n));
      for (int x = 0; x < n; ++x) {
        line[static_cast<size_t>(x)] =
            ctx->perms[s][static_cast<size_t>(ctx->perms[t][static_cast<size_t>(x)])];
      }
      row.push_back(perm_index(ctx->perms, line));
    }
    ctx->perm_comp.push_back(std::move(row));
  }

  WreathPair pair;
  pair.gamma_size = ctx->gamma_size;
  pair.n = n;
  pair.group.name = ctx->gamma.name + " wr S" + std::to_string(n);
  pair.group.size = static_cast<int>(total);
  // (a, s)(b, t) = (a . s(b), st) with s(b)_i = b_{s^{-1}(i)}.
  pair.group.mul = [ctx](int x, int y) {
    std::vector<int> a, b, c(static_cast<size_t>(ctx->n));
    int s, t;
    ctx->decode(x, a, s);
    ctx->decode(y, b, t);
    for (int i = 0; i < ctx->n; ++i) {
      int src = ctx->perm_inv_line[s][static_cast<size_t>(i)];
      c[static_cast<size_t>(i)] =
          ctx->gamma.mul(a[static_cast<size_t>(i)], b[static_cast<size_t>(src)]);
    }
    return ctx->encode(c, ctx->perm_comp[s][t]);
  };
  // (a, s)^{-1} = (s^{-1}(a^{-1}), s^{-1}): component i is a_{s(i)}^{-1}.
  pair.group.inv = [ctx](int x) {
    std::vector<int> a, c(static_cast<size_t>(ctx->n));
    int s;
    ctx->decode(x, a, s);
    for (int i = 0; i < ctx->n; ++i) {
      int src = ctx->perms[s][static_cast<size_t>(i)];
      c[static_cast<size_t>(i)] = ctx->gamma.inv(a[static_cast<size_t>(src)]);
    }
    return ctx->encode(c, ctx->perm_inv[s]);
  };
  for (int gamma = 0; gamma < ctx->gamma_size; ++gamma) {
    std::vector<int> tuple(static_cast<size_t>(n), gamma);
    for (int p = 0; p < ctx->n_factorial; ++p) {
      pair.k_members.push_back(ctx->encode(tuple, p));
    }
  }
  return pair;
}

DoubleCosets double_cosets(const ExplicitGroup& g, const std::vector<int>& k) {
  if (k.empty()) throw ValidationError("K must be nonempty");
  for (int member : k) {
    if (member < 0 || member >= g.size) {
      throw ValidationError("K member out of range");
    }
  }
  DoubleCosets dc;
  dc.block.assign(static_cast<size_t>(g.size), -1);
  for (int start = 0; start < g.size; ++start) {
    if (dc.block[static_cast<size_t>(start)] >= 0) continue;
    const int id = dc.count++;
    dc.representatives.push_back(start);
    long long size = 0;
    std::deque<int> queue{start};
    dc.block[static_cast<size_t>(start)] = id;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      ++size;
      for (int member : k) {
        for (int y : {g.mul(member, x), g.mul(x, member)}) {
          if (dc.block[static_cast<size_t>(y)] < 0) {
            dc.block[static_cast<size_t>(y)] = id;
            queue.push_back(y);
          }
        }
      }
    }
    dc.sizes.push_back(size);
  }
  return dc;
}

CommuteCheck convolution_commutes(const ExplicitGroup& g,
                                  const std::vector<int>& k) {
  DoubleCosets dc = double_cosets(g, k);
  if (dc.count > 64) {
    throw SizeLimitError("double-coset count " + std::to_string(dc.count) +
                         " exceeds 64");
  }
  std::vector<int> inv(static_cast<size_t>(g.size));
  for (int x = 0; x < g.size; ++x) inv[static_cast<size_t>(x)] = g.inv(x);
  std::vector<std::vector<int>> members(static_cast<size_t>(dc.count));
  for (int x = 0; x < g.size; ++x) {
    members[static_cast<size_t>(dc.block[static_cast<size_t>(x)])].push_back(x);
  }
  // (f_i * f_j)(x) scaled by |G| counts y in block j with x y^{-1} in block i.
  auto scaled = [&](int i, int j, int x) {
    long long total = 0;
    for (int y : members[static_cast<size_t>(j)]) {
      if (dc.block[static_cast<size_t>(g.mul(x, inv[static_cast<size_t>(y)]))] ==
          i) {
        ++total;
      }
    }
    return total;
  };
  for (int i = 0; i < dc.count; ++i) {
    for (int j = i + 1; j < dc.count; ++j) {
      for (int x = 0; x < g.size; ++x) {
        if (scaled(i, j, x) != scaled(j, i, x)) {
          return CommuteCheck{false, {{i, j, x}}};
        }
      }
    }
  }
  return CommuteCheck{true, std::nullopt};
}

bool wreath_char_check(const std::vector<int>& rep_dims, int trials,
                       std::uint64_t seed) {
  const int n = static_cast<int>(rep_dims.size());
  if (n < 1 || n > 3) {
    throw SizeLimitError("character check needs 1 <= n <= 3 factors");
  }
  for (int d : rep_dims) {
    if (d != 1 && d != 3) {
      throw ValidationError("factor dimensions must be 1 or 3");
    }
  }
  if (trials < 1) throw ValidationError("trials must be >= 1");

  const std::vector<std::vector<int>> s3 = all_perms(3);
  const std::vector<std::vector<int>> sn = all_perms(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(s3.size()) - 1);

  for (int trial = 0; trial < trials; ++trial) {
    const std::vector<int>& gamma = s3[static_cast<size_t>(pick(rng))];
    const Mat3 matrix = perm_matrix(gamma);
    const long long sign = perm_sign(gamma);

    for (const std::vector<int>& sigma : sn) {
      bool preserves_dims = true;
      for (int i = 0; i < n; ++i) {
        if (rep_dims[static_cast<size_t>(sigma[static_cast<size_t>(i)])] !=
            rep_dims[static_cast<size_t>(i)]) {
          preserves_dims = false;
          break;
        }
      }
      if (!preserves_dims) continue;
      std::vector<int> sigma_inv(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        sigma_inv[static_cast<size_t>(sigma[static_cast<size_t>(i)])] = i;
      }

      // trace((A_1 (x) ... (x) A_n) P_sigma) over the product basis
      long long lhs = 0;
      std::vector<int> v(static_cast<size_t>(n), 0);
      while (true) {
        long long term = 1;
        for (int i = 0; i < n && term != 0; ++i) {
          const int from = v[static_cast<size_t>(sigma_inv[static_cast<size_t>(i)])];
          if (rep_dims[static_cast<size_t>(i)] == 3) {
            term *= matrix[static_cast<size_t>(v[static_cast<size_t>(i)])]
                          [static_cast<size_t>(from)];
          } else {
            term *= sign;
          }
        }
        lhs += term;
        int pos = n - 1;
        while (pos >= 0 &&
               v[static_cast<size_t>(pos)] == rep_dims[static_cast<size_t>(pos)] - 1) {
          v[static_cast<size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++v[static_cast<size_t>(pos)];
      }

      long long rhs = 1;
      for (const std::vector<int>& cycle : perm_cycles(sigma)) {
        const int length = static_cast<int>(cycle.size());
        if (rep_dims[static_cast<size_t>(cycle[0])] == 3) {
          rhs *= mat_trace_power(matrix, length);
        } else {
          rhs *= (length % 2 == 0) ? 1 : sign;
        }
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace gelfand
