#include "pml/instances.hpp"

#include "pml/errors.hpp"
#include "pml/kernel.hpp"

namespace pml {

std::vector<double> power_distortion(const std::vector<double>& d, int nx,
                                     int nz, int n) {
  if (static_cast<int>(d.size()) != nx * nz)
    throw ValidationError("distortion matrix size mismatch");
  int64_t px = 1, pz = 1;
  for (int i = 0; i < n; ++i) {
    px *= nx;
    pz *= nz;
  }
  std::vector<double> out(static_cast<size_t>(px) * pz);
  std::vector<int> xs(n), zs(n);
  for (int64_t x = 0; x < px; ++x) {
    {
      int64_t rem = x;
      for (int u = n - 1; u >= 0; --u) {
        xs[u] = static_cast<int>(rem % nx);
        rem /= nx;
      }
    }
    for (int64_t z = 0; z < pz; ++z) {
      int64_t rem = z;
      double acc = 0;
      for (int u = n - 1; u >= 0; --u) {
        zs[u] = static_cast<int>(rem % nz);
        rem /= nz;
      }
      for (int u = 0; u < n; ++u) acc += d[xs[u] * nz + zs[u]];
      out[static_cast<size_t>(x) * pz + z] = acc / n;
    }
  }
  return out;
}

std::vector<int> power_map(const std::vector<int>& m, std::vector<int> arg_sizes,
                           int out_size, int n) {
  int64_t single = 1;
  for (int s : arg_sizes) single *= s;
  if (static_cast<int64_t>(m.size()) != single)
    throw ValidationError("map table size mismatch");
  // the powered map takes each argument's n-fold value (use 0 most
  // significant) and applies the single-letter map coordinate-wise
  int args = static_cast<int>(arg_sizes.size());
  std::vector<int64_t> arg_pow(args, 1);
  int64_t total = 1, out_pow = 1;
  for (int a = 0; a < args; ++a) {
    for (int i = 0; i < n; ++i) arg_pow[a] *= arg_sizes[a];
    total *= arg_pow[a];
  }
  for (int i = 0; i < n; ++i) out_pow *= out_size;
  (void)out_pow;
  std::vector<int> out(total);
  std::vector<std::vector<int>> digits(args, std::vector<int>(n));
  for (int64_t idx = 0; idx < total; ++idx) {
    int64_t rem = idx;
    for (int a = args - 1; a >= 0; --a) {
      int64_t v = rem % arg_pow[a];
      rem /= arg_pow[a];
      for (int u = n - 1; u >= 0; --u) {
        digits[a][u] = static_cast<int>(v % arg_sizes[a]);
        v /= arg_sizes[a];
      }
    }
    int64_t val = 0;
    for (int u = 0; u < n; ++u) {
      int64_t key = 0;
      for (int a = 0; a < args; ++a) key = key * arg_sizes[a] + digits[a][u];
      val = val * out_size + m[key];
    }
    out[idx] = static_cast<int>(val);
  }
  return out;
}

Kernel power_grouped_input2(const Kernel& k, int a_size, int b_size, int n) {
  if (k.input().size() != a_size * b_size)
    throw ValidationError("grouped input sizes do not match the kernel");
  if (n == 1) return k;
  Kernel interleaved = power(k, n);
  int64_t pa = 1, pb = 1;
  for (int i = 0; i < n; ++i) {
    pa *= a_size;
    pb *= b_size;
  }
  std::vector<Pmf> rows;
  rows.reserve(pa * pb);
  std::vector<int> as(n), bs(n);
  for (int64_t a = 0; a < pa; ++a) {
    int64_t rem = a;
    for (int u = n - 1; u >= 0; --u) {
      as[u] = static_cast<int>(rem % a_size);
      rem /= a_size;
    }
    for (int64_t b = 0; b < pb; ++b) {
      rem = b;
      for (int u = n - 1; u >= 0; --u) {
        bs[u] = static_cast<int>(rem % b_size);
        rem /= b_size;
      }
      int64_t inter = 0;
      for (int u = 0; u < n; ++u)
        inter = inter * (a_size * b_size) + (as[u] * b_size + bs[u]);
      rows.push_back(interleaved.row(static_cast<int>(inter)));
    }
  }
  return Kernel(Alphabet::product({static_cast<int>(pa), static_cast<int>(pb)}),
                std::move(rows));
}

Kernel power_grouped_output2(const Kernel& k, int n) {
  if (k.output().factors() != 2)
    throw ValidationError("grouped output power needs a two-factor output");
  if (n == 1) return k;
  int a_size = k.output().factor_size(0), b_size = k.output().factor_size(1);
  Kernel interleaved = power(k, n);  // output digits per use: (a_u, b_u)
  int64_t pa = 1, pb = 1;
  for (int i = 0; i < n; ++i) {
    pa *= a_size;
    pb *= b_size;
  }
  Alphabet out =
      Alphabet::product({static_cast<int>(pa), static_cast<int>(pb)});
  int nin = interleaved.input().size();
  std::vector<std::vector<double>> rows(nin,
                                        std::vector<double>(out.size(), 0.0));
  int64_t inter_out = interleaved.output().size();
  std::vector<int> as(n), bs(n);
  for (int64_t y = 0; y < inter_out; ++y) {
    int64_t rem = y;
    for (int u = n - 1; u >= 0; --u) {
      int pair = static_cast<int>(rem % (a_size * b_size));
      rem /= (a_size * b_size);
      as[u] = pair / b_size;
      bs[u] = pair % b_size;
    }
    int64_t ga = 0, gb = 0;
    for (int u = 0; u < n; ++u) {
      ga = ga * a_size + as[u];
      gb = gb * b_size + bs[u];
    }
    int64_t grouped = ga * pb + gb;
    for (int x = 0; x < nin; ++x)
      rows[x][grouped] = interleaved.prob(x, static_cast<int>(y));
  }
  return Kernel(interleaved.input(), std::move(out), std::move(rows));
}

}  // namespace pml
