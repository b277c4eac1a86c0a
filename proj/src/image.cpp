#include "cable/image.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <vector>

namespace cable {

BinaryImage dilate(const BinaryImage& img, int iterations) {
  BinaryImage cur = img;
  for (float& p : cur.pixels.reshaped()) p = p > 0.5f ? 1.0f : 0.0f;
  for (int it = 0; it < iterations; ++it) {
    BinaryImage next(cur.width, cur.height);
    for (int y = 0; y < cur.height; ++y) {
      for (int x = 0; x < cur.width; ++x) {
        if (cur(x, y) < 0.5f) continue;
        const int x0 = std::max(x - 1, 0), x1 = std::min(x + 1, cur.width - 1);
        const int y0 = std::max(y - 1, 0), y1 = std::min(y + 1, cur.height - 1);
        for (int yy = y0; yy <= y1; ++yy)
          for (int xx = x0; xx <= x1; ++xx) next(xx, yy) = 1.0f;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

namespace {

// 1-D squared-distance transform via the lower envelope of parabolas.
// Input f holds squared distances (or 0 / +inf seeds); n values.
void dt_1d(const double* f, double* out, int n, int* v, double* z) {
  int k = 0;
  v[0] = 0;
  z[0] = -std::numeric_limits<double>::infinity();
  z[1] = std::numeric_limits<double>::infinity();
  for (int q = 1; q < n; ++q) {
    double s;
    while (true) {
      const int p = v[k];
      s = ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * q - 2.0 * p);
      if (s <= z[k]) {
        --k;
      } else {
        break;
      }
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double d = double(q) - v[k];
    out[q] = d * d + f[v[k]];
  }
}

}  // namespace

DistanceImage distance_transform(const BinaryImage& img) {
  const int w = img.width, h = img.height;
  if ((img.pixels.array() > 0.5f).count() == 0)
    throw Error("distance_transform: image has no foreground pixel");

  const double inf = 1e20;
  std::vector<double> grid(static_cast<size_t>(w) * h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) grid[size_t(y) * w + x] = img(x, y) > 0.5f ? 0.0 : inf;

  const int n = std::max(w, h);
  std::vector<double> f(n), d(n), z(n + 1);
  std::vector<int> v(n);

  // Columns, then rows.
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) f[y] = grid[size_t(y) * w + x];
    dt_1d(f.data(), d.data(), h, v.data(), z.data());
    for (int y = 0; y < h; ++y) grid[size_t(y) * w + x] = d[y];
  }
  for (int y = 0; y < h; ++y) {
    dt_1d(grid.data() + size_t(y) * w, d.data(), w, v.data(), z.data());
    for (int x = 0; x < w; ++x) grid[size_t(y) * w + x] = d[x];
  }

  DistanceImage out(w, h);
  for (int i = 0; i < w * h; ++i) out.pixels[i] = static_cast<float>(std::sqrt(grid[i]));
  return out;
}

BinaryImage read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("read_pgm: cannot open " + path);

  auto next_token = [&in, &path]() -> std::string {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
      if (c == '#') {
        while ((c = in.get()) != EOF && c != '\n') {
        }
        continue;
      }
      if (std::isspace(c)) {
        if (!tok.empty()) return tok;
        continue;
      }
      tok.push_back(static_cast<char>(c));
    }
    if (tok.empty()) throw FormatError("read_pgm: truncated header in " + path);
    return tok;
  };

  if (next_token() != "P5") throw FormatError("read_pgm: not a P5 file: " + path);
  int w = 0, h = 0, maxval = 0;
  try {
    w = std::stoi(next_token());
    h = std::stoi(next_token());
    maxval = std::stoi(next_token());
  } catch (const std::exception&) {
    throw FormatError("read_pgm: malformed header in " + path);
  }
  if (w <= 0 || h <= 0) throw FormatError("read_pgm: bad dimensions in " + path);
  if (maxval != 255) throw FormatError("read_pgm: unsupported maxval in " + path);

  std::vector<unsigned char> raw(static_cast<size_t>(w) * h);
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (in.gcount() != static_cast<std::streamsize>(raw.size()))
    throw FormatError("read_pgm: truncated payload in " + path);

  // File rows run top to bottom; flip into our bottom-up convention.
  BinaryImage img(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      img(x, y) = static_cast<float>(raw[size_t(h - 1 - y) * w + x]) / 255.0f;
  return img;
}

void write_pgm(const BinaryImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("write_pgm: cannot open " + path);
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  std::vector<unsigned char> raw(static_cast<size_t>(img.width) * img.height);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) {
      const float v = std::clamp(img(x, y), 0.0f, 1.0f);
      raw[size_t(img.height - 1 - y) * img.width + x] =
          static_cast<unsigned char>(std::lround(v * 255.0f));
    }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
  if (!out) throw FormatError("write_pgm: short write to " + path);
}

}  // namespace cable
