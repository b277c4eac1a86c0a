#pragma once

#include <Eigen/Core>

#include <string>

#include "cable/core.hpp"

namespace cable {

// Fixed-size grayscale raster, row-major scanlines, origin at the lower-left
// workspace corner (pixel y grows with workspace y).
template <class Scalar>
struct Image {
  int width = 0;
  int height = 0;
  Eigen::Vector<Scalar, Eigen::Dynamic> pixels;

  Image() = default;
  Image(int w, int h)
      : width(w), height(h), pixels(Eigen::Vector<Scalar, Eigen::Dynamic>::Zero(w * h)) {}

  Scalar& operator()(int x, int y) { return pixels[y * width + x]; }
  Scalar operator()(int x, int y) const { return pixels[y * width + x]; }

  int size() const { return width * height; }
  bool same_dims(const Image& other) const {
    return width == other.width && height == other.height;
  }
};

// Pixels in [0,1]; exactly {0,1} after rendering, thresholding or dilation.
using BinaryImage = Image<float>;

// Euclidean distance (pixel units) to the nearest foreground pixel.
using DistanceImage = Image<float>;

// Binary dilation with the full 3x3 structuring element, applied
// `iterations` times. Foreground test is pixel > 0.5; output pixels are {0,1}.
BinaryImage dilate(const BinaryImage& img, int iterations = 1);

// Exact Euclidean distance transform (Felzenszwalb-Huttenlocher two-pass).
// Throws Error when the image has no foreground pixel.
DistanceImage distance_transform(const BinaryImage& img);

// 8-bit binary PGM (P5). 0 <-> 0.0 and 255 <-> 1.0; round trip is exact for
// binary images.
BinaryImage read_pgm(const std::string& path);
void write_pgm(const BinaryImage& img, const std::string& path);

}  // namespace cable
