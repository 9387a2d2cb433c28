#pragma once

#include <cstddef>
#include <vector>

#include "ctrecon/errors.hpp"

namespace ctrecon {

/// Voxel grid shape, (slices, rows, cols). Slices run along the rotation axis.
struct Dims {
    int slices = 0;
    int rows = 0;
    int cols = 0;

    std::size_t count() const {
        return static_cast<std::size_t>(slices) * rows * cols;
    }
    bool operator==(const Dims&) const = default;
};

/// Dense 3D scalar field on a regular grid of cubic voxels, stored in
/// (slice, row, col) order with col fastest.
class Volume {
  public:
    Volume() = default;
    Volume(Dims dims, double voxel_size, double fill = 0.0)
        : dims_(dims), voxel_size_(voxel_size), data_(dims.count(), fill) {
        if (dims.slices < 1 || dims.rows < 1 || dims.cols < 1)
            throw DimensionError("volume dims must be positive");
        if (voxel_size <= 0.0)
            throw ConfigError("voxel size must be positive");
    }

    const Dims& dims() const { return dims_; }
    double voxel_size() const { return voxel_size_; }
    std::size_t size() const { return data_.size(); }

    double& at(int s, int r, int c) {
        return data_[(static_cast<std::size_t>(s) * dims_.rows + r) * dims_.cols + c];
    }
    double at(int s, int r, int c) const {
        return data_[(static_cast<std::size_t>(s) * dims_.rows + r) * dims_.cols + c];
    }
    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

  private:
    Dims dims_{};
    double voxel_size_ = 1.0;
    std::vector<double> data_;
};

/// Per-voxel gradient 3-vector field, one plane per finite-difference axis:
/// c1 along slices, c2 along rows, c3 along cols. Stored as three scalar
/// volumes so stencil passes stay contiguous.
struct GradientField {
    Dims dims{};
    std::vector<double> c1, c2, c3;

    GradientField() = default;
    explicit GradientField(Dims d)
        : dims(d), c1(d.count(), 0.0), c2(d.count(), 0.0), c3(d.count(), 0.0) {}

    std::size_t size() const { return c1.size(); }
};

} // namespace ctrecon
