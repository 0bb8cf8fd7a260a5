#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace peq {

/// Scalar on the 3D grid, stored with one ghost layer per face.
/// Valid index range is [-1, n] along each axis; x runs fastest.
class Field3 {
public:
    Field3() = default;
    Field3(int nx, int ny, int nz)
        : nx_(nx), ny_(ny), nz_(nz),
          sx_(1), sy_(nx + 2), sz_(static_cast<long>(nx + 2) * (ny + 2)),
          data_(static_cast<size_t>(nx + 2) * (ny + 2) * (nz + 2), 0.0) {}

    double& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
    double operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }

    long sx() const { return sx_; }
    long sy() const { return sy_; }
    long sz() const { return sz_; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    size_t size() const { return data_.size(); }

    /// Pointer to (i,j,k); stride arithmetic is up to the caller.
    double* ptr(int i, int j, int k) { return data_.data() + index(i, j, k); }
    const double* ptr(int i, int j, int k) const { return data_.data() + index(i, j, k); }

    void fill(double v) { data_.assign(data_.size(), v); }

    bool same_shape(const Field3& o) const {
        return nx_ == o.nx_ && ny_ == o.ny_ && nz_ == o.nz_;
    }

private:
    long index(int i, int j, int k) const {
        assert(i >= -1 && i <= nx_ && j >= -1 && j <= ny_ && k >= -1 && k <= nz_);
        return (k + 1) * sz_ + (j + 1) * sy_ + (i + 1);
    }

    int nx_ = 0, ny_ = 0, nz_ = 0;
    long sx_ = 0, sy_ = 0, sz_ = 0;
    std::vector<double> data_;
};

/// Scalar on the horizontal cross-section, with ghost layer.
class Field2 {
public:
    Field2() = default;
    Field2(int nx, int ny)
        : nx_(nx), ny_(ny), sy_(nx + 2),
          data_(static_cast<size_t>(nx + 2) * (ny + 2), 0.0) {}

    double& operator()(int i, int j) { return data_[index(i, j)]; }
    double operator()(int i, int j) const { return data_[index(i, j)]; }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    long sy() const { return sy_; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    size_t size() const { return data_.size(); }

    void fill(double v) { data_.assign(data_.size(), v); }

    bool same_shape(const Field2& o) const { return nx_ == o.nx_ && ny_ == o.ny_; }

private:
    long index(int i, int j) const {
        assert(i >= -1 && i <= nx_ && j >= -1 && j <= ny_);
        return (j + 1) * sy_ + (i + 1);
    }

    int nx_ = 0, ny_ = 0;
    long sy_ = 0;
    std::vector<double> data_;
};

/// Two horizontal components on the 3D grid.
struct VecField3 {
    Field3 x, y;

    VecField3() = default;
    VecField3(int nx, int ny, int nz) : x(nx, ny, nz), y(nx, ny, nz) {}
};

/// Two components on the horizontal cross-section.
struct VecField2 {
    Field2 x, y;

    VecField2() = default;
    VecField2(int nx, int ny) : x(nx, ny), y(nx, ny) {}
};

} // namespace peq
