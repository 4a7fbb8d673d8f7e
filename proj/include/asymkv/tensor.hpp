// Copyright (c) 2026 asymkv contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace asymkv {

/// Dense row-major f32 tensor with an explicit shape. Dot products and
/// reductions accumulate in f64.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<int64_t> shape);
    Tensor(std::vector<int64_t> shape, std::vector<float> data);

    static Tensor zeros(std::vector<int64_t> shape) { return Tensor(std::move(shape)); }
    static Tensor full(std::vector<int64_t> shape, float value);
    static Tensor identity(int64_t n);

    const std::vector<int64_t>& shape() const { return shape_; }
    int64_t rank() const { return static_cast<int64_t>(shape_.size()); }
    int64_t dim(int64_t i) const { return shape_[static_cast<size_t>(i)]; }
    int64_t numel() const { return static_cast<int64_t>(data_.size()); }

    float* data() { return data_.data(); }
    const float* data() const { return data_.data(); }
    std::vector<float>& values() { return data_; }
    const std::vector<float>& values() const { return data_; }

    float& operator()(int64_t i) { return data_[static_cast<size_t>(i)]; }
    float operator()(int64_t i) const { return data_[static_cast<size_t>(i)]; }
    float& operator()(int64_t i, int64_t j) { return data_[static_cast<size_t>(i * cols() + j)]; }
    float operator()(int64_t i, int64_t j) const { return data_[static_cast<size_t>(i * cols() + j)]; }

    int64_t rows() const { return shape_.empty() ? 0 : shape_[0]; }
    int64_t cols() const { return shape_.size() < 2 ? 1 : shape_[1]; }

    std::span<const float> row(int64_t i) const;
    std::span<float> row(int64_t i);

    /// True when every element is finite.
    bool all_finite() const;

private:
    std::vector<int64_t> shape_;
    std::vector<float> data_;
};

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor add(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);

/// Rows [begin, end) of a matrix.
Tensor slice_rows(const Tensor& a, int64_t begin, int64_t end);

/// f64-accumulated dot product of two equal-length spans.
double dot(std::span<const float> a, std::span<const float> b);
double norm2(std::span<const float> a);

}  // namespace asymkv
