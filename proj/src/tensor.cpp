// Copyright (c) 2026 asymkv contributors
// SPDX-License-Identifier: Apache-2.0

#include "asymkv/tensor.hpp"

#include <cmath>
#include <string>

#include "asymkv/check.hpp"

namespace asymkv {

namespace {
int64_t checked_numel(const std::vector<int64_t>& shape) {
    int64_t n = 1;
    for (int64_t d : shape) {
        ASYMKV_CHECK(d >= 1, "tensor dims must be >= 1");
        n *= d;
    }
    return n;
}
}  // namespace

Tensor::Tensor(std::vector<int64_t> shape) : shape_(std::move(shape)) {
    data_.assign(static_cast<size_t>(checked_numel(shape_)), 0.0f);
}

Tensor::Tensor(std::vector<int64_t> shape, std::vector<float> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
    ASYMKV_CHECK(checked_numel(shape_) == static_cast<int64_t>(data_.size()),
                 "tensor data length does not match shape");
}

Tensor Tensor::full(std::vector<int64_t> shape, float value) {
    Tensor t(std::move(shape));
    for (float& v : t.data_) v = value;
    return t;
}

Tensor Tensor::identity(int64_t n) {
    Tensor t({n, n});
    for (int64_t i = 0; i < n; ++i) t(i, i) = 1.0f;
    return t;
}

std::span<const float> Tensor::row(int64_t i) const {
    return {data_.data() + static_cast<size_t>(i * cols()), static_cast<size_t>(cols())};
}

std::span<float> Tensor::row(int64_t i) {
    return {data_.data() + static_cast<size_t>(i * cols()), static_cast<size_t>(cols())};
}

bool Tensor::all_finite() const {
    for (float v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

Tensor matmul(const Tensor& a, const Tensor& b) {
    ASYMKV_CHECK(a.rank() == 2 && b.rank() == 2, "matmul expects matrices");
    ASYMKV_CHECK(a.dim(1) == b.dim(0), "matmul inner dims mismatch: " + std::to_string(a.dim(1)) +
                                           " vs " + std::to_string(b.dim(0)));
    const int64_t m = a.dim(0), k = a.dim(1), n = b.dim(1);
    Tensor out({m, n});
    for (int64_t i = 0; i < m; ++i) {
        for (int64_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int64_t t = 0; t < k; ++t) acc += static_cast<double>(a(i, t)) * b(t, j);
            out(i, j) = static_cast<float>(acc);
        }
    }
    return out;
}

namespace {
void check_same_shape(const Tensor& a, const Tensor& b, const char* op) {
    ASYMKV_CHECK(a.shape() == b.shape(), std::string(op) + ": shape mismatch");
}
}  // namespace

Tensor add(const Tensor& a, const Tensor& b) {
    check_same_shape(a, b, "add");
    Tensor out = a;
    for (int64_t i = 0; i < out.numel(); ++i) out(i) += b(i);
    return out;
}

Tensor mul(const Tensor& a, const Tensor& b) {
    check_same_shape(a, b, "mul");
    Tensor out = a;
    for (int64_t i = 0; i < out.numel(); ++i) out(i) *= b(i);
    return out;
}

Tensor transpose(const Tensor& a) {
    ASYMKV_CHECK(a.rank() == 2, "transpose expects a matrix");
    Tensor out({a.dim(1), a.dim(0)});
    for (int64_t i = 0; i < a.dim(0); ++i)
        for (int64_t j = 0; j < a.dim(1); ++j) out(j, i) = a(i, j);
    return out;
}

Tensor slice_rows(const Tensor& a, int64_t begin, int64_t end) {
    ASYMKV_CHECK(a.rank() == 2, "slice_rows expects a matrix");
    ASYMKV_CHECK(0 <= begin && begin < end && end <= a.dim(0), "slice_rows range out of bounds");
    Tensor out({end - begin, a.dim(1)});
    for (int64_t i = begin; i < end; ++i) {
        auto src = a.row(i);
        auto dst = out.row(i - begin);
        std::copy(src.begin(), src.end(), dst.begin());
    }
    return out;
}

double dot(std::span<const float> a, std::span<const float> b) {
    ASYMKV_CHECK(a.size() == b.size(), "dot: length mismatch");
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += static_cast<double>(a[i]) * b[i];
    return acc;
}

double norm2(std::span<const float> a) {
    double acc = 0.0;
    for (float v : a) acc += static_cast<double>(v) * v;
    return std::sqrt(acc);
}

}  // namespace asymkv
