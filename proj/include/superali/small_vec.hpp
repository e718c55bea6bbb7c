#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <type_traits>

namespace superali {

/// Vector with inline storage for small sizes. T must be trivially copyable.
template <class T, std::uint32_t N>
class SmallVec {
  static_assert(std::is_trivially_copyable_v<T>);

public:
  SmallVec() = default;

  SmallVec(std::initializer_list<T> init) {
    for (const T& v : init) push_back(v);
  }

  SmallVec(const SmallVec& o) { assign(o.data(), o.size_); }

  SmallVec(SmallVec&& o) noexcept {
    if (o.heap_) {
      heap_ = o.heap_;
      cap_ = o.cap_;
      o.heap_ = nullptr;
      o.cap_ = N;
    } else {
      std::memcpy(inline_, o.inline_, sizeof(T) * o.size_);
    }
    size_ = o.size_;
    o.size_ = 0;
  }

  SmallVec& operator=(const SmallVec& o) {
    if (this != &o) assign(o.data(), o.size_);
    return *this;
  }

  SmallVec& operator=(SmallVec&& o) noexcept {
    if (this != &o) {
      delete[] heap_;
      heap_ = nullptr;
      cap_ = N;
      if (o.heap_) {
        heap_ = o.heap_;
        cap_ = o.cap_;
        o.heap_ = nullptr;
        o.cap_ = N;
      } else {
        std::memcpy(inline_, o.inline_, sizeof(T) * o.size_);
      }
      size_ = o.size_;
      o.size_ = 0;
    }
    return *this;
  }

  ~SmallVec() { delete[] heap_; }

  void push_back(const T& v) {
    if (size_ == cap_) grow(cap_ * 2);
    data()[size_++] = v;
  }

  void clear() { size_ = 0; }

  void reserve(std::uint32_t n) {
    if (n > cap_) grow(n);
  }

  T* data() { return heap_ ? heap_ : inline_; }
  const T* data() const { return heap_ ? heap_ : inline_; }

  std::uint32_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  T& operator[](std::uint32_t i) { return data()[i]; }
  const T& operator[](std::uint32_t i) const { return data()[i]; }

  T* begin() { return data(); }
  T* end() { return data() + size_; }
  const T* begin() const { return data(); }
  const T* end() const { return data() + size_; }

  T& back() { return data()[size_ - 1]; }
  const T& back() const { return data()[size_ - 1]; }

  friend bool operator==(const SmallVec& a, const SmallVec& b) {
    return a.size_ == b.size_ &&
           std::memcmp(a.data(), b.data(), sizeof(T) * a.size_) == 0;
  }
  friend bool operator!=(const SmallVec& a, const SmallVec& b) { return !(a == b); }

private:
  void assign(const T* src, std::uint32_t n) {
    if (n > cap_) grow(n);
    std::memcpy(data(), src, sizeof(T) * n);
    size_ = n;
  }

  void grow(std::uint32_t n) {
    n = std::max(n, cap_ * 2);
    T* h = new T[n];
    std::memcpy(h, data(), sizeof(T) * size_);
    delete[] heap_;
    heap_ = h;
    cap_ = n;
  }

  T inline_[N];
  T* heap_ = nullptr;
  std::uint32_t size_ = 0;
  std::uint32_t cap_ = N;
};

} // namespace superali
