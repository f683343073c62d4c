#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bandforge::tri {

/// Permutation of the vertex labels {0,1,2,3}. Written as four digits, the
/// i-th digit being the image of i ("0132" swaps 2 and 3).
class Permutation {
 public:
  constexpr Permutation() : image_{0, 1, 2, 3} {}

  static constexpr std::optional<Permutation> from_images(std::array<int, 4> images) {
    std::array<bool, 4> hit{};
    Permutation p;
    for (int i = 0; i < 4; ++i) {
      if (images[i] < 0 || images[i] > 3 || hit[images[i]]) return std::nullopt;
      hit[images[i]] = true;
      p.image_[i] = static_cast<std::uint8_t>(images[i]);
    }
    return p;
  }

  static constexpr std::optional<Permutation> parse(std::string_view digits) {
    if (digits.size() != 4) return std::nullopt;
    std::array<int, 4> images{};
    for (int i = 0; i < 4; ++i) {
      if (digits[i] < '0' || digits[i] > '9') return std::nullopt;
      images[i] = digits[i] - '0';
    }
    return from_images(images);
  }

  constexpr int operator[](int i) const { return image_[i]; }

  constexpr Permutation inverse() const {
    Permutation out;
    for (int i = 0; i < 4; ++i) out.image_[image_[i]] = static_cast<std::uint8_t>(i);
    return out;
  }

  // (a * b)(i) = a(b(i))
  friend constexpr Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation out;
    for (int i = 0; i < 4; ++i) out.image_[i] = a.image_[b.image_[i]];
    return out;
  }

  // +1 for even permutations.
  constexpr int sign() const {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += image_[i] > image_[j] ? 1 : 0;
    return inversions % 2 == 0 ? 1 : -1;
  }

  std::string str() const {
    std::string s(4, '0');
    for (int i = 0; i < 4; ++i) s[i] = static_cast<char>('0' + image_[i]);
    return s;
  }

  friend constexpr bool operator==(const Permutation&, const Permutation&) = default;

  static constexpr std::array<Permutation, 24> all() {
    std::array<Permutation, 24> out{};
    std::array<int, 4> images{0, 1, 2, 3};
    std::size_t k = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            images = {a, b, c, d};
            if (auto p = from_images(images)) out[k++] = *p;
          }
    return out;
  }

 private:
  std::array<std::uint8_t, 4> image_;
};

}  // namespace bandforge::tri
